"""Verification scenarios: each claim reproduces one family-level fact
and reports Pass/Fail/Inconclusive with machine-checkable evidence.

Claim catalog (ids are the CLI surface):

* ``simples-pd``       chain simples have pd r-i; the five loop simples
                       have certified infinite pd, over every level in range.
* ``prop-2``           the witness tower: the syzygy of each witness is the
                       previous one (certified), and pd Z_m = r+m exactly.
* ``lemma-1``          the ten c2-strings have infinite pd; the loop simples
                       named by the splitting argument appear as summands of
                       the second or third syzygy, with split-pair witnesses.
* ``lemma-2``          randomized sweep of certified splittings
                       M = X (+) P(c2)^a (+) M' with M' at level one.
* ``corollary-3``      sampled certified-finite-pd level-2 modules have
                       syzygies supported at level one.
* ``syzygy-descent``   syzygies drop one level (level 2 drops to the pruned
                       algebra), sampled at every level in range.
* ``section-4``        the direct-system members: syzygy isos, exact pd,
                       connecting-map kernels, and composite-kernel sanity.
* ``appendix-projectives``  dimension vectors and radical filtrations of all
                       level-5 projectives match the transcribed tables.
* ``findim-witness``   assembles the lower bound r+m (witness) plus the
                       sampled structural evidence for the upper bound.

A Pass requires every sub-check to carry a verified certificate; failures
are reported, never thrown.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dataclass_field
from typing import Callable, Dict, List, Optional

from .families import build_lambda, build_lambda1prime, lambda_vertices, vname
from .fields import field_from_spec
from .homology import (certified_iso, is_direct_summand_simple, kernel_of,
                       projdim, radical, record_digest, syzygy)
from .decomp import CertificateFailure, lemma2_split, xset
from .reps import Algebra, random_module
from .witnesses import (build_U, build_Z, build_Zt, build_phi,
                        sample_finite_pd_modules)

PASS, FAIL, INCONCLUSIVE = "pass", "fail", "inconclusive"


@dataclass
class FamilyConfig:
    r: int = 1
    m_max: int = 3
    t_max: int = 3
    field_spec: str = "q"
    seed: int = 0
    cutoff: Optional[int] = None
    samples: int = 100
    max_dim: int = 40
    trials: Optional[int] = None

    def __post_init__(self):
        if self.r < 1:
            raise ValueError("r must be at least 1")
        if self.m_max < 0:
            raise ValueError("m_max must be nonnegative")
        if self.t_max < 1:
            raise ValueError("t_max must be at least 1")

    @property
    def field(self):
        return field_from_spec(self.field_spec)

    def chain_cutoff(self, m: int) -> int:
        return self.cutoff if self.cutoff is not None else self.r + m + 4

    def to_record(self) -> dict:
        return {
            "r": self.r, "m_max": self.m_max, "t_max": self.t_max,
            "field": self.field_spec, "seed": self.seed,
            "cutoff": self.cutoff, "samples": self.samples,
            "max_dim": self.max_dim, "trials": self.trials,
        }


@dataclass
class CheckResult:
    name: str
    status: str
    evidence: dict = dataclass_field(default_factory=dict)


@dataclass
class ClaimReport:
    claim_id: str
    status: str
    checks: List[CheckResult]
    config: FamilyConfig

    def to_record(self) -> dict:
        return {
            "claim": self.claim_id,
            "status": self.status,
            "config": self.config.to_record(),
            "checks": [
                {"name": c.name, "status": c.status,
                 "digest": record_digest(c.evidence)}
                for c in self.checks
            ],
        }

    def describe(self) -> str:
        lines = [f"claim {self.claim_id}: {self.status.upper()} "
                 f"({len(self.checks)} checks)"]
        for c in self.checks:
            if c.status != PASS:
                lines.append(f"  {c.status.upper()}: {c.name}  {c.evidence}")
        return "\n".join(lines)


def _aggregate(checks: List[CheckResult]) -> str:
    if any(c.status == FAIL for c in checks):
        return FAIL
    if any(c.status == INCONCLUSIVE for c in checks):
        return INCONCLUSIVE
    return PASS


def _verdict_check(name: str, report, expected: Optional[int]) -> CheckResult:
    """Expected None means: require a certified infinite verdict."""
    ev = report.to_record()
    if expected is None:
        ok = report.verdict == "infinite"
        return CheckResult(name, PASS if ok else
                           (INCONCLUSIVE if report.verdict == "inconclusive" else FAIL), ev)
    if report.verdict == "finite" and report.value == expected:
        return CheckResult(name, PASS, ev)
    if report.verdict == "inconclusive":
        return CheckResult(name, INCONCLUSIVE, ev)
    return CheckResult(name, FAIL, ev)


# -- individual claims -------------------------------------------------------


def claim_simples_pd(config: FamilyConfig) -> ClaimReport:
    checks: List[CheckResult] = []
    loops = ["u", "v", "w", "cm1", "bm1"]
    for m in range(config.m_max + 1):
        alg = Algebra(build_lambda(config.r, m), field=config.field)
        for i in range(config.r + 1):
            rep = projdim(alg.simple(vname("d", i)),
                          cutoff=config.chain_cutoff(m), seed=config.seed)
            checks.append(_verdict_check(
                f"pd d{i} = {config.r - i} over level {m}", rep, config.r - i))
        for v in loops:
            rep = projdim(alg.simple(v), cutoff=config.chain_cutoff(m),
                          seed=config.seed)
            checks.append(_verdict_check(
                f"pd {v} infinite over level {m}", rep, None))
    return ClaimReport("simples-pd", _aggregate(checks), checks, config)


def claim_prop_2(config: FamilyConfig) -> ClaimReport:
    checks: List[CheckResult] = []
    for m in range(config.m_max + 1):
        big = Algebra(build_lambda(config.r, m + 1), field=config.field)
        z_next = build_Z(big, m + 1)
        z_here = build_Z(big, m)
        omega = syzygy(z_next)
        iso = certified_iso(omega, z_here, trials=config.trials, seed=config.seed)
        checks.append(CheckResult(
            f"syzygy of witness {m + 1} is witness {m} (certified)",
            PASS if iso is not None else FAIL,
            {"omega_dims": list(omega.dim_vector()),
             "witness_dims": list(z_here.dim_vector())}))
        native = Algebra(build_lambda(config.r, m), field=config.field)
        rep = projdim(build_Z(native, m), cutoff=config.chain_cutoff(m),
                      seed=config.seed)
        checks.append(_verdict_check(
            f"pd witness {m} = {config.r + m}", rep, config.r + m))
        if m >= 1:
            below = set(lambda_vertices(config.r, m - 1))
            z_native = build_Z(native, m)
            checks.append(CheckResult(
                f"witness {m} uses level {m} properly",
                PASS if not z_native.supported_on(below) else FAIL,
                {"support": z_native.support()}))
    return ClaimReport("prop-2", _aggregate(checks), checks, config)


def claim_lemma_1(config: FamilyConfig) -> ClaimReport:
    checks: List[CheckResult] = []
    alg = Algebra(build_lambda1prime(config.r), field=config.field)
    members = xset(alg)
    for idx, x in enumerate(members, start=1):
        rep = projdim(x, cutoff=max(config.chain_cutoff(2), 8), seed=config.seed)
        checks.append(_verdict_check(f"pd of c2-string {idx} infinite", rep, None))
        if idx <= 5:
            target = syzygy(syzygy(x))
            found, pair = is_direct_summand_simple("cm1", target)
            label = f"cm1 splits off second syzygy of string {idx}"
        else:
            target = syzygy(syzygy(syzygy(x)))
            found, pair = is_direct_summand_simple("v", target)
            label = f"v splits off third syzygy of string {idx}"
        checks.append(CheckResult(
            label, PASS if found else FAIL,
            {"target_dims": list(target.dim_vector()),
             "split_pair": bool(pair)}))
    return ClaimReport("lemma-1", _aggregate(checks), checks, config)


def claim_lemma_2(config: FamilyConfig) -> ClaimReport:
    checks: List[CheckResult] = []
    alg = Algebra(build_lambda1prime(config.r), field=config.field)
    level1 = set(lambda_vertices(config.r, 1))
    rng = random.Random(f"lemma2:{config.seed}")
    failures = 0
    total_x = 0
    total_a = 0
    for k in range(config.samples):
        budget = rng.randint(0, config.max_dim)
        module = random_module(alg, seed=config.seed * 100003 + k, budget=budget)
        try:
            split = lemma2_split(module)
        except CertificateFailure as exc:
            failures += 1
            checks.append(CheckResult(f"split sample {k}", FAIL,
                                      {"error": str(exc)}))
            continue
        ok = split.m_prime.supported_on(level1)
        total_x += sum(split.x_multiplicities)
        total_a += split.a
        if not ok:
            failures += 1
            checks.append(CheckResult(f"split sample {k}", FAIL,
                                      {"m_prime_support": split.m_prime.support()}))
    checks.insert(0, CheckResult(
        f"{config.samples} random splittings verified, complements at level 1",
        PASS if failures == 0 else FAIL,
        {"samples": config.samples, "failures": failures,
         "c2_string_summands_seen": total_x, "projective_copies_seen": total_a}))
    return ClaimReport("lemma-2", _aggregate(checks), checks, config)


def claim_corollary_3(config: FamilyConfig) -> ClaimReport:
    checks: List[CheckResult] = []
    alg = Algebra(build_lambda(config.r, 2), field=config.field)
    level1 = set(lambda_vertices(config.r, 1))
    count = config.samples
    samples = sample_finite_pd_modules(alg, count, seed=config.seed,
                                       max_dim=max(config.max_dim, 60))
    bad = 0
    for idx, (module, report) in enumerate(samples):
        om = syzygy(module)
        if not om.supported_on(level1):
            bad += 1
            checks.append(CheckResult(
                f"sample {idx} syzygy escapes level 1", FAIL,
                {"support": om.support(), "pd": report.value}))
    checks.insert(0, CheckResult(
        f"{count} finite-pd modules: syzygy supported at level 1",
        PASS if bad == 0 else FAIL,
        {"samples": count, "failures": bad}))
    return ClaimReport("corollary-3", _aggregate(checks), checks, config)


def claim_syzygy_descent(config: FamilyConfig) -> ClaimReport:
    checks: List[CheckResult] = []
    per_level = max(4, config.samples // 10)
    for m in range(1, config.m_max + 1):
        alg = Algebra(build_lambda(config.r, m), field=config.field)
        if m == 2:
            target = set(lambda_vertices(config.r, 2)) - {"a2", "b2"}
            label = "the pruned level-2 algebra"
        else:
            target = set(lambda_vertices(config.r, m - 1))
            label = f"level {m - 1}"
        bad = 0
        for k in range(per_level):
            module = random_module(alg, seed=config.seed * 7919 + m * 101 + k,
                                   budget=25)
            if not syzygy(module).supported_on(target):
                bad += 1
        checks.append(CheckResult(
            f"syzygies over level {m} land in {label} ({per_level} samples)",
            PASS if bad == 0 else FAIL, {"failures": bad}))
    return ClaimReport("syzygy-descent", _aggregate(checks), checks, config)


def claim_section_4(config: FamilyConfig) -> ClaimReport:
    checks: List[CheckResult] = []
    for m in range(config.m_max + 1):
        alg = Algebra(build_lambda(config.r, m + 1), field=config.field)
        for t in range(1, config.t_max + 1):
            zt = build_Zt(alg, m, t)
            if t == 1:
                base = build_Z(alg, m)
                iso0 = certified_iso(zt, base, trials=config.trials,
                                     seed=config.seed)
                checks.append(CheckResult(
                    f"member (m={m}, t=1) is the witness",
                    PASS if iso0 is not None else FAIL, {}))
            omega = syzygy(build_Zt(alg, m + 1, t))
            iso = certified_iso(omega, zt, trials=config.trials, seed=config.seed)
            checks.append(CheckResult(
                f"syzygy of member (m={m + 1}, t={t}) is member (m={m}, t={t})",
                PASS if iso is not None else FAIL,
                {"dims": list(zt.dim_vector())}))
            rep = projdim(zt, cutoff=config.chain_cutoff(m), seed=config.seed)
            checks.append(_verdict_check(
                f"pd member (m={m}, t={t}) = {config.r + m}", rep,
                config.r + m))
            phi = build_phi(alg, m, t)
            ker, _ = kernel_of(phi)
            u_expected = build_U(alg, m, t)
            if u_expected.is_zero():
                ok = ker.is_zero()
            else:
                ok = certified_iso(ker, u_expected, trials=config.trials,
                                   seed=config.seed) is not None
            checks.append(CheckResult(
                f"kernel of connecting map (m={m}, t={t}) as expected",
                PASS if ok else FAIL,
                {"kernel_dims": list(ker.dim_vector()),
                 "expected_dims": list(u_expected.dim_vector())}))
            if t + 1 <= config.t_max:
                phi_next = build_phi(alg, m, t + 1)
                composite = phi_next.compose(phi)
                ker2, _ = kernel_of(composite)
                contained = _subspace_contained(phi, composite)
                checks.append(CheckResult(
                    f"composite kernel contains first kernel (m={m}, t={t})",
                    PASS if contained else FAIL,
                    {"first": ker.total_dim(), "composite": ker2.total_dim()}))
    return ClaimReport("section-4", _aggregate(checks), checks, config)


def _subspace_contained(first, composite) -> bool:
    """Kernel of ``first`` is contained in the kernel of ``composite``."""
    for v in first.source.algebra.vertices:
        k1 = first.mats[v].kernel_basis()
        if k1.cols and not (composite.mats[v] @ k1).is_zero():
            return False
    return True


APPENDIX_LAYERS: Dict[str, List[Dict[str, int]]] = {
    "u": [{"u": 1}, {"u": 1}],
    "v": [{"v": 1}, {"v": 1}],
    "w": [{"w": 1}, {"w": 1}],
    "bm1": [{"bm1": 1}, {"bm1": 1}],
    "cm1": [{"cm1": 1}, {"cm1": 1}],
    "a0": [{"a0": 1}, {"c0": 1, "u": 1}, {"cm1": 1}],
    "b0": [{"b0": 1}, {"bm1": 1, "v": 1}],
    "c0": [{"c0": 1}, {"cm1": 1, "w": 1}],
    "a1": [{"a1": 1}, {"d0": 1, "a0": 1}, {"u": 1}],
    "b1": [{"b1": 1}, {"b0": 1, "c0": 1}, {"bm1": 1, "w": 1}],
    "c1": [{"c1": 1}, {"a0": 1, "b0": 1}, {"c0": 1, "v": 1}, {"cm1": 1}],
    "a2": [{"a2": 1}, {"c2": 1, "a1": 1}, {"c1": 1}, {"a0": 1}],
    "b2": [{"b2": 1}, {"b1": 1, "c1": 1}, {"b0": 1}],
    "c2": [{"c2": 1}, {"c1": 1, "b1": 1}, {"a0": 1}, {"c0": 1}],
    "a3": [{"a3": 1}, {"a2": 1, "b2": 1}, {"c2": 1}, {"c1": 1}],
    "b3": [{"b3": 1}, {"b2": 1, "c2": 1}, {"b1": 1}],
    "a4": [{"a4": 1}, {"b3": 1, "a3": 1}, {"b2": 1}],
    "b4": [{"b4": 1}, {"a3": 1, "b3": 1}, {"a2": 1}, {"c2": 1}],
    "a5": [{"a5": 1}, {"a4": 1, "b4": 1}, {"b3": 1}],
    "b5": [{"b5": 1}, {"b4": 1, "a4": 1}, {"a3": 1}],
}


def expected_projective_layers(r: int) -> Dict[str, List[Dict[str, int]]]:
    """Transcribed level-5 projective shapes, chain part dependent on r."""
    out = dict(APPENDIX_LAYERS)
    for i in range(r):
        out[vname("d", i)] = [{vname("d", i): 1}, {vname("d", i + 1): 1}]
    out[vname("d", r)] = [{vname("d", r): 1}]
    return out


def radical_filtration(module) -> List[Dict[str, int]]:
    """Dimension vectors of the radical layers rad^k M / rad^{k+1} M."""
    layers = []
    current = module
    while current.total_dim():
        sub, _ = radical(current)
        layer = {v: current.dims[v] - sub.dims[v] for v in current.algebra.vertices}
        layers.append({v: d for v, d in layer.items() if d})
        current = sub
    return layers


def claim_appendix_projectives(config: FamilyConfig) -> ClaimReport:
    checks: List[CheckResult] = []
    alg = Algebra(build_lambda(config.r, 5), field=config.field)
    expected = expected_projective_layers(config.r)
    for v in alg.vertices:
        proj = alg.projective(v)
        layers = radical_filtration(proj)
        want = expected[v]
        ok = layers == want
        checks.append(CheckResult(
            f"projective at {v} matches its diagram",
            PASS if ok else FAIL,
            {"computed": layers, "expected": want}))
    return ClaimReport("appendix-projectives", _aggregate(checks), checks, config)


def claim_findim_witness(config: FamilyConfig) -> ClaimReport:
    checks: List[CheckResult] = []
    for m in range(config.m_max + 1):
        alg = Algebra(build_lambda(config.r, m), field=config.field)
        rep = projdim(build_Z(alg, m), cutoff=config.chain_cutoff(m),
                      seed=config.seed)
        checks.append(_verdict_check(
            f"lower bound witness: pd = {config.r + m} at level {m}",
            rep, config.r + m))
    # Sampled upper-bound evidence at level 2: finite pd never exceeds r+2.
    alg2 = Algebra(build_lambda(config.r, 2), field=config.field)
    count = max(10, config.samples // 5)
    samples = sample_finite_pd_modules(alg2, count, seed=config.seed)
    worst = max(report.value for _, report in samples)
    checks.append(CheckResult(
        f"sampled finite-pd level-2 modules have pd <= {config.r + 2} "
        f"({count} samples)",
        PASS if worst <= config.r + 2 else FAIL,
        {"worst_pd": worst, "samples": count}))
    return ClaimReport("findim-witness", _aggregate(checks), checks, config)


CLAIMS: Dict[str, Callable[[FamilyConfig], ClaimReport]] = {
    "simples-pd": claim_simples_pd,
    "prop-2": claim_prop_2,
    "lemma-1": claim_lemma_1,
    "lemma-2": claim_lemma_2,
    "corollary-3": claim_corollary_3,
    "syzygy-descent": claim_syzygy_descent,
    "section-4": claim_section_4,
    "appendix-projectives": claim_appendix_projectives,
    "findim-witness": claim_findim_witness,
}


def run_claim(claim_id: str, config: FamilyConfig) -> ClaimReport:
    if claim_id not in CLAIMS:
        raise KeyError(f"unknown claim {claim_id!r}; known: {', '.join(CLAIMS)}")
    return CLAIMS[claim_id](config)


def run_claims(claim_ids: List[str], config: FamilyConfig) -> List[ClaimReport]:
    return [run_claim(cid, config) for cid in claim_ids]
