import pytest

from biserial.decomp import (NotPathQuiver,
                             interval_decompose, lemma2_split, path_order,
                             strip_pc2, u_algebra, restrict_to_vertices, xset)
from biserial.families import lambda_vertices
from biserial.homology import hom_basis, kernel_of
from biserial.matrices import Matrix
from biserial.presentation import parse_presentation
from biserial.reps import (Algebra, Representation, direct_sum, inflate,
                           random_module)


def peel_count_oracle(algebra, module, brick):
    """Independent multiplicity oracle: split off copies of a brick via the
    composition pairing until none is left."""
    count = 0
    current = module
    while True:
        sections = hom_basis(brick, current)
        retractions = hom_basis(current, brick)
        pair = None
        for s in sections:
            for p in retractions:
                comp = p.compose(s)
                probe = next(v for v, d in brick.dims.items() if d)
                val = comp.mats[probe].data[0][0]
                if val:
                    pair = (s, p.scale(algebra.field.one / val))
                    break
            if pair:
                break
        if pair is None:
            return count
        count += 1
        current, _ = kernel_of(pair[1])


def hom_count_multiplicity_oracle(module, order=None):
    """Second oracle for interval multiplicities: solve the triangular
    system  hom(I, V) = sum_J m_J hom(I, J)  over all intervals."""
    algebra = module.algebra
    if order is None:
        order = path_order(algebra.pres)
    from biserial.decomp import interval_module

    n = len(order)
    intervals = [(lo, hi) for lo in range(n) for hi in range(lo, n)]
    reps = {iv: interval_module(algebra, order, *iv) for iv in intervals}
    h_to_v = {iv: len(hom_basis(reps[iv], module)) for iv in intervals}
    rows = []
    rhs = []
    for i in intervals:
        rows.append([len(hom_basis(reps[i], reps[j])) for j in intervals])
        rhs.append([h_to_v[i]])
    from biserial.fields import QQ

    system = Matrix.from_rows(QQ, rows)
    sol = system.solve(Matrix.from_rows(QQ, rhs))
    assert sol is not None
    out = {}
    for iv, row in zip(intervals, sol.data):
        val = row[0]
        assert val.denominator == 1 and val >= 0
        if val:
            out[iv] = int(val)
    return out


# -- the ten c2 strings --------------------------------------------------------


def test_xset_shapes(algp):
    members = xset(algp)
    assert [m.total_dim() for m in members] == [6, 5, 4, 3, 2, 5, 4, 3, 2, 1]
    assert all(m.dims["c2"] == 1 for m in members)
    # entry 10 is the simple at c2; entry 5 is the two-vertex string c2, b1
    assert members[9].dim_vector() == (("c2", 1),)
    assert dict(members[4].dim_vector()) == {"c2": 1, "b1": 1}


def test_xset_not_level_one(algp):
    level1 = set(lambda_vertices(1, 1))
    for m in xset(algp):
        assert not m.supported_on(level1)


# -- stripping projective c2 copies ---------------------------------------------


def test_strip_projective_itself(algp):
    res = strip_pc2(algp.projective("c2"))
    assert res.multiplicity == 1
    assert res.complement.is_zero()
    assert res.certificate.is_iso()


def test_strip_simple_c2(algp):
    res = strip_pc2(algp.simple("c2"))
    assert res.multiplicity == 0
    assert res.complement.dims == algp.simple("c2").dims


def test_strip_multiplicity_matches_peel_oracle(algp):
    module = random_module(algp, seed=7, budget=35)
    res = strip_pc2(module)
    assert res.multiplicity == peel_count_oracle(algp, module,
                                                 algp.projective("c2"))


def test_strip_planted_copies(algp):
    planted, _, _ = direct_sum(
        algp, [algp.projective("c2"), algp.projective("c2"),
               xset(algp)[2], algp.projective("a1")])
    res = strip_pc2(planted)
    assert res.multiplicity == 2
    assert res.certificate.is_iso()


def test_strip_works_over_level_two(alg2):
    m, _, _ = direct_sum(alg2, [alg2.projective("c2"), alg2.projective("a2")])
    res = strip_pc2(m)
    assert res.multiplicity == 1
    # P(a2) reaches c2 but its long alpha path vanishes there.
    assert res.complement.dims["c2"] == 1


# -- interval decomposition -----------------------------------------------------


def _line_algebra(arrows_spec):
    """Path quiver presentation from specs like ['x1->x2', 'x3->x2']."""
    verts = set()
    lines = ["algebra line"]
    arrows = []
    for spec in arrows_spec:
        src, tgt = spec.split("->")
        verts.update((src, tgt))
        arrows.append((f"e_{src}_{tgt}", src, tgt))
    for v in sorted(verts):
        lines.append(f"vertex {v}")
    for name, src, tgt in arrows:
        lines.append(f"arrow {name} : alpha {src} -> {tgt}")
    return Algebra(parse_presentation("\n".join(lines)))


def test_interval_zero_representation():
    alg = _line_algebra(["x1->x2", "x2->x3"])
    dec = interval_decompose(alg.zero_module())
    assert dec.summands == []
    assert dec.certificate.source.is_zero()


def test_interval_identity_on_a2():
    alg = _line_algebra(["x1->x2"])
    rep = Representation(alg, {"x1": 1, "x2": 1},
                         {"e_x1_x2": Matrix.identity(alg.field, 1)})
    dec = interval_decompose(rep, order=["x1", "x2"])
    assert len(dec.summands) == 1
    assert dec.summands[0].interval == ("x1", "x2")
    assert dec.summands[0].multiplicity == 1


def test_interval_rejects_non_path():
    alg = _line_algebra(["x1->x2", "x1->x3", "x1->x4"])
    with pytest.raises(NotPathQuiver):
        interval_decompose(alg.zero_module())


def test_interval_restriction_of_projective_c2(algp):
    sub, u_verts = u_algebra(algp)
    restricted = restrict_to_vertices(algp.projective("c2"), sub)
    dec = interval_decompose(restricted, order=u_verts)
    assert [(s.interval, s.multiplicity) for s in dec.summands] == \
        [(("a0", "c1", "c2", "b1"), 1)]
    assert hom_count_multiplicity_oracle(restricted, u_verts) == {(2, 5): 1}


def test_interval_multiplicities_match_hom_oracle(algp):
    sub, u_verts = u_algebra(algp)
    for seed in (13, 14, 15):
        module = random_module(algp, seed=seed, budget=30)
        restricted = restrict_to_vertices(module, sub)
        dec = interval_decompose(restricted, order=u_verts)
        got = {(u_verts.index(s.interval[0]), u_verts.index(s.interval[-1])):
               s.multiplicity for s in dec.summands}
        assert got == hom_count_multiplicity_oracle(restricted, u_verts)


def test_interval_certificate_blocks(algp):
    sub, u_verts = u_algebra(algp)
    module = restrict_to_vertices(random_module(algp, seed=23, budget=28), sub)
    dec = interval_decompose(module, order=u_verts)
    cert = dec.certificate
    assert cert.is_iso()
    assert dec.total_dim() == module.total_dim()
    # Conjugating every arrow by the certificate block-diagonalizes it.
    inv = cert.inverse()
    total = cert.source
    for a in sub.pres.quiver.arrows.values():
        lhs = inv.mats[a.target] @ module.mats[a.name] @ cert.mats[a.source]
        assert lhs == total.mats[a.name]


# -- the splitting ---------------------------------------------------------------


def test_split_of_inflated_level_one_module(algp, alg1):
    m = inflate(alg1.projective("c1"), algp)
    split = lemma2_split(m)
    assert split.a == 0
    assert split.x_multiplicities == [0] * 10
    assert split.m_prime.dims == m.dims


def test_split_of_all_ten(algp):
    total, _, _ = direct_sum(algp, xset(algp))
    split = lemma2_split(total)
    assert split.a == 0
    assert split.x_multiplicities == [1] * 10
    assert split.m_prime.is_zero()


def test_split_mixed(algp):
    members = xset(algp)
    m, _, _ = direct_sum(algp, [algp.projective("c2"), members[6], members[6],
                                algp.projective("b1"), algp.simple("w")])
    split = lemma2_split(m)
    assert split.a == 1
    assert split.x_multiplicities == [0, 0, 0, 0, 0, 0, 2, 0, 0, 0]
    assert split.m_prime.total_dim() == \
        algp.projective("b1").total_dim() + 1


def test_split_random_sweep(algp):
    level1 = set(lambda_vertices(1, 1))
    for seed in range(25):
        module = random_module(algp, seed=seed * 3 + 1, budget=30)
        split = lemma2_split(module)
        assert split.m_prime.supported_on(level1)
        assert split.m_prime.dims["c2"] == 0
        assert split.certificate.is_iso()


def test_split_proof_obligations_reported(algp):
    members = xset(algp)
    m, _, _ = direct_sum(algp, [members[0], algp.projective("a0")])
    split = lemma2_split(m)
    assert all(split.proof_checks.values())
    assert len(split.proof_checks) == 10


def test_split_record_is_stable(algp):
    module = random_module(algp, seed=77, budget=25)
    a = lemma2_split(module).to_record()
    b = lemma2_split(module).to_record()
    assert a == b
    assert set(a) == {"x_multiplicities", "pc2_copies", "m_prime_dims",
                      "certificate_checksum"}


def test_split_field_independent(algp, algp_f101):
    from biserial.reps import random_module as rm

    for seed in (5, 6):
        split_q = lemma2_split(rm(algp, seed=seed, budget=24))
        split_p = lemma2_split(rm(algp_f101, seed=seed, budget=24))
        assert split_q.x_multiplicities == split_p.x_multiplicities
        assert split_q.a == split_p.a
        assert split_q.m_prime.dims == split_p.m_prime.dims


def test_corollary_syzygies_split_trivially(alg2, algp):
    # Syzygies of finite-pd level-2 modules restrict to the pruned algebra
    # and split with no c2 content at all.
    from biserial.homology import syzygy
    from biserial.reps import restrict
    from biserial.witnesses import sample_finite_pd_modules

    level1 = set(lambda_vertices(1, 1))
    samples = sample_finite_pd_modules(alg2, 5, seed=2)
    for module, report in samples:
        om = syzygy(module)
        assert om.supported_on(set(algp.pres.quiver.vertices))
        split = lemma2_split(restrict(om, algp))
        assert sum(split.x_multiplicities) == 0
        assert split.a == 0
        assert split.m_prime.supported_on(level1)
