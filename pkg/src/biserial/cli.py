"""Command-line front end.

Subcommands::

    algebra build|parse|emit|projectives|dot   presentations and projectives
    module  pd|syzygy|hom|iso|split|dot        homological computations
    verify  <claim ...>|all                    the claim catalog

Exit codes: 0 success / all claims pass, 1 a claim or isomorphism search
failed, 2 usage or parse error, 3 an inconclusive verdict (with
``--strict`` for ``module pd``).  ``--structured`` switches reports to
line-delimited JSON records, byte-stable for identical flags.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from .claims import CLAIMS, FamilyConfig, run_claim
from .decomp import CertificateFailure, lemma2_split
from .families import family_from_spec
from .fields import FieldError, field_from_spec
from .homology import (certified_iso, hom_basis, projdim, record_digest,
                       syzygy)
from .modfiles import (ModuleFileError, dot_quiver, dot_representation,
                       emit_module_raw, parse_module_file)
from .pathbasis import BoundExceeded
from .presentation import ParseError, PresentationError, parse_presentation
from .presentation import emit_presentation
from .claims import radical_filtration
from .reps import Algebra, RepresentationError

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INCONCLUSIVE = 0, 1, 2, 3


def _load_presentation(spec: str):
    """A family spec like ``lambda:r=1,m=3`` or a presentation file path."""
    if ":" in spec or spec in ("lambda", "lambda1prime"):
        return family_from_spec(spec)
    with open(spec, encoding="utf-8") as fh:
        return parse_presentation(fh.read())


def _algebra_from_args(args) -> Algebra:
    pres = _load_presentation(args.algebra)
    return Algebra(pres, field=field_from_spec(args.field),
                   length_bound=args.length_bound)


def _family_presentation(args):
    if args.family == "lambda":
        if args.m is None:
            raise PresentationError("family 'lambda' needs --m")
        return family_from_spec(f"lambda:r={args.r},m={args.m}")
    if args.family == "lambda1prime":
        return family_from_spec(f"lambda1prime:r={args.r}")
    raise PresentationError(f"unknown family {args.family!r}")


def _write(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _resolve_module(path: str, algebra: Algebra):
    with open(path, encoding="utf-8") as fh:
        modules = parse_module_file(fh.read(), algebra)
    name = next(reversed(modules))
    return name, modules[name]


# -- algebra subcommands -----------------------------------------------------


def cmd_algebra(args) -> int:
    if args.algebra_cmd == "parse":
        with open(args.file, encoding="utf-8") as fh:
            pres = parse_presentation(fh.read())
        print(f"ok: {pres.name}: {len(pres.quiver.vertices)} vertices, "
              f"{len(pres.quiver.arrows)} arrows, {len(pres.relations)} relations")
        return EXIT_OK

    if args.algebra_cmd in ("build", "emit", "projectives", "dot"):
        if getattr(args, "file", None):
            with open(args.file, encoding="utf-8") as fh:
                pres = parse_presentation(fh.read())
        else:
            pres = _family_presentation(args)

    if args.algebra_cmd == "build":
        if args.emit:
            _write(emit_presentation(pres), args.output)
        else:
            algebra = Algebra(pres, field=field_from_spec(args.field),
                              length_bound=args.length_bound)
            print(f"{pres.name}: {len(pres.quiver.vertices)} vertices, "
                  f"{len(pres.quiver.arrows)} arrows, "
                  f"{len(pres.relations)} relations, "
                  f"dimension {algebra.dim()} over field {args.field}")
        return EXIT_OK

    if args.algebra_cmd == "emit":
        _write(emit_presentation(pres), args.output)
        return EXIT_OK

    if args.algebra_cmd == "projectives":
        algebra = Algebra(pres, field=field_from_spec(args.field),
                          length_bound=args.length_bound)
        records = []
        for v in algebra.vertices:
            proj = algebra.projective(v)
            layers = radical_filtration(proj)
            records.append({"vertex": v, "dim": proj.total_dim(),
                            "dims": dict(proj.dim_vector()),
                            "radical_layers": layers})
        if args.structured:
            for rec in records:
                rec["field"] = args.field
                print(json.dumps(rec, sort_keys=True))
        else:
            print(f"projectives of {pres.name} (field {args.field}):")
            for rec in records:
                layer_text = " | ".join(
                    ",".join(f"{v}" if c == 1 else f"{v}^{c}"
                             for v, c in sorted(layer.items()))
                    for layer in rec["radical_layers"])
                print(f"  P({rec['vertex']}): dim {rec['dim']:2d}  [{layer_text}]")
        return EXIT_OK

    if args.algebra_cmd == "dot":
        _write(dot_quiver(pres), args.output)
        return EXIT_OK

    raise AssertionError


# -- module subcommands ------------------------------------------------------


def cmd_module(args) -> int:
    algebra = _algebra_from_args(args)

    if args.module_cmd in ("pd", "syzygy", "split", "dot"):
        name, module = _resolve_module(args.file, algebra)

    if args.module_cmd == "pd":
        report = projdim(module, cutoff=args.cutoff, seed=args.seed,
                         trials=args.trials)
        if args.structured:
            rec = report.to_record()
            rec.update({"module": name, "field": args.field})
            print(json.dumps(rec, sort_keys=True))
        else:
            print(f"pd {name} over {algebra.pres.name} (field {args.field}): "
                  f"{report.describe()}")
            print("chain: " + " -> ".join(
                "0" if not dims else ",".join(f"{v}:{d}" for v, d in dims)
                for dims in report.chain))
        if report.verdict == "inconclusive" and args.strict:
            return EXIT_INCONCLUSIVE
        return EXIT_OK

    if args.module_cmd == "syzygy":
        om = syzygy(module)
        if args.structured:
            print(json.dumps({"module": name, "field": args.field,
                              "syzygy_dims": dict(om.dim_vector()),
                              "total": om.total_dim()}, sort_keys=True))
        else:
            print(f"syzygy of {name}: total dim {om.total_dim()}, "
                  f"dims {dict(om.dim_vector())}")
        if args.output:
            _write(emit_module_raw(f"syzygy_of_{name}", om), args.output)
        return EXIT_OK

    if args.module_cmd == "hom":
        name_a, mod_a = _resolve_module(args.file, algebra)
        name_b, mod_b = _resolve_module(args.other, algebra)
        basis = hom_basis(mod_a, mod_b)
        if args.structured:
            print(json.dumps({"source": name_a, "target": name_b,
                              "field": args.field, "hom_dim": len(basis)},
                             sort_keys=True))
        else:
            print(f"dim Hom({name_a}, {name_b}) = {len(basis)} "
                  f"(field {args.field})")
        return EXIT_OK

    if args.module_cmd == "iso":
        name_a, mod_a = _resolve_module(args.file, algebra)
        name_b, mod_b = _resolve_module(args.other, algebra)
        cert = certified_iso(mod_a, mod_b, trials=args.trials, seed=args.seed)
        if cert is None:
            if mod_a.dims != mod_b.dims:
                print(f"not isomorphic: dimension vectors differ "
                      f"({dict(mod_a.dim_vector())} vs {dict(mod_b.dim_vector())})")
            else:
                print(f"no isomorphism found after {args.trials or 'default'} trials "
                      f"(not a proof of non-isomorphism)")
            return EXIT_FAIL
        if args.structured:
            payload = {v: [[algebra.field.format(x) for x in row]
                           for row in m.data]
                       for v, m in sorted(cert.mats.items()) if m.rows or m.cols}
            print(json.dumps({"source": name_a, "target": name_b,
                              "field": args.field, "certificate": payload},
                             sort_keys=True))
        else:
            print(f"{name_a} ~ {name_b}: certified isomorphism")
            for v, m in sorted(cert.mats.items()):
                if m.rows and m.cols:
                    rows = "; ".join(" ".join(algebra.field.format(x) for x in row)
                                     for row in m.data)
                    print(f"  {v}: [{rows}]")
        return EXIT_OK

    if args.module_cmd == "split":
        try:
            split = lemma2_split(module)
        except CertificateFailure as exc:
            print(f"certificate failure: {exc}", file=sys.stderr)
            return EXIT_FAIL
        rec = split.to_record()
        if args.structured:
            rec.update({"module": name, "field": args.field})
            print(json.dumps(rec, sort_keys=True))
        else:
            print(f"splitting of {name} (field {args.field}):")
            print(f"  c2-string multiplicities: {split.x_multiplicities}")
            print(f"  projective c2 copies:     {split.a}")
            print(f"  complement dims:          {dict(split.m_prime.dim_vector())}")
            print(f"  certificate checksum:     {rec['certificate_checksum']}")
        return EXIT_OK

    if args.module_cmd == "dot":
        _write(dot_representation(name, module), args.output)
        return EXIT_OK

    raise AssertionError


# -- verify -------------------------------------------------------------------


def cmd_verify(args) -> int:
    claim_ids = list(args.claims)
    if claim_ids == ["all"]:
        claim_ids = list(CLAIMS)
    unknown = [c for c in claim_ids if c not in CLAIMS]
    if unknown:
        print(f"unknown claims: {', '.join(unknown)}; known: "
              f"{', '.join(CLAIMS)}", file=sys.stderr)
        return EXIT_USAGE
    config = FamilyConfig(r=args.r, m_max=args.m_max, t_max=args.t_max,
                          field_spec=args.field, seed=args.seed,
                          cutoff=args.cutoff, samples=args.samples,
                          max_dim=args.max_dim, trials=args.trials)
    reports = []
    for cid in claim_ids:
        report = run_claim(cid, config)
        reports.append(report)
        if args.structured:
            print(json.dumps(report.to_record(), sort_keys=True))
        else:
            print(report.describe())
    statuses = {r.status for r in reports}
    summary = {"claims": len(reports),
               "pass": sum(r.status == "pass" for r in reports),
               "fail": sum(r.status == "fail" for r in reports),
               "inconclusive": sum(r.status == "inconclusive" for r in reports)}
    if args.structured:
        print(json.dumps({"summary": summary,
                          "digest": record_digest(
                              [r.to_record() for r in reports])},
                         sort_keys=True))
    else:
        print(f"summary: {summary['pass']} pass, {summary['fail']} fail, "
              f"{summary['inconclusive']} inconclusive")
    if "fail" in statuses:
        return EXIT_FAIL
    if "inconclusive" in statuses:
        return EXIT_INCONCLUSIVE
    return EXIT_OK


# -- wiring -------------------------------------------------------------------


def _add_common(parser, field=True, seed=False, cutoff=False, trials=False):
    if field:
        parser.add_argument("--field", default="q",
                            help="coefficient field: q or fp:<p> (default q)")
    parser.add_argument("--length-bound", type=int, default=64,
                        help="path length bound for the algebra basis")
    if seed:
        parser.add_argument("--seed", type=int, default=0)
    if cutoff:
        parser.add_argument("--cutoff", type=int, default=32,
                            help="syzygy chain cutoff")
    if trials:
        parser.add_argument("--trials", type=int, default=None,
                            help="random trials in isomorphism search")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="biserial",
        description="Special biserial algebra presentations, syzygies, and "
                    "projective-dimension verification by exact linear algebra.")
    sub = parser.add_subparsers(dest="command", required=True)

    alg = sub.add_parser("algebra", help="presentations and projectives")
    alg_sub = alg.add_subparsers(dest="algebra_cmd", required=True)

    p = alg_sub.add_parser("build", help="generate a family presentation")
    p.add_argument("--family", required=True, choices=["lambda", "lambda1prime"])
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--emit", action="store_true",
                   help="print the presentation file instead of a summary")
    p.add_argument("-o", "--output", default=None)
    _add_common(p)

    p = alg_sub.add_parser("parse", help="validate a presentation file")
    p.add_argument("file")
    # Presentations are field-independent; the flag is accepted for
    # uniformity across subcommands.
    p.add_argument("--field", default="q", help=argparse.SUPPRESS)

    p = alg_sub.add_parser("emit", help="canonical presentation text")
    p.add_argument("file", nargs="?", default=None)
    p.add_argument("--family", choices=["lambda", "lambda1prime"])
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("-o", "--output", default=None)
    p.add_argument("--field", default="q", help=argparse.SUPPRESS)

    p = alg_sub.add_parser("projectives", help="projective shapes table")
    p.add_argument("file", nargs="?", default=None)
    p.add_argument("--family", choices=["lambda", "lambda1prime"])
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--structured", action="store_true")
    _add_common(p)

    p = alg_sub.add_parser("dot", help="quiver drawing in DOT")
    p.add_argument("file", nargs="?", default=None)
    p.add_argument("--family", choices=["lambda", "lambda1prime"])
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("-o", "--output", default=None)
    p.add_argument("--field", default="q", help=argparse.SUPPRESS)

    mod = sub.add_parser("module", help="homological computations on modules")
    mod_sub = mod.add_subparsers(dest="module_cmd", required=True)

    p = mod_sub.add_parser("pd", help="projective dimension report")
    p.add_argument("file")
    p.add_argument("--algebra", required=True,
                   help="family spec like lambda:r=1,m=3 or a file path")
    p.add_argument("--strict", action="store_true",
                   help="exit 3 on an inconclusive verdict")
    p.add_argument("--structured", action="store_true")
    _add_common(p, seed=True, cutoff=True, trials=True)

    p = mod_sub.add_parser("syzygy", help="first syzygy")
    p.add_argument("file")
    p.add_argument("--algebra", required=True)
    p.add_argument("-o", "--output", default=None,
                   help="write the syzygy in raw module format")
    p.add_argument("--structured", action="store_true")
    _add_common(p)

    p = mod_sub.add_parser("hom", help="Hom-space dimension")
    p.add_argument("file")
    p.add_argument("other")
    p.add_argument("--algebra", required=True)
    p.add_argument("--structured", action="store_true")
    _add_common(p)

    p = mod_sub.add_parser("iso", help="search for a certified isomorphism")
    p.add_argument("file")
    p.add_argument("other")
    p.add_argument("--algebra", required=True)
    p.add_argument("--structured", action="store_true")
    _add_common(p, seed=True, trials=True)

    p = mod_sub.add_parser("split", help="certified c2-splitting")
    p.add_argument("file")
    p.add_argument("--algebra", required=True)
    p.add_argument("--structured", action="store_true")
    _add_common(p)

    p = mod_sub.add_parser("dot", help="coefficient quiver in DOT")
    p.add_argument("file")
    p.add_argument("--algebra", required=True)
    p.add_argument("-o", "--output", default=None)
    _add_common(p)

    ver = sub.add_parser("verify", help="run verification claims")
    ver.add_argument("claims", nargs="+",
                     help=f"claim ids or 'all'; known: {', '.join(CLAIMS)}")
    ver.add_argument("--r", type=int, default=1)
    ver.add_argument("--m-max", type=int, default=3)
    ver.add_argument("--t-max", type=int, default=3)
    ver.add_argument("--seed", type=int, default=0)
    ver.add_argument("--samples", type=int, default=100)
    ver.add_argument("--max-dim", type=int, default=40)
    ver.add_argument("--cutoff", type=int, default=None)
    ver.add_argument("--trials", type=int, default=None)
    ver.add_argument("--field", default="q")
    ver.add_argument("--structured", action="store_true")

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "algebra":
            return cmd_algebra(args)
        if args.command == "module":
            return cmd_module(args)
        if args.command == "verify":
            return cmd_verify(args)
    except (ParseError, PresentationError, ModuleFileError, FieldError,
            BoundExceeded, RepresentationError, FileNotFoundError,
            ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    raise AssertionError


if __name__ == "__main__":
    sys.exit(main())
