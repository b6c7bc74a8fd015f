"""Command line interface.

Exit codes: 0 all checks passed / homotopy found; 1 a check failed or no
homotopy exists; 2 usage or file errors.  Sampling seeds default to the
XQ_SEED environment variable so repeated runs are byte-identical.
"""

from __future__ import annotations

import argparse
import sys

from . import structfile as sf
from .crossed import xc3_homotopy_decision, xc3_morphism_check
from .monoid import (ExtMonoidElement, M_NAMES, M_TABLE, mbar_check_structure,
                     mbar_compose, mbar_elements)
from .quadratic import qcm_check, rq_homotopy_decision
from .sphere import assemble_selfmap_count, classification_report


def _write_out(path: str | None, text: str) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _load(path: str) -> tuple[dict, sf.StructureFile]:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise sf.StructureError(f"cannot read {path}: {e.strerror or e}")
    raw = sf.parse_structure(text)
    return raw, sf.build_structure(raw)


def _cmd_check(args) -> int:
    raw, structure = _load(args.file)
    rep = structure.check(samples=args.samples, seed=args.seed)
    sys.stdout.write(rep.text())
    _write_out(args.out, rep.to_json())
    return 0 if rep.ok else 1


def _cmd_homotopic(args) -> int:
    pair_raw, pair = _load(args.pair)
    if pair.kind != "pair":
        raise sf.StructureError("expected a pair of complexes", path="$.kind")
    (src_kind, source), (_, target) = pair.value
    f_raw, _ = _load(args.f)
    g_raw, _ = _load(args.g)
    for label, mraw in (("--f", f_raw), ("--g", g_raw)):
        if mraw.get("kind") != "morphism":
            raise sf.StructureError(f"{label} must be a morphism file",
                                    path="$.kind")
        for side in ("source", "target"):
            if not sf.structures_agree(mraw["body"][side],
                                       pair_raw["body"][side]):
                raise sf.StructureError(
                    f"{label}: morphism {side} differs from the pair's {side}",
                    path=f"$.body.{side}")
    if src_kind == "rqc4":
        f = sf.bind_rqc4_morphism(f_raw["body"]["maps"], "$.body.maps",
                                  source, target)
        g = sf.bind_rqc4_morphism(g_raw["body"]["maps"], "$.body.maps",
                                  source, target)
        decide = rq_homotopy_decision
        valid = qcm_check
        witness_key = lambda h: h.to_json(target)
    else:
        f = sf.bind_xc3_morphism(f_raw["body"]["maps"], "$.body.maps",
                                 source, target)
        g = sf.bind_xc3_morphism(g_raw["body"]["maps"], "$.body.maps",
                                 source, target)
        decide = xc3_homotopy_decision
        valid = xc3_morphism_check
        witness_key = lambda h: {"alpha": [target.m3.element_to_json(a)
                                           for a in h.alpha]}
    for label, m in (("f", f), ("g", g)):
        chk = valid(m, samples=args.samples, seed=args.seed)
        if not chk.ok:
            sys.stdout.write(f"morphism {label} is not valid:\n")
            sys.stdout.write(chk.text())
            _write_out(args.out, chk.to_json())
            return 1
    witness, rep = decide(f, g, bound=args.bound)
    sys.stdout.write(rep.text())
    _write_out(args.out, rep.to_json())
    if witness is None:
        return 1
    if args.witness:
        obj = {"version": sf.FORMAT_VERSION, "kind": "homotopy",
               "body": {"source": pair_raw["body"]["source"],
                        "target": pair_raw["body"]["target"],
                        "f": f_raw["body"]["maps"],
                        "g": g_raw["body"]["maps"],
                        "witness": witness_key(witness)}}
        _write_out(args.witness, sf.serialize_structure(obj))
    return 0


def _monoid_label(x: ExtMonoidElement) -> str:
    return f"({x.m},({x.v[0]},{x.v[1]}))"


def _cmd_monoid(args) -> int:
    rep = mbar_check_structure()
    sys.stdout.write(rep.text())
    table_lines = []
    if args.table:
        table_lines.append("composition table of M (rows m, columns m'):")
        table_lines.append("      " + "  ".join(f"{n:3}" for n in M_NAMES))
        for m in M_NAMES:
            row = [M_TABLE[m][j] for j in range(4)]
            table_lines.append(f"  {m:3} " + "  ".join(f"{v:3}" for v in row))
        elements = mbar_elements()
        table_lines.append("")
        table_lines.append("composition table of the extended monoid "
                           "(16 elements, row o column):")
        for x in elements:
            cells = [_monoid_label(mbar_compose(x, y)) for y in elements]
            table_lines.append(f"  {_monoid_label(x):12} " + " ".join(
                f"{c:12}" for c in cells))
        sys.stdout.write("\n".join(table_lines) + "\n")
    if args.out:
        obj = rep.to_json_obj()
        elements = mbar_elements()
        obj["m_table"] = {m: list(M_TABLE[m]) for m in M_NAMES}
        obj["elements"] = [_monoid_label(x) for x in elements]
        obj["table"] = [[_monoid_label(mbar_compose(x, y)) for y in elements]
                        for x in elements]
        _write_out(args.out, sf.serialize_structure(obj))
    return 0 if rep.ok else 1


def _cmd_classify(args) -> int:
    rep = classification_report(ab_range=args.ab_range, r_bound=args.r_bound,
                                bound=args.bound, samples=args.samples,
                                seed=args.seed)
    sys.stdout.write(rep.text())
    if args.out:
        obj = rep.to_json_obj()
        obj["classes"] = rep.meta["classes"]
        obj["count"] = rep.meta["count"]
        _write_out(args.out, sf.serialize_structure(obj))
    return 0 if rep.ok else 1


def _cmd_count(args) -> int:
    rep = assemble_selfmap_count(ab_range=args.ab_range, r_bound=args.r_bound)
    sys.stdout.write(rep.text())
    sys.stdout.write("diagonal-fixing self-map classes of S^2 x S^2: "
                     f"{rep.meta['count']}\n")
    _write_out(args.out, rep.to_json())
    return 0 if rep.ok else 1


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="xq",
        description="exact checks and homotopy classification for algebraic "
                    "models of 3- and 4-dimensional homotopy types")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="validate a structure file and run its "
                                     "axiom checks")
    c.add_argument("file")
    c.add_argument("--samples", type=int, default=200,
                   help="sample count for randomized law checks (default 200)")
    c.add_argument("--seed", type=int, default=None,
                   help="override the XQ_SEED environment variable")
    c.add_argument("--out", help="write the JSON report here")
    c.set_defaults(func=_cmd_check)

    h = sub.add_parser("homotopic", help="decide whether two morphisms bound "
                                         "to a pair of complexes are homotopic")
    h.add_argument("pair", help="structure file of kind 'pair'")
    h.add_argument("--f", required=True, help="morphism file")
    h.add_argument("--g", required=True, help="morphism file")
    h.add_argument("--bound", type=int, default=10,
                   help="coordinate bound for the fallback search (default 10)")
    h.add_argument("--samples", type=int, default=50)
    h.add_argument("--seed", type=int, default=None)
    h.add_argument("--witness", help="write the homotopy witness file here")
    h.add_argument("--out", help="write the JSON report here")
    h.set_defaults(func=_cmd_homotopic)

    s = sub.add_parser("s2xs2", help="the S^2 x S^2 case study")
    ssub = s.add_subparsers(dest="s2xs2_command", required=True)

    cl = ssub.add_parser("classify", help="enumerate and classify retractions "
                                          "of the cylinder model")
    cl.add_argument("--ab-range", type=int, default=3)
    cl.add_argument("--r-bound", type=int, default=10)
    cl.add_argument("--bound", type=int, default=10,
                    help="homotopy search bound")
    cl.add_argument("--samples", type=int, default=100)
    cl.add_argument("--seed", type=int, default=None)
    cl.add_argument("--out", help="write the JSON report here")
    cl.set_defaults(func=_cmd_classify)

    mo = ssub.add_parser("monoid", help="check the extended composition monoid")
    mo.add_argument("--table", action="store_true",
                    help="print the composition tables")
    mo.add_argument("--out", help="write the JSON report here")
    mo.set_defaults(func=_cmd_monoid)

    co = ssub.add_parser("count", help="derive the diagonal-fixing self-map "
                                       "count")
    co.add_argument("--ab-range", type=int, default=2)
    co.add_argument("--r-bound", type=int, default=2)
    co.add_argument("--out", help="write the JSON report here")
    co.set_defaults(func=_cmd_count)
    return p


def run(argv: list[str] | None = None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if e.code else 0
    try:
        return args.func(args)
    except sf.StructureError as e:
        sys.stderr.write(f"error: {e}\n")
        return 2
    except ValueError as e:
        sys.stderr.write(f"error: {e}\n")
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
