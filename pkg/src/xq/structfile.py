"""Versioned JSON structure files.

A file holds one object: {"version": "1", "kind": <kind>, "body": {...}}.
Kinds: group, precrossed, crossed, xc3, rqm, qm, rqc4, pair, morphism,
homotopy.  Parsing reports syntax errors with line/column and semantic
errors with a JSON path such as $.body.group.rank.  Serialization is
canonical (sorted keys, two-space indent, trailing newline) so that equal
structures produce byte-identical files.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from .crossed import (CrossedComplex3, GroupAction, PreCrossedModule,
                      XC3Homotopy, XC3Morphism, check_crossed,
                      check_precrossed, verify_xc3_homotopy,
                      xc3_check, xc3_morphism_check)
from .groups import Group, GroupHom, check_group_laws, group_from_json
from .quadratic import (QCHomotopy, QCMorphism, QuadraticModule,
                        ReducedQuadraticComplex4, ReducedQuadraticModule,
                        UnderCofibration, qcm_check, qm_check, rqc4_check,
                        rqm_check, verify_rq_homotopy)
from .report import Report

FORMAT_VERSION = "1"

STRUCTURE_KINDS = ("group", "precrossed", "crossed", "xc3", "rqm", "qm",
                   "rqc4", "pair", "morphism", "homotopy")


class StructureError(ValueError):
    """Parse or validation failure with a position.

    Syntax problems carry line/column; semantic problems carry a JSON path.
    """

    def __init__(self, message: str, path: str | None = None,
                 line: int | None = None, col: int | None = None):
        self.reason = message
        self.path = path
        self.line = line
        self.col = col
        super().__init__(str(self))

    def __str__(self) -> str:
        if self.line is not None:
            return f"line {self.line}, column {self.col}: {self.reason}"
        if self.path is not None:
            return f"{self.path}: {self.reason}"
        return self.reason


def _err(message: str, path: str) -> StructureError:
    return StructureError(message, path=path)


def _expect_dict(obj, path) -> dict:
    if not isinstance(obj, dict):
        raise _err(f"expected an object, found {type(obj).__name__}", path)
    return obj


def _expect_list(obj, path) -> list:
    if not isinstance(obj, list):
        raise _err(f"expected an array, found {type(obj).__name__}", path)
    return obj


def _get(obj: dict, key: str, path: str):
    if key not in obj:
        raise _err("missing required key", f"{path}.{key}")
    return obj[key], f"{path}.{key}"


def _opt(obj: dict, key: str, path: str, default=None):
    return obj.get(key, default), f"{path}.{key}"


def parse_structure(text: str) -> dict:
    """JSON text -> raw structure object, with positioned diagnostics."""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise StructureError(e.msg, line=e.lineno, col=e.colno) from None
    raw = _expect_dict(raw, "$")
    version, vpath = _get(raw, "version", "$")
    if version != FORMAT_VERSION:
        raise _err(f"unsupported format version {version!r} "
                   f"(this reader understands {FORMAT_VERSION!r})", vpath)
    kind, kpath = _get(raw, "kind", "$")
    if kind not in STRUCTURE_KINDS:
        raise _err(f"unknown structure kind {kind!r}; expected one of "
                   + ", ".join(STRUCTURE_KINDS), kpath)
    body, bpath = _get(raw, "body", "$")
    _expect_dict(body, bpath)
    return raw


def serialize_structure(obj: dict) -> str:
    """Canonical text: sorted keys, two-space indent, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


# -- element / map level ------------------------------------------------------

def _build_group(obj, path) -> Group:
    obj = _expect_dict(obj, path)
    kind, kpath = _get(obj, "kind", path)
    if not isinstance(kind, str):
        raise _err("group kind must be a string", kpath)
    if kind == "cyclic":
        order, opath = _get(obj, "order", path)
        if not isinstance(order, int) or order < 1:
            raise _err("cyclic group order must be an integer >= 1", opath)
    else:
        rank, rpath = _get(obj, "rank", path)
        if not isinstance(rank, int) or rank < 0:
            raise _err("rank must be a nonnegative integer", rpath)
        rels, relpath = _opt(obj, "relations", path)
        if rels is not None:
            rels = _expect_list(rels, relpath)
            for i, row in enumerate(rels):
                row = _expect_list(row, f"{relpath}[{i}]")
                if len(row) != rank or not all(isinstance(a, int) for a in row):
                    raise _err(f"relation rows must have {rank} integer entries",
                               f"{relpath}[{i}]")
    names, npath = _opt(obj, "names", path)
    if names is not None:
        names = _expect_list(names, npath)
        if not all(isinstance(s, str) for s in names):
            raise _err("names must be strings", npath)
    try:
        return group_from_json(obj)
    except ValueError as e:
        raise _err(str(e), path) from None


def _build_element(group: Group, obj, path):
    try:
        return group.element_from_json(obj)
    except (ValueError, TypeError, IndexError, KeyError) as e:
        raise _err(f"bad element: {e}", path) from None


def _build_hom(obj, path, source: Group, target: Group) -> GroupHom:
    obj = _expect_dict(obj, path)
    images, ipath = _get(obj, "images", path)
    images = _expect_list(images, ipath)
    if len(images) != source.ngens:
        raise _err(f"expected {source.ngens} images (one per source generator), "
                   f"found {len(images)}", ipath)
    built = [_build_element(target, e, f"{ipath}[{i}]")
             for i, e in enumerate(images)]
    return GroupHom(source, target, built)


def _build_action(obj, path, acting: Group, acted: Group) -> GroupAction:
    obj = _expect_dict(obj, path)
    kind, kpath = _opt(obj, "kind", path, "table")
    if kind == "trivial":
        return GroupAction.trivial(acting, acted)
    if kind == "conjugation":
        if acting != acted:
            raise _err("conjugation action needs acting == acted", kpath)
        return GroupAction.conjugation(acting)
    if kind != "table":
        raise _err(f"unknown action kind {kind!r}", kpath)
    table, tpath = _get(obj, "table", path)
    table = _expect_list(table, tpath)
    if len(table) != acted.ngens:
        raise _err(f"action table needs one row per acted generator "
                   f"({acted.ngens}), found {len(table)}", tpath)
    rows = []
    for x, row in enumerate(table):
        row = _expect_list(row, f"{tpath}[{x}]")
        if len(row) != acting.ngens:
            raise _err(f"row must have {acting.ngens} entries", f"{tpath}[{x}]")
        rows.append([_build_element(acted, e, f"{tpath}[{x}][{a}]")
                     for a, e in enumerate(row)])
    inv, invpath = _opt(obj, "inverse_table", path)
    inv_rows = None
    if inv is not None:
        inv = _expect_list(inv, invpath)
        inv_rows = [[_build_element(acted, e, f"{invpath}[{x}][{a}]")
                     for a, e in enumerate(_expect_list(row, f"{invpath}[{x}]"))]
                    for x, row in enumerate(inv)]
    try:
        return GroupAction(acting, acted, kind="table", table=rows,
                           inverse_table=inv_rows)
    except ValueError as e:
        raise _err(str(e), path) from None


def _build_omega(obj, path, q2: Group, q3: Group) -> tuple:
    obj = _expect_list(obj, path)
    n = q2.ngens
    if len(obj) != n:
        raise _err(f"omega needs {n} rows (abelianized basis of the degree-2 "
                   f"group), found {len(obj)}", path)
    rows = []
    for i, row in enumerate(obj):
        row = _expect_list(row, f"{path}[{i}]")
        if len(row) != n:
            raise _err(f"omega row must have {n} entries", f"{path}[{i}]")
        rows.append(tuple(_build_element(q3, e, f"{path}[{i}][{j}]")
                          for j, e in enumerate(row)))
    return tuple(rows)


# -- structure level ----------------------------------------------------------

def _build_precrossed(body, path) -> PreCrossedModule:
    m1 = _build_group(*_get(body, "m1", path))
    m2 = _build_group(*_get(body, "m2", path))
    d = _build_hom(*_get(body, "d", path), source=m2, target=m1)
    action = _build_action(*_get(body, "action", path), acting=m1, acted=m2)
    return PreCrossedModule(m1, m2, d, action)


def _build_xc3(body, path) -> CrossedComplex3:
    m1 = _build_group(*_get(body, "m1", path))
    m2 = _build_group(*_get(body, "m2", path))
    m3 = _build_group(*_get(body, "m3", path))
    d2 = _build_hom(*_get(body, "d2", path), source=m2, target=m1)
    d3 = _build_hom(*_get(body, "d3", path), source=m3, target=m2)
    action2 = _build_action(*_get(body, "action2", path), acting=m1, acted=m2)
    action3 = _build_action(*_get(body, "action3", path), acting=m1, acted=m3)
    under2, u2path = _opt(body, "under2", path, [])
    under3, u3path = _opt(body, "under3", path, [])
    u2 = tuple(_build_element(m2, e, f"{u2path}[{i}]")
               for i, e in enumerate(_expect_list(under2, u2path)))
    u3 = tuple(_build_element(m3, e, f"{u3path}[{i}]")
               for i, e in enumerate(_expect_list(under3, u3path)))
    return CrossedComplex3(m1, m2, m3, d2, d3, action2, action3, u2, u3)


def _build_rqm(body, path) -> ReducedQuadraticModule:
    q2 = _build_group(*_get(body, "q2", path))
    q3 = _build_group(*_get(body, "q3", path))
    d3 = _build_hom(*_get(body, "d3", path), source=q3, target=q2)
    omega = _build_omega(*_get(body, "omega", path), q2=q2, q3=q3)
    try:
        return ReducedQuadraticModule(q2, q3, omega, d3)
    except ValueError as e:
        raise _err(str(e), path) from None


def _build_qm(body, path) -> QuadraticModule:
    pre = _build_precrossed(body, path)
    q3 = _build_group(*_get(body, "q3", path))
    d3 = _build_hom(*_get(body, "d3", path), source=q3, target=pre.m2)
    omega = _build_omega(*_get(body, "omega", path), q2=pre.m2, q3=q3)
    action3 = _build_action(*_get(body, "action3", path),
                            acting=pre.m1, acted=q3)
    try:
        return QuadraticModule(pre, q3, d3, omega, action3)
    except ValueError as e:
        raise _err(str(e), path) from None


def _build_rqc4(body, path) -> ReducedQuadraticComplex4:
    body = _expect_dict(body, path)
    rqm = _build_rqm(body, path)
    q4 = _build_group(*_get(body, "q4", path))
    d4 = _build_hom(*_get(body, "d4", path), source=q4, target=rqm.q3)
    name, _ = _opt(body, "name", path, "reduced quadratic 4-complex")
    cx = ReducedQuadraticComplex4(rqm, q4, d4, name=name)
    under, upath = _opt(body, "under", path)
    if under is not None:
        under = _expect_dict(under, upath)
        base_raw, basepath = _get(under, "base", upath)
        if base_raw == "self":
            base = cx
        else:
            base = _build_rqc4(base_raw, basepath)
        uq2 = _build_hom(*_get(under, "q2", upath), source=base.q2, target=cx.q2)
        uq3 = _build_hom(*_get(under, "q3", upath), source=base.q3, target=cx.q3)
        uq4 = _build_hom(*_get(under, "q4", upath), source=base.q4, target=cx.q4)
        cx.under = UnderCofibration(base, uq2, uq3, uq4)
    return cx


def _build_complex_structure(obj, path):
    """A nested {"kind","body"} structure that must be rqc4 or xc3."""
    obj = _expect_dict(obj, path)
    kind, kpath = _get(obj, "kind", path)
    body, bpath = _get(obj, "body", path)
    _expect_dict(body, bpath)
    if kind == "rqc4":
        return "rqc4", _build_rqc4(body, bpath)
    if kind == "xc3":
        return "xc3", _build_xc3(body, bpath)
    raise _err(f"expected an rqc4 or xc3 structure here, found {kind!r}", kpath)


def bind_rqc4_morphism(maps, path, source: ReducedQuadraticComplex4,
                       target: ReducedQuadraticComplex4) -> QCMorphism:
    maps = _expect_dict(maps, path)
    f2 = _build_hom(*_get(maps, "f2", path), source=source.q2, target=target.q2)
    f3 = _build_hom(*_get(maps, "f3", path), source=source.q3, target=target.q3)
    f4 = _build_hom(*_get(maps, "f4", path), source=source.q4, target=target.q4)
    return QCMorphism(source, target, f2, f3, f4)


def bind_xc3_morphism(maps, path, source: CrossedComplex3,
                      target: CrossedComplex3) -> XC3Morphism:
    maps = _expect_dict(maps, path)
    f1 = _build_hom(*_get(maps, "f1", path), source=source.m1, target=target.m1)
    f2 = _build_hom(*_get(maps, "f2", path), source=source.m2, target=target.m2)
    f3 = _build_hom(*_get(maps, "f3", path), source=source.m3, target=target.m3)
    return XC3Morphism(source, target, f1, f2, f3)


def _build_morphism(body, path):
    src_kind, source = _build_complex_structure(*_get(body, "source", path))
    tgt_kind, target = _build_complex_structure(*_get(body, "target", path))
    if src_kind != tgt_kind:
        raise _err(f"source is {src_kind} but target is {tgt_kind}",
                   f"{path}.target.kind")
    maps, mpath = _get(body, "maps", path)
    if src_kind == "rqc4":
        return bind_rqc4_morphism(maps, mpath, source, target)
    return bind_xc3_morphism(maps, mpath, source, target)


def _build_homotopy(body, path):
    src_kind, source = _build_complex_structure(*_get(body, "source", path))
    tgt_kind, target = _build_complex_structure(*_get(body, "target", path))
    if src_kind != tgt_kind:
        raise _err(f"source is {src_kind} but target is {tgt_kind}",
                   f"{path}.target.kind")
    fmaps, fpath = _get(body, "f", path)
    gmaps, gpath = _get(body, "g", path)
    witness, wpath = _get(body, "witness", path)
    witness = _expect_dict(witness, wpath)
    if src_kind == "rqc4":
        f = bind_rqc4_morphism(fmaps, fpath, source, target)
        g = bind_rqc4_morphism(gmaps, gpath, source, target)
        a2, a2path = _get(witness, "alpha2", wpath)
        a2 = _expect_list(a2, a2path)
        if len(a2) != source.q2.ngens:
            raise _err(f"alpha2 needs {source.q2.ngens} values", a2path)
        a3, a3path = _get(witness, "alpha3", wpath)
        a3 = _expect_list(a3, a3path)
        if len(a3) != source.q3.ngens:
            raise _err(f"alpha3 needs {source.q3.ngens} values", a3path)
        h = QCHomotopy(tuple(_build_element(target.q3, e, f"{a2path}[{i}]")
                             for i, e in enumerate(a2)),
                       tuple(_build_element(target.q4, e, f"{a3path}[{i}]")
                             for i, e in enumerate(a3)))
        return (f, g, h)
    f = bind_xc3_morphism(fmaps, fpath, source, target)
    g = bind_xc3_morphism(gmaps, gpath, source, target)
    alpha, apath = _get(witness, "alpha", wpath)
    alpha = _expect_list(alpha, apath)
    if len(alpha) != source.m2.ngens:
        raise _err(f"alpha needs {source.m2.ngens} values", apath)
    h = XC3Homotopy(tuple(_build_element(target.m3, e, f"{apath}[{i}]")
                          for i, e in enumerate(alpha)))
    return (f, g, h)


@dataclass
class StructureFile:
    """A parsed and semantically validated structure file."""

    version: str
    kind: str
    body: dict
    value: Any = field(repr=False, default=None)

    def check(self, samples: int = 200, seed: int | None = None) -> Report:
        """Run the axiom/validity checks appropriate for this kind."""
        v = self.value
        if self.kind == "group":
            return check_group_laws(v, samples=samples, seed=seed or 0)
        if self.kind == "precrossed":
            return check_precrossed(v, samples=samples, seed=seed)
        if self.kind == "crossed":
            return check_crossed(v, samples=samples, seed=seed)
        if self.kind == "xc3":
            return xc3_check(v, samples=samples, seed=seed)
        if self.kind == "rqm":
            return rqm_check(v, samples=samples, seed=seed)
        if self.kind == "qm":
            return qm_check(v, samples=samples, seed=seed)
        if self.kind == "rqc4":
            return rqc4_check(v, samples=samples, seed=seed)
        if self.kind == "pair":
            rep = Report("pair of complexes")
            names = ("source", "target")
            for name, (ckind, cx) in zip(names, v):
                sub = (rqc4_check if ckind == "rqc4" else xc3_check)(
                    cx, samples=samples, seed=seed)
                rep.merge(sub, prefix=f"{name}.")
            return rep
        if self.kind == "morphism":
            if isinstance(v, QCMorphism):
                return qcm_check(v, samples=samples, seed=seed)
            return xc3_morphism_check(v, samples=samples, seed=seed)
        if self.kind == "homotopy":
            f, g, h = v
            if isinstance(f, QCMorphism):
                return verify_rq_homotopy(f, g, h)
            return verify_xc3_homotopy(f, g, h)
        raise AssertionError(f"unhandled kind {self.kind}")


def build_structure(raw: dict) -> StructureFile:
    """Validated StructureFile from a raw parsed object."""
    kind = raw["kind"]
    body = raw["body"]
    path = "$.body"
    if kind == "group":
        value = _build_group(*_get(body, "group", path))
    elif kind in ("precrossed", "crossed"):
        value = _build_precrossed(body, path)
    elif kind == "xc3":
        value = _build_xc3(body, path)
    elif kind == "rqm":
        value = _build_rqm(body, path)
    elif kind == "qm":
        value = _build_qm(body, path)
    elif kind == "rqc4":
        value = _build_rqc4(body, path)
    elif kind == "pair":
        value = (_build_complex_structure(*_get(body, "source", path)),
                 _build_complex_structure(*_get(body, "target", path)))
        if value[0][0] != value[1][0]:
            raise _err(f"source is {value[0][0]} but target is {value[1][0]}",
                       f"{path}.target.kind")
    elif kind == "morphism":
        value = _build_morphism(body, path)
    elif kind == "homotopy":
        value = _build_homotopy(body, path)
    else:
        raise _err(f"unknown structure kind {kind!r}", "$.kind")
    return StructureFile(raw["version"], kind, body, value)


def load_structure(text: str) -> StructureFile:
    return build_structure(parse_structure(text))


# -- writers ------------------------------------------------------------------

def group_structure(g: Group) -> dict:
    return {"version": FORMAT_VERSION, "kind": "group",
            "body": {"group": g.to_json()}}


def rqc4_body(cx: ReducedQuadraticComplex4) -> dict:
    body = {
        "name": cx.name,
        "q2": cx.q2.to_json(),
        "q3": cx.q3.to_json(),
        "omega": [[cx.q3.element_to_json(e) for e in row]
                  for row in cx.rqm.omega],
        "d3": cx.d3.element_json(),
        "q4": cx.q4.to_json(),
        "d4": cx.d4.element_json(),
    }
    if cx.under is not None:
        base = "self" if cx.under.base is cx else rqc4_body(cx.under.base)
        body["under"] = {"base": base,
                         "q2": cx.under.q2.element_json(),
                         "q3": cx.under.q3.element_json(),
                         "q4": cx.under.q4.element_json()}
    return body


def rqc4_structure(cx: ReducedQuadraticComplex4) -> dict:
    return {"version": FORMAT_VERSION, "kind": "rqc4", "body": rqc4_body(cx)}


def pair_structure(source: ReducedQuadraticComplex4,
                   target: ReducedQuadraticComplex4) -> dict:
    return {"version": FORMAT_VERSION, "kind": "pair",
            "body": {"source": {"kind": "rqc4", "body": rqc4_body(source)},
                     "target": {"kind": "rqc4", "body": rqc4_body(target)}}}


def morphism_structure(m: QCMorphism) -> dict:
    return {"version": FORMAT_VERSION, "kind": "morphism",
            "body": {"source": {"kind": "rqc4", "body": rqc4_body(m.source)},
                     "target": {"kind": "rqc4", "body": rqc4_body(m.target)},
                     "maps": m.maps_json()}}


def homotopy_structure(f: QCMorphism, g: QCMorphism, h: QCHomotopy) -> dict:
    return {"version": FORMAT_VERSION, "kind": "homotopy",
            "body": {"source": {"kind": "rqc4", "body": rqc4_body(f.source)},
                     "target": {"kind": "rqc4", "body": rqc4_body(f.target)},
                     "f": f.maps_json(), "g": g.maps_json(),
                     "witness": h.to_json(f.target)}}


def structures_agree(a: dict, b: dict) -> bool:
    """Byte-level agreement of two nested {"kind","body"} structures."""
    key = lambda obj: serialize_structure({"kind": obj["kind"], "body": obj["body"]})
    return key(a) == key(b)
