"""Pre-crossed and crossed modules, 3-dimensional crossed complexes,
Peiffer commutators, and homotopy of complex morphisms.

Group actions are right actions given on generators; conventions:
    x^m        action of m on x,
    (x, y)   = -x - y + x + y,
    <x, y>   = -x - y + x + y^{d(x)}     (Peiffer commutator).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .groups import (Group, GroupHom, abelian_coords_info, central_coords_info,
                     invert_hom)
from .intlinalg import ZSystem, reduce_with_order
from .report import Report, seed_from_env
from .tensor import TensorElement


class GroupAction:
    """Right action of `acting` on `acted`, stored as a generator table.

    table[x][a] is the image of acted.gen(x) under acting.gen(a).  The action
    of a word evaluates letter by letter; negative letters need the inverse
    endomorphisms, which are derived automatically for abelian and free
    nil(2) acted groups or supplied as an explicit inverse_table.
    """

    def __init__(self, acting: Group, acted: Group, kind: str = "table",
                 table: Sequence[Sequence] | None = None,
                 inverse_table: Sequence[Sequence] | None = None):
        if kind not in ("trivial", "conjugation", "table"):
            raise ValueError(f"unknown action kind {kind!r}")
        self.acting = acting
        self.acted = acted
        self.kind = kind
        self.table = None
        self.inverse_table = None
        if kind == "conjugation" and acting != acted:
            raise ValueError("conjugation action needs acting == acted")
        if kind == "table":
            if table is None:
                raise ValueError("table action needs a table")
            self.table = [[acted.canon(e) for e in row] for row in table]
            if len(self.table) != acted.ngens or any(
                    len(row) != acting.ngens for row in self.table):
                raise ValueError("action table must be acted.ngens x acting.ngens")
            if inverse_table is not None:
                self.inverse_table = [[acted.canon(e) for e in row]
                                      for row in inverse_table]
        self._endos: dict[tuple[int, int], GroupHom] = {}

    @staticmethod
    def trivial(acting: Group, acted: Group) -> "GroupAction":
        return GroupAction(acting, acted, kind="trivial")

    @staticmethod
    def conjugation(group: Group) -> "GroupAction":
        return GroupAction(group, group, kind="conjugation")

    def endo(self, i: int, sign: int = 1) -> GroupHom:
        """Endomorphism of the acted group given by acting.gen(i)^sign."""
        key = (i, sign)
        if key not in self._endos:
            if sign > 0:
                images = [self.table[x][i] for x in range(self.acted.ngens)]
                self._endos[key] = GroupHom(self.acted, self.acted, images)
            elif self.inverse_table is not None:
                images = [self.inverse_table[x][i] for x in range(self.acted.ngens)]
                self._endos[key] = GroupHom(self.acted, self.acted, images)
            else:
                try:
                    self._endos[key] = invert_hom(self.endo(i, 1))
                except ValueError as exc:
                    raise ValueError(
                        f"action of -{self.acting.names[i]} is not available: {exc}")
        return self._endos[key]

    def apply(self, x, a):
        """x^a for x in the acted group and a in the acting group."""
        if self.kind == "trivial":
            return self.acted.canon(x)
        if self.kind == "conjugation":
            return self.acted.op_all(self.acted.inv(a), x, a)
        out = self.acted.canon(x)
        for i, s in self.acting.word_of(self.acting.canon(a)):
            out = self.endo(i, s)(out)
        return out

    def check(self, rng: random.Random, samples: int) -> Report:
        rep = Report("group action")
        acted, acting = self.acted, self.acting
        if self.kind == "table":
            bad = None
            for i in range(acting.ngens):
                ok, why = self.endo(i).check_hom(rng, samples=10)
                if not ok:
                    bad = f"generator {acting.names[i]}: {why}"
                    break
            rep.add("action_endos_are_homs", bad is None, bad)
            if self.inverse_table is not None:
                bad = None
                for i in range(acting.ngens):
                    for x in acted.generators():
                        if not acted.eq(self.endo(i, -1)(self.endo(i, 1)(x)), x):
                            bad = f"inverse table wrong at generator {acting.names[i]}"
                            break
                rep.add("action_inverse_table", bad is None, bad)
        else:
            rep.add("action_endos_are_homs", True, note=f"{self.kind}: by construction")
        bad = None
        for _ in range(samples):
            x = acted.random_element(rng)
            y = acted.random_element(rng)
            a = acting.random_element(rng)
            b = acting.random_element(rng)
            if not acted.eq(self.apply(acted.op(x, y), a),
                            acted.op(self.apply(x, a), self.apply(y, a))):
                bad = f"(x+y)^a != x^a + y^a at x={acted.format_element(x)}"
                break
            if not acted.eq(self.apply(self.apply(x, a), b),
                            self.apply(x, acting.op(a, b))):
                bad = f"x^(a+b) != (x^a)^b at x={acted.format_element(x)}"
                break
        rep.add("action_axioms_sampled", bad is None, bad, note=f"{samples} samples")
        return rep

    def to_json(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.table is not None:
            out["table"] = [[self.acted.element_to_json(e) for e in row]
                            for row in self.table]
        if self.inverse_table is not None:
            out["inverse_table"] = [[self.acted.element_to_json(e) for e in row]
                                    for row in self.inverse_table]
        return out

    @staticmethod
    def from_json(acting: Group, acted: Group, obj: dict) -> "GroupAction":
        kind = obj.get("kind", "table")
        if kind in ("trivial", "conjugation"):
            return GroupAction(acting, acted, kind=kind)
        table = [[acted.element_from_json(e) for e in row] for row in obj["table"]]
        inverse = None
        if obj.get("inverse_table") is not None:
            inverse = [[acted.element_from_json(e) for e in row]
                       for row in obj["inverse_table"]]
        return GroupAction(acting, acted, kind="table", table=table,
                           inverse_table=inverse)


@dataclass
class PreCrossedModule:
    """d: m2 -> m1 with a right action of m1 on m2."""

    m1: Group
    m2: Group
    d: GroupHom
    action: GroupAction

    def __post_init__(self):
        if self.d.source != self.m2 or self.d.target != self.m1:
            raise ValueError("boundary must map m2 to m1")
        if self.action.acting != self.m1 or self.action.acted != self.m2:
            raise ValueError("action must be of m1 on m2")


def peiffer_commutator(m: PreCrossedModule, x, y):
    """<x, y> = -x - y + x + y^{d(x)}."""
    g = m.m2
    return g.op_all(g.inv(x), g.inv(y), x, m.action.apply(y, m.d(x)))


def peiffer_map(m: PreCrossedModule, t: TensorElement):
    """w(t) = sum t_ij <g_i, g_j>, folded in row-major order."""
    g = m.m2
    if t.n != g.ngens:
        raise ValueError("tensor rank must match the number of generators")
    acc = g.identity()
    for i, j, c in t.entries():
        acc = g.op(acc, g.pow(peiffer_commutator(m, g.gen(i), g.gen(j)), c))
    return acc


def check_precrossed(m: PreCrossedModule, samples: int = 200,
                     seed: int | None = None) -> Report:
    """Action axioms plus equivariance d(x^m) = -m + d(x) + m."""
    if seed is None:
        seed = seed_from_env()
    rng = random.Random(seed)
    rep = Report("pre-crossed module")
    rep.meta.update(seed=seed, samples=samples)
    ok, why = m.d.check_hom(rng)
    rep.add("d_is_homomorphism", ok, why)
    rep.merge(m.action.check(rng, samples))
    bad = None
    pairs = [(x, a) for x in m.m2.generators() for a in m.m1.generators()]
    extra = [(m.m2.random_element(rng), m.m1.random_element(rng))
             for _ in range(samples)]
    for x, a in pairs + extra:
        lhs = m.d(m.action.apply(x, a))
        rhs = m.m1.op_all(m.m1.inv(a), m.d(x), a)
        if not m.m1.eq(lhs, rhs):
            bad = (f"d(x^m) != -m + d(x) + m at x={m.m2.format_element(x)}, "
                   f"m={m.m1.format_element(a)}")
            break
    rep.add("equivariance", bad is None, bad,
            note=f"all generator pairs + {samples} samples")
    return rep


def check_crossed(m: PreCrossedModule, samples: int = 200,
                  seed: int | None = None, max_len: int = 6) -> Report:
    """Pre-crossed checks plus vanishing of all Peiffer commutators."""
    if seed is None:
        seed = seed_from_env()
    rep = check_precrossed(m, samples=samples, seed=seed)
    rep.title = "crossed module"
    rng = random.Random(seed + 1)
    bad = None
    gens = m.m2.generators()
    for x in gens:
        for y in gens:
            if not m.m2.is_identity(peiffer_commutator(m, x, y)):
                bad = (f"<{m.m2.format_element(x)}, {m.m2.format_element(y)}> = "
                       f"{m.m2.format_element(peiffer_commutator(m, x, y))}")
                break
        if bad:
            break
    if bad is None:
        for _ in range(samples):
            x = m.m2.random_element(rng, size=max_len)
            y = m.m2.random_element(rng, size=max_len)
            if not m.m2.is_identity(peiffer_commutator(m, x, y)):
                bad = (f"<{m.m2.format_element(x)}, {m.m2.format_element(y)}> != 0")
                break
    rep.add("peiffer_commutators_vanish", bad is None, bad,
            note=f"all generator pairs + {samples} products of length <= {max_len}")
    return rep


@dataclass
class CrossedComplex3:
    """M3 --d3--> M2 --d2--> M1 with m1 acting on m2 and m3.

    under2/under3 list the images of the under-object generators (the
    cofibration q), used by morphism and homotopy conditions.
    """

    m1: Group
    m2: Group
    m3: Group
    d2: GroupHom
    d3: GroupHom
    action2: GroupAction
    action3: GroupAction
    under2: tuple = ()
    under3: tuple = ()

    def __post_init__(self):
        if self.d3.source != self.m3 or self.d3.target != self.m2:
            raise ValueError("d3 must map m3 to m2")
        self.under2 = tuple(self.m2.canon(z) for z in self.under2)
        self.under3 = tuple(self.m3.canon(z) for z in self.under3)

    def degree2_module(self) -> PreCrossedModule:
        return PreCrossedModule(self.m1, self.m2, self.d2, self.action2)


def xc3_check(x: CrossedComplex3, samples: int = 200,
              seed: int | None = None) -> Report:
    """Crossed module in degree 2; M3 abelian; d2 d3 = 0; im d2 acts
    trivially on M3; d3 equivariant."""
    if seed is None:
        seed = seed_from_env()
    rng = random.Random(seed)
    rep = Report("3-dimensional crossed complex")
    rep.meta.update(seed=seed, samples=samples)
    rep.merge(check_crossed(x.degree2_module(), samples=samples, seed=seed),
              prefix="degree2.")
    bad = None
    for i, p in enumerate(x.m3.generators()):
        for q in x.m3.generators():
            if not x.m3.is_identity(x.m3.commutator(p, q)):
                bad = f"generators {i} do not commute"
                break
    rep.add("m3_abelian", bad is None, bad)
    ok, why = x.d3.check_hom(rng)
    rep.add("d3_is_homomorphism", ok, why)
    bad = None
    for t in x.m3.generators():
        if not x.m1.is_identity(x.d2(x.d3(t))):
            bad = f"d2 d3 != 0 at {x.m3.format_element(t)}"
            break
    rep.add("d2_d3_zero", bad is None, bad)
    bad = None
    pairs = [(t, y) for t in x.m3.generators() for y in x.m2.generators()]
    extra = [(x.m3.random_element(rng), x.m2.random_element(rng))
             for _ in range(samples)]
    for t, y in pairs + extra:
        if not x.m3.eq(x.action3.apply(t, x.d2(y)), x.m3.canon(t)):
            bad = f"im(d2) moves {x.m3.format_element(t)}"
            break
    rep.add("im_d2_acts_trivially_on_m3", bad is None, bad,
            note=f"all generator pairs + {samples} samples")
    bad = None
    pairs2 = [(t, a) for t in x.m3.generators() for a in x.m1.generators()]
    extra2 = [(x.m3.random_element(rng), x.m1.random_element(rng))
              for _ in range(samples)]
    for t, a in pairs2 + extra2:
        if not x.m2.eq(x.d3(x.action3.apply(t, a)),
                       x.action2.apply(x.d3(t), a)):
            bad = f"d3 not equivariant at {x.m3.format_element(t)}"
            break
    rep.add("d3_equivariant", bad is None, bad,
            note=f"all generator pairs + {samples} samples")
    rep.merge(x.action3.check(rng, samples), prefix="degree3.")
    return rep


@dataclass
class XC3Morphism:
    source: CrossedComplex3
    target: CrossedComplex3
    f1: GroupHom
    f2: GroupHom
    f3: GroupHom


def xc3_morphism_check(m: XC3Morphism, samples: int = 50,
                       seed: int | None = None) -> Report:
    if seed is None:
        seed = seed_from_env()
    rng = random.Random(seed)
    rep = Report("crossed complex morphism")
    rep.meta.update(seed=seed, samples=samples)
    for name, h in (("f1", m.f1), ("f2", m.f2), ("f3", m.f3)):
        ok, why = h.check_hom(rng)
        rep.add(f"{name}_is_homomorphism", ok, why)
    src, tgt = m.source, m.target
    bad = None
    for x in src.m2.generators():
        if not tgt.m1.eq(m.f1(src.d2(x)), tgt.d2(m.f2(x))):
            bad = f"f1 d2 != d2' f2 at {src.m2.format_element(x)}"
            break
    rep.add("square_d2", bad is None, bad)
    bad = None
    for t in src.m3.generators():
        if not tgt.m2.eq(m.f2(src.d3(t)), tgt.d3(m.f3(t))):
            bad = f"f2 d3 != d3' f3 at {src.m3.format_element(t)}"
            break
    rep.add("square_d3", bad is None, bad)
    bad = None
    for x in src.m2.generators():
        for a in src.m1.generators():
            if not tgt.m2.eq(m.f2(src.action2.apply(x, a)),
                             tgt.action2.apply(m.f2(x), m.f1(a))):
                bad = "f2 not equivariant"
                break
    rep.add("f2_equivariant", bad is None, bad)
    bad = None
    for t in src.m3.generators():
        for a in src.m1.generators():
            if not tgt.m3.eq(m.f3(src.action3.apply(t, a)),
                             tgt.action3.apply(m.f3(t), m.f1(a))):
                bad = "f3 not equivariant"
                break
    rep.add("f3_equivariant", bad is None, bad)
    if src.under2 and len(src.under2) == len(tgt.under2):
        bad = None
        for z, w in zip(src.under2, tgt.under2):
            if not tgt.m2.eq(m.f2(z), w):
                bad = f"f2 moves under generator {src.m2.format_element(z)}"
                break
        rep.add("under_degree2", bad is None, bad)
    if src.under3 and len(src.under3) == len(tgt.under3):
        bad = None
        for z, w in zip(src.under3, tgt.under3):
            if not tgt.m3.eq(m.f3(z), w):
                bad = f"f3 moves under generator {src.m3.format_element(z)}"
                break
        rep.add("under_degree3", bad is None, bad)
    return rep


@dataclass
class XC3Homotopy:
    """alpha: M2 -> M3' given by generator images (additive, f1-equivariant)."""

    alpha: tuple

    def hom(self, source: CrossedComplex3, target: CrossedComplex3) -> GroupHom:
        return GroupHom(source.m2, target.m3, self.alpha)


def alpha_variable_order(n2: int, r3: int, killed: Sequence[int]) -> list[int]:
    """Variable priority for witness canonicalization: coordinates of
    generators killed by f2 first, then the rest by descending generator
    index; coordinates of one generator stay together."""
    killed = set(killed)
    order: list[int] = []
    for x in sorted(killed, reverse=True):
        order.extend(x * r3 + k for k in range(r3))
    for x in sorted(set(range(n2)) - killed, reverse=True):
        order.extend(x * r3 + k for k in range(r3))
    return order


def verify_xc3_homotopy(f: XC3Morphism, g: XC3Morphism, h: XC3Homotopy) -> Report:
    rep = Report("crossed complex homotopy certificate")
    src, tgt = f.source, f.target
    rep.add("f1_equals_g1", all(tgt.m1.eq(a, b) for a, b in
                                zip(f.f1.images, g.f1.images)))
    alpha = h.hom(src, tgt)
    ok, why = alpha.check_hom()
    rep.add("alpha_additive", ok, why)
    bad = None
    for i, x in enumerate(src.m2.generators()):
        lhs = tgt.m2.op(tgt.m2.inv(f.f2(x)), g.f2(x))
        if not tgt.m2.eq(lhs, tgt.d3(alpha(x))):
            bad = f"-f2 + g2 != d3' alpha at generator {src.m2.names[i]}"
            break
    rep.add("degree2_equation", bad is None, bad)
    bad = None
    for i, t in enumerate(src.m3.generators()):
        lhs = tgt.m3.op(tgt.m3.inv(f.f3(t)), g.f3(t))
        if not tgt.m3.eq(lhs, alpha(src.d3(t))):
            bad = f"-f3 + g3 != alpha d3 at generator {src.m3.names[i]}"
            break
    rep.add("degree3_equation", bad is None, bad)
    bad = None
    for z in src.under2:
        if not tgt.m3.is_identity(alpha(z)):
            bad = f"alpha does not vanish on {src.m2.format_element(z)}"
            break
    rep.add("alpha_vanishes_on_under", bad is None, bad)
    bad = None
    for x in src.m2.generators():
        for a in src.m1.generators():
            if not tgt.m3.eq(alpha(src.action2.apply(x, a)),
                             tgt.action3.apply(alpha(x), f.f1(a))):
                bad = "alpha not f1-equivariant"
                break
    rep.add("alpha_equivariant", bad is None, bad)
    return rep


def xc3_homotopy_decision(f: XC3Morphism, g: XC3Morphism, bound: int = 10
                          ) -> tuple[XC3Homotopy | None, Report]:
    """Decide f ~ g for morphisms of 3-complexes agreeing in degree 1.

    Linear route (complete) whenever the degree-3 target has abelian
    coordinates and the boundaries of its generators are central in M2';
    otherwise a bounded coordinate search (completeness only within the
    reported bound).  Any returned witness is re-verified.
    """
    rep = Report("crossed complex homotopy")
    if f.source is not g.source and f.source != g.source:
        raise ValueError("morphisms must share a source")
    if f.target is not g.target and f.target != g.target:
        raise ValueError("morphisms must share a target")
    src, tgt = f.source, f.target
    if not all(tgt.m1.eq(a, b) for a, b in zip(f.f1.images, g.f1.images)):
        rep.add("f1_equals_g1", False, "homotopy requires f1 = g1")
        rep.obstructions.append({"reason": "f1 != g1"})
        return None, rep
    info3 = abelian_coords_info(tgt.m3)
    if info3 is None:
        raise ValueError("homotopy search requires an abelian degree-3 target")
    r3, coords3, from3, rel3 = info3
    n2 = src.m2.ngens
    cinfo = central_coords_info(tgt.m2)
    boundary_rows = None
    if cinfo is not None:
        dimc, embed, _, rowsc = cinfo
        rows = [embed(tgt.d3(hk)) for hk in tgt.m3.generators()]
        if all(r is not None for r in rows):
            boundary_rows = [list(r) for r in rows]
    if boundary_rows is not None:
        system = ZSystem()
        var = [system.new_vars(r3) for _ in range(n2)]
        feasible = True
        for x in range(n2):
            cx = tgt.m2.op(tgt.m2.inv(f.f2.images[x]), g.f2.images[x])
            ex = embed(cx)
            if ex is None:
                rep.obstructions.append({
                    "reason": "-f2 + g2 is not central at a generator while all "
                              "boundary values are central",
                    "generator": src.m2.names[x]})
                feasible = False
                break
            system.add(dimc, [(var[x][k], boundary_rows[k]) for k in range(r3)],
                       list(ex), rowsc)
        if not feasible:
            rep.add("degree2_solvable", False, "no alpha can satisfy degree 2")
            return None, rep
        for i, t in enumerate(src.m3.generators()):
            w = src.m2.ab(src.d3(t))
            rhs = coords3(tgt.m3.op(tgt.m3.inv(f.f3.images[i]), g.f3.images[i]))
            terms = []
            for x in range(n2):
                if w[x]:
                    terms.extend((var[x][k],
                                  [w[x] if j == k else 0 for j in range(r3)])
                                 for k in range(r3))
            system.add(r3, terms, list(rhs), rel3)
        for z in src.under2:
            w = src.m2.ab(z)
            terms = []
            for x in range(n2):
                if w[x]:
                    terms.extend((var[x][k],
                                  [w[x] if j == k else 0 for j in range(r3)])
                                 for k in range(r3))
            system.add(r3, terms, [0] * r3, rel3)
        for row in src.m2.ab_relation_rows():
            terms = []
            for x in range(n2):
                if row[x]:
                    terms.extend((var[x][k],
                                  [row[x] if j == k else 0 for j in range(r3)])
                                 for k in range(r3))
            system.add(r3, terms, [0] * r3, rel3)
        for x in range(n2):
            xm = src.m2.gen(x)
            for a in range(src.m1.ngens):
                am = src.m1.gen(a)
                w = src.m2.ab(src.action2.apply(xm, am))
                fa = f.f1(am)
                cols = [coords3(tgt.action3.apply(hk, fa))
                        for hk in tgt.m3.generators()]
                terms = []
                for y in range(n2):
                    if w[y]:
                        terms.extend((var[y][k],
                                      [w[y] if j == k else 0 for j in range(r3)])
                                     for k in range(r3))
                terms.extend((var[x][k], [-c for c in cols[k]]) for k in range(r3))
                system.add(r3, terms, [0] * r3, rel3)
        sol = system.solve()
        if sol is None:
            rep.add("solvable", False, "the linear system has no integer solution")
            rep.obstructions.append({"reason": "no integer solution to the "
                                               "homotopy equations"})
            return None, rep
        u0, kernel = sol
        killed = [x for x in range(n2) if tgt.m2.is_identity(f.f2.images[x])]
        order = alpha_variable_order(n2, r3, killed)
        u = reduce_with_order(u0, kernel, order)
        witness = XC3Homotopy(tuple(from3(u[x * r3:(x + 1) * r3])
                                    for x in range(n2)))
        rep.meta["method"] = "linear"
    else:
        witness = _xc3_bounded_search(f, g, bound, r3, from3)
        rep.meta["method"] = f"bounded search (bound {bound})"
        if witness is None:
            rep.add("solvable", False,
                    f"no witness within coordinate bound {bound}")
            rep.obstructions.append({"reason": "bounded search exhausted",
                                     "bound": bound})
            return None, rep
    ver = verify_xc3_homotopy(f, g, witness)
    if not ver.ok:
        raise RuntimeError("internal error: solver witness failed re-verification")
    rep.merge(ver)
    rep.witnesses.append({
        "alpha": [f.target.m3.element_to_json(a) for a in witness.alpha]})
    return witness, rep


def _xc3_bounded_search(f: XC3Morphism, g: XC3Morphism, bound: int,
                        r3: int, from3) -> XC3Homotopy | None:
    n2 = f.source.m2.ngens
    nvars = n2 * r3
    width = 2 * bound + 1
    if width ** nvars > 2_000_000:
        raise ValueError("bounded homotopy search space too large; "
                         "lower the bound or use a linear-solvable target")
    span = list(range(-bound, bound + 1))
    idx = [0] * nvars
    while True:
        values = tuple(from3([span[idx[x * r3 + k]] for k in range(r3)])
                       for x in range(n2))
        witness = XC3Homotopy(values)
        if verify_xc3_homotopy(f, g, witness).ok:
            return witness
        pos = 0
        while pos < nvars:
            idx[pos] += 1
            if idx[pos] < width:
                break
            idx[pos] = 0
            pos += 1
        if pos == nvars:
            return None


def xc3_homotopic(f: XC3Morphism, g: XC3Morphism, bound: int = 10
                  ) -> XC3Homotopy | None:
    return xc3_homotopy_decision(f, g, bound)[0]
