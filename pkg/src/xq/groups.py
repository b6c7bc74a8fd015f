"""Group descriptors and homomorphisms for the classes the library computes in.

All groups are written additively (also the non-commutative ones); rendering
prints +/-.  Every class provides exact arithmetic, unique canonical element
forms, a canonical word spelling in its generators (which makes homomorphism
evaluation deterministic), and JSON (de)serialization matching the
structure-file format.
"""

from __future__ import annotations

import random
from typing import Any, Iterable, Sequence

from . import nil2
from .intlinalg import Lattice, solve_left
from .words import Letter, invert_word, reduce_word, word_from_pairs, word_to_pairs


class Group:
    """Common interface for the supported group classes."""

    kind = "group"

    def __init__(self, ngens: int, names: Sequence[str] | None = None):
        if ngens < 0:
            raise ValueError("number of generators must be non-negative")
        self.ngens = ngens
        if names is None:
            names = tuple(f"g{i}" for i in range(ngens))
        names = tuple(names)
        if len(names) != ngens:
            raise ValueError("names length must match the number of generators")
        self.names = names

    # -- element interface, provided by subclasses -------------------------
    def identity(self):
        raise NotImplementedError

    def gen(self, i: int):
        raise NotImplementedError

    def op(self, x, y):
        raise NotImplementedError

    def inv(self, x):
        raise NotImplementedError

    def canon(self, x):
        """Canonical form of x (idempotent); equal elements get equal forms."""
        raise NotImplementedError

    def word_of(self, x) -> tuple[Letter, ...]:
        """Canonical word spelling x in the generators."""
        raise NotImplementedError

    def ab(self, x) -> tuple[int, ...]:
        """Exponent vector of x in Z^ngens (image in the abelianization)."""
        raise NotImplementedError

    def element_to_json(self, x) -> Any:
        raise NotImplementedError

    def element_from_json(self, obj) -> Any:
        raise NotImplementedError

    def random_element(self, rng: random.Random, size: int = 6):
        raise NotImplementedError

    def to_json(self) -> dict:
        raise NotImplementedError

    # -- shared helpers -----------------------------------------------------
    @property
    def is_abelian(self) -> bool:
        return False

    @property
    def is_nil2(self) -> bool:
        """True when the class satisfies all nil(2) laws structurally."""
        return False

    def ab_relation_rows(self) -> list[tuple[int, ...]]:
        """Rows spanning the relation lattice of the abelianization."""
        return []

    def eq(self, x, y) -> bool:
        return self.canon(x) == self.canon(y)

    def is_identity(self, x) -> bool:
        return self.eq(x, self.identity())

    def op_all(self, *xs):
        acc = self.identity()
        for x in xs:
            acc = self.op(acc, x)
        return acc

    def pow(self, x, k: int):
        if k < 0:
            return self.pow(self.inv(x), -k)
        acc = self.identity()
        sq = x
        while k:
            if k & 1:
                acc = self.op(acc, sq)
            sq = self.op(sq, sq)
            k >>= 1
        return acc

    def commutator(self, x, y):
        return self.op_all(self.inv(x), self.inv(y), x, y)

    def generators(self) -> list:
        return [self.gen(i) for i in range(self.ngens)]

    def from_ab(self, vec: Sequence[int]):
        """Element with the given exponent vector (commutator part zero)."""
        acc = self.identity()
        for i, a in enumerate(vec):
            if a:
                acc = self.op(acc, self.pow(self.gen(i), a))
        return acc

    def format_element(self, x) -> str:
        terms = []
        for i, e in word_to_pairs(self.word_of(self.canon(x))):
            name = self.names[i]
            if e == 1:
                terms.append(("+", name))
            elif e == -1:
                terms.append(("-", name))
            else:
                terms.append(("+" if e > 0 else "-", f"{abs(e)}*{name}"))
        if not terms:
            return "0"
        first_sign, first = terms[0]
        out = (first if first_sign == "+" else f"-{first}")
        for sign, t in terms[1:]:
            out += f" {sign} {t}"
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, Group) and self.descriptor() == other.descriptor()

    def __hash__(self) -> int:
        return hash(self.descriptor())

    def descriptor(self) -> tuple:
        return (self.kind, self.ngens)

    def __repr__(self) -> str:
        return f"<{type(self).__name__} ngens={self.ngens}>"


class FreeGroup(Group):
    """Free group; elements are freely reduced words."""

    kind = "free"

    def identity(self):
        return ()

    def gen(self, i: int):
        if not 0 <= i < self.ngens:
            raise ValueError(f"generator index {i} out of range")
        return ((i, 1),)

    def op(self, x, y):
        return reduce_word(tuple(x) + tuple(y))

    def inv(self, x):
        return invert_word(tuple(x))

    def canon(self, x):
        return reduce_word(tuple(x))

    def word_of(self, x):
        return reduce_word(tuple(x))

    def ab(self, x):
        out = [0] * self.ngens
        for i, s in x:
            out[i] += s
        return tuple(out)

    @property
    def is_abelian(self) -> bool:
        return self.ngens <= 1

    @property
    def is_nil2(self) -> bool:
        return self.ngens <= 1

    def element_to_json(self, x):
        return word_to_pairs(self.canon(x))

    def element_from_json(self, obj):
        return word_from_pairs(obj)

    def random_element(self, rng, size: int = 6):
        length = rng.randint(0, size)
        return reduce_word((rng.randrange(self.ngens), rng.choice((1, -1)))
                           for _ in range(length)) if self.ngens else ()

    def to_json(self) -> dict:
        return {"kind": self.kind, "rank": self.ngens, "names": list(self.names)}


class FreeNil2Group(Group):
    """Free nil(2) group; elements are nil2.Nil2Element normal forms."""

    kind = "free_nil2"

    def identity(self):
        return nil2.identity(self.ngens)

    def gen(self, i: int):
        return nil2.generator(self.ngens, i)

    def basic_commutator(self, i: int, j: int):
        return nil2.basic_commutator(self.ngens, i, j)

    def op(self, x, y):
        return nil2.mul(x, y)

    def inv(self, x):
        return nil2.inv(x)

    def canon(self, x):
        if not isinstance(x, nil2.Nil2Element) or x.n != self.ngens:
            raise ValueError("not an element of this group")
        return x

    def word_of(self, x):
        return nil2.to_word(self.canon(x))

    def ab(self, x):
        return self.canon(x).base

    @property
    def is_abelian(self) -> bool:
        return self.ngens <= 1

    @property
    def is_nil2(self) -> bool:
        return True

    def normalize_word(self, letters: Iterable[Letter]):
        return nil2.normalize_word(letters, self.ngens)

    def element_to_json(self, x):
        x = self.canon(x)
        return {"base": list(x.base), "comm": list(x.comm)}

    def element_from_json(self, obj):
        if isinstance(obj, dict):
            base = tuple(obj.get("base", ()))
            npairs = len(nil2.pair_list(self.ngens))
            comm = tuple(obj.get("comm", (0,) * npairs))
            if len(base) != self.ngens or len(comm) != npairs:
                raise ValueError("element dimensions do not match the group rank")
            return nil2.Nil2Element(base, comm)
        return self.normalize_word(word_from_pairs(obj))

    def random_element(self, rng, size: int = 6):
        if not self.ngens:
            return self.identity()
        length = rng.randint(0, size)
        return self.normalize_word((rng.randrange(self.ngens), rng.choice((1, -1)))
                                   for _ in range(length))

    def format_element(self, x) -> str:
        x = self.canon(x)
        terms = []
        for i, a in enumerate(x.base):
            if a:
                terms.append((a, self.names[i]))
        for c, (i, j) in zip(x.comm, nil2.pair_list(self.ngens)):
            if c:
                terms.append((c, f"({self.names[i]},{self.names[j]})"))
        if not terms:
            return "0"
        bits = []
        for k, (e, name) in enumerate(terms):
            sign = "+" if e > 0 else "-"
            body = name if abs(e) == 1 else f"{abs(e)}*{name}"
            bits.append(body if (k == 0 and sign == "+") else
                        (f"-{body}" if k == 0 else f"{sign} {body}"))
        return " ".join(bits)

    def to_json(self) -> dict:
        return {"kind": self.kind, "rank": self.ngens, "names": list(self.names)}


class FgAbelianGroup(Group):
    """Finitely generated abelian group Z^rank / (row lattice of relations)."""

    kind = "fg_abelian"

    def __init__(self, rank: int, relations: Iterable[Sequence[int]] = (),
                 names: Sequence[str] | None = None):
        super().__init__(rank, names)
        self.relations = [list(r) for r in relations]
        for r in self.relations:
            if len(r) != rank:
                raise ValueError(f"relation width {len(r)} does not match rank {rank}")
        self.lattice = Lattice(rank, self.relations)

    def identity(self):
        return (0,) * self.ngens

    def gen(self, i: int):
        if not 0 <= i < self.ngens:
            raise ValueError(f"generator index {i} out of range")
        return self.canon(tuple(1 if k == i else 0 for k in range(self.ngens)))

    def op(self, x, y):
        return self.lattice.reduce([a + b for a, b in zip(x, y)])

    def inv(self, x):
        return self.lattice.reduce([-a for a in x])

    def canon(self, x):
        if len(x) != self.ngens:
            raise ValueError("element length does not match rank")
        return self.lattice.reduce(list(x))

    def word_of(self, x):
        return word_from_pairs((i, a) for i, a in enumerate(self.canon(x)) if a)

    def ab(self, x):
        return self.canon(x)

    @property
    def is_abelian(self) -> bool:
        return True

    @property
    def is_nil2(self) -> bool:
        return True

    def ab_relation_rows(self) -> list[tuple[int, ...]]:
        return self.lattice.basis()

    def element_to_json(self, x):
        return list(self.canon(x))

    def element_from_json(self, obj):
        return self.canon(tuple(int(a) for a in obj))

    def random_element(self, rng, size: int = 6):
        return self.canon(tuple(rng.randint(-size, size) for _ in range(self.ngens)))

    def descriptor(self) -> tuple:
        return (self.kind, self.ngens, tuple(self.lattice.basis()))

    def to_json(self) -> dict:
        return {"kind": "fg_abelian", "rank": self.ngens,
                "relations": [list(r) for r in self.relations],
                "names": list(self.names)}


class FreeAbelianGroup(FgAbelianGroup):
    kind = "free_abelian"

    def __init__(self, rank: int, names: Sequence[str] | None = None):
        super().__init__(rank, (), names)

    def to_json(self) -> dict:
        return {"kind": "free_abelian", "rank": self.ngens, "names": list(self.names)}


class CyclicGroup(FgAbelianGroup):
    kind = "cyclic"

    def __init__(self, order: int, names: Sequence[str] | None = None):
        if order < 1:
            raise ValueError("cyclic group order must be >= 1")
        self.order = order
        super().__init__(1, [[order]], names)

    def descriptor(self) -> tuple:
        return ("cyclic", self.order)

    def to_json(self) -> dict:
        return {"kind": "cyclic", "order": self.order, "names": list(self.names)}


def trivial_group() -> FgAbelianGroup:
    return FgAbelianGroup(0, (), ())


def group_from_json(obj: dict) -> Group:
    kind = obj.get("kind")
    names = obj.get("names")
    if kind == "free":
        return FreeGroup(obj["rank"], names)
    if kind == "free_nil2":
        return FreeNil2Group(obj["rank"], names)
    if kind == "free_abelian":
        return FreeAbelianGroup(obj["rank"], names)
    if kind == "fg_abelian":
        return FgAbelianGroup(obj["rank"], obj.get("relations", ()), names)
    if kind == "cyclic":
        return CyclicGroup(obj["order"], names)
    raise ValueError(f"unknown group kind {kind!r}")


class GroupHom:
    """Homomorphism given by generator images; evaluated on canonical words."""

    def __init__(self, source: Group, target: Group, images: Iterable):
        self.source = source
        self.target = target
        self.images = tuple(target.canon(x) for x in images)
        if len(self.images) != source.ngens:
            raise ValueError("one image per source generator required")

    @staticmethod
    def identity(group: Group) -> "GroupHom":
        return GroupHom(group, group, group.generators())

    @staticmethod
    def zero(source: Group, target: Group) -> "GroupHom":
        return GroupHom(source, target, [target.identity()] * source.ngens)

    def __call__(self, x):
        acc = self.target.identity()
        for i, s in self.source.word_of(self.source.canon(x)):
            img = self.images[i]
            acc = self.target.op(acc, img if s > 0 else self.target.inv(img))
        return acc

    def then(self, other: "GroupHom") -> "GroupHom":
        """Composite x |-> other(self(x))."""
        return GroupHom(self.source, other.target, [other(im) for im in self.images])

    def is_zero(self) -> bool:
        return all(self.target.is_identity(im) for im in self.images)

    def eq(self, other: "GroupHom") -> bool:
        return (self.source == other.source and self.target == other.target
                and self.images == other.images)

    def ab_matrix(self) -> list[list[int]]:
        """Matrix of the abelianized map, columns indexed by source generators."""
        cols = [self.target.ab(im) for im in self.images]
        return [[cols[j][k] for j in range(self.source.ngens)]
                for k in range(self.target.ngens)]

    def check_hom(self, rng: random.Random | None = None, samples: int = 50
                  ) -> tuple[bool, str | None]:
        """Verify the images define a homomorphism.

        Relation killing is exact; for a nil(2) source with a target that is
        not structurally nil(2), the nil(2) laws are checked on all generator
        triples and on sampled products.
        """
        for row in self.source.ab_relation_rows():
            img = self.target.identity()
            for i, a in enumerate(row):
                if a:
                    img = self.target.op(img, self.target.pow(self.images[i], a))
            if not self.target.is_identity(img):
                return False, f"relation {list(row)} maps to a non-identity element"
        if self.source.is_nil2 and not self.target.is_nil2:
            t = self.target
            for a in range(self.source.ngens):
                for b in range(self.source.ngens):
                    for c in range(self.source.ngens):
                        inner = t.commutator(self.images[a], self.images[b])
                        if not t.is_identity(t.commutator(inner, self.images[c])):
                            return False, (f"triple commutator ((g{a},g{b}),g{c}) "
                                           "does not vanish in the target")
            rng = rng or random.Random(0)
            for _ in range(samples):
                x = self(self.source.random_element(rng))
                y = self(self.source.random_element(rng))
                z = self(self.source.random_element(rng))
                if not t.is_identity(t.commutator(t.commutator(x, y), z)):
                    return False, "sampled triple commutator does not vanish in the target"
        return True, None

    def element_json(self) -> dict:
        return {"images": [self.target.element_to_json(im) for im in self.images]}

    @staticmethod
    def from_json(source: Group, target: Group, obj: dict) -> "GroupHom":
        return GroupHom(source, target,
                        [target.element_from_json(e) for e in obj["images"]])


def abelian_coords_info(group: Group):
    """Coordinates for groups that are abelian as presented.

    Returns (dim, to_coords, from_coords, relation_rows) or None when the
    group has no global abelian coordinate system.
    """
    if isinstance(group, FgAbelianGroup):
        return (group.ngens, group.ab, lambda v: group.canon(tuple(v)),
                group.ab_relation_rows())
    if group.is_abelian:  # free / free nil(2) of rank <= 1
        return (group.ngens, group.ab, group.from_ab, [])
    return None


def central_coords_info(group: Group):
    """Coordinates on the centre of the group, for linear boundary equations.

    Returns (dim, embed, from_coords, relation_rows) where embed(x) is the
    coordinate vector of a central x and None for non-central x; or None when
    no such chart is available.
    """
    info = abelian_coords_info(group)
    if info is not None:
        dim, to_coords, from_coords, rows = info
        return dim, (lambda x: to_coords(x)), from_coords, rows
    if isinstance(group, FreeNil2Group):
        npairs = len(nil2.pair_list(group.ngens))

        def embed(x):
            x = group.canon(x)
            return x.comm if x.is_central() else None

        def from_coords(v):
            return nil2.Nil2Element((0,) * group.ngens, tuple(v))

        return npairs, embed, from_coords, []
    if isinstance(group, FreeGroup):
        # centre of a free group of rank >= 2 is trivial
        def embed(x):
            return () if group.is_identity(x) else None

        return 0, embed, lambda v: group.identity(), []
    return None


def invert_hom(h: GroupHom) -> GroupHom:
    """Inverse of an automorphism given by generator images.

    Supported for abelian-presented groups (linear solve modulo relations)
    and free nil(2) groups (invert the base matrix over Z, then correct the
    central part).  Raises ValueError when no inverse exists or the class is
    unsupported.
    """
    g = h.source
    if g != h.target:
        raise ValueError("can only invert endomorphisms")
    if isinstance(g, FgAbelianGroup) or (g.is_abelian and not isinstance(g, FreeNil2Group)):
        rows = [list(g.ab(im)) for im in h.images] + [list(r) for r in g.ab_relation_rows()]
        images = []
        for j in range(g.ngens):
            target = [1 if k == j else 0 for k in range(g.ngens)]
            sol = solve_left(rows, target)
            if sol is None:
                raise ValueError("endomorphism is not invertible")
            images.append(g.from_ab(sol[:g.ngens]))
        return GroupHom(g, g, images)
    if isinstance(g, FreeNil2Group):
        base_rows = [list(g.ab(im)) for im in h.images]
        comm_rows = [list(h(g.basic_commutator(i, j)).comm)
                     for (i, j) in nil2.pair_list(g.ngens)]
        images = []
        for j in range(g.ngens):
            target = [1 if k == j else 0 for k in range(g.ngens)]
            sol = solve_left(base_rows, target)
            if sol is None:
                raise ValueError("endomorphism is not invertible on the abelianization")
            cand = g.from_ab(sol)
            resid = g.op(g.inv(h(cand)), g.gen(j))  # central by construction
            # need central z with h(z) = resid, i.e. fix . comm_rows = resid.comm
            fix = solve_left(comm_rows, list(resid.comm))
            if fix is None:
                raise ValueError("endomorphism is not invertible on the centre")
            z = nil2.Nil2Element((0,) * g.ngens, tuple(fix))
            images.append(g.op(cand, z))
        out = GroupHom(g, g, images)
        for j in range(g.ngens):
            if not g.eq(h(out.images[j]), g.gen(j)):
                raise ValueError("endomorphism is not invertible")
        return out
    raise ValueError(f"cannot invert a homomorphism on a {g.kind} group; "
                     "provide an explicit inverse table")


def check_group_laws(g: Group, samples: int = 100, seed: int = 0):
    """Sampled sanity report: associativity, identity, inverses, and
    idempotence of the canonical form."""
    from .report import Report

    rng = random.Random(seed)
    rep = Report(f"group laws ({g.kind})")
    rep.meta.update(seed=seed, samples=samples)
    bad_assoc = bad_unit = bad_inv = bad_canon = None
    for _ in range(samples):
        x = g.random_element(rng)
        y = g.random_element(rng)
        z = g.random_element(rng)
        if not g.eq(g.op(g.op(x, y), z), g.op(x, g.op(y, z))):
            bad_assoc = bad_assoc or g.format_element(x)
        if not (g.eq(g.op(x, g.identity()), x) and g.eq(g.op(g.identity(), x), x)):
            bad_unit = bad_unit or g.format_element(x)
        if not g.is_identity(g.op(x, g.inv(x))):
            bad_inv = bad_inv or g.format_element(x)
        if g.canon(x) != g.canon(g.canon(x)):
            bad_canon = bad_canon or g.format_element(x)
    rep.add("associativity_sampled", bad_assoc is None, bad_assoc)
    rep.add("identity_sampled", bad_unit is None, bad_unit)
    rep.add("inverses_sampled", bad_inv is None, bad_inv)
    rep.add("canonical_form_idempotent", bad_canon is None, bad_canon)
    return rep
