"""Truth-degree-valued subsets of a finite carrier.

An HSubset assigns an algebra element to every carrier point.  Over the
two-element algebra these are literal subsets; over larger algebras they
carry intuitionistic membership degrees.  Values are immutable; all
operations are pure.

Enumeration order is lexicographic over (point index, algebra element
index), i.e. itertools.product order, and is fixed so that golden tests
and report output stay stable.
"""

from __future__ import annotations

import itertools

from .errors import CapExceeded, ContextMismatch

DEFAULT_SUBSET_CAP = 4096


class Carrier:
    """A finite set of named points.  May be empty."""

    __slots__ = ("points", "_index")

    def __init__(self, points):
        points = tuple(points)
        if len(set(points)) != len(points):
            raise ValueError("duplicate point names")
        self.points = points
        self._index = {p: i for i, p in enumerate(points)}

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown point {name!r}") from None

    def __contains__(self, name):
        return name in self._index

    def __len__(self):
        return len(self.points)

    def __repr__(self):
        return f"Carrier({', '.join(self.points)})"


class HSubset:
    """A vector of truth degrees over a carrier.

    ``degrees`` holds algebra element indices, one per carrier point.
    Equality and hashing are extensional within one (algebra, carrier)
    context; values from different contexts never compare equal.
    """

    __slots__ = ("algebra", "carrier", "degrees")

    def __init__(self, algebra, carrier, degrees):
        degrees = tuple(degrees)
        if len(degrees) != len(carrier):
            raise ValueError("degree vector length differs from carrier size")
        self.algebra = algebra
        self.carrier = carrier
        self.degrees = degrees

    def __eq__(self, other):
        if not isinstance(other, HSubset):
            return NotImplemented
        return (
            self.algebra is other.algebra
            and self.carrier is other.carrier
            and self.degrees == other.degrees
        )

    def __hash__(self):
        return hash((id(self.algebra), id(self.carrier), self.degrees))

    def __repr__(self):
        return f"HSubset({self.render()})"

    def degree_of(self, point):
        """Element name of the membership degree at a named point."""
        return self.algebra.name(self.degrees[self.carrier.index(point)])

    def leq(self, other):
        """Pointwise order: self(a) <= other(a) at every point."""
        _same_context(self, other)
        lt = self.algebra.leq_table
        return all(lt[x][y] for x, y in zip(self.degrees, other.degrees))

    def union(self, other):
        _same_context(self, other)
        jt = self.algebra.join_table
        return HSubset(
            self.algebra,
            self.carrier,
            (jt[x][y] for x, y in zip(self.degrees, other.degrees)),
        )

    def intersection(self, other):
        _same_context(self, other)
        mt = self.algebra.meet_table
        return HSubset(
            self.algebra,
            self.carrier,
            (mt[x][y] for x, y in zip(self.degrees, other.degrees)),
        )

    def pseudo_complement(self):
        alg = self.algebra
        return HSubset(alg, self.carrier, (alg.neg(x) for x in self.degrees))

    def render(self):
        """Literal form: {} | {a,b:u}; top degrees print bare, bot omitted."""
        alg = self.algebra
        parts = []
        for p, d in zip(self.carrier.points, self.degrees):
            if d == alg.bot:
                continue
            if d == alg.top:
                parts.append(p)
            else:
                parts.append(f"{p}:{alg.name(d)}")
        return "{" + ",".join(parts) + "}"


def _same_context(u, v):
    if u.algebra is not v.algebra or u.carrier is not v.carrier:
        raise ContextMismatch("values live over different algebras or carriers")


def empty(algebra, carrier):
    return HSubset(algebra, carrier, (algebra.bot,) * len(carrier))


def full(algebra, carrier):
    return HSubset(algebra, carrier, (algebra.top,) * len(carrier))


def from_degrees(algebra, carrier, mapping):
    """Subset literal from a point -> element-name map; omitted points get bot."""
    degrees = [algebra.bot] * len(carrier)
    for point, elname in mapping.items():
        degrees[carrier.index(point)] = algebra.index(elname)
    return HSubset(algebra, carrier, degrees)


def from_points(algebra, carrier, points):
    """Boolean-style literal: the listed points at degree top."""
    degrees = [algebra.bot] * len(carrier)
    for point in points:
        degrees[carrier.index(point)] = algebra.top
    return HSubset(algebra, carrier, degrees)


def overlap(u, v):
    """Degree of inhabited intersection: join over points of u(a) /\\ v(a)."""
    _same_context(u, v)
    alg = u.algebra
    acc = alg.bot
    jt, mt = alg.join_table, alg.meet_table
    for x, y in zip(u.degrees, v.degrees):
        acc = jt[acc][mt[x][y]]
        if acc == alg.top:
            break
    return acc


def incl(u, v):
    """Degree of inclusion: meet over points of u(a) -> v(a)."""
    _same_context(u, v)
    alg = u.algebra
    acc = alg.top
    mt, it = alg.meet_table, alg.imp_table
    for x, y in zip(u.degrees, v.degrees):
        acc = mt[acc][it[x][y]]
        if acc == alg.bot:
            break
    return acc


def eq_degree(u, v):
    """Degree of extensional equality: incl both ways."""
    _same_context(u, v)
    alg = u.algebra
    acc = alg.top
    mt, it = alg.meet_table, alg.imp_table
    for x, y in zip(u.degrees, v.degrees):
        acc = mt[acc][mt[it[x][y]][it[y][x]]]
        if acc == alg.bot:
            break
    return acc


def space_size(algebra, carrier):
    return len(algebra) ** len(carrier)


def check_cap(algebra, carrier, cap=None):
    cap = DEFAULT_SUBSET_CAP if cap is None else cap
    size = space_size(algebra, carrier)
    if size > cap:
        raise CapExceeded(
            f"subset space has {size} elements, above the cap of {cap}"
        )
    return size


_ENUM_CACHE = {}


def enumerate_all(algebra, carrier, cap=None):
    """All HSubsets over (algebra, carrier), in fixed lexicographic order."""
    check_cap(algebra, carrier, cap)
    key = (id(algebra), id(carrier))
    cached = _ENUM_CACHE.get(key)
    if cached is None or cached[0] is not algebra or cached[1] is not carrier:
        subs = tuple(
            HSubset(algebra, carrier, degs)
            for degs in itertools.product(range(len(algebra)), repeat=len(carrier))
        )
        cached = (algebra, carrier, subs)
        _ENUM_CACHE[key] = cached
    return cached[2]


def subset_rank(u):
    """Position of u in the enumeration order."""
    h = len(u.algebra)
    r = 0
    for d in u.degrees:
        r = r * h + d
    return r
