"""Axiom-set generated basic topologies.

An axiom-set gives, for each point a, a finite list of covers C(a,i).
A subset P fulfills the axioms when every included cover forces its
point in; Z splits them when every point of Z overlaps each of its
covers.  The generated saturation is the least fixed point adding points
whose cover is included (Boolean mode iterates this directly and scales
to large sparse carriers); the generated reduction is the greatest
splitting subset below the argument, obtained by downward iteration.
Over a non-Boolean algebra both are evaluated by their quantified
characterizations over the enumerated subset space.

Covers optionally carry a weight (an algebra element, top by default);
weights only matter for the axiom-sets extracted from a saturation in
non-Boolean mode, where the cover (a, U) contributes at strength A(U)(a).
"""

from __future__ import annotations

from . import hset
from .errors import ContextMismatch
from .galois import Saturation, Reduction
from .hset import HSubset


class AxiomSet:
    """Per-point families of covers; I(a) may be empty for any point."""

    __slots__ = ("algebra", "carrier", "axioms", "_fulfills", "_splits")

    def __init__(self, algebra, carrier, axioms):
        checked = []
        for point, cover, *rest in axioms:
            weight = rest[0] if rest else algebra.top
            if cover.algebra is not algebra or cover.carrier is not carrier:
                raise ContextMismatch("cover lives over a different context")
            if isinstance(point, str):
                point = carrier.index(point)
            checked.append((point, cover, weight))
        self.algebra = algebra
        self.carrier = carrier
        self.axioms = tuple(checked)
        self._fulfills = None
        self._splits = None

    @classmethod
    def from_covers(cls, algebra, carrier, covers):
        """Build from a mapping point name -> list of cover subsets."""
        axioms = []
        for point, cover_list in covers.items():
            for cover in cover_list:
                axioms.append((point, cover))
        return cls(algebra, carrier, axioms)

    def __repr__(self):
        return f"AxiomSet({len(self.axioms)} covers on {len(self.carrier)} points)"


def fulfills_degree(p, ax):
    """Meet over axioms (a, i) of  weight /\\ incl(C(a,i), P) -> P(a)."""
    if p.algebra is not ax.algebra or p.carrier is not ax.carrier:
        raise ContextMismatch("subset and axiom-set live over different contexts")
    alg = ax.algebra
    mt, it = alg.meet_table, alg.imp_table
    acc = alg.top
    for point, cover, weight in ax.axioms:
        d = it[mt[weight][hset.incl(cover, p)]][p.degrees[point]]
        acc = mt[acc][d]
        if acc == alg.bot:
            break
    return acc


def splits_axioms_degree(z, ax):
    """Meet over axioms (a, i) of  weight /\\ Z(a) -> overlap(C(a,i), Z)."""
    if z.algebra is not ax.algebra or z.carrier is not ax.carrier:
        raise ContextMismatch("subset and axiom-set live over different contexts")
    alg = ax.algebra
    mt, it = alg.meet_table, alg.imp_table
    acc = alg.top
    for point, cover, weight in ax.axioms:
        d = it[mt[weight][z.degrees[point]]][hset.overlap(cover, z)]
        acc = mt[acc][d]
        if acc == alg.bot:
            break
    return acc


def _boolean_axioms(ax):
    """Covers as point-index sets; weights below top drop out in Boolean mode."""
    top = ax.algebra.top
    out = []
    for point, cover, weight in ax.axioms:
        if weight != top:
            continue
        out.append((point, frozenset(i for i, d in enumerate(cover.degrees) if d == top)))
    return out


def generate_sat(ax, cap=None, name=None):
    """The saturation A_{I,C} generated inductively by the axiom-set.

    Boolean mode: least fixed point by worklist iteration (no cap needed;
    the result provably equals the meet over fulfilling supersets).
    Otherwise:  A U (a) = meet over P of (incl(U,P) /\\ fulfills(P)) -> P(a).
    """
    alg = ax.algebra
    carrier = ax.carrier
    if name is None:
        name = "A_gen"

    if alg.is_boolean:
        axioms = _boolean_axioms(ax)
        top, bot = alg.top, alg.bot

        def fn(u):
            cur = {i for i, d in enumerate(u.degrees) if d == top}
            changed = True
            while changed:
                changed = False
                for point, cover in axioms:
                    if point not in cur and cover <= cur:
                        cur.add(point)
                        changed = True
            return HSubset(alg, carrier, (top if i in cur else bot for i in range(len(carrier))))

        within = hset.space_size(alg, carrier) <= (
            hset.DEFAULT_SUBSET_CAP if cap is None else cap
        )
        return Saturation(alg, carrier, fn, name=name, cap=cap, trusted=not within)

    subs = hset.enumerate_all(alg, carrier, cap)
    if ax._fulfills is None:
        ax._fulfills = tuple(fulfills_degree(p, ax) for p in subs)
    fulfills = ax._fulfills
    mt, it = alg.meet_table, alg.imp_table

    def fn(u):
        degs = []
        for a in range(len(carrier)):
            acc = alg.top
            for p, f in zip(subs, fulfills):
                if f == alg.bot:
                    continue
                w = mt[hset.incl(u, p)][f]
                if w == alg.bot:
                    continue
                acc = mt[acc][it[w][p.degrees[a]]]
                if acc == alg.bot:
                    break
            degs.append(acc)
        return HSubset(alg, carrier, degs)

    return Saturation(alg, carrier, fn, name=name, cap=cap)


def generate_red(ax, cap=None, name=None):
    """The reduction J_{I,C} generated coinductively by the axiom-set.

    Boolean mode: greatest fixed point by downward iteration, deleting
    points with a cover missing the current set (equals the union of
    splitting subsets below V).  Otherwise:
    J V (a) = join over Z of incl(Z,V) /\\ splits(Z) /\\ Z(a).
    """
    alg = ax.algebra
    carrier = ax.carrier
    if name is None:
        name = "J_gen"

    if alg.is_boolean:
        axioms = _boolean_axioms(ax)
        top, bot = alg.top, alg.bot

        def fn(u):
            cur = {i for i, d in enumerate(u.degrees) if d == top}
            changed = True
            while changed:
                changed = False
                for point, cover in axioms:
                    if point in cur and not (cover & cur):
                        cur.discard(point)
                        changed = True
            return HSubset(alg, carrier, (top if i in cur else bot for i in range(len(carrier))))

        within = hset.space_size(alg, carrier) <= (
            hset.DEFAULT_SUBSET_CAP if cap is None else cap
        )
        return Reduction(alg, carrier, fn, name=name, cap=cap, trusted=not within)

    subs = hset.enumerate_all(alg, carrier, cap)
    if ax._splits is None:
        ax._splits = tuple(splits_axioms_degree(z, ax) for z in subs)
    split = ax._splits
    mt, jt = alg.meet_table, alg.join_table

    def fn(u):
        degs = [alg.bot] * len(carrier)
        for z, s in zip(subs, split):
            if s == alg.bot:
                continue
            w = mt[hset.incl(z, u)][s]
            if w == alg.bot:
                continue
            for a in range(len(carrier)):
                degs[a] = jt[degs[a]][mt[w][z.degrees[a]]]
        return HSubset(alg, carrier, degs)

    return Reduction(alg, carrier, fn, name=name, cap=cap)


def axioms_from_saturation(sat, cap=None):
    """Extract an axiom-set whose generated saturation reproduces the input.

    Boolean mode takes as covers of a exactly the U with a in A(U), so the
    round trip generate_sat(axioms_from_saturation(A)) = A is exact.  Over
    larger algebras every pair (a, U) becomes a cover weighted by A(U)(a).
    """
    alg = sat.algebra
    carrier = sat.carrier
    subs = hset.enumerate_all(alg, carrier, cap)
    axioms = []
    for u in subs:
        out = sat.apply(u)
        for a in range(len(carrier)):
            w = out.degrees[a]
            if w == alg.bot:
                continue
            if alg.is_boolean and w != alg.top:
                continue
            axioms.append((a, u, w))
    return AxiomSet(alg, carrier, axioms)
