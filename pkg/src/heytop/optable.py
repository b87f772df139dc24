"""Operators on subsets, their pointwise lattice, and compatibility.

An Operator is a total map from HSubsets to HSubsets over a fixed
(algebra, carrier) context.  Bodies are either rules (closures) or
explicit tables; applications are memoized, and whole operators are
tabulated eagerly whenever the subset space is within the cap, which
makes extensional equality and the quantified degree computations cheap.

The compatibility degree of O with O' is the meet over all subset pairs
(U, V) of  overlap(O U, O' V) -> overlap(U, O' V);  in Boolean mode this
is top exactly when the classical implication holds for all pairs.
LL(O) and RR(O), the greatest left-/right-compatible operators, are
computed from their pointwise characterizations rather than by searching
the (impredicative) lattice of all operators.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import hset
from .errors import ContextMismatch
from .hset import HSubset, enumerate_all, check_cap, space_size


class Operator:
    """A total, deterministic map on the subsets of a carrier.

    Behaviour is immutable (the display name is assignable metadata); the
    memo cache only ever stores values a re-run of the body would
    reproduce, so concurrent reads and duplicate fills are harmless.
    """

    __slots__ = ("algebra", "carrier", "name", "_fn", "_memo", "_ranks")

    #: spaces at most this large are tabulated eagerly at construction
    TABULATE_LIMIT = hset.DEFAULT_SUBSET_CAP

    def __init__(self, algebra, carrier, fn, name=None):
        self.algebra = algebra
        self.carrier = carrier
        self.name = name
        self._fn = fn
        self._memo = {}
        self._ranks = None
        if space_size(algebra, carrier) <= self.TABULATE_LIMIT:
            self.rank_table()

    def __repr__(self):
        return f"Operator({self.name or 'anonymous'})"

    def apply(self, u):
        if u.algebra is not self.algebra or u.carrier is not self.carrier:
            raise ContextMismatch("operator applied outside its context")
        if self._ranks is not None:
            subs = enumerate_all(self.algebra, self.carrier)
            return subs[self._ranks[hset.subset_rank(u)]]
        got = self._memo.get(u.degrees)
        if got is None:
            got = self._fn(u)
            if (
                not isinstance(got, HSubset)
                or got.carrier is not self.carrier
                or got.algebra is not self.algebra
            ):
                raise ContextMismatch("operator body produced a foreign value")
            self._memo[u.degrees] = got
        return got

    def rank_table(self, cap=None):
        """Outputs as subset ranks, indexed by input rank.  CapExceeded if big."""
        if self._ranks is None:
            subs = enumerate_all(self.algebra, self.carrier, cap)
            ranks = []
            for u in subs:
                got = self._memo.get(u.degrees)
                if got is None:
                    got = self._fn(u)
                    self._memo[u.degrees] = got
                ranks.append(hset.subset_rank(got))
            self._ranks = tuple(ranks)
        return self._ranks

    def __eq__(self, other):
        if not isinstance(other, Operator):
            return NotImplemented
        if self.algebra is not other.algebra or self.carrier is not other.carrier:
            return False
        return self.rank_table() == other.rank_table()

    def __hash__(self):
        return hash((id(self.algebra), id(self.carrier), self.rank_table()))

    def digest(self, limit=16):
        """Short deterministic summary of the tabulated behaviour."""
        ranks = self.rank_table()
        body = ".".join(str(r) for r in ranks[:limit])
        return body + ("..." if len(ranks) > limit else "")


def _from_ranks(algebra, carrier, ranks, name=None):
    subs = enumerate_all(algebra, carrier)
    op = Operator.__new__(Operator)
    op.algebra = algebra
    op.carrier = carrier
    op.name = name
    op._fn = lambda u: subs[ranks[hset.subset_rank(u)]]
    op._memo = {}
    op._ranks = tuple(ranks)
    return op


def identity_op(algebra, carrier):
    return Operator(algebra, carrier, lambda u: u, name="id")


def const_op(value, name=None):
    if name is None:
        name = f"const{value.render()}"
    return Operator(value.algebra, value.carrier, lambda u: value, name=name)


def bottom_op(algebra, carrier):
    return const_op(hset.empty(algebra, carrier), name="bot")


def top_op(algebra, carrier):
    return const_op(hset.full(algebra, carrier), name="top")


def complement_op(algebra, carrier):
    return Operator(algebra, carrier, lambda u: u.pseudo_complement(), name="-")


def double_complement_op(algebra, carrier):
    return Operator(
        algebra,
        carrier,
        lambda u: u.pseudo_complement().pseudo_complement(),
        name="--",
    )


def inhabited_op(algebra, carrier):
    """Maps U to the constant vector 'U is inhabited' (the paper's example)."""

    def fn(u):
        d = hset.overlap(u, hset.full(algebra, carrier))
        return HSubset(algebra, carrier, (d,) * len(carrier))

    return Operator(algebra, carrier, fn, name="inhabited")


def compose(outer, inner, name=None):
    """outer after inner; juxtaposition OO' in operator notation."""
    if outer.algebra is not inner.algebra or outer.carrier is not inner.carrier:
        raise ContextMismatch("composing operators from different contexts")
    if name is None:
        name = f"({outer.name or '?'} {inner.name or '?'})"
    return Operator(
        outer.algebra, outer.carrier, lambda u: outer.apply(inner.apply(u)), name=name
    )


def _resolve_context(ops, algebra, carrier):
    if ops:
        first = ops[0]
        algebra, carrier = first.algebra, first.carrier
        for o in ops[1:]:
            if o.algebra is not algebra or o.carrier is not carrier:
                raise ContextMismatch("operators live over different contexts")
    if algebra is None or carrier is None:
        raise ValueError("an empty operator family needs algebra and carrier")
    return algebra, carrier


def pointwise_join(ops, *, algebra=None, carrier=None, name=None):
    """Pointwise union of operator results; the empty join is the bot operator."""
    ops = list(ops)
    algebra, carrier = _resolve_context(ops, algebra, carrier)
    if not ops:
        return bottom_op(algebra, carrier)
    jt = algebra.join_table

    def fn(u):
        degs = [algebra.bot] * len(carrier)
        for o in ops:
            for i, d in enumerate(o.apply(u).degrees):
                degs[i] = jt[degs[i]][d]
        return HSubset(algebra, carrier, degs)

    if name is None:
        name = "join(" + ",".join(o.name or "?" for o in ops) + ")"
    return Operator(algebra, carrier, fn, name=name)


def pointwise_meet(ops, *, algebra=None, carrier=None, name=None):
    """Pointwise intersection; the empty meet is the top operator."""
    ops = list(ops)
    algebra, carrier = _resolve_context(ops, algebra, carrier)
    if not ops:
        return top_op(algebra, carrier)
    mt = algebra.meet_table

    def fn(u):
        degs = [algebra.top] * len(carrier)
        for o in ops:
            for i, d in enumerate(o.apply(u).degrees):
                degs[i] = mt[degs[i]][d]
        return HSubset(algebra, carrier, degs)

    if name is None:
        name = "meet(" + ",".join(o.name or "?" for o in ops) + ")"
    return Operator(algebra, carrier, fn, name=name)


def tabulated_op(algebra, carrier, mapping, name=None, cap=None):
    """Operator from an explicit input -> output table; must be total."""
    subs = enumerate_all(algebra, carrier, cap)
    table = {}
    for u, v in mapping.items():
        if (
            u.algebra is not algebra
            or v.algebra is not algebra
            or u.carrier is not carrier
            or v.carrier is not carrier
        ):
            raise ContextMismatch("table entries live over a different context")
        table[u.degrees] = v
    missing = [u for u in subs if u.degrees not in table]
    if missing:
        raise ValueError(
            f"table is not total: no output for {missing[0].render()} "
            f"({len(missing)} inputs missing)"
        )
    return Operator(algebra, carrier, lambda u: table[u.degrees], name=name)


# ---------------------------------------------------------------------------
# classification


@dataclass(frozen=True)
class Flag:
    """A verified-or-refuted property; a refuting witness re-checks false."""

    holds: bool
    witness: object = None

    def __bool__(self):
        return self.holds


@dataclass(frozen=True)
class OperatorProfile:
    monotone: Flag
    idempotent: Flag
    expansive: Flag
    contractive: Flag

    @property
    def is_saturation(self):
        return self.monotone.holds and self.idempotent.holds and self.expansive.holds

    @property
    def is_reduction(self):
        return self.monotone.holds and self.idempotent.holds and self.contractive.holds


def classify(op, cap=None):
    """Verify or refute the four profile flags over the whole subset space.

    Witnesses are minimal in the fixed enumeration order: the first failing
    pair (U, V) for monotonicity, the first failing U otherwise.
    """
    subs = enumerate_all(op.algebra, op.carrier, cap)
    lt = op.algebra.leq_table
    ranks = op.rank_table(cap)
    out = [subs[r] for r in ranks]

    monotone = Flag(True)
    for u in subs:
        ou = out[hset.subset_rank(u)]
        broken = False
        for v in subs:
            if u.leq(v) and not ou.leq(out[hset.subset_rank(v)]):
                monotone = Flag(False, (u, v))
                broken = True
                break
        if broken:
            break

    idempotent = Flag(True)
    for i, u in enumerate(subs):
        if ranks[hset.subset_rank(out[i])] != ranks[i]:
            idempotent = Flag(False, u)
            break

    expansive = Flag(True)
    for i, u in enumerate(subs):
        if not u.leq(out[i]):
            expansive = Flag(False, u)
            break

    contractive = Flag(True)
    for i, u in enumerate(subs):
        if not out[i].leq(u):
            contractive = Flag(False, u)
            break

    return OperatorProfile(monotone, idempotent, expansive, contractive)


# ---------------------------------------------------------------------------
# quantified degrees and the greatest compatible operators


class _Space:
    """Per-(algebra, carrier) tables shared by the quantified computations."""

    __slots__ = ("algebra", "carrier", "subs", "ov", "inc")

    PAIR_TABLE_LIMIT = 256

    def __init__(self, algebra, carrier, cap):
        self.algebra = algebra
        self.carrier = carrier
        self.subs = enumerate_all(algebra, carrier, cap)
        n = len(self.subs)
        if n <= self.PAIR_TABLE_LIMIT:
            self.ov = [
                [hset.overlap(u, v) for v in self.subs] for u in self.subs
            ]
            self.inc = [
                [hset.incl(u, v) for v in self.subs] for u in self.subs
            ]
        else:
            self.ov = None
            self.inc = None

    def overlap(self, i, j):
        if self.ov is not None:
            return self.ov[i][j]
        return hset.overlap(self.subs[i], self.subs[j])

    def incl(self, i, j):
        if self.inc is not None:
            return self.inc[i][j]
        return hset.incl(self.subs[i], self.subs[j])


_SPACE_CACHE = {}


def _space(algebra, carrier, cap=None):
    check_cap(algebra, carrier, cap)
    key = (id(algebra), id(carrier))
    got = _SPACE_CACHE.get(key)
    if got is None or got.algebra is not algebra or got.carrier is not carrier:
        got = _Space(algebra, carrier, cap)
        _SPACE_CACHE[key] = got
    return got


def compat_degree(o1, o2, cap=None):
    """Meet over all (U, V) of  (O1 U over O2 V) -> (U over O2 V)."""
    _same_op_context(o1, o2)
    alg = o1.algebra
    sp = _space(alg, o1.carrier, cap)
    t1 = o1.rank_table(cap)
    t2 = o2.rank_table(cap)
    mt, it = alg.meet_table, alg.imp_table
    bot = alg.bot
    n = len(sp.subs)
    acc = alg.top
    for u in range(n):
        ou = t1[u]
        for v in range(n):
            o2v = t2[v]
            d = it[sp.overlap(ou, o2v)][sp.overlap(u, o2v)]
            acc = mt[acc][d]
            if acc == bot:
                return acc
    return acc


def compat_witness(o1, o2, cap=None):
    """(degree, witness): the exact compatibility degree plus the first pair
    achieving the lowest single-instance degree (None when every instance is
    top).  In a non-linear algebra the meet can sit strictly below every
    instance; the degree reported here is always the exact meet.
    """
    _same_op_context(o1, o2)
    alg = o1.algebra
    sp = _space(alg, o1.carrier, cap)
    t1 = o1.rank_table(cap)
    t2 = o2.rank_table(cap)
    mt, it = alg.meet_table, alg.imp_table
    lt = alg.leq_table
    n = len(sp.subs)
    acc = alg.top
    best = alg.top
    where = None
    for u in range(n):
        ou = t1[u]
        for v in range(n):
            o2v = t2[v]
            d = it[sp.overlap(ou, o2v)][sp.overlap(u, o2v)]
            acc = mt[acc][d]
            if d != best and lt[d][best]:
                best = d
                where = (sp.subs[u], sp.subs[v])
                if best == alg.bot:
                    return best, where
    return acc, where


def weak_compat_degree(o1, o2, cap=None):
    """Meet over (U, V) of  not(U over O2 V) -> not(O1 U over O2 V)."""
    _same_op_context(o1, o2)
    alg = o1.algebra
    sp = _space(alg, o1.carrier, cap)
    t1 = o1.rank_table(cap)
    t2 = o2.rank_table(cap)
    mt, it = alg.meet_table, alg.imp_table
    bot = alg.bot
    n = len(sp.subs)
    acc = alg.top
    for u in range(n):
        ou = t1[u]
        for v in range(n):
            o2v = t2[v]
            d = it[it[sp.overlap(u, o2v)][bot]][it[sp.overlap(ou, o2v)][bot]]
            acc = mt[acc][d]
            if acc == bot:
                return acc
    return acc


def splits_degree(z, op, cap=None):
    """Degree to which Z splits O: meet over U of (O U over Z) -> (U over Z).

    Equals compat_degree(op, const_op(z)).
    """
    if z.algebra is not op.algebra or z.carrier is not op.carrier:
        raise ContextMismatch("subset and operator live over different contexts")
    alg = op.algebra
    sp = _space(alg, op.carrier, cap)
    t = op.rank_table(cap)
    mt, it = alg.meet_table, alg.imp_table
    zr = hset.subset_rank(z)
    acc = alg.top
    for u in range(len(sp.subs)):
        d = it[sp.overlap(t[u], zr)][sp.overlap(u, zr)]
        acc = mt[acc][d]
        if acc == alg.bot:
            return acc
    return acc


def LL(op, cap=None):
    """Greatest left-compatible operator:
    LL(O) U (a) = meet over V of  O V (a) -> (U over O V).
    """
    alg = op.algebra
    sp = _space(alg, op.carrier, cap)
    t = op.rank_table(cap)
    mt, it = alg.meet_table, alg.imp_table
    npts = len(op.carrier)
    n = len(sp.subs)
    ranks = []
    for u in range(n):
        degs = []
        for a in range(npts):
            acc = alg.top
            for v in range(n):
                ov_deg = sp.subs[t[v]].degrees[a]
                acc = mt[acc][it[ov_deg][sp.overlap(u, t[v])]]
                if acc == alg.bot:
                    break
            degs.append(acc)
        ranks.append(hset.subset_rank(HSubset(alg, op.carrier, degs)))
    return _from_ranks(alg, op.carrier, ranks, name=f"LL({op.name or '?'})")


def RR(op, cap=None):
    """Greatest right-compatible operator: constant at the largest splitting
    subset, computed degree-wise as join over Z of splits(Z, O) /\\ Z(a).
    """
    alg = op.algebra
    sp = _space(alg, op.carrier, cap)
    mt, jt = alg.meet_table, alg.join_table
    npts = len(op.carrier)
    degs = [alg.bot] * npts
    for z in sp.subs:
        s = splits_degree(z, op, cap)
        if s == alg.bot:
            continue
        for a in range(npts):
            degs[a] = jt[degs[a]][mt[s][z.degrees[a]]]
    value = HSubset(alg, op.carrier, degs)
    return const_op(value, name=f"RR({op.name or '?'})")


# ---------------------------------------------------------------------------
# operator-level orders


def op_incl_degree(o1, o2, cap=None):
    """Meet over U of incl(O1 U, O2 U)."""
    _same_op_context(o1, o2)
    alg = o1.algebra
    sp = _space(alg, o1.carrier, cap)
    t1 = o1.rank_table(cap)
    t2 = o2.rank_table(cap)
    mt = alg.meet_table
    acc = alg.top
    for u in range(len(sp.subs)):
        acc = mt[acc][sp.incl(t1[u], t2[u])]
        if acc == alg.bot:
            return acc
    return acc


def op_eq_degree(o1, o2, cap=None):
    """Meet over U of eq_degree(O1 U, O2 U)."""
    _same_op_context(o1, o2)
    alg = o1.algebra
    sp = _space(alg, o1.carrier, cap)
    t1 = o1.rank_table(cap)
    t2 = o2.rank_table(cap)
    mt = alg.meet_table
    acc = alg.top
    for u in range(len(sp.subs)):
        acc = mt[acc][mt[sp.incl(t1[u], t2[u])][sp.incl(t2[u], t1[u])]]
        if acc == alg.bot:
            return acc
    return acc


def op_leq(o1, o2, cap=None):
    """Pointwise operator order: O1 U <= O2 U for every U (a boolean)."""
    _same_op_context(o1, o2)
    sp = _space(o1.algebra, o1.carrier, cap)
    t1 = o1.rank_table(cap)
    t2 = o2.rank_table(cap)
    top = o1.algebra.top
    return all(sp.incl(t1[u], t2[u]) == top for u in range(len(sp.subs)))


def op_eq(o1, o2, cap=None):
    """Extensional operator equality over the full enumeration."""
    _same_op_context(o1, o2)
    return o1.rank_table(cap) == o2.rank_table(cap)


def op_eq_witness(o1, o2, cap=None):
    """First subset where the two operators differ, or None if equal."""
    _same_op_context(o1, o2)
    sp = _space(o1.algebra, o1.carrier, cap)
    t1 = o1.rank_table(cap)
    t2 = o2.rank_table(cap)
    for u in range(len(sp.subs)):
        if t1[u] != t2[u]:
            return sp.subs[u]
    return None


def _same_op_context(o1, o2):
    if o1.algebra is not o2.algebra or o1.carrier is not o2.carrier:
        raise ContextMismatch("operators live over different contexts")
