"""Named, replayable counterexample scenarios.

Each entry builds a small scenario (algebra, carrier, operators), runs a
fixed list of checks, and compares each actual value against the recorded
expectation.  Expected degrees are stored as algebra element names, never
as numerals or booleans-in-disguise; replays are deterministic, so the
entries double as golden tests.

The intuitionistic entries all run over chain(3) with the generic
proposition p modelled as the middle element u: the smallest setting where
not-not-p holds while p is not top, which is exactly what separates the
classical from the intuitionistic behaviour.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import btop, hset, optable
from .errors import NotCompatible, UnknownEntry
from .galois import AA, JJ, Reduction, Saturation, from_family_red, from_family_sat
from .heyting import boolean2, chain
from .hset import HSubset
from .optable import (
    compat_degree,
    classify,
    compose,
    const_op,
    double_complement_op,
    identity_op,
    inhabited_op,
    op_eq,
    pointwise_meet,
    splits_degree,
    top_op,
    weak_compat_degree,
)


@dataclass
class CheckResult:
    check: str
    expected: str
    actual: str

    @property
    def passed(self):
        return self.expected == self.actual


class CatalogEntry:
    """A scenario plus its expected outcomes; replay() re-runs every check."""

    def __init__(self, name, description, objects, checks):
        self.name = name
        self.description = description
        self.objects = objects
        self._checks = checks

    def replay(self):
        return [
            CheckResult(check, expected, str(actual()))
            for check, expected, actual in self._checks
        ]


def _interior_from_opens(algebra, carrier, opens):
    return from_family_red(opens, algebra=algebra, carrier=carrier, name="int")


def _entry_nonidempotent_meet():
    alg = boolean2()
    S = hset.Carrier(["0", "1"])
    opens = [
        hset.empty(alg, S),
        hset.from_points(alg, S, ["1"]),
        hset.full(alg, S),
    ]
    interior = _interior_from_opens(alg, S, opens)
    c0 = const_op(hset.from_points(alg, S, ["0"]), name="const{0}")
    m = pointwise_meet([interior, c0], name="meet(int,const{0})")
    full = hset.full(alg, S)
    profile = classify(m)
    return CatalogEntry(
        "nonidempotent-meet",
        "on the Sierpinski space the pointwise meet of the interior with a "
        "constant at a non-open set is not idempotent; apply it twice to the "
        "whole space",
        {"algebra": alg, "carrier": S, "operator": m},
        [
            ("M(S)", "{0}", lambda: m.apply(full).render()),
            ("M(M(S))", "{}", lambda: m.apply(m.apply(full)).render()),
            ("idempotent", "False", lambda: classify(m).idempotent.holds),
            (
                "idempotence witness",
                "{0,1}",
                lambda: profile.idempotent.witness.render(),
            ),
        ],
    )


def _entry_weak_vs_strong_compat():
    alg = chain(3)
    S = hset.Carrier(["*"])
    dneg = double_complement_op(alg, S)
    top = top_op(alg, S)
    return CatalogEntry(
        "weak-vs-strong-compat",
        "on the 3-chain, double negation is weakly compatible with the top "
        "operator at degree 1 while its compatibility degree is only u: the "
        "two notions come apart exactly like not-not-exists versus exists",
        {"algebra": alg, "carrier": S, "double-negation": dneg, "top": top},
        [
            (
                "compat(--,top)",
                "u",
                lambda: alg.name(compat_degree(dneg, top)),
            ),
            (
                "weak_compat(--,top)",
                "1",
                lambda: alg.name(weak_compat_degree(dneg, top)),
            ),
        ],
    )


def _entry_rr_converse_fails():
    alg = boolean2()
    S = hset.Carrier(["a", "b"])
    o = inhabited_op(alg, S)
    cb = const_op(hset.from_points(alg, S, ["b"]), name="const{b}")
    return CatalogEntry(
        "rr-converse-fails",
        "the whole carrier splits the inhabitedness operator, so RR(O) is "
        "the top operator and const{b} sits below it, yet O is not "
        "compatible with const{b}: inclusion in RR(O) does not imply "
        "right-compatibility",
        {"algebra": alg, "carrier": S, "operator": o},
        [
            ("RR(O) == top", "True", lambda: op_eq(optable.RR(o), top_op(alg, S))),
            ("const{b} <= RR(O)", "True", lambda: optable.op_leq(cb, optable.RR(o))),
            ("compat(O, const{b})", "0", lambda: alg.name(compat_degree(o, cb))),
        ],
    )


def _entry_ap_jp_incompatible():
    alg = boolean2()
    S = hset.Carrier(["a", "b"])
    w = hset.from_points(alg, S, ["a"])
    a_p = from_family_sat([w])
    j_p = from_family_red([w])

    def make_fails():
        try:
            btop.make(a_p, j_p)
            return False
        except NotCompatible:
            return True

    def instance_degree():
        # the pair named in the source: U = empty, V = S
        ov1 = hset.overlap(a_p.apply(hset.empty(alg, S)), j_p.apply(hset.full(alg, S)))
        ov2 = hset.overlap(hset.empty(alg, S), j_p.apply(hset.full(alg, S)))
        return alg.name(alg.imp(ov1, ov2))

    return CatalogEntry(
        "ap-jp-incompatible",
        "for the singleton family {W} with W inhabited, the generated "
        "saturation and reduction agree on the witness value (A_P empty = W "
        "= J_P S) and are therefore not compatible",
        {"algebra": alg, "carrier": S, "A_P": a_p, "J_P": j_p},
        [
            ("A_P({})", "{a}", lambda: a_p.apply(hset.empty(alg, S)).render()),
            ("J_P(S)", "{a}", lambda: j_p.apply(hset.full(alg, S)).render()),
            ("make raises NotCompatible", "True", make_fails),
            ("instance degree at ({}, S)", "0", instance_degree),
        ],
    )


def _entry_id_bot_topology():
    alg = boolean2()
    S = hset.Carrier(["a", "b"])
    t = btop.make(
        Saturation.certify(identity_op(alg, S)),
        Reduction.certify(optable.bottom_op(alg, S)),
        name="T",
    )
    ident = identity_op(alg, S)
    topo = top_op(alg, S)
    boto = optable.bottom_op(alg, S)
    return CatalogEntry(
        "id-bot-topology",
        "[id, bot] is a basic topology that is neither reduced nor "
        "saturated; its five-node diagram collapses to the three-chain "
        "[top,bot] <= [id,bot] <= [id,id]",
        {"algebra": alg, "carrier": S, "topology": t},
        [
            ("is_reduced", "False", lambda: btop.is_reduced(t)[0]),
            ("is_saturated", "False", lambda: btop.is_saturated(t)[0]),
            (
                "T^R == [top,bot]",
                "True",
                lambda: op_eq(t.reduce().sat, topo) and op_eq(t.reduce().red, boto),
            ),
            (
                "T^S == [id,id]",
                "True",
                lambda: op_eq(t.saturate().sat, ident)
                and op_eq(t.saturate().red, ident),
            ),
            (
                "T^RS == T^R",
                "True",
                lambda: t.reduce().saturate() == t.reduce(),
            ),
            (
                "T^SR == T^S",
                "True",
                lambda: t.saturate().reduce() == t.saturate(),
            ),
            (
                "diagram node count",
                "3",
                lambda: btop.five_node_diagram(t).node_count(),
            ),
        ],
    )


def _entry_sat_not_reduced():
    alg = chain(3)
    S = hset.Carrier(["*"])
    u = alg.index("u")
    w = HSubset(alg, S, (u,))
    a_p = Saturation.certify(
        optable.pointwise_join([identity_op(alg, S), const_op(w)]),
        name="A_p",
    )
    jj_ap = JJ(a_p)
    aajj = AA(jj_ap)

    def incl_at_empty():
        e = hset.empty(alg, S)
        return alg.name(hset.incl(aajj.apply(e), a_p.apply(e)))

    def propositional_degree():
        # (not p -> p) -> p with p = u, the reduction the source derives
        return alg.name(alg.imp(alg.imp(alg.neg(u), u), u))

    return CatalogEntry(
        "sat-not-reduced",
        "the saturation adding the truth of a generic proposition p (here "
        "the 3-chain middle element) has JJ(A_p) = bot, so AA(JJ(A_p)) is "
        "the top operator: a saturated basic topology that is not reduced; "
        "recovering A_p would decide p",
        {"algebra": alg, "carrier": S, "A_p": a_p},
        [
            ("JJ(A_p) == bot", "True", lambda: op_eq(jj_ap, optable.bottom_op(alg, S))),
            ("AA(JJ(A_p)) == top", "True", lambda: op_eq(aajj, top_op(alg, S))),
            ("AA(JJ(A_p)) == A_p", "False", lambda: op_eq(aajj, a_p)),
            ("incl degree at empty", "u", incl_at_empty),
            ("propositional (not p -> p) -> p", "u", propositional_degree),
        ],
    )


def _entry_red_not_saturated():
    alg = chain(3)
    S = hset.Carrier(["a", "b"])
    u = alg.index("u")
    b_idx = S.index("b")

    def j_p_body(v):
        gate = alg.imp(alg.neg(v.degrees[b_idx]), u)
        return HSubset(alg, S, (alg.meet(x, gate) for x in v.degrees))

    j_p = Reduction(alg, S, j_p_body, name="J_p")
    za = hset.from_points(alg, S, ["a"])
    aa_jp = AA(j_p)
    jjaa = JJ(aa_jp)

    return CatalogEntry(
        "red-not-saturated",
        "the reduction J_p keeps a point of U only when 'b outside U "
        "implies p'; {a} splits AA(J_p) outright (not-not-p holds) yet "
        "{a} = J_p{a} only at degree p, so JJ(AA(J_p)) differs from J_p",
        {"algebra": alg, "carrier": S, "J_p": j_p},
        [
            ("J_p is a reduction", "True", lambda: j_p.re_verify()),
            (
                "eq degree {a} vs J_p{a}",
                "u",
                lambda: alg.name(hset.eq_degree(za, j_p.apply(za))),
            ),
            (
                "splits({a}, AA(J_p))",
                "1",
                lambda: alg.name(splits_degree(za, aa_jp)),
            ),
            ("JJ(AA(J_p)) == J_p", "False", lambda: op_eq(jjaa, j_p)),
            (
                "JJ(AA(J_p)){a} at a",
                "1",
                lambda: jjaa.apply(za).degree_of("a"),
            ),
            (
                "J_p{a} at a",
                "u",
                lambda: j_p.apply(za).degree_of("a"),
            ),
        ],
    )


def _entry_finite_line_meet_law():
    alg = boolean2()
    S = hset.Carrier(["-1", "0", "1", "2"])
    # digital-line minimal neighbourhoods: odd points open, even points
    # see both odd neighbours that exist
    nbhd = {
        "-1": ["-1"],
        "0": ["-1", "0", "1"],
        "1": ["1"],
        "2": ["1", "2"],
    }
    opens = []
    for sub in hset.enumerate_all(alg, S):
        members = [p for p, d in zip(S.points, sub.degrees) if d == alg.top]
        if all(set(nbhd[p]) <= set(members) for p in members):
            opens.append(sub)
    interior = _interior_from_opens(alg, S, opens)
    closure = AA(Reduction.certify(interior), name="cl")
    intcl = compose(interior, closure, name="intcl")
    z_left = const_op(hset.from_points(alg, S, ["-1", "0"]), name="const{-1,0}")
    z_right = const_op(hset.from_points(alg, S, ["0", "1", "2"]), name="const{0,1,2}")
    z_mid = const_op(hset.from_points(alg, S, ["0"]), name="const{0}")
    witness = hset.from_points(alg, S, ["-1", "1"])

    return CatalogEntry(
        "finite-line-meet-law",
        "finite stand-in for the real-line example: on the 4-point digital "
        "line, int(cl(-)) is compatible with the constants at the left and "
        "right closed rays but not with the constant at their intersection "
        "{0}; witness U = {-1,1}",
        {"algebra": alg, "carrier": S, "intcl": intcl},
        [
            (
                "compat(intcl, const{-1,0})",
                "1",
                lambda: alg.name(compat_degree(intcl, z_left)),
            ),
            (
                "compat(intcl, const{0,1,2})",
                "1",
                lambda: alg.name(compat_degree(intcl, z_right)),
            ),
            (
                "compat(intcl, const{0})",
                "0",
                lambda: alg.name(compat_degree(intcl, z_mid)),
            ),
            (
                "intcl({-1,1}) overlaps {0}",
                "1",
                lambda: alg.name(
                    hset.overlap(
                        intcl.apply(witness), hset.from_points(alg, S, ["0"])
                    )
                ),
            ),
            (
                "{-1,1} overlaps {0}",
                "0",
                lambda: alg.name(
                    hset.overlap(witness, hset.from_points(alg, S, ["0"]))
                ),
            ),
        ],
    )


_REGISTRY = {
    "nonidempotent-meet": _entry_nonidempotent_meet,
    "weak-vs-strong-compat": _entry_weak_vs_strong_compat,
    "rr-converse-fails": _entry_rr_converse_fails,
    "ap-jp-incompatible": _entry_ap_jp_incompatible,
    "id-bot-topology": _entry_id_bot_topology,
    "sat-not-reduced": _entry_sat_not_reduced,
    "red-not-saturated": _entry_red_not_saturated,
    "finite-line-meet-law": _entry_finite_line_meet_law,
}


def names():
    return tuple(_REGISTRY)


def load(name):
    """Build the named entry afresh; UnknownEntry if it does not exist."""
    try:
        builder = _REGISTRY[name]
    except KeyError:
        raise UnknownEntry(
            f"no catalog entry named {name!r}; known: {', '.join(_REGISTRY)}"
        ) from None
    return builder()
