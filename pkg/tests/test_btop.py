"""Basic topologies, the coarser order, R/S endomaps, adjunctions."""

import pytest

from heytop import btop, galois as gl, hset, optable as ot
from heytop.errors import NotCompatible
from conftest import external_reductions, external_saturations


@pytest.fixture(scope="module")
def ab(bool2):
    return hset.Carrier(["a", "b"])


@pytest.fixture(scope="module")
def stock(bool2, ab):
    """All Boolean basic topologies on two points: compatible sat/red pairs."""
    tops = []
    for a in external_saturations(bool2, ab):
        for j in external_reductions(bool2, ab):
            try:
                tops.append(btop.make(a, j, name=f"T{len(tops)}"))
            except NotCompatible:
                pass
    return tops


def test_make_id_bot_valid(bool2, ab):
    t = btop.make(
        gl.Saturation.certify(ot.identity_op(bool2, ab)),
        gl.Reduction.certify(ot.bottom_op(bool2, ab)),
    )
    assert isinstance(t, btop.BasicTopology)


def test_make_top_id_not_compatible(bool2, ab):
    with pytest.raises(NotCompatible) as exc:
        btop.make(
            gl.Saturation.certify(ot.top_op(bool2, ab)),
            gl.Reduction.certify(ot.identity_op(bool2, ab)),
        )
    assert exc.value.witness is not None


def test_top_compat_with_red_iff_bot(bool2, ab):
    topsat = gl.Saturation.certify(ot.top_op(bool2, ab))
    for j in external_reductions(bool2, ab):
        compatible = ot.compat_degree(topsat, j) == bool2.top
        assert compatible == ot.op_eq(j, ot.bottom_op(bool2, ab))


def test_family_pair_not_compatible(bool2, ab):
    w = hset.from_points(bool2, ab, ["a"])
    with pytest.raises(NotCompatible):
        btop.make(gl.from_family_sat([w]), gl.from_family_red([w]))


def test_coarser_reflexive_and_extremes(bool2, ab, stock):
    bottom = btop.make(
        gl.Saturation.certify(ot.top_op(bool2, ab)),
        gl.Reduction.certify(ot.bottom_op(bool2, ab)),
    )
    for t in stock:
        assert btop.coarser(t, t) == bool2.top
        assert btop.coarser(bottom, t) == bool2.top


def test_coarser_id_id_vs_id_bot(bool2, ab):
    tii = btop.make(
        gl.Saturation.certify(ot.identity_op(bool2, ab)),
        gl.Reduction.certify(ot.identity_op(bool2, ab)),
    )
    tib = btop.make(
        gl.Saturation.certify(ot.identity_op(bool2, ab)),
        gl.Reduction.certify(ot.bottom_op(bool2, ab)),
    )
    assert btop.coarser(tii, tib) == bool2.bot
    assert btop.coarser(tib, tii) == bool2.top


def test_join_family(bool2, ab, stock):
    t0 = btop.join_family([], algebra=bool2, carrier=ab)
    assert ot.op_eq(t0.sat, ot.top_op(bool2, ab))
    assert ot.op_eq(t0.red, ot.bottom_op(bool2, ab))
    for t in stock[:6]:
        assert btop.join_family([t]) == t
    # join is an upper bound and compat always certifies
    for t1 in stock[:8]:
        for t2 in stock[:8]:
            j = btop.join_family([t1, t2])
            assert t1.leq(j) and t2.leq(j)


def test_id_bot_five_nodes(bool2, ab):
    t = btop.make(
        gl.Saturation.certify(ot.identity_op(bool2, ab)),
        gl.Reduction.certify(ot.bottom_op(bool2, ab)),
        name="T",
    )
    tr = t.reduce()
    ts = t.saturate()
    assert ot.op_eq(tr.sat, ot.top_op(bool2, ab))
    assert ot.op_eq(tr.red, ot.bottom_op(bool2, ab))
    assert ot.op_eq(ts.sat, ot.identity_op(bool2, ab))
    assert ot.op_eq(ts.red, ot.identity_op(bool2, ab))
    reduced, witness = btop.is_reduced(t)
    assert not reduced and witness is not None
    saturated, _ = btop.is_saturated(t)
    assert not saturated
    diagram = btop.five_node_diagram(t)
    assert diagram.node_count() == 3
    assert all(diagram.checks.values())


def test_id_id_and_top_bot_both_reduced_and_saturated(bool2, ab):
    for sat, red in [
        (ot.identity_op(bool2, ab), ot.identity_op(bool2, ab)),
        (ot.top_op(bool2, ab), ot.bottom_op(bool2, ab)),
    ]:
        t = btop.make(gl.Saturation.certify(sat), gl.Reduction.certify(red))
        assert btop.is_reduced(t)[0]
        assert btop.is_saturated(t)[0]


def test_id_bot_breaks_compat_propagation(bool2, ab):
    # compat(A, J) does not give compat(AA(J), JJ(A)); [id,bot] witnesses it
    ident = gl.Saturation.certify(ot.identity_op(bool2, ab))
    bot = gl.Reduction.certify(ot.bottom_op(bool2, ab))
    assert ot.compat_degree(ident, bot) == bool2.top
    assert ot.compat_degree(gl.AA(bot), gl.JJ(ident)) != bool2.top


def test_rs_comonad_monad_laws(bool2, ab, stock):
    for t in stock:
        tr = t.reduce()
        ts = t.saturate()
        assert tr.leq(t) and t.leq(ts)
        assert tr.reduce() == tr
        assert ts.saturate() == ts
        assert btop.is_reduced(tr)[0]
        assert btop.is_saturated(ts)[0]
    for t1 in stock[:8]:
        for t2 in stock[:8]:
            if t1.leq(t2):
                assert t1.reduce().leq(t2.reduce())
                assert t1.saturate().leq(t2.saturate())


def test_five_node_orderings_everywhere(bool2, ab, stock):
    for t in stock:
        d = btop.five_node_diagram(t)
        assert all(d.checks.values())


def test_reduced_collapse(bool2, ab, stock):
    for t in stock:
        if btop.is_reduced(t)[0]:
            d = btop.five_node_diagram(t)
            # T = T^R and T^RS = T^SR = T^S: at most two distinct nodes
            assert d.node_count() <= 2
        if btop.is_saturated(t)[0]:
            assert t.saturate() == t


def test_boolean_rs_collapse(bool2, ab, stock):
    # classically T^RS = T^R and T^SR = T^S
    for t in stock:
        assert t.reduce().saturate() == t.reduce()
        assert t.saturate().reduce() == t.saturate()


def test_adjunctions_exhaustive(bool2, ab, stock):
    for j in external_reductions(bool2, ab):
        for t in stock:
            assert btop.adjunction_check(j, t).ok
    for a in external_saturations(bool2, ab):
        for t in stock:
            assert btop.adjunction_check(a, t).ok


def test_adjunction_direct_example(bool2, ab):
    ident = gl.Saturation.certify(ot.identity_op(bool2, ab))
    t = btop.make(ident, gl.Reduction.certify(ot.bottom_op(bool2, ab)))
    rep = btop.adjunction_check(ident, t)
    assert rep.ok and rep.degree == "1"


def test_h_mode_diagram_of_reduced_but_not_saturated(chain3):
    # T = [AA(J_p), J_p] is reduced by construction but not saturated on
    # the 3-chain, so the picture collapses to exactly T <= T^S
    from heytop import catalog

    entry = catalog.load("red-not-saturated")
    j_p = entry.objects["J_p"]
    t = btop.make(gl.AA(j_p), j_p, name="T")
    assert btop.is_reduced(t)[0]
    assert not btop.is_saturated(t)[0]
    d = btop.five_node_diagram(t)
    assert d.node_count() == 2
    labels = [tuple(n.labels) for n in d.nodes]
    assert ("T", "T^R") in labels
    assert ("T^S", "T^RS", "T^SR") in labels
    # R and S stay monotone and idempotent here too
    assert t.reduce() == t
    assert t.saturate().saturate() == t.saturate()


def test_h_mode_diagram_of_saturated_but_not_reduced(chain3):
    from heytop import catalog

    entry = catalog.load("sat-not-reduced")
    a_p = entry.objects["A_p"]
    t = btop.make(a_p, gl.JJ(a_p), name="T")
    assert btop.is_saturated(t)[0]
    assert not btop.is_reduced(t)[0]
    d = btop.five_node_diagram(t)
    assert d.node_count() == 2
    labels = [tuple(n.labels) for n in d.nodes]
    assert ("T", "T^S") in labels
    assert ("T^R", "T^RS", "T^SR") in labels


def test_dot_output_deterministic(bool2, ab):
    t = btop.make(
        gl.Saturation.certify(ot.identity_op(bool2, ab)),
        gl.Reduction.certify(ot.bottom_op(bool2, ab)),
        name="T",
    )
    d1 = btop.five_node_diagram(t).to_dot()
    d2 = btop.five_node_diagram(t).to_dot()
    assert d1 == d2
    assert d1.startswith("digraph five_node {")
    assert 'label="T^R = T^RS' in d1
