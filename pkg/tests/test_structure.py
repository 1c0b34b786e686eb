"""Structural invariants: unmixed component, dimension filtration and good
sops, Hilbert-Samuel tables, the two length-difference functions, topology
scans, and closure contraction along a finite extension."""

import pytest

from limclose.idealops import Ideal, ideal_intersect
from limclose.localring import (
    LocalRingContext, SequenceInR, local_equal, local_contains, local_length,
)
from limclose.structure import (
    unmixed_component, ann_top_cohomology, dimension_filtration, is_good_sop,
    submodule_dim, hilbert_samuel, multiplicity, ij_functions, topology_scan,
    cyclic_cover_closure_check,
)

from oracles import quotient_count, contracted_quotient_count


# -- unmixed component -------------------------------------------------------

def test_unmixed_component_split_ring(split_ring):
    ctx = split_ring.ctx
    res = unmixed_component(ctx, split_ring.sop,
                            components=split_ring.extras["components"])
    assert local_equal(res.component, split_ring.extras["U"], ctx)
    assert res.cross_check is True
    assert res.intersection_depth >= 2


def test_unmixed_component_domain_is_zero(plane, catalan_ring):
    for fix in (plane, catalan_ring):
        res = unmixed_component(fix.ctx, fix.sop)
        assert local_contains(res.component, fix.ctx.zero_ideal(), fix.ctx)


def test_unmixed_component_assisted_mode(split_ring):
    ctx = split_ring.ctx
    res = unmixed_component(ctx, split_ring.sop, mode="assisted",
                            components=split_ring.extras["components"])
    assert local_equal(res.component, split_ring.extras["U"], ctx)


def test_unmixed_component_embedded_point():
    # Q[x,y]/(x^2, xy): the line y = 0 with an embedded point at the origin;
    # the finite-length part is the class of x
    V = ("x", "y")
    from limclose.polycore import Polynomial
    x = Polynomial.variable("x", V)
    y = Polynomial.variable("y", V)
    ctx = LocalRingContext(V, Ideal(V, [x ** 2, x * y]))
    sop = SequenceInR([y], ctx)
    res = unmixed_component(ctx, sop)
    assert local_equal(res.component, Ideal(V, [x]), ctx)


def test_unmixed_ring_with_two_equal_dimension_branches():
    # Q[x,y]/(x y^2) has both branches of dimension 1 and positive depth:
    # the small part is zero even though the ring is not reduced
    V = ("x", "y")
    from limclose.polycore import Polynomial
    x = Polynomial.variable("x", V)
    y = Polynomial.variable("y", V)
    ctx = LocalRingContext(V, Ideal(V, [x * y ** 2]))
    sop = SequenceInR([x + y], ctx)
    res = unmixed_component(ctx, sop)
    assert local_contains(res.component, ctx.zero_ideal(), ctx)


def test_unmixed_component_requires_sop(split_ring):
    ctx = split_ring.ctx
    x = split_ring.extras["x"]
    with pytest.raises(ValueError):
        unmixed_component(ctx, SequenceInR([x], ctx))


def test_ann_top_cohomology_matches_component(split_ring):
    ctx = split_ring.ctx
    ann = ann_top_cohomology(ctx, split_ring.sop)
    assert local_equal(ann, split_ring.extras["U"], ctx)


# -- dimension filtration ----------------------------------------------------

def test_submodule_dim(split_ring):
    ctx = split_ring.ctx
    x, y = split_ring.extras["x"], split_ring.extras["y"]
    assert submodule_dim(ctx.zero_ideal(), ctx) == -1
    assert submodule_dim(Ideal(ctx.vars, [x]), ctx) == 1    # the line class
    assert submodule_dim(Ideal(ctx.vars, [y]), ctx) == 2    # full dimension


def test_filtration_split_ring(split_ring):
    ctx = split_ring.ctx
    filt = dimension_filtration(ctx, split_ring.sop)
    assert filt.dims == [1, 2]
    assert local_equal(filt.chain[0], split_ring.extras["U"], ctx)
    assert filt.goodness_verified
    # the returned sop is good for the chain it came with
    assert is_good_sop(filt.sop, filt)


def test_filtration_reorders_an_ungood_sop(split_ring):
    # (y, x+z) fails goodness as given; the verified sop is a permutation
    filt = dimension_filtration(split_ring.ctx, split_ring.sop)
    assert filt.goodness_verified
    got = [str(e) for e in filt.sop.entries]
    assert got == ["x + z", "y"]


def test_goodness_is_order_sensitive(split_ring):
    ctx = split_ring.ctx
    filt = dimension_filtration(ctx, split_ring.sop)
    bad = SequenceInR(list(reversed(filt.sop.entries)), ctx)
    from limclose.structure import DimensionFiltration
    refit = DimensionFiltration(filt.chain, filt.dims, bad, False)
    assert not is_good_sop(bad, refit)


def test_filtration_three_levels(three_level_ring):
    ctx = three_level_ring.ctx
    filt = dimension_filtration(ctx, three_level_ring.sop)
    assert filt.dims == [0, 1, 2]
    assert filt.goodness_verified
    # strictly increasing chain
    for small, big in zip(filt.chain, filt.chain[1:]):
        assert local_contains(small, big, ctx)
        assert not local_equal(small, big, ctx)


def test_filtration_of_domain_is_trivial(plane):
    filt = dimension_filtration(plane.ctx, plane.sop)
    assert filt.dims == [2]
    assert len(filt.chain) == 1
    assert filt.goodness_verified


# -- Hilbert-Samuel ----------------------------------------------------------

def test_hilbert_samuel_regular(plane):
    ctx = plane.ctx
    rep = hilbert_samuel(plane.sop.ideal(), ctx, K=6)
    assert rep.lengths == [1, 3, 6, 10, 15, 21]
    assert rep.stabilized and rep.multiplicity == 1 and rep.degree == 2
    assert rep.polynomial_onset == 1
    assert multiplicity(plane.sop) == 1


def test_hilbert_samuel_split_ring(split_ring):
    rep = hilbert_samuel(split_ring.sop.ideal(), split_ring.ctx, K=6)
    assert rep.lengths == [2, 5, 9, 14, 20, 27]
    assert rep.multiplicity == 1
    assert rep.polynomial_onset == 1


def test_hilbert_samuel_quadric(catalan_ring):
    rep = hilbert_samuel(catalan_ring.sop.ideal(), catalan_ring.ctx, K=6)
    assert rep.lengths == [2, 8, 20, 40, 70, 112]
    assert rep.multiplicity == 2
    assert multiplicity(catalan_ring.sop) == 2


def test_multiplicity_scales_with_powers(plane):
    # e((x^n, y^n)) = n^2 e((x, y)) in the regular plane
    for n in (2, 3):
        assert multiplicity(plane.sop.powers(n)) == n ** 2


def test_multiplicity_rejects_non_sop(catalan_ring):
    with pytest.raises(ValueError):
        multiplicity(catalan_ring.extras["yuv"])


# -- length difference functions I and J --------------------------------------

def test_ij_functions_regular_vanish(plane):
    tab = ij_functions(plane.sop, n_max=3)
    for (n, ln, scaled, lclo, I, J) in tab.rows:
        assert I == 0 and J == 0
        assert ln == scaled == lclo == n ** 2


def test_ij_functions_split_ring(split_ring):
    tab = ij_functions(split_ring.sop, n_max=4)
    assert tab.multiplicity == 1 and tab.degree == 2
    Is = [r[4] for r in tab.rows]
    Js = [r[5] for r in tab.rows]
    # I(n) counts the length of the 1-dimensional line component's artinian
    # layer: here exactly n; J vanishes
    assert Is == [1, 2, 3, 4]
    assert Js == [0, 0, 0, 0]


def test_ij_functions_quadric_vanish(catalan_ring):
    # the quadric hypersurface is Cohen-Macaulay: both differences vanish
    tab = ij_functions(catalan_ring.sop, n_max=4)
    assert tab.multiplicity == 2 and tab.degree == 3
    for (n, ln, scaled, lclo, I, J) in tab.rows:
        assert I == 0 and J == 0
        assert ln == lclo == 2 * n ** 3


def test_ij_functions_nonnegative_and_increasing(split_ring,
                                                 three_level_ring):
    for fix in (split_ring, three_level_ring):
        tab = ij_functions(fix.sop, n_max=3)
        Is = [r[4] for r in tab.rows]
        Js = [r[5] for r in tab.rows]
        assert all(v >= 0 for v in Is + Js)
        assert all(a <= b for a, b in zip(Is, Is[1:]))
        assert all(a <= b for a, b in zip(Js, Js[1:]))


# -- topology scan -------------------------------------------------------------

def test_topology_scan_regular_succeeds(plane):
    rep = topology_scan(plane.sop, n0=3, v_max=6)
    assert rep.success and rep.failure_k is None and rep.witness is None
    assert [k for k, _ in rep.rows] == [1, 2, 3]
    assert all(v is not None for _, v in rep.rows)


def test_topology_scan_quadric_succeeds(catalan_ring):
    rep = topology_scan(catalan_ring.sop, n0=4, v_max=8)
    assert rep.success and rep.failure_k is None
    vs = [v for _, v in rep.rows]
    assert all(v is not None for v in vs)
    assert all(a <= b for a, b in zip(vs, vs[1:]))


def test_topology_scan_split_ring_fails_at_two(split_ring):
    # the class of x lies in every closure but never deep in m^2
    rep = topology_scan(split_ring.sop, n0=3, v_max=6)
    assert not rep.success
    assert rep.failure_k == 2
    assert rep.rows[0] == (1, 1)
    assert str(rep.witness) == "x"


# -- closure contraction along a finite extension ------------------------------

def test_cyclic_cover_closure_veronese(veronese_pair):
    rep = cyclic_cover_closure_check(veronese_pair.extras["map"],
                                     veronese_pair.sop)
    assert rep.equal
    assert rep.length_mod_ideal == 5
    assert rep.length_mod_closure == 3
    assert rep.closure_excess == 2


def test_veronese_lengths_match_semigroup_oracle(veronese_pair):
    R_exps = veronese_pair.extras["R_exps"]
    S_exps = veronese_pair.extras["S_exps"]
    bound = 40
    shifts = [(4, 0), (0, 4)]   # exponents of a and d
    assert quotient_count(R_exps, shifts, bound) == 5
    assert contracted_quotient_count(R_exps, S_exps, shifts, bound) == 3


def test_cyclic_cover_unmixed_guard(split_ring):
    # the split ring is not unmixed: the guard must fire before any map work
    from limclose.idealops import RingMapPresentation
    ctx = split_ring.ctx
    ident = RingMapPresentation(
        source_vars=ctx.vars, source_ideal=ctx.defining,
        target_vars=ctx.vars, target_ideal=ctx.defining,
        images={v: ctx.variable(v) for v in ctx.vars})
    with pytest.raises(ValueError):
        cyclic_cover_closure_check(ident, split_ring.sop,
                                   check_unmixed_sop=split_ring.sop)
