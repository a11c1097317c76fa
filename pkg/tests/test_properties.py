from hypothesis import given, settings, strategies as st

from fescroll.bundle_family import (
    build_split,
    chern,
    ell_invariant,
    sym_chi,
    validate_params,
)
from fescroll.chow_ring import ChowClass, ScrollContext, multiply
from fescroll.hilbert_component import check_hypotheses, chi_normal
from fescroll.scroll_invariants import hilbert_polynomial
from fescroll.surface_lattice import (
    DivisorClass,
    Surface,
    canonical_class,
    cohomology,
    h0_lattice_oracle,
    intersect,
)

surfaces = st.integers(min_value=0, max_value=6).map(Surface)
classes = st.builds(
    DivisorClass,
    st.integers(min_value=-30, max_value=30),
    st.integers(min_value=-30, max_value=30),
)
small_classes = st.builds(
    DivisorClass,
    st.integers(min_value=-15, max_value=15),
    st.integers(min_value=-15, max_value=15),
)


@st.composite
def family_params(draw):
    e = draw(st.integers(min_value=0, max_value=4))
    t = draw(st.integers(min_value=0, max_value=6))
    k = draw(st.integers(min_value=0, max_value=e + t + 3))
    return validate_params(e, e + k, t)


chow_classes = st.builds(
    ChowClass, *[st.integers(min_value=-9, max_value=9) for _ in range(8)]
)


@given(surfaces, classes, classes, classes, st.integers(-7, 7))
def test_pairing_symmetric_bilinear(s, d1, d2, d3, k):
    assert intersect(s, d1, d2) == intersect(s, d2, d1)
    assert intersect(s, d1 + k * d2, d3) == intersect(s, d1, d3) + k * intersect(s, d2, d3)


@given(surfaces, classes)
def test_serre_involution(s, d):
    k = canonical_class(s)
    tab = cohomology(s, d)
    dual = cohomology(s, k - d)
    assert (tab.h0, tab.h1, tab.h2) == (dual.h2, dual.h1, dual.h0)


@given(surfaces, classes)
def test_riemann_roch_holds(s, d):
    pairing = intersect(s, d, d - canonical_class(s))
    assert pairing % 2 == 0
    assert cohomology(s, d).chi == 1 + pairing // 2


@given(surfaces, small_classes)
def test_h0_equals_lattice_count(s, d):
    assert cohomology(s, d).h0 == h0_lattice_oracle(s, d)


@given(surfaces, st.integers(0, 6), st.integers(-20, 19))
def test_h0_monotone_in_fiber_twist(s, a, c):
    lower = cohomology(s, DivisorClass(a, c)).h0
    upper = cohomology(s, DivisorClass(a, c + 1)).h0
    assert upper >= lower


@given(family_params(), chow_classes, chow_classes, chow_classes)
def test_chow_ring_axioms(params, x, y, z):
    ctx = ScrollContext.from_params(params)
    assert multiply(ctx, x, y) == multiply(ctx, y, x)
    assert multiply(ctx, multiply(ctx, x, y), z) == multiply(ctx, x, multiply(ctx, y, z))
    assert multiply(ctx, x, y + z) == multiply(ctx, x, y) + multiply(ctx, x, z)


@given(family_params(), st.integers(-20, 60))
def test_ell2_independent_of_r(params, r):
    assert ell_invariant(params, 2, r) == params.b - params.t - 2 * params.e - 4


@settings(max_examples=40, deadline=None)
@given(family_params(), st.integers(-50, 50))
def test_hilbert_polynomial_integral(params, m):
    assert hilbert_polynomial(params)(m).denominator == 1


@settings(max_examples=40, deadline=None)
@given(family_params(), st.integers(0, 12))
def test_hilbert_polynomial_counts_sections(params, m):
    poly = hilbert_polynomial(params)
    assert poly.value_at(m) == sym_chi(build_split(params), m)


@settings(max_examples=40, deadline=None)
@given(family_params())
def test_chi_normal_closed_form(params):
    e, b, t = params.e, params.b, params.t
    n = 5 * e + 2 * b + 4 * t + 27
    d = 8 * e + 5 * b + 7 * t + 40
    want = (d - 3 * e - 3 * b - 3 * t - 12) * n + 122 + 21 * t + 21 * e + 21 * b - 3 * d
    assert chi_normal(params) == want


@given(family_params())
def test_flags_match_windows(params):
    flags = check_hypotheses(params)  # raises ConsistencyError on any mismatch
    assert flags.paper_regime == (params.e <= 2 and params.b == 2 * params.e + 3 + params.t)
    assert flags.v1 == (params.b < 6 + params.t + params.e)
    assert flags.v3 == (params.b <= 2 * params.e + 3 + params.t)


@given(family_params())
def test_chern_data_consistent(params):
    data = chern(params)  # internally cross-asserts the three presentations
    s = params.surface
    bun = build_split(params)
    assert data.c1 == bun.A + bun.B
    assert data.c2 == intersect(s, bun.A, bun.B)
