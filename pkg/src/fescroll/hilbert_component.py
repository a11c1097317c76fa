"""Dimension of the Hilbert-scheme component through the embedded scroll.

Everything proved here is conditional on cohomology vanishings that the
engine computes rather than assumes:

    v1: h^1(A - B) = 0        (window b < 6+t+e)
    v2: h^2(B - A) = 0        (window b >= 2e+3+t)
    v3: h^1(B - A) = 0        (window b <= 2e+3+t)

together with the literal regime flag e <= 2 and b = 2e+3+t.  The Euler
characteristic chi(N) of the normal bundle is unconditional (Riemann-Roch
needs no vanishing) and is exposed for every valid triple; identifying it
with h^0(N) and with the component dimension is gated on the flags.
Operations called outside the regime raise HypothesesError listing the
failing flags, so an unproved number can never appear in a proved field.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bundle_family import (
    FamilyParams,
    build_split,
    sym2_twisted_cohomology,
)
from .chow_ring import (
    XI,
    ChowClass,
    ScrollContext,
    canonical_class_X,
    chern_TX,
    degree,
    intersection_numbers,
    multiply,
    prod,
)
from .errors import ConsistencyError, HypothesesError
from .scroll_invariants import embedding_dimension, scroll_degree
from .surface_lattice import Surface, canonical_class, cohomology, intersect


@dataclass(frozen=True)
class HypothesisFlags:
    paper_regime: bool
    v1: bool
    v2: bool
    v3: bool

    def all_hold(self) -> bool:
        return self.paper_regime and self.v1 and self.v2 and self.v3

    def failing(self) -> list[str]:
        names = ("paper_regime", "v1", "v2", "v3")
        values = (self.paper_regime, self.v1, self.v2, self.v3)
        return [name for name, value in zip(names, values) if not value]


@dataclass(frozen=True)
class TangentCohomology:
    h0: int
    h1: int
    h2: int
    h3: int
    chi: int

    def __post_init__(self) -> None:
        if self.chi != self.h0 - self.h1 + self.h2 - self.h3:
            raise ConsistencyError(f"chi != h0 - h1 + h2 - h3: {self}")

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.h0, self.h1, self.h2, self.h3)


@dataclass(frozen=True)
class HilbertReport:
    params: FamilyParams
    flags: HypothesisFlags
    n: int
    d: int
    chiN: int
    dim_component: int
    hN: tuple[int, int, int, int]
    hTX: tuple[int, int, int, int]
    chiTX: int
    codim_scroll_locus: int


def check_hypotheses(params: FamilyParams) -> HypothesisFlags:
    """Compute the vanishing flags and cross-assert their window inequalities."""
    s = params.surface
    bun = build_split(params)
    tab_amb = cohomology(s, bun.A - bun.B)
    tab_bma = cohomology(s, bun.B - bun.A)
    v1 = tab_amb.h1 == 0
    v2 = tab_bma.h2 == 0
    v3 = tab_bma.h1 == 0
    e, b, t = params.e, params.b, params.t
    regime = e <= 2 and b == 2 * e + 3 + t
    if v1 != (b < 6 + t + e):
        raise ConsistencyError(f"h1(A-B) = 0 iff b < 6+t+e violated at {params}")
    if v2 != (b >= 2 * e + 3 + t):
        raise ConsistencyError(f"h2(B-A) = 0 iff b >= 2e+3+t violated at {params}")
    if v3 != (b <= 2 * e + 3 + t):
        raise ConsistencyError(f"h1(B-A) = 0 iff b <= 2e+3+t violated at {params}")
    if regime and not (v1 and v2 and v3):
        raise ConsistencyError(
            f"e <= 2 and b = 2e+3+t must imply v1, v2, v3; violated at {params}"
        )
    return HypothesisFlags(regime, v1, v2, v3)


def normal_bundle_chern(
    ctx: ScrollContext, n: int
) -> tuple[ChowClass, ChowClass, ChowClass]:
    """Chern classes of the normal bundle N of X in P^n.

    From c(N) = (1 + L)^(n+1) / c(T_X):

        n1 = K + (n+1) L
        n2 = n(n+1)/2 L^2 + (n+1) L.K + K^2 - c2
        n3 = (n-1)n(n+1)/6 L^3 + n(n+1)/2 K.L^2 + (n+1) K^2.L
             - (n+1) c2.L - 2 c2.K + K^3 - c3

    with c_i = c_i(T_X).  The binomial prefactors are integers; their
    divisibility is asserted.
    """
    k = canonical_class_X(ctx)
    _c1x, c2x, c3x = chern_TX(ctx)
    if (n * (n + 1)) % 2 != 0 or ((n - 1) * n * (n + 1)) % 6 != 0:
        raise ConsistencyError(f"binomial prefactor not integral at n={n}")
    half = n * (n + 1) // 2
    sixth = (n - 1) * n * (n + 1) // 6
    l2 = multiply(ctx, XI, XI)
    n1 = k + (n + 1) * XI
    n2 = half * l2 + (n + 1) * multiply(ctx, XI, k) + multiply(ctx, k, k) - c2x
    n3 = (
        sixth * prod(ctx, XI, XI, XI)
        + half * prod(ctx, k, XI, XI)
        + (n + 1) * prod(ctx, k, k, XI)
        - (n + 1) * multiply(ctx, c2x, XI)
        - 2 * multiply(ctx, c2x, k)
        + prod(ctx, k, k, k)
        - c3x
    )
    return n1, n2, n3


def chi_normal(params: FamilyParams) -> int:
    """chi(N) by Hirzebruch-Riemann-Roch; valid for every parameter triple.

    chi(N) = 1/6 (n1^3 - 3 n1.n2 + 3 n3) + 1/4 c1.(n1^2 - 2 n2)
             + 1/12 (c1^2 + c2).n1 + (n - 3)

    with c_i = c_i(T_X) and rank N = n - 3.  The result must match the
    closed form (d-3e-3b-3t-12)*n + 122 + 21t + 21e + 21b - 3d, and on the
    regime e <= 2, b = 2e+3+t also n(n+1) + 9e + 20 + 6t.
    """
    ctx = ScrollContext.from_params(params)
    n = embedding_dimension(params)
    intersection_numbers(ctx, n)  # runs the closed-form cross-checks
    n1, n2, n3 = normal_bundle_chern(ctx, n)
    c1x, c2x, _c3x = chern_TX(ctx)
    ch3 = Fraction(
        degree(prod(ctx, n1, n1, n1))
        - 3 * degree(multiply(ctx, n1, n2))
        + 3 * degree(n3),
        6,
    )
    ch2_td1 = Fraction(
        degree(multiply(ctx, c1x, multiply(ctx, n1, n1) - 2 * n2)), 4
    )
    ch1_td2 = Fraction(
        degree(multiply(ctx, multiply(ctx, c1x, c1x) + c2x, n1)), 12
    )
    total = ch3 + ch2_td1 + ch1_td2 + (n - 3)
    if total.denominator != 1:
        raise ConsistencyError(f"chi(N) not an integer at {params}: {total}")
    chi_n = int(total)
    e, b, t = params.e, params.b, params.t
    d = scroll_degree(params)
    closed = (d - 3 * e - 3 * b - 3 * t - 12) * n + 122 + 21 * t + 21 * e + 21 * b - 3 * d
    if chi_n != closed:
        raise ConsistencyError(
            f"chi(N) != (d-3e-3b-3t-12)*n + 122+21t+21e+21b-3d at {params}: "
            f"HRR gives {chi_n}, closed form {closed}"
        )
    if e <= 2 and b == 2 * e + 3 + t:
        regime_form = n * (n + 1) + 9 * e + 20 + 6 * t
        if chi_n != regime_form:
            raise ConsistencyError(
                f"chi(N) != n(n+1)+9e+20+6t on the regime at {params}: "
                f"got {chi_n}, expected {regime_form}"
            )
    return chi_n


def _fiber_tangent_table(e: int) -> tuple[int, int, int]:
    """h^i of the tangent bundle of F_e, with a Riemann-Roch cross-check."""
    table = (6, 0, 0) if e == 0 else (e + 5, e - 1, 0)
    s = Surface(e)
    minus_k = -canonical_class(s)
    # rank-two Riemann-Roch: chi(T) = 2 chi(O) + c1.(c1 - K)/2 - c2, c2(T_F) = 4
    chi_rr = 2 + intersect(s, minus_k, minus_k - canonical_class(s)) // 2 - 4
    if table[0] - table[1] + table[2] != chi_rr or chi_rr != 6:
        raise ConsistencyError(f"chi(T_F) != 6 at e={e}: table {table}, RR {chi_rr}")
    return table


def tangent_cohomology(params: FamilyParams) -> TangentCohomology:
    """h^i(T_X) from the relative-tangent sequence; gated on all flags.

    The sequence 0 -> Sym^2(E)(-c1) -> T_X -> T_F' -> 0 gives, once the
    twisted Sym^2 piece has no higher cohomology,

        h^0(T_X) = h^0(Sym^2 E (-c1)) + h^0(T_F),  h^1(T_X) = h^1(T_F),
        h^2 = h^3 = 0.
    """
    flags = check_hypotheses(params)
    if not flags.all_hold():
        raise HypothesesError(flags.failing())
    sym2 = sym2_twisted_cohomology(params)
    if (sym2.h1, sym2.h2) != (0, 0):
        raise ConsistencyError(
            f"higher cohomology of Sym^2(E)(-c1) must vanish under the flags: "
            f"{sym2.as_tuple()} at {params}"
        )
    fiber = _fiber_tangent_table(params.e)
    h0 = sym2.h0 + fiber[0]
    h1 = fiber[1]
    table = TangentCohomology(h0, h1, 0, 0, h0 - h1)
    e, b, t = params.e, params.b, params.t
    n = embedding_dimension(params)
    if table.chi != n - 6 * b + 3 * e - 2 or table.chi != 13:
        raise ConsistencyError(
            f"chi(T_X) != n-6b+3e-2 = 13 on the regime at {params}: got {table.chi}"
        )
    expected = (13, 0) if e == 0 else (e + 12, e - 1)
    if (table.h0, table.h1) != expected:
        raise ConsistencyError(
            f"(h0, h1)(T_X) != {expected} at {params}: got {(table.h0, table.h1)}"
        )
    return table


def scroll_locus_codim(params: FamilyParams) -> int:
    """Codimension of the scroll locus inside the component: h^1(T_X)."""
    table = tangent_cohomology(params)
    expected = 0 if params.e == 0 else params.e - 1
    if table.h1 != expected:
        raise ConsistencyError(
            f"scroll-locus codimension != max(e-1, 0) at {params}: got {table.h1}"
        )
    return table.h1


def component_dimension(params: FamilyParams) -> HilbertReport:
    """Full report; dim = chi(N) = h^0(N) once the flags hold.

    The identification h^0(N) = (n+1)^2 - 1 - h^0(T_X) + h^1(T_X) coming
    from the Euler sequence is run as a mandatory self-check.
    """
    flags = check_hypotheses(params)
    if not flags.all_hold():
        raise HypothesesError(flags.failing())
    n = embedding_dimension(params)
    d = scroll_degree(params)
    chi_n = chi_normal(params)
    tangent = tangent_cohomology(params)
    h0_n_euler = (n + 1) ** 2 - 1 - tangent.h0 + tangent.h1
    if h0_n_euler != chi_n:
        raise ConsistencyError(
            f"h^0(N) != (n+1)^2 - 1 - h^0(T_X) + h^1(T_X) at {params}: "
            f"chi(N)={chi_n}, Euler-sequence value {h0_n_euler}"
        )
    codim = scroll_locus_codim(params)
    return HilbertReport(
        params=params,
        flags=flags,
        n=n,
        d=d,
        chiN=chi_n,
        dim_component=chi_n,
        hN=(chi_n, 0, 0, 0),
        hTX=tangent.as_tuple(),
        chiTX=tangent.chi,
        codim_scroll_locus=codim,
    )
