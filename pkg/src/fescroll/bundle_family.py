"""A three-parameter family of rank-two bundles on Hirzebruch surfaces.

A member is selected by integers (e, b, t) and is handled in split form
E = A + B with A = 3*C0 + (3e+5+t)*f and B = C0 + (b+1)*f.  An equivalent
extension presentation (line bundles L = C0 + b*f, M = 3*C0 + (3e+6+t)*f
and a length-two cluster on a fiber) is kept only to cross-validate the
Chern data: all three presentations must give c1 = 4*C0 + (b+3e+6+t)*f and
c2 = 3b+8+t.

Validation window: e >= 0, t >= 0, -2 < b < 2e+4+t, and b > e-1 (forced by
ampleness of B).  Each violated inequality raises a distinct
ParameterError.

The fiber-restriction invariants live here too: for a twist by -d1*C0 the
threshold r is found by brute-force scan (the smallest fiber twist with a
section), and the closed-form ell(c1, c2, d1, r) decides the generic
splitting type.  ell at d1=2 equals b-t-2e-4 < 0 for every valid member
and every r; ell at d1=3 equals 0, so the family is uniform of splitting
type (3, 1).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ConsistencyError, ParameterError
from .surface_lattice import (
    ZERO,
    CohomologyTable,
    DivisorClass,
    Surface,
    chi,
    cohomology,
    intersect,
)


@dataclass(frozen=True)
class FamilyParams:
    """Validated parameter triple (e, b, t)."""

    e: int
    b: int
    t: int

    def __post_init__(self) -> None:
        # Surface() owns the e >= 0 check and its error message
        Surface(self.e)
        if self.t < 0:
            raise ParameterError("t_negative", f"require t >= 0, got t={self.t}")
        if self.b <= -2:
            raise ParameterError("b_lower", f"require b > -2, got b={self.b}")
        if self.b >= 2 * self.e + 4 + self.t:
            raise ParameterError(
                "b_upper",
                f"require b < 2e+4+t = {2 * self.e + 4 + self.t}, got b={self.b}",
            )
        if self.b <= self.e - 1:
            raise ParameterError(
                "ampleness",
                f"ampleness forces b > e-1 = {self.e - 1}, got b={self.b}",
            )

    @property
    def surface(self) -> Surface:
        return Surface(self.e)


def validate_params(e: int, b: int, t: int) -> FamilyParams:
    """Validate (e, b, t), raising ParameterError naming the violated inequality."""
    return FamilyParams(e, b, t)


def iter_valid_params(e_max: int, t_max: int):
    """All valid (e, b, t) with e <= e_max, t <= t_max, ordered by (e, t, b)."""
    for e in range(e_max + 1):
        for t in range(t_max + 1):
            for b in range(e, 2 * e + 4 + t):
                yield FamilyParams(e, b, t)


@dataclass(frozen=True)
class SplitBundle:
    """E = A + B on F_e."""

    A: DivisorClass
    B: DivisorClass
    e: int


@dataclass(frozen=True)
class ChernData:
    c1: DivisorClass
    c2: int


@dataclass(frozen=True)
class ExtensionData:
    """Extension presentation: 0 -> L -> E -> M tensor ideal of a cluster -> 0."""

    L: DivisorClass
    M: DivisorClass
    w_len: int = 2


def build_split(params: FamilyParams) -> SplitBundle:
    """A = 3*C0 + (3e+5+t)*f, B = C0 + (b+1)*f."""
    a_cls = DivisorClass(3, 3 * params.e + 5 + params.t)
    b_cls = DivisorClass(1, params.b + 1)
    return SplitBundle(a_cls, b_cls, params.e)


def extension_data(params: FamilyParams) -> ExtensionData:
    return ExtensionData(
        L=DivisorClass(1, params.b),
        M=DivisorClass(3, 3 * params.e + 6 + params.t),
        w_len=2,
    )


def chern(params: FamilyParams) -> ChernData:
    """Chern data, cross-asserted over all three presentations."""
    s = params.surface
    bun = build_split(params)
    ext = extension_data(params)
    c1_closed = DivisorClass(4, params.b + 3 * params.e + 6 + params.t)
    c2_closed = 3 * params.b + 8 + params.t
    c1_split = bun.A + bun.B
    c2_split = intersect(s, bun.A, bun.B)
    c1_ext = ext.L + ext.M
    c2_ext = intersect(s, ext.L, ext.M) + ext.w_len
    if not (c1_closed == c1_split == c1_ext and c2_closed == c2_split == c2_ext):
        raise ConsistencyError(
            "c1 = A+B = L+M = 4*C0+(b+3e+6+t)*f and c2 = A.B = L.M+2 = 3b+8+t "
            f"violated at {params}"
        )
    return ChernData(c1_closed, c2_closed)


def _h0_split(s: Surface, bun: SplitBundle, twist: DivisorClass) -> int:
    return cohomology(s, bun.A + twist).h0 + cohomology(s, bun.B + twist).h0


def invariant_r(params: FamilyParams, d1: int) -> int:
    """Section threshold against -d1*C0 twists, by brute-force scan.

    -r is the smallest fiber twist ell such that E(-d1*C0 + ell*f) has a
    section.  h^0 is nondecreasing in ell, and for d1 in {1, 2, 3} the
    threshold provably lies inside the scanned window; missing it is an
    internal-consistency failure, never a user error.
    """
    if d1 not in (1, 2, 3):
        raise ValueError(f"d1 must be 1, 2 or 3, got {d1}")
    s = params.surface
    bun = build_split(params)
    span = 3 * params.e + 6 + params.t + abs(params.b) + 4
    if _h0_split(s, bun, DivisorClass(-d1, -span)) != 0:
        raise ConsistencyError(
            f"section threshold below the scan window at {params}, d1={d1}"
        )
    for ell in range(-span, span + 1):
        if _h0_split(s, bun, DivisorClass(-d1, ell)) > 0:
            return -ell
    raise ConsistencyError(f"no section threshold in the scan window at {params}, d1={d1}")


def ell_invariant(params: FamilyParams, d1: int, r: int) -> int:
    """ell(c1, c2, d1, r) = c2 + a*(d1*e - r) - s*d1 + 2*d1*r - d1^2*e.

    Here (a, s) = (4, b+3e+6+t) are the coefficients of c1 and c2 = 3b+8+t.
    """
    cd = chern(params)
    a, s_coeff = cd.c1.a, cd.c1.c
    return (
        cd.c2
        + a * (d1 * params.e - r)
        - s_coeff * d1
        + 2 * d1 * r
        - d1 * d1 * params.e
    )


def splitting_type(params: FamilyParams) -> tuple[int, int]:
    """Generic splitting type on curves of class C0, decided by ell.

    ell at d1=3 must vanish and ell at d1=2 must be negative (its value
    b-t-2e-4 does not depend on r; checked over r in [0, 40]).
    """
    expected2 = params.b - params.t - 2 * params.e - 4
    for r in range(0, 41):
        if ell_invariant(params, 2, r) != expected2:
            raise ConsistencyError(
                f"ell(c1,c2,2,r) != b-t-2e-4 at {params}, r={r}"
            )
    if expected2 >= 0:
        raise ConsistencyError(f"expected ell(c1,c2,2,r) = b-t-2e-4 < 0 at {params}")
    r3 = invariant_r(params, 3)
    if ell_invariant(params, 3, r3) != 0:
        raise ConsistencyError(f"expected ell(c1,c2,3,r) = 0 at {params}, r={r3}")
    return (3, 1)


@dataclass(frozen=True)
class UniformityEvidence:
    uniform: bool
    r: int
    ell2: int
    ell3: int


def is_uniform(params: FamilyParams) -> UniformityEvidence:
    """Uniformity (ell vanishes at d1=3), with the witnessing numbers."""
    r3 = invariant_r(params, 3)
    ell3 = ell_invariant(params, 3, r3)
    ell2 = ell_invariant(params, 2, invariant_r(params, 2))
    return UniformityEvidence(uniform=ell3 == 0, r=r3, ell2=ell2, ell3=ell3)


def bundle_cohomology(params: FamilyParams) -> CohomologyTable:
    """Table of E = A + B; the closed forms for each summand are asserted."""
    s = params.surface
    bun = build_split(params)
    tab_a = cohomology(s, bun.A)
    tab_b = cohomology(s, bun.B)
    e, b, t = params.e, params.b, params.t
    if tab_a.h0 != 6 * e + 4 * t + 24:
        raise ConsistencyError(f"h0(A) != 6e+4t+24 at {params}: got {tab_a.h0}")
    if tab_b.h0 != 2 * b + 4 - e:
        raise ConsistencyError(f"h0(B) != 2b+4-e at {params}: got {tab_b.h0}")
    table = tab_a + tab_b
    if (table.h0, table.h1, table.h2) != (5 * e + 2 * b + 4 * t + 28, 0, 0):
        raise ConsistencyError(
            f"h(E) != (5e+2b+4t+28, 0, 0) at {params}: got {table.as_tuple()}"
        )
    return table


def sym_chi(bundle: SplitBundle, m: int, twist: DivisorClass = ZERO) -> int:
    """chi of the m-th symmetric power of A + B, twisted; Riemann-Roch termwise.

    Sym^m splits into the line bundles i*A + (m-i)*B, i = 0..m.
    """
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    s = Surface(bundle.e)
    return sum(chi(s, i * bundle.A + (m - i) * bundle.B + twist) for i in range(m + 1))


def sym2_twisted_cohomology(params: FamilyParams) -> CohomologyTable:
    """Table of Sym^2(E) twisted by -c1: the pieces are A-B, O and B-A.

    Vanishing of the higher groups is reported, not forced; consumers that
    need it must gate on the computed flags.
    """
    s = params.surface
    bun = build_split(params)
    pieces = (bun.A - bun.B, ZERO, bun.B - bun.A)
    table = CohomologyTable(0, 0, 0, 0)
    for piece in pieces:
        table = table + cohomology(s, piece)
    return table
