"""Projective invariants of the embedded threefold scroll.

The sections of E embed X = P(E) in P^n with n = h^0(E) - 1 and degree
d = c1^2 - c2.  The Hilbert polynomial comes from Riemann-Roch on X,

    P(m) = (m^3/6) L^3 - (m^2/4) L^2.K + (m/12) L.(K^2 + c2) + 1,

and is cross-checked against the independent oracle chi(Sym^m E) for
m in [0, 8] on every construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bundle_family import (
    FamilyParams,
    build_split,
    bundle_cohomology,
    chern,
    sym_chi,
)
from .chow_ring import XI, ScrollContext, degree, intersection_numbers, prod
from .errors import ConsistencyError
from .surface_lattice import intersect


@dataclass(frozen=True)
class RationalCubic:
    """Cubic with exact rational coefficients, ascending degree.

    Must be integer-valued on the integers; sampled on [-6, 6] at
    construction time (a cubic integral on four consecutive integers is
    integral everywhere, so the sample is a proof).
    """

    c0: Fraction
    c1: Fraction
    c2: Fraction
    c3: Fraction

    def __post_init__(self) -> None:
        for m in range(-6, 7):
            if self(m).denominator != 1:
                raise ConsistencyError(f"cubic not integer-valued at m={m}: {self}")

    def __call__(self, m: int) -> Fraction:
        return self.c0 + self.c1 * m + self.c2 * m * m + self.c3 * m ** 3

    def value_at(self, m: int) -> int:
        value = self(m)
        if value.denominator != 1:
            raise ConsistencyError(f"cubic not integer-valued at m={m}: {self}")
        return int(value)

    def to_pairs(self) -> list[list[int]]:
        """[[numerator, denominator], ...] by ascending degree, for JSON."""
        return [[coeff.numerator, coeff.denominator] for coeff in
                (self.c0, self.c1, self.c2, self.c3)]

    def pretty(self) -> str:
        terms = []
        for power, coeff in enumerate((self.c0, self.c1, self.c2, self.c3)):
            if coeff == 0:
                continue
            mono = "" if power == 0 else ("m" if power == 1 else f"m^{power}")
            body = str(coeff) if not mono else (
                mono if coeff == 1 else f"({coeff})*{mono}" if coeff.denominator != 1
                else f"{coeff}*{mono}"
            )
            terms.append(body)
        return " + ".join(terms) if terms else "0"


@dataclass(frozen=True)
class ScrollReport:
    params: FamilyParams
    n: int
    d: int
    hilbert_poly: RationalCubic
    h_of_L: tuple[int, int, int, int]

    def __post_init__(self) -> None:
        if self.h_of_L != (self.n + 1, 0, 0, 0):
            raise ConsistencyError(
                f"h^i(X, L) != (n+1, 0, 0, 0) at {self.params}: got {self.h_of_L}"
            )


def embedding_dimension(params: FamilyParams) -> int:
    """n = h^0(E) - 1; bundle_cohomology pins h^0(E) = 5e+2b+4t+28."""
    return bundle_cohomology(params).h0 - 1


def scroll_degree(params: FamilyParams) -> int:
    """d = c1^2 - c2, cross-checked against deg(xi^3) and 8e+5b+7t+40."""
    s = params.surface
    cd = chern(params)
    by_chern = intersect(s, cd.c1, cd.c1) - cd.c2
    ctx = ScrollContext.from_params(params)
    by_chow = degree(prod(ctx, XI, XI, XI))
    closed = 8 * params.e + 5 * params.b + 7 * params.t + 40
    if not (by_chern == by_chow == closed):
        raise ConsistencyError(
            f"degree routes disagree at {params}: "
            f"c1^2-c2={by_chern}, deg xi^3={by_chow}, closed form={closed}"
        )
    return by_chern


def hilbert_polynomial(params: FamilyParams) -> RationalCubic:
    """Hilbert polynomial of (X, L), verified against chi(Sym^m E) on [0, 8]."""
    n = embedding_dimension(params)
    ctx = ScrollContext.from_params(params)
    nums = intersection_numbers(ctx, n)
    poly = RationalCubic(
        c0=Fraction(1),
        c1=Fraction(nums.K2L + nums.c2L, 12),
        c2=Fraction(-nums.KL2, 4),
        c3=Fraction(nums.L3, 6),
    )
    bun = build_split(params)
    for m in range(0, 9):
        expected = sym_chi(bun, m)
        if poly.value_at(m) != expected:
            raise ConsistencyError(
                f"P(m) != chi(Sym^m E) at {params}, m={m}: "
                f"P={poly.value_at(m)}, chi={expected}"
            )
    if poly.value_at(0) != 1 or poly.value_at(1) != n + 1:
        raise ConsistencyError(f"P(0) != 1 or P(1) != n+1 at {params}")
    return poly


def vanishing_report(params: FamilyParams) -> tuple[int, int, int, int]:
    """h^i(X, L) for i = 0..3; equals the table of E with h^3 = 0."""
    table = bundle_cohomology(params)
    return (table.h0, table.h1, table.h2, 0)


def scroll_report(params: FamilyParams) -> ScrollReport:
    return ScrollReport(
        params=params,
        n=embedding_dimension(params),
        d=scroll_degree(params),
        hilbert_poly=hilbert_polynomial(params),
        h_of_L=vanishing_report(params),
    )
