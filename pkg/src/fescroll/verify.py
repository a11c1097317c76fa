"""Named identity checks swept over parameter grids.

Each check is independent: it reports how many cases it examined and a
list of failure descriptions (empty on success).  A ConsistencyError
raised by the engine mid-check is recorded as a failure of that check
instead of aborting the sweep, so a corrupted build reports every
identity it breaks, starting from the most elementary one.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable

from . import bundle_family as bf
from . import chow_ring as cr
from . import hilbert_component as hc
from . import scroll_invariants as si
from . import surface_lattice as sl
from .errors import ConsistencyError

_MAX_FAILURES = 8


@dataclass
class CheckResult:
    name: str
    cases: int
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


class _Recorder:
    """Capped failure collector."""

    def __init__(self) -> None:
        self.cases = 0
        self.failures: list[str] = []

    def case(self, ok: bool, detail: str) -> None:
        self.cases += 1
        if not ok and len(self.failures) < _MAX_FAILURES:
            self.failures.append(detail)
        elif not ok and len(self.failures) == _MAX_FAILURES:
            self.failures.append("... more failures suppressed")


CheckFn = Callable[[int, int], _Recorder]
_CHECKS: list[tuple[str, CheckFn]] = []


def _register(name: str):
    def wrap(fn: CheckFn) -> CheckFn:
        _CHECKS.append((name, fn))
        return fn

    return wrap


def _surfaces(e_max: int):
    return [sl.Surface(e) for e in range(e_max + 1)]


def _classes(bound: int = 12):
    return [
        sl.DivisorClass(a, c)
        for a in range(-bound, bound + 1)
        for c in range(-bound, bound + 1)
    ]


def _regime_grid(e_max: int, t_max: int):
    for e in range(min(e_max, 2) + 1):
        for t in range(t_max + 1):
            yield bf.FamilyParams(e, 2 * e + 3 + t, t)


# ----------------------------------------------------------------- surface


@_register("K_{F_e} = -2*C0 - (e+2)*f (adjunction along C0 and f)")
def _check_canonical(e_max: int, t_max: int) -> _Recorder:
    rec = _Recorder()
    for s in _surfaces(e_max):
        k = sl.canonical_class(s)
        genus_c0 = sl.intersect(s, k, sl.C0) + sl.intersect(s, sl.C0, sl.C0)
        genus_f = sl.intersect(s, k, sl.FIBER) + sl.intersect(s, sl.FIBER, sl.FIBER)
        rec.case(
            genus_c0 == -2 and genus_f == -2,
            f"e={s.e}: K={k} fails adjunction: K.C0+C0^2={genus_c0}, K.f+f^2={genus_f}",
        )
    return rec


@_register("Serre duality: h^i(D) = h^{2-i}(K - D)")
def _check_serre(e_max: int, t_max: int) -> _Recorder:
    rec = _Recorder()
    for s in _surfaces(e_max):
        k = sl.canonical_class(s)
        for d in _classes():
            tab = sl.cohomology(s, d)
            dual = sl.cohomology(s, k - d)
            rec.case(
                (tab.h0, tab.h1, tab.h2) == (dual.h2, dual.h1, dual.h0),
                f"e={s.e} D={d}: {tab.as_tuple()} vs dual {dual.as_tuple()}",
            )
    return rec


@_register("Riemann-Roch: chi(D) = 1 + D.(D-K)/2 with D.(D-K) even")
def _check_riemann_roch(e_max: int, t_max: int) -> _Recorder:
    rec = _Recorder()
    for s in _surfaces(e_max):
        k = sl.canonical_class(s)
        for d in _classes():
            pairing = sl.intersect(s, d, d - k)
            tab = sl.cohomology(s, d)
            rec.case(
                pairing % 2 == 0 and tab.chi == 1 + pairing // 2,
                f"e={s.e} D={d}: pairing={pairing}, chi={tab.chi}",
            )
    return rec


@_register("h^0 = lattice-point count of the section polytope")
def _check_lattice_oracle(e_max: int, t_max: int) -> _Recorder:
    rec = _Recorder()
    for s in _surfaces(e_max):
        for d in _classes():
            expected = sl.h0_lattice_oracle(s, d)
            got = sl.cohomology(s, d).h0
            rec.case(got == expected, f"e={s.e} D={d}: h0={got}, lattice count {expected}")
    return rec


@_register("effective iff a >= 0 and c >= 0 iff h^0 > 0 (nonzero D)")
def _check_effective(e_max: int, t_max: int) -> _Recorder:
    rec = _Recorder()
    for s in _surfaces(e_max):
        for d in _classes():
            eff = sl.is_effective(s, d)
            h0 = sl.cohomology(s, d).h0
            if d == sl.ZERO:
                rec.case(eff and h0 == 1, f"e={s.e}: h0(0) = {h0}")
            else:
                rec.case(eff == (h0 > 0), f"e={s.e} D={d}: effective={eff}, h0={h0}")
    return rec


@_register("h^0(a*C0 + c*f) nondecreasing in c for a >= 0")
def _check_monotone(e_max: int, t_max: int) -> _Recorder:
    rec = _Recorder()
    for s in _surfaces(e_max):
        for a in range(0, 7):
            previous = None
            for c in range(-12, 13):
                h0 = sl.cohomology(s, sl.DivisorClass(a, c)).h0
                if previous is not None:
                    rec.case(h0 >= previous, f"e={s.e} a={a} c={c}: {previous} -> {h0}")
                previous = h0
    return rec


@_register("intersection pairing symmetric and bilinear")
def _check_bilinear(e_max: int, t_max: int) -> _Recorder:
    rec = _Recorder()
    rng = random.Random(20260817)
    for s in _surfaces(e_max):
        for _ in range(200):
            d1, d2, d3 = (
                sl.DivisorClass(rng.randint(-30, 30), rng.randint(-30, 30))
                for _ in range(3)
            )
            k = rng.randint(-5, 5)
            symmetric = sl.intersect(s, d1, d2) == sl.intersect(s, d2, d1)
            linear = sl.intersect(s, d1 + k * d2, d3) == sl.intersect(
                s, d1, d3
            ) + k * sl.intersect(s, d2, d3)
            rec.case(symmetric and linear, f"e={s.e} D1={d1} D2={d2} D3={d3} k={k}")
    return rec


@_register("h^1 fiberwise route = h^1 chi-subtraction route")
def _check_h1_routes(e_max: int, t_max: int) -> _Recorder:
    # cohomology() raises on mismatch; sweeping it is the check
    rec = _Recorder()
    for s in _surfaces(e_max):
        for d in _classes():
            try:
                sl.cohomology(s, d)
                rec.case(True, "")
            except ConsistencyError as exc:
                rec.case(False, f"e={s.e} D={d}: {exc}")
    return rec


# ------------------------------------------------------------------ bundle


@_register("c1 = A+B = L+M = 4*C0+(b+3e+6+t)*f, c2 = A.B = L.M+2 = 3b+8+t")
def _check_chern_presentations(e_max: int, t_max: int) -> _Recorder:
    rec = _Recorder()
    for params in bf.iter_valid_params(e_max, t_max):
        try:
            bf.chern(params)
            rec.case(True, "")
        except ConsistencyError as exc:
            rec.case(False, str(exc))
    return rec


@_register("ell(c1, c2, 2, r) = b-t-2e-4 < 0 for every r in [0, 40]")
def _check_ell2(e_max: int, t_max: int) -> _Recorder:
    rec = _Recorder()
    for params in bf.iter_valid_params(e_max, t_max):
        expected = params.b - params.t - 2 * params.e - 4
        ok = expected < 0 and all(
            bf.ell_invariant(params, 2, r) == expected for r in range(0, 41)
        )
        rec.case(ok, f"{params}: expected {expected}")
    return rec


@_register("r = 3e+5+t and ell(c1, c2, 3, r) = 0: uniform of splitting type (3, 1)")
def _check_uniformity(e_max: int, t_max: int) -> _Recorder:
    rec = _Recorder()
    for params in bf.iter_valid_params(e_max, t_max):
        try:
            r = bf.invariant_r(params, 3)
            evidence = bf.is_uniform(params)
            split = bf.splitting_type(params)
            ok = (
                r == 3 * params.e + 5 + params.t
                and evidence.uniform
                and evidence.ell3 == 0
                and split == (3, 1)
            )
            rec.case(ok, f"{params}: r={r}, evidence={evidence}")
        except ConsistencyError as exc:
            rec.case(False, f"{params}: {exc}")
    return rec


@_register("h^0(E) = 5e+2b+4t+28 = chi(Sym^1 E), h^1 = h^2 = 0, "
           "h^0(A) = 6e+4t+24, h^0(B) = 2b+4-e")
def _check_bundle_cohomology(e_max: int, t_max: int) -> _Recorder:
    rec = _Recorder()
    for params in bf.iter_valid_params(e_max, t_max):
        try:
            table = bf.bundle_cohomology(params)
            bun = bf.build_split(params)
            rec.case(
                table.chi == bf.sym_chi(bun, 1),
                f"{params}: chi(E)={table.chi} != chi(Sym^1 E)",
            )
        except ConsistencyError as exc:
            rec.case(False, f"{params}: {exc}")
    return rec


@_register("h^1(A - B) = 0 iff b < 6+t+e (boundary sweep)")
def _check_window_v1(e_max: int, t_max: int) -> _Recorder:
    rec = _Recorder()
    for e in range(e_max + 1):
        s = sl.Surface(e)
        for t in range(t_max + 1):
            for b in range(-4, 2 * e + t + 12):
                piece = sl.DivisorClass(2, 3 * e + 4 + t - b)
                h1 = sl.cohomology(s, piece).h1
                rec.case(
                    (h1 == 0) == (b < 6 + t + e),
                    f"e={e} t={t} b={b}: h1(A-B)={h1}",
                )
    return rec


@_register("h^2(B - A) = 0 iff b >= 2e+3+t (boundary sweep)")
def _check_window_v2(e_max: int, t_max: int) -> _Recorder:
    rec = _Recorder()
    for e in range(e_max + 1):
        s = sl.Surface(e)
        for t in range(t_max + 1):
            for b in range(-4, 2 * e + t + 12):
                piece = sl.DivisorClass(-2, b - 3 * e - 4 - t)
                h2 = sl.cohomology(s, piece).h2
                rec.case(
                    (h2 == 0) == (b >= 2 * e + 3 + t),
                    f"e={e} t={t} b={b}: h2(B-A)={h2}",
                )
    return rec


# -------------------------------------------------------------------- chow


@_register("deg xi^3 = c1^2 - c2 (projective-bundle relation)")
def _check_grothendieck(e_max: int, t_max: int) -> _Recorder:
    rec = _Recorder()
    for params in bf.iter_valid_params(e_max, t_max):
        ctx = cr.ScrollContext.from_params(params)
        lhs = cr.degree(cr.prod(ctx, cr.XI, cr.XI, cr.XI))
        rhs = sl.intersect(params.surface, ctx.c1, ctx.c1) - ctx.c2
        rec.case(lhs == rhs, f"{params}: deg xi^3={lhs}, c1^2-c2={rhs}")
    return rec


@_register("Chow product commutative, associative, distributive")
def _check_ring_axioms(e_max: int, t_max: int) -> _Recorder:
    rec = _Recorder()
    rng = random.Random(20260817)
    for params in bf.iter_valid_params(e_max, t_max):
        ctx = cr.ScrollContext.from_params(params)
        for _ in range(6):
            x, y, z = (
                cr.ChowClass(*(rng.randint(-9, 9) for _ in range(8)))
                for _ in range(3)
            )
            comm = cr.multiply(ctx, x, y) == cr.multiply(ctx, y, x)
            assoc = cr.multiply(ctx, cr.multiply(ctx, x, y), z) == cr.multiply(
                ctx, x, cr.multiply(ctx, y, z)
            )
            dist = cr.multiply(ctx, x, y + z) == cr.multiply(ctx, x, y) + cr.multiply(
                ctx, x, z
            )
            rec.case(comm and assoc and dist, f"{params}: x={x}, y={y}, z={z}")
    return rec


@_register("intersection numbers match their closed forms in (d, e, b, t)")
def _check_intersection_numbers(e_max: int, t_max: int) -> _Recorder:
    rec = _Recorder()
    for params in bf.iter_valid_params(e_max, t_max):
        ctx = cr.ScrollContext.from_params(params)
        try:
            cr.intersection_numbers(ctx, si.embedding_dimension(params))
            rec.case(True, "")
        except ConsistencyError as exc:
            rec.case(False, f"{params}: {exc}")
    return rec


@_register("deg c3(T_X) = 8 and -K.c2(T_X) = 24")
def _check_chern_tx(e_max: int, t_max: int) -> _Recorder:
    rec = _Recorder()
    for params in bf.iter_valid_params(e_max, t_max):
        ctx = cr.ScrollContext.from_params(params)
        try:
            c1x, c2x, c3x = cr.chern_TX(ctx)
            ok = (
                cr.degree(c3x) == 8
                and cr.degree(cr.multiply(ctx, c1x, c2x)) == 24
            )
            rec.case(ok, f"{params}")
        except ConsistencyError as exc:
            rec.case(False, f"{params}: {exc}")
    return rec


# ------------------------------------------------------------------ scroll


@_register("P(m) = chi(Sym^m E) for m in [0, 8]; P(0) = 1; P(1) = n+1")
def _check_hilbert_poly(e_max: int, t_max: int) -> _Recorder:
    rec = _Recorder()
    for params in bf.iter_valid_params(e_max, t_max):
        try:
            si.hilbert_polynomial(params)
            rec.case(True, "")
        except ConsistencyError as exc:
            rec.case(False, f"{params}: {exc}")
    return rec


@_register("P(m) is an integer for every integer m (sampled on [-6, 6])")
def _check_poly_integrality(e_max: int, t_max: int) -> _Recorder:
    rec = _Recorder()
    for params in bf.iter_valid_params(e_max, t_max):
        poly = si.hilbert_polynomial(params)
        ok = all(poly(m).denominator == 1 for m in range(-6, 7))
        rec.case(ok, f"{params}: {poly}")
    return rec


@_register("d - 3e - 3b - 3t - 12 = n + 1")
def _check_degree_dimension_identity(e_max: int, t_max: int) -> _Recorder:
    rec = _Recorder()
    for params in bf.iter_valid_params(e_max, t_max):
        n = si.embedding_dimension(params)
        d = si.scroll_degree(params)
        lhs = d - 3 * params.e - 3 * params.b - 3 * params.t - 12
        rec.case(lhs == n + 1, f"{params}: lhs={lhs}, n+1={n + 1}")
    return rec


@_register("n = 5e+2b+4t+27 and d = 8e+5b+7t+40, each by two routes")
def _check_n_d_routes(e_max: int, t_max: int) -> _Recorder:
    rec = _Recorder()
    for params in bf.iter_valid_params(e_max, t_max):
        e, b, t = params.e, params.b, params.t
        try:
            n = si.embedding_dimension(params)
            d = si.scroll_degree(params)  # internally: chern, chow, closed form
            ok = n == 5 * e + 2 * b + 4 * t + 27 and d == 8 * e + 5 * b + 7 * t + 40
            rec.case(ok, f"{params}: n={n}, d={d}")
        except ConsistencyError as exc:
            rec.case(False, f"{params}: {exc}")
    return rec


# ----------------------------------------------------------------- hilbert


@_register("chi(N) by HRR = (d-3e-3b-3t-12)*n + 122 + 21t + 21e + 21b - 3d")
def _check_chi_normal(e_max: int, t_max: int) -> _Recorder:
    rec = _Recorder()
    for params in bf.iter_valid_params(e_max, t_max):
        try:
            hc.chi_normal(params)
            rec.case(True, "")
        except ConsistencyError as exc:
            rec.case(False, f"{params}: {exc}")
    return rec


@_register("regime e<=2, b=2e+3+t: dim = chi(N) = n(n+1)+9e+20+6t and "
           "h^0(N) = (n+1)^2 - 1 - h^0(T_X) + h^1(T_X)")
def _check_component_dimension(e_max: int, t_max: int) -> _Recorder:
    rec = _Recorder()
    for params in _regime_grid(e_max, t_max):
        try:
            report = hc.component_dimension(params)
            e, t, n = params.e, params.t, report.n
            ok = (
                report.dim_component == n * (n + 1) + 9 * e + 20 + 6 * t
                and n == 9 * e + 33 + 6 * t
                and report.hN == (report.chiN, 0, 0, 0)
            )
            rec.case(ok, f"{params}: report={report}")
        except ConsistencyError as exc:
            rec.case(False, f"{params}: {exc}")
    return rec


@_register("regime e<=2, b=2e+3+t: h^0(T_X) = e+12, h^1(T_X) = e-1 for e > 0; "
           "(13, 0) at e = 0; chi(T_X) = 13")
def _check_tangent(e_max: int, t_max: int) -> _Recorder:
    rec = _Recorder()
    for params in _regime_grid(e_max, t_max):
        try:
            table = hc.tangent_cohomology(params)
            e = params.e
            expected = (13, 0) if e == 0 else (e + 12, e - 1)
            ok = (
                (table.h0, table.h1) == expected
                and (table.h2, table.h3) == (0, 0)
                and table.chi == 13
            )
            rec.case(ok, f"{params}: {table}")
        except ConsistencyError as exc:
            rec.case(False, f"{params}: {exc}")
    return rec


@_register("regime e<=2, b=2e+3+t: scroll-locus codimension = e-1 (e > 0), 0 (e = 0)")
def _check_codim(e_max: int, t_max: int) -> _Recorder:
    rec = _Recorder()
    for params in _regime_grid(e_max, t_max):
        try:
            codim = hc.scroll_locus_codim(params)
            expected = 0 if params.e == 0 else params.e - 1
            rec.case(codim == expected, f"{params}: codim={codim}")
        except ConsistencyError as exc:
            rec.case(False, f"{params}: {exc}")
    return rec


@_register("e <= 2 and b = 2e+3+t imply the computed vanishings v1, v2, v3")
def _check_flag_soundness(e_max: int, t_max: int) -> _Recorder:
    rec = _Recorder()
    for params in bf.iter_valid_params(e_max, t_max):
        try:
            flags = hc.check_hypotheses(params)
            sound = (not flags.paper_regime) or (flags.v1 and flags.v2 and flags.v3)
            rec.case(sound, f"{params}: {flags}")
        except ConsistencyError as exc:
            rec.case(False, f"{params}: {exc}")
    return rec


@_register("chi(T_{F_e}) = 6: table (e+5, e-1, 0) for e > 0, (6, 0, 0) at e = 0")
def _check_fiber_tangent(e_max: int, t_max: int) -> _Recorder:
    rec = _Recorder()
    for e in range(e_max + 1):
        try:
            table = hc._fiber_tangent_table(e)
            rec.case(table[0] - table[1] + table[2] == 6, f"e={e}: {table}")
        except ConsistencyError as exc:
            rec.case(False, f"e={e}: {exc}")
    return rec


def run_all(e_max: int, t_max: int) -> list[CheckResult]:
    """Run every registered check over the grid; checks never abort each other."""
    results = []
    for name, fn in _CHECKS:
        try:
            rec = fn(e_max, t_max)
            results.append(CheckResult(name, rec.cases, rec.failures))
        except ConsistencyError as exc:
            results.append(CheckResult(name, 0, [f"aborted: {exc}"]))
    return results
