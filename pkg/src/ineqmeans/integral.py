"""Integral Cauchy-Bunyakovsky chains and the ordering of their middle terms.

Two families of refinements are implemented.  The mean form inserts

    (int fg)^2 <= int M(f,g)^2 * int M*(f,g)^2 <= int f^2 * int g^2

for any unbiased homogeneous monotone mean M.  The log-derivative form
(for positive nondecreasing f, g) inserts

    Phi1(x) = exp(2 int_a^x M(Lf, Lg) dy),  Phi2 = f^2 g^2 / Phi1,

with Lh = h'/h; the factors of this second family are deliberately not
squares of homogeneous expressions, which is why it has no discrete
counterpart.  Both families extend to an arbitrary admissible h-function
via M(u, v) = (u + v) h(ln(v/u)).

Middle terms of two refinements are partially ordered by pointwise
domination; the sampling comparator searches a fixed function catalog for
directional evidence or a certified two-sided (incomparable) witness pair.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Optional, Sequence

import numpy as np

from .errors import ConvergenceError, DomainError, ParameterError
from .functions import FunctionFamily, FunctionSpec, validate_nonneg_derivative, validate_positive
from .means import MeanFamily, MeanSpec, check_h_function, mean_values
from .quadrature import (CubicHermite, composite_simpson, cumulative_simpson,
                         quadrature, simpson_nodes)
from .reports import ChainReport, chain_report
from .sampling import spawn_rng

__all__ = ["ChainKind", "integral_mean_chain", "integral_logderiv_chain",
           "logderiv_phi1", "product_identity_check", "general_h_chain",
           "Relation", "Witness", "OrderVerdict", "compare_generalizations"]


class ChainKind(Enum):
    MEAN_FORM = "mean"
    LOG_DERIV_FORM = "logderiv"


# ---------------------------------------------------------------------------
# mean callables
# ---------------------------------------------------------------------------

def _mean_fn(spec: MeanSpec) -> Callable:
    return lambda u, v: mean_values(spec, u, v)


def _mean_fn_from_h(h: Callable[[float], float]) -> Callable:
    hv = np.vectorize(h, otypes=[float])

    def fn(u, v):
        u = np.asarray(u, dtype=float)
        v = np.asarray(v, dtype=float)
        pos = (u > 0) & (v > 0)
        t = np.where(pos, np.log(np.where(pos, v, 1.0) / np.where(pos, u, 1.0)), 0.0)
        # a zero argument corresponds to t -> +-inf; 700 is past double range
        t = np.where(pos, t, np.where(v > u, 700.0, -700.0))
        return (u + v) * hv(np.clip(t, -700.0, 700.0))

    return fn


def _conjugate_fn(mfn: Callable) -> Callable:
    def fn(u, v):
        u = np.asarray(u, dtype=float)
        v = np.asarray(v, dtype=float)
        m = np.asarray(mfn(u, v), dtype=float)
        uv = u * v
        out = np.zeros_like(uv)
        np.divide(uv, m, out=out, where=uv > 0)
        return out

    return fn


# ---------------------------------------------------------------------------
# mean-form chain
# ---------------------------------------------------------------------------

def _mean_chain_fn(f, g, a: float, b: float, mfn: Callable, tol: float) -> ChainReport:
    conj = _conjugate_fn(mfn)
    left = quadrature(lambda t: np.asarray(f(t)) * np.asarray(g(t)), a, b, tol) ** 2
    mid1 = quadrature(lambda t: mfn(f(t), g(t)) ** 2, a, b, tol)
    mid2 = quadrature(lambda t: conj(f(t), g(t)) ** 2, a, b, tol)
    right = (quadrature(lambda t: np.asarray(f(t), dtype=float) ** 2, a, b, tol)
             * quadrature(lambda t: np.asarray(g(t), dtype=float) ** 2, a, b, tol))
    return chain_report(left, mid1 * mid2, right)


def integral_mean_chain(f, g, a: float, b: float, spec: MeanSpec,
                        tol: float = 1e-10) -> ChainReport:
    """Evaluate (int fg)^2 <= int M^2 * int M*^2 <= int f^2 int g^2."""
    validate_positive(f, a, b, "f")
    validate_positive(g, a, b, "g")
    return _mean_chain_fn(f, g, a, b, _mean_fn(spec), tol)


# ---------------------------------------------------------------------------
# log-derivative chain
# ---------------------------------------------------------------------------

def _logderiv_integrand(f: FunctionSpec, g: FunctionSpec, spec: MeanSpec) -> Callable:
    if spec.family is MeanFamily.MEDIANT:
        # mediant of the formal fractions f'/f and g'/g
        return lambda t: ((f.derivative(t) + g.derivative(t))
                          / (np.asarray(f(t), dtype=float) + np.asarray(g(t), dtype=float)))

    def integrand(t):
        ft = np.asarray(f(t), dtype=float)
        gt = np.asarray(g(t), dtype=float)
        return mean_values(spec, f.derivative(t) / ft, g.derivative(t) / gt)

    return integrand


def _find_kinks(diff_fn: Callable, a: float, b: float) -> list:
    """Interior sign changes of diff_fn (where min/max-type means kink)."""
    ts = np.linspace(a, b, 1025)
    d = np.asarray(diff_fn(ts), dtype=float)
    sign = np.sign(d)
    kinks = []
    for i in np.nonzero(sign[:-1] * sign[1:] < 0)[0]:
        lo, hi = float(ts[i]), float(ts[i + 1])
        flo = float(diff_fn(np.array([lo]))[0])
        for _ in range(80):
            mid = 0.5 * (lo + hi)
            fmid = float(diff_fn(np.array([mid]))[0])
            if flo * fmid <= 0:
                hi = mid
            else:
                lo, flo = mid, fmid
        kinks.append(0.5 * (lo + hi))
    eps = 1e-10 * (b - a)
    return [k for k in kinks if a + eps < k < b - eps]


@dataclass(frozen=True)
class _PiecewiseAntiderivative:
    """Segment-wise cumulative tables glued continuously at the breakpoints."""

    starts: np.ndarray  # left endpoint of each segment
    tables: tuple       # CubicHermite per segment, holding absolute values

    def __call__(self, x):
        xs = np.asarray(x, dtype=float)
        idx = np.clip(np.searchsorted(self.starts, xs, side="right") - 1,
                      0, len(self.tables) - 1)
        out = np.empty_like(xs)
        for i, table in enumerate(self.tables):
            mask = idx == i
            if np.any(mask):
                out[mask] = table(xs[mask])
        return out


def _tabulate_segment(m_integrand, a, b, inner_tol, offset):
    prev = None
    panels = 128
    while panels <= 16384:
        xs, h = simpson_nodes(a, b, panels)
        mv = np.asarray(m_integrand(xs), dtype=float)
        if not np.all(np.isfinite(mv)):
            raise DomainError("log-derivative integrand is not finite on [a, b]")
        v = cumulative_simpson(mv, h)
        total = v[-1]
        if prev is not None and abs(total - prev) <= inner_tol * max(1.0, abs(total)):
            return CubicHermite(a, (b - a) / panels, v + offset, mv[::2]), total
        prev = total
        panels *= 2
    raise ConvergenceError("antiderivative tabulation did not converge")


def _tabulate_antiderivative(m_integrand: Callable, a: float, b: float,
                             inner_tol: float, breaks: Sequence[float] = ()):
    """Adaptively refined cumulative-Simpson tables with exact Hermite slopes.

    ``breaks`` marks interior kinks (e.g. crossings of the log-derivatives
    under a min/max mean); each smooth segment gets its own uniform table.
    """
    edges = [a] + sorted(breaks) + [b]
    tables = []
    offset = 0.0
    for left, right in zip(edges, edges[1:]):
        table, total = _tabulate_segment(m_integrand, left, right, inner_tol, offset)
        tables.append(table)
        offset += total
    if len(tables) == 1:
        return tables[0]
    return _PiecewiseAntiderivative(np.asarray(edges[:-1]), tuple(tables))


def _logderiv_breaks(f: FunctionSpec, g: FunctionSpec, a: float, b: float) -> list:
    def diff(t):
        ft = np.asarray(f(t), dtype=float)
        gt = np.asarray(g(t), dtype=float)
        return f.derivative(t) / ft - g.derivative(t) / gt

    return _find_kinks(diff, a, b)


def _logderiv_chain_fn(f: FunctionSpec, g: FunctionSpec, a: float, b: float,
                       m_integrand: Callable, inner_tol: float,
                       outer_tol: float, breaks: Sequence[float] = ()) -> ChainReport:
    table = _tabulate_antiderivative(m_integrand, a, b, inner_tol, breaks)

    def phi1(x):
        return np.exp(2.0 * table(x))

    def phi2(x):
        fx = np.asarray(f(x), dtype=float)
        gx = np.asarray(g(x), dtype=float)
        return (fx * gx) ** 2 * np.exp(-2.0 * table(x))

    left = quadrature(lambda t: np.asarray(f(t)) * np.asarray(g(t)), a, b, outer_tol) ** 2
    middle = quadrature(phi1, a, b, outer_tol) * quadrature(phi2, a, b, outer_tol)
    right = (quadrature(lambda t: np.asarray(f(t), dtype=float) ** 2, a, b, outer_tol)
             * quadrature(lambda t: np.asarray(g(t), dtype=float) ** 2, a, b, outer_tol))
    return chain_report(left, middle, right)


def integral_logderiv_chain(f: FunctionSpec, g: FunctionSpec, a: float, b: float,
                            spec: MeanSpec, inner_tol: float = 1e-10,
                            outer_tol: float = 1e-8) -> ChainReport:
    """Chain with Phi1 = exp(2 int_a^x M(Lf, Lg)) and Phi2 = f^2 g^2 / Phi1.

    Requires f, g positive with nonnegative derivatives on [a, b].  The inner
    antiderivative is tabulated on an adaptively refined grid (split at
    crossings of the log-derivatives, where min/max-type means kink) and
    interpolated by cubics with exact slopes before the outer adaptive
    quadrature.

    Nonnegative log-derivatives alone do not make the right inequality hold
    for every mean: when Lf - Lg changes sign, means far from the arithmetic
    one (max, or power orders around 50 on concrete pairs) can push the
    middle above int f^2 int g^2.  When Lf - Lg keeps one sign, min and max
    give exact equality with the right side and every intermediate mean stays
    inside the chain.  The report carries honest slacks either way.
    """
    _validate_logderiv_pair(f, g, a, b)
    return _logderiv_chain_fn(f, g, a, b, _logderiv_integrand(f, g, spec),
                              inner_tol, outer_tol, _logderiv_breaks(f, g, a, b))


def _validate_logderiv_pair(f, g, a, b):
    validate_positive(f, a, b, "f")
    validate_positive(g, a, b, "g")
    ts = np.linspace(a, b, 513)
    if np.any(np.asarray(f(ts), dtype=float) <= 0) or np.any(np.asarray(g(ts), dtype=float) <= 0):
        raise DomainError("log-derivative chain requires strictly positive f, g")
    validate_nonneg_derivative(f, a, b, "f")
    validate_nonneg_derivative(g, a, b, "g")


def logderiv_phi1(f: FunctionSpec, g: FunctionSpec, a: float, b: float,
                  spec: MeanSpec, inner_tol: float = 1e-10) -> Callable:
    """The first log-derivative factor Phi1 as a callable on [a, b].

    Exposed separately so the non-homogeneity of the factors (Phi1 is
    invariant under f, g -> lam f, lam g rather than quadratic in lam) can be
    witnessed directly.
    """
    _validate_logderiv_pair(f, g, a, b)
    table = _tabulate_antiderivative(_logderiv_integrand(f, g, spec), a, b,
                                     inner_tol, _logderiv_breaks(f, g, a, b))
    return lambda x: np.exp(2.0 * table(x))


# ---------------------------------------------------------------------------
# product identity (both chain kinds)
# ---------------------------------------------------------------------------

def product_identity_check(f, g, a: float, b: float, kind: ChainKind,
                           spec: MeanSpec, grid: Optional[Sequence[float]] = None,
                           rtol: float = 1e-10, phi2: Optional[Callable] = None):
    """Verify Phi1(x) Phi2(x) = f(x)^2 g(x)^2 pointwise on the grid.

    For the mean form Phi1 = M^2, Phi2 = M*^2; for the log-derivative form
    Phi2 is recomputed independently as f(a)^2 g(a)^2 exp(2 int (Lf+Lg-M))
    so the identity is a genuine two-route check.  ``phi2`` overrides the
    second factor (negative-control hook).  Returns (ok, max relative
    deviation).
    """
    xs = np.asarray(grid if grid is not None else np.linspace(a, b, 32), dtype=float)
    if np.any(xs < a) or np.any(xs > b):
        raise ParameterError("grid points must lie inside [a, b]")
    fx = np.asarray(f(xs), dtype=float)
    gx = np.asarray(g(xs), dtype=float)
    rhs = (fx * gx) ** 2
    if kind is ChainKind.MEAN_FORM:
        mfn = _mean_fn(spec)
        phi1_vals = mfn(fx, gx) ** 2
        phi2_vals = (np.asarray(phi2(xs), dtype=float) if phi2 is not None
                     else _conjugate_fn(mfn)(fx, gx) ** 2)
    else:
        breaks = _logderiv_breaks(f, g, a, b)
        table1 = _tabulate_antiderivative(_logderiv_integrand(f, g, spec), a, b,
                                          1e-12, breaks)
        phi1_vals = np.exp(2.0 * table1(xs))
        if phi2 is not None:
            phi2_vals = np.asarray(phi2(xs), dtype=float)
        else:
            def complement(t):
                ft = np.asarray(f(t), dtype=float)
                gt = np.asarray(g(t), dtype=float)
                lf = f.derivative(t) / ft
                lg = g.derivative(t) / gt
                return lf + lg - np.asarray(_logderiv_integrand(f, g, spec)(t), dtype=float)

            table2 = _tabulate_antiderivative(complement, a, b, 1e-12, breaks)
            fa = float(f(a))
            ga = float(g(a))
            phi2_vals = (fa * ga) ** 2 * np.exp(2.0 * table2(xs))
    dev = np.abs(phi1_vals * phi2_vals - rhs) / np.maximum(np.abs(rhs), 1e-300)
    worst = float(np.max(dev))
    return worst <= rtol, worst


# ---------------------------------------------------------------------------
# general h-form chains
# ---------------------------------------------------------------------------

_H_VALIDATION_GRID = tuple(np.linspace(0.0, 4.0, 17))


def general_h_chain(f: FunctionSpec, g: FunctionSpec, a: float, b: float,
                    h: Callable[[float], float], kind: ChainKind,
                    validation_grid: Optional[Sequence[float]] = None,
                    tol: float = 1e-10) -> ChainReport:
    """Chain built from an arbitrary admissible h via M(u,v) = (u+v) h(ln(v/u)).

    h must be even with h(0) = 1/2 and satisfy the two-sided ratio growth
    bound; this is validated on a grid before use and a violation raises
    ParameterError.
    """
    check = check_h_function(h, validation_grid or _H_VALIDATION_GRID, rtol=1e-9)
    if not check.ok:
        raise ParameterError(
            f"h violates the mean-representation conditions: h(0)={check.h0_value!r}, "
            f"{len(check.ratio_violations)} ratio and {len(check.even_violations)} evenness violations")
    mfn = _mean_fn_from_h(h)
    if kind is ChainKind.MEAN_FORM:
        validate_positive(f, a, b, "f")
        validate_positive(g, a, b, "g")
        return _mean_chain_fn(f, g, a, b, mfn, tol)
    _validate_logderiv_pair(f, g, a, b)

    def integrand(t):
        ft = np.asarray(f(t), dtype=float)
        gt = np.asarray(g(t), dtype=float)
        return mfn(f.derivative(t) / ft, g.derivative(t) / gt)

    return _logderiv_chain_fn(f, g, a, b, integrand, tol, max(tol, 1e-8),
                              _logderiv_breaks(f, g, a, b))


# ---------------------------------------------------------------------------
# comparison of generalizations (the precedence order on middle terms)
# ---------------------------------------------------------------------------

class Relation(Enum):
    A_PREC_B = "a-prec-b"
    B_PREC_A = "b-prec-a"
    INCOMPARABLE = "incomparable"
    UNDETERMINED = "undetermined"


@dataclass(frozen=True)
class Witness:
    f: str
    g: str
    a: float
    b: float
    middle_a: float
    middle_b: float


@dataclass(frozen=True)
class OrderVerdict:
    relation: Relation
    witnesses: tuple
    trials: int
    seed: int


_COMPARE_PANELS = 512
_COMPARE_INTERVALS = (0.5, 1.0, 2.0)


def _sample_function(rng) -> FunctionSpec:
    # positive increasing catalog member; coefficients log-uniform in [0.1, 10]
    kind = int(rng.integers(0, 4))
    c = 10.0 ** rng.uniform(-1.0, 1.0, size=3)
    if kind == 0:
        return FunctionSpec(FunctionFamily.EXP, (float(c[0]),))
    if kind == 1:
        return FunctionSpec(FunctionFamily.AFFINE, (float(c[0]), float(c[1])))
    if kind == 2:
        return FunctionSpec(FunctionFamily.POLY, tuple(float(v) for v in c))
    return FunctionSpec(FunctionFamily.EXP_OF_POLY, (float(c[0]), float(c[1])))


def _middle_fixed(kind: ChainKind, spec: MeanSpec, f: FunctionSpec,
                  g: FunctionSpec, a: float, b: float) -> float:
    xs, h = simpson_nodes(a, b, _COMPARE_PANELS)
    fv = np.asarray(f(xs), dtype=float)
    gv = np.asarray(g(xs), dtype=float)
    if kind is ChainKind.MEAN_FORM:
        m = mean_values(spec, fv, gv)
        conj = np.zeros_like(m)
        np.divide(fv * gv, m, out=conj, where=fv * gv > 0)
        return composite_simpson(m * m, h) * composite_simpson(conj * conj, h)
    lf = f.derivative(xs) / fv
    lg = g.derivative(xs) / gv
    mv = np.asarray(_logderiv_integrand(f, g, spec)(xs), dtype=float) \
        if spec.family is MeanFamily.MEDIANT else mean_values(spec, lf, lg)
    v = cumulative_simpson(mv, h)
    fe, ge = fv[::2], gv[::2]
    phi1 = np.exp(2.0 * v)
    phi2 = (fe * ge) ** 2 * np.exp(-2.0 * v)
    return composite_simpson(phi1, 2.0 * h) * composite_simpson(phi2, 2.0 * h)


def compare_generalizations(spec_a: MeanSpec, spec_b: MeanSpec, trials: int,
                            seed: int, kind: ChainKind = ChainKind.MEAN_FORM,
                            tie_rtol: float = 1e-9) -> OrderVerdict:
    """Sampled comparison of two middle terms over the function catalog.

    Returns A_PREC_B when middle(A) <= middle(B) in every trial with at
    least one strict win (a directional verdict is only consistency
    evidence), INCOMPARABLE once strict wins in both directions are
    witnessed (a genuine two-witness certificate, reported), and
    UNDETERMINED when every trial ties.  Trials are seeded independently by
    index, so the verdict does not depend on evaluation order.
    """
    if trials < 1:
        raise ParameterError("trials must be >= 1")
    best_a = best_b = None  # (separation, Witness)
    wins_a = wins_b = 0
    ran = 0
    for i in range(trials):
        rng = spawn_rng(seed, i)
        f = _sample_function(rng)
        g = _sample_function(rng)
        b_end = float(_COMPARE_INTERVALS[int(rng.integers(0, len(_COMPARE_INTERVALS)))])
        ma = _middle_fixed(kind, spec_a, f, g, 0.0, b_end)
        mb = _middle_fixed(kind, spec_b, f, g, 0.0, b_end)
        ran += 1
        scale = max(abs(ma), abs(mb))
        diff = (mb - ma) / scale
        if abs(diff) <= tie_rtol:
            continue
        w = Witness(f.to_string(), g.to_string(), 0.0, b_end, ma, mb)
        if diff > 0:
            wins_a += 1
            if best_a is None or diff > best_a[0]:
                best_a = (diff, w)
        else:
            wins_b += 1
            if best_b is None or -diff > best_b[0]:
                best_b = (-diff, w)
        if wins_a and wins_b:
            return OrderVerdict(Relation.INCOMPARABLE,
                                (best_a[1], best_b[1]), ran, seed)
    if wins_a:
        return OrderVerdict(Relation.A_PREC_B, (best_a[1],), ran, seed)
    if wins_b:
        return OrderVerdict(Relation.B_PREC_A, (best_b[1],), ran, seed)
    return OrderVerdict(Relation.UNDETERMINED, (), ran, seed)
