"""Strip scans, element tests, zero counting and the numerical experiments.

The element test behind the blow-up criterion: with a_k = a_{m-1,k} and
v_k = (k+1) a_k / ((k+s) a_{k-1}), every level of the reciprocal continued
fraction is safe when |(v_k+1)(1+1/v_{k+1})| >= 4. At rational s = sn/sd +
i tn/td the squared modulus of that expression is rational, so the test
reduces to exact integer comparisons; no tolerance enters any verdict in
this module's scans. Floating point appears only in reported margin values
(a final square root) and in the convergence probe, whose reference is an
independently computed accelerated alternating series.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

import mpmath as mp

from .approx_eval import _to_mpc, build_f, build_g
from .coeff_core import (
    BernoulliTable,
    bernoulli_table,
    c_sequences,
    stirling_rows,
)
from .errors import ReferenceAccuracyError, UncertifiableError
from .qcomplex import QComplex
from .series import Poly, PowerSeries

__all__ = [
    "RegionGrid",
    "MarginResult",
    "PointMargin",
    "WorpitzkyReport",
    "RatioBoundsResult",
    "ZeroScanResult",
    "MonotonicityFinding",
    "BinomialCfResult",
    "PositivityResult",
    "ZetaReference",
    "ConvergencePoint",
    "ConvergenceProbe",
    "half_sqrt_log_lower",
    "default_strip_grid",
    "seeded_strip_points",
    "worpitzky_margin",
    "prop1_scan",
    "real_line_margin_check",
    "ratio_bounds_check",
    "ratio_bounds_sweep",
    "zero_scan",
    "c_monotonicity_search",
    "first_k_ratio_violation",
    "binomial_cf_check",
    "positivity_truncation_check",
    "positivity_genfunc_matrix",
    "zeta_reference",
    "convergence_probe",
]


# ---------------------------------------------------------------------------
# grids and rational enclosures
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RegionGrid:
    """Rational grid over a rectangle in the s-plane."""

    sigma_min: Fraction
    sigma_max: Fraction
    t_min: Fraction
    t_max: Fraction
    n_sigma: int
    n_t: int

    def __post_init__(self):
        if self.n_sigma < 1 or self.n_t < 1:
            raise ValueError("grid needs at least one point per axis")
        if self.sigma_min > self.sigma_max or self.t_min > self.t_max:
            raise ValueError("empty grid rectangle")

    def require_strip(self) -> None:
        if not (0 < self.sigma_min <= self.sigma_max < 1):
            raise ValueError("strip scans need 0 < sigma_min <= sigma_max < 1")

    def sigma_values(self) -> list[Fraction]:
        return _axis(self.sigma_min, self.sigma_max, self.n_sigma)

    def t_values(self) -> list[Fraction]:
        return _axis(self.t_min, self.t_max, self.n_t)


def _axis(lo: Fraction, hi: Fraction, n: int) -> list[Fraction]:
    if n == 1:
        return [lo]
    step = (hi - lo) / (n - 1)
    return [lo + i * step for i in range(n)]


def _mpf_to_fraction(x) -> Fraction:
    sign, man, exp, _ = x._mpf_
    if man == 0:
        return Fraction(0)
    v = Fraction(man)
    v = v * Fraction(2) ** exp if exp >= 0 else v / (Fraction(2) ** (-exp))
    return -v if sign else v


def half_sqrt_log_lower(m: int, denom_bits: int = 16) -> Fraction:
    """Certified rational lower bound for (1/2) sqrt(log m).

    Uses validated interval arithmetic for the enclosure, then rounds down to
    a dyadic rational with a small denominator so grid coordinates stay cheap.
    """
    if m < 2:
        raise ValueError("m must be >= 2")
    iv = mp.iv
    old = iv.prec
    iv.prec = 80
    try:
        val = iv.sqrt(iv.log(m)) / 2
    finally:
        iv.prec = old
    sign, man, exp, _ = val._mpi_[0]  # certified lower endpoint
    lower = Fraction(int(man)) * Fraction(2) ** exp
    if sign:
        lower = -lower
    q = 1 << denom_bits
    return Fraction(math.floor(lower * q), q)


# ---------------------------------------------------------------------------
# the element test, exact at rational points
# ---------------------------------------------------------------------------


class _MarginContext:
    """Per-m integer tables for the element test.

    With S the integer row m! a_{m-1,.}, the test at s = sn/sd + i tn/td is

        N_k N_{k+1} >= 16 sd^2 td^2 W_k (Q_k P_{k+1})^2

    where P_k = (k+1) S_k, Q_k = S_{k-1},
    R_k = sd P_k + (k sd + sn) Q_k,  N_k = R_k^2 td^2 + tn^2 sd^2 Q_k^2,
    and W_k = (k sd + sn)^2 td^2 + tn^2 sd^2. All quantities are integers,
    so every comparison is exact.
    """

    def __init__(self, m: int):
        if m < 3:
            raise ValueError("the element test needs m >= 3 (k range 1..m-2)")
        self.m = m
        for _, row in stirling_rows(m - 1):
            pass
        S = row
        self.P = [0] * m  # P[k], valid for k = 1..m-1
        self.Q = [0] * m
        self.Q2 = [0] * m
        for k in range(1, m):
            self.P[k] = (k + 1) * S[k]
            self.Q[k] = S[k - 1]
            self.Q2[k] = self.Q[k] * self.Q[k]
        self.PQ2 = [0] * (m - 1)  # (Q_k P_{k+1})^2, valid for k = 1..m-2
        for k in range(1, m - 1):
            t = self.Q[k] * self.P[k + 1]
            self.PQ2[k] = t * t


_CONTEXT_CACHE: dict[int, _MarginContext] = {}


def _margin_context(m: int) -> _MarginContext:
    ctx = _CONTEXT_CACHE.get(m)
    if ctx is None:
        ctx = _MarginContext(m)
        if len(_CONTEXT_CACHE) >= 4:
            _CONTEXT_CACHE.pop(next(iter(_CONTEXT_CACHE)))
        _CONTEXT_CACHE[m] = ctx
    return ctx


def _int_ratio_float(a: int, b: int) -> float:
    """a/b as a float for positive ints of any size (reporting only)."""
    sh = max(a.bit_length(), b.bit_length()) - 53
    if sh > 0:
        a >>= sh
        b >>= sh
    return a / b if b else math.inf


@dataclass(frozen=True)
class MarginResult:
    m: int
    sigma: Fraction
    t: Fraction
    k_lo: int
    k_hi: int
    margin: float
    margin_sq: Fraction
    argmin_k: int
    passed: bool
    pole_adjacent: tuple[int, ...]
    float_error_bound: float


def _rationalize_point(s) -> tuple[Fraction, Fraction]:
    if isinstance(s, QComplex):
        return s.re, s.im
    if isinstance(s, tuple):
        return Fraction(s[0]), Fraction(s[1])
    if isinstance(s, (int, Fraction)):
        return Fraction(s), Fraction(0)
    if isinstance(s, complex):
        return Fraction(s.real), Fraction(s.imag)  # exact: dyadic
    if isinstance(s, float):
        return Fraction(s), Fraction(0)
    if isinstance(s, mp.mpc):
        return _mpf_to_fraction(s.real), _mpf_to_fraction(s.imag)
    if isinstance(s, mp.mpf):
        return _mpf_to_fraction(s), Fraction(0)
    raise TypeError(f"cannot represent {s!r} exactly for the element test")


def _point_margin(ctx: _MarginContext, sigma: Fraction, t: Fraction,
                  k_lo: int, k_hi: int, want_min: bool = True):
    """Exact per-point element test over k in [k_lo, k_hi].

    Returns (all_pass, argmin_k, min_ratio_float, lhs, den, pole_adjacent)
    where lhs/den is |E_{argmin}|^2 as an exact integer pair. When want_min
    is False, stops early at the first failing k and reports that k instead.
    """
    sn, sd = sigma.numerator, sigma.denominator
    tn, td = t.numerator, t.denominator
    sd2td2 = sd * sd * td * td
    td2 = td * td
    tnsd2 = (tn * sd) ** 2
    P, Q, Q2, PQ2 = ctx.P, ctx.Q, ctx.Q2, ctx.PQ2

    def N_of(k: int) -> int:
        R = sd * P[k] + (k * sd + sn) * Q[k]
        return R * R * td2 + tnsd2 * Q2[k]

    all_pass = True
    best_k = -1
    best_ratio = math.inf
    best_pair = (1, 1)
    poles = []
    N_next = N_of(k_lo)
    for k in range(k_lo, k_hi + 1):
        N_k = N_next
        N_next = N_of(k + 1)
        W = (k * sd + sn) ** 2 * td2 + tnsd2
        if W == 0:
            raise ValueError(f"s coincides with the pole at k={k}")
        if W * (1 << 40) < sd2td2:  # |k+s|^2 < 2^-40
            poles.append(k)
        lhs = N_k * N_next
        den = 16 * sd2td2 * W * PQ2[k]
        if lhs < den:
            all_pass = False
            if not want_min:
                return False, k, _int_ratio_float(16 * lhs, den), 16 * lhs, den, tuple(poles)
        ratio = _int_ratio_float(16 * lhs, den)  # |E_k|^2 approx
        if ratio < best_ratio:
            best_ratio = ratio
            best_k = k
            best_pair = (16 * lhs, den)
    return all_pass, best_k, best_ratio, best_pair[0], best_pair[1], tuple(poles)


def worpitzky_margin(m: int, s, k_range: tuple[int, int] | None = None) -> MarginResult:
    """Minimum over k of |(v_k+1)(1+1/v_{k+1})| - 4 at s, with an exact verdict.

    Any dyadic or rational s is converted exactly, so the pass/fail decision
    and the reported squared margin are exact; the float margin only incurs
    the final square-root rounding (bounded in `float_error_bound`).
    """
    ctx = _margin_context(m)
    sigma, t = _rationalize_point(s)
    k_lo, k_hi = k_range if k_range is not None else (1, m - 2)
    if not (1 <= k_lo <= k_hi <= m - 2):
        raise ValueError(f"k range must lie in [1, {m - 2}]")
    all_pass, k_min, ratio, lhs, den, poles = _point_margin(ctx, sigma, t, k_lo, k_hi)
    margin = math.sqrt(max(ratio, 0.0)) - 4.0
    margin_sq = Fraction(lhs, den) - 16
    return MarginResult(
        m=m, sigma=sigma, t=t, k_lo=k_lo, k_hi=k_hi,
        margin=margin, margin_sq=margin_sq, argmin_k=k_min,
        passed=margin_sq >= 0 if all_pass else False,
        pole_adjacent=poles,
        float_error_bound=1e-12 * (abs(margin) + 8.0),
    )


@dataclass(frozen=True)
class PointMargin:
    sigma: Fraction
    t: Fraction
    margin: float
    margin_sq: Fraction
    argmin_k: int
    passed: bool


@dataclass(frozen=True)
class WorpitzkyReport:
    m: int
    grid: RegionGrid
    points: tuple[PointMargin, ...]
    global_min_margin: float
    global_argmin: tuple[Fraction, Fraction]
    all_pass: bool
    band_pass: bool  # every point with |t| <= t_guaranteed passed
    failing_points: tuple[tuple[Fraction, Fraction], ...]
    t_guaranteed: Fraction
    t_empirical: Fraction | None
    t_resolution: Fraction | None


def default_strip_grid(m: int, n_sigma: int = 41, n_t: int = 41,
                       t_max: Fraction | None = None) -> RegionGrid:
    """Grid strictly inside the strip with |t| up to the certified enclosure
    of (1/2) sqrt(log m) (or a caller-supplied bound)."""
    T = half_sqrt_log_lower(m) if t_max is None else Fraction(t_max)
    den = n_sigma + 1
    return RegionGrid(Fraction(1, den), Fraction(n_sigma, den), -T, T, n_sigma, n_t)


def prop1_scan(m: int, grid: RegionGrid | None = None,
               bisect_band: bool = True, jobs: int = 1,
               progress=None) -> WorpitzkyReport:
    """Full exact element-test scan of a strip grid.

    Margins at (sigma, -t) and (sigma, t) coincide (t enters all formulas
    squared), so only distinct |t| values are evaluated and results are
    mirrored onto the full grid. Optionally locates, by stepped search plus
    20 bisection steps at sigma = 1/2, the largest verified |t| band.
    """
    if grid is None:
        grid = default_strip_grid(m)
    grid.require_strip()
    ctx = _margin_context(m)
    k_lo, k_hi = 1, m - 2
    T = half_sqrt_log_lower(m)

    sigmas = grid.sigma_values()
    ts = grid.t_values()
    unique_ts = sorted({abs(t) for t in ts})
    cache: dict[tuple[Fraction, Fraction], PointMargin] = {}
    work = [(sig, t) for sig in sigmas for t in unique_ts]
    if jobs > 1:
        results = _parallel_points(m, work, k_lo, k_hi, jobs)
    else:
        results = []
        for i, (sig, t) in enumerate(work):
            results.append(_scan_single(ctx, sig, t, k_lo, k_hi))
            if progress is not None and (i + 1) % 64 == 0:
                progress(i + 1, len(work))
    for (sig, t), pm in zip(work, results):
        cache[(sig, t)] = pm

    points = []
    for sig in sigmas:
        for t in ts:
            base = cache[(sig, abs(t))]
            points.append(
                base if t == abs(t) else PointMargin(
                    sig, t, base.margin, base.margin_sq, base.argmin_k, base.passed
                )
            )
    worst = min(points, key=lambda p: p.margin)
    failing = tuple((p.sigma, p.t) for p in points if not p.passed)
    band_pass = all(p.passed for p in points if abs(p.t) <= T)

    t_emp = t_res = None
    if bisect_band:
        t_emp, t_res = _empirical_t_band(ctx, T, k_lo, k_hi)

    return WorpitzkyReport(
        m=m, grid=grid, points=tuple(points),
        global_min_margin=worst.margin,
        global_argmin=(worst.sigma, worst.t),
        all_pass=not failing,
        band_pass=band_pass,
        failing_points=failing,
        t_guaranteed=T,
        t_empirical=t_emp,
        t_resolution=t_res,
    )


def _scan_single(ctx: _MarginContext, sigma: Fraction, t: Fraction,
                 k_lo: int, k_hi: int) -> PointMargin:
    all_pass, k_min, ratio, lhs, den, _ = _point_margin(ctx, sigma, t, k_lo, k_hi)
    return PointMargin(
        sigma=sigma, t=t,
        margin=math.sqrt(max(ratio, 0.0)) - 4.0,
        margin_sq=Fraction(lhs, den) - 16,
        argmin_k=k_min,
        passed=all_pass and Fraction(lhs, den) >= 16,
    )


_WORKER_CTX: dict = {}


def _init_worker(m: int):
    _WORKER_CTX["ctx"] = _margin_context(m)


def _worker_point(args):
    sigma, t, k_lo, k_hi = args
    return _scan_single(_WORKER_CTX["ctx"], sigma, t, k_lo, k_hi)


def _parallel_points(m, work, k_lo, k_hi, jobs):
    import multiprocessing as mproc

    with mproc.Pool(processes=jobs, initializer=_init_worker, initargs=(m,)) as pool:
        return pool.map(_worker_point, [(sig, t, k_lo, k_hi) for sig, t in work],
                        chunksize=max(1, len(work) // (8 * jobs)))


def _point_passes(ctx, sigma, t, k_lo, k_hi) -> bool:
    ok, *_ = _point_margin(ctx, sigma, t, k_lo, k_hi, want_min=False)
    return ok


def _empirical_t_band(ctx, T: Fraction, k_lo: int, k_hi: int,
                      steps: int = 20) -> tuple[Fraction, Fraction | None]:
    """Largest verified |t| at sigma = 1/2: step up from the guaranteed bound
    to bracket the first failure, then bisect. The condition holds again for
    very large |t|, so the upward search uses fixed steps rather than
    doubling (a doubling search could leap over the failing band)."""
    half = Fraction(1, 2)
    if not _point_passes(ctx, half, T, k_lo, k_hi):
        # cannot happen inside the proven region; report degenerate band
        return Fraction(0), None
    step = T / 8 if T > 0 else Fraction(1, 8)
    t_lo = T
    t_hi = None
    t = T
    for _ in range(64):
        t = t + step
        if _point_passes(ctx, half, t, k_lo, k_hi):
            t_lo = t
        else:
            t_hi = t
            break
    if t_hi is None:
        return t_lo, None
    for _ in range(steps):
        mid = (t_lo + t_hi) / 2
        if _point_passes(ctx, half, mid, k_lo, k_hi):
            t_lo = mid
        else:
            t_hi = mid
    return t_lo, t_hi - t_lo


def real_line_margin_check(m_max: int, sigmas=(Fraction(1, 2),)) -> tuple[int, Fraction, int] | None:
    """Exact sweep: at real s = sigma in (0,1) the element test holds for
    every k and every 3 <= m <= m_max. Returns the first failure or None.

    On the real line E_k = (1+v_k)(1+1/v_{k+1}) with positive rationals, so
    the test is (n_k + d_k)(n_{k+1} + d_{k+1}) >= 4 d_k n_{k+1} in integers.
    """
    for sigma in sigmas:
        if not (0 < sigma < 1):
            raise ValueError("sigma must lie in (0, 1)")
    for m, S in stirling_rows(m_max - 1):
        if m < 2:
            continue
        mm = m + 1  # element test for approximant index mm uses row m = mm-1
        for sigma in sigmas:
            p, q = sigma.numerator, sigma.denominator
            n_prev = 2 * q * S[1]
            d_prev = (q + p) * S[0]
            for k in range(1, mm - 1):
                n_next = (k + 2) * q * S[k + 1]
                d_next = ((k + 1) * q + p) * S[k]
                if (n_prev + d_prev) * (n_next + d_next) < 4 * d_prev * n_next:
                    return mm, sigma, k
                n_prev, d_prev = n_next, d_next
    return None


# ---------------------------------------------------------------------------
# ratio bounds (the two-sided harmonic bound and the Newton consequence)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RatioBoundsResult:
    m: int
    passed: bool
    lemma_j_max: int
    witness: str | None


def _ratio_bounds_row(m: int, S: list[int], hnum: int, hden: int) -> RatioBoundsResult:
    """Check row m-1 (S = integer row of a_{m-1,.}, h = h_{m-1}).

    j = 1 is always checked (both bounds hold trivially there); beyond that
    the range is the strict j <= h_{m-1}/2.
    """
    j_max = 0
    j = 1
    while (j == 1 or 2 * j * hden <= hnum) and j <= m - 1:
        j_max = j
        # (h-1)/j <= S_j/S_{j-1}  and  S_j/S_{j-1} <= h/j
        if (hnum - hden) * S[j - 1] > j * hden * S[j]:
            return RatioBoundsResult(
                m, False, j_max,
                f"lower bound fails at j={j}: (h-1)/j > a_j/a_(j-1)")
        if j * hden * S[j] > hnum * S[j - 1]:
            return RatioBoundsResult(
                m, False, j_max,
                f"upper bound fails at j={j}: a_j/a_(j-1) > h/j")
        j += 1
    for j in range(1, m - 1):
        if j * S[j] * S[j] < (j + 1) * S[j + 1] * S[j - 1]:
            return RatioBoundsResult(
                m, False, j_max, f"j*a_j/a_(j-1) increases at j={j}")
    return RatioBoundsResult(m, True, j_max, None)


def ratio_bounds_check(m: int) -> RatioBoundsResult:
    """Exact verification, for the row of index m-1, that
    (h-1)/j <= a_j/a_{j-1} <= h/j holds for 1 <= j <= h/2 (h = h_{m-1})
    and that j a_j/a_{j-1} never increases over the full range."""
    if m < 2:
        raise ValueError("m must be >= 2")
    for _, S in stirling_rows(m - 1):
        pass
    hnum, hden = 0, 1
    for r in range(1, m):
        hnum = hnum * r + hden
        hden *= r
    return _ratio_bounds_row(m, S, hnum, hden)


def ratio_bounds_sweep(m_max: int) -> RatioBoundsResult | None:
    """First failing m <= m_max, or None when every check passes."""
    hnum, hden = 0, 1
    for n, S in stirling_rows(m_max - 1):
        if n >= 1:
            hnum = hnum * n + hden
            hden *= n
        if n + 1 < 2:
            continue
        res = _ratio_bounds_row(n + 1, S, hnum, hden)
        if not res.passed:
            return res
    return None


# ---------------------------------------------------------------------------
# winding-number zero scan (exact boundary evaluation)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ZeroScanResult:
    rectangle: tuple[Fraction, Fraction, Fraction, Fraction]
    winding_number: int
    boundary_min_modulus: float
    boundary_min_modulus_sq: Fraction
    samples: int
    subdivisions: int
    certified: bool


def _fraction_sqrt_float(q: Fraction) -> float:
    """sqrt of a nonnegative Fraction as a float, safe for huge values."""
    n, d = q.numerator, q.denominator
    if n == 0:
        return 0.0
    e = n.bit_length() - d.bit_length()
    e -= e % 2
    r = _int_ratio_float(n, d << e) if e >= 0 else _int_ratio_float(n << (-e), d)
    try:
        return math.ldexp(math.sqrt(r), e // 2)
    except OverflowError:
        return math.inf


def _atan2_fractions(y: Fraction, x: Fraction) -> float:
    a = y.numerator * x.denominator
    b = x.numerator * y.denominator
    sh = max(abs(a).bit_length(), abs(b).bit_length()) - 52
    if sh > 0:
        a >>= sh
        b >>= sh
    return math.atan2(a, b)


def zero_scan(poly: Poly, rectangle, precision: int | None = None,
              initial_per_edge: int = 16, max_samples: int = 200_000) -> ZeroScanResult:
    """Winding number of `poly` around a rational rectangle.

    Boundary points are rational, so every value is an exact QComplex and the
    evaluation error is zero; the winding count is certified by keeping each
    successive argument step under pi/2 (an exact dot-product sign test, with
    adaptive midpoint subdivision) and checking that no boundary value
    vanishes. `precision` is accepted for interface parity and unused: the
    arithmetic is exact.

    Raises UncertifiableError when the boundary passes too close to a zero
    for the subdivision budget, or exactly through one.
    """
    s_lo, s_hi, t_lo, t_hi = (Fraction(v) for v in rectangle)
    if not (s_lo < s_hi and t_lo < t_hi):
        raise ValueError("rectangle must have positive width and height")
    corners = [
        QComplex(s_lo, t_lo), QComplex(s_hi, t_lo),
        QComplex(s_hi, t_hi), QComplex(s_lo, t_hi), QComplex(s_lo, t_lo),
    ]

    def value(z: QComplex) -> QComplex:
        v = poly(z)
        if v.is_zero():
            raise UncertifiableError(f"polynomial vanishes exactly on the boundary at {z}")
        return v

    # initial closed path
    pts: list[QComplex] = []
    for c0, c1 in zip(corners, corners[1:]):
        for i in range(initial_per_edge):
            lam = Fraction(i, initial_per_edge)
            pts.append(QComplex(c0.re + lam * (c1.re - c0.re),
                                c0.im + lam * (c1.im - c0.im)))
    pts.append(corners[0])
    vals = [value(p) for p in pts]

    total = 0.0
    samples = len(pts)
    subdivisions = 0
    min_sq = min(v.abs2() for v in vals)
    # walk segments with an explicit stack so subdivision depth is budgeted
    for i in range(len(pts) - 1):
        stack = [(pts[i], vals[i], pts[i + 1], vals[i + 1], 0)]
        while stack:
            p0, w0, p1, w1, depth = stack.pop()
            dot = w0.re * w1.re + w0.im * w1.im
            if dot > 0:
                cross = w0.re * w1.im - w0.im * w1.re
                total += _atan2_fractions(cross, dot)
                continue
            if depth > 60 or samples > max_samples:
                raise UncertifiableError(
                    "boundary argument cannot be tracked: contour passes too "
                    "close to a zero at the subdivision budget"
                )
            mid = QComplex((p0.re + p1.re) / 2, (p0.im + p1.im) / 2)
            wm = value(mid)
            samples += 1
            subdivisions += 1
            if wm.abs2() < min_sq:
                min_sq = wm.abs2()
            stack.append((mid, wm, p1, w1, depth + 1))
            stack.append((p0, w0, mid, wm, depth + 1))

    turns = total / (2 * math.pi)
    winding = round(turns)
    if abs(turns - winding) > 0.25:
        raise UncertifiableError(
            f"argument sum {turns:.6f} turns is not close to an integer"
        )
    return ZeroScanResult(
        rectangle=(s_lo, s_hi, t_lo, t_hi),
        winding_number=winding,
        boundary_min_modulus=_fraction_sqrt_float(min_sq),
        boundary_min_modulus_sq=min_sq,
        samples=samples,
        subdivisions=subdivisions,
        certified=True,
    )


# ---------------------------------------------------------------------------
# monotonicity experiments on the c-ratios
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MonotonicityFinding:
    m: int
    kind: str  # "c_ratio" for c_k/c_{k-1}, "k_c_ratio" for k c_k/c_{k-1}
    first_violation_k: int | None
    lhs: Fraction | None = None
    rhs: Fraction | None = None

    @property
    def decreasing(self) -> bool:
        return self.first_violation_k is None


def c_monotonicity_search(m_from: int, m_to: int,
                          bern: BernoulliTable | None = None) -> list[MonotonicityFinding]:
    """Exact check, for each m in [m_from, m_to], of whether c_k/c_{k-1} and
    k c_k/c_{k-1} are non-increasing in k. Two findings per m; a violation
    records the first offending k with both compared values exact."""
    if m_from < 2:
        raise ValueError("m_from must be >= 2")
    out: list[MonotonicityFinding] = []
    for seq in c_sequences(m_to, bern):
        if seq.m < m_from:
            continue
        ratios = [seq.c[k] / seq.c[k - 1] for k in range(1, len(seq.c))]
        plain = None
        weighted = None
        for k in range(2, len(ratios) + 1):
            if plain is None and ratios[k - 1] > ratios[k - 2]:
                plain = (k, ratios[k - 1], ratios[k - 2])
            if weighted is None and k * ratios[k - 1] > (k - 1) * ratios[k - 2]:
                weighted = (k, k * ratios[k - 1], (k - 1) * ratios[k - 2])
            if plain and weighted:
                break
        out.append(MonotonicityFinding(seq.m, "c_ratio",
                                       plain[0] if plain else None,
                                       plain[1] if plain else None,
                                       plain[2] if plain else None))
        out.append(MonotonicityFinding(seq.m, "k_c_ratio",
                                       weighted[0] if weighted else None,
                                       weighted[1] if weighted else None,
                                       weighted[2] if weighted else None))
    return out


def first_k_ratio_violation(findings: list[MonotonicityFinding]) -> MonotonicityFinding | None:
    """Smallest m whose k c_k/c_{k-1} sequence is not non-increasing."""
    for f in findings:
        if f.kind == "k_c_ratio" and f.first_violation_k is not None:
            return f
    return None


# ---------------------------------------------------------------------------
# the binomial continued fraction and the positivity truncation argument
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BinomialCfResult:
    order: int
    passed: bool
    first_mismatch: int | None
    series: tuple[Poly, ...] = ()  # y-coefficients as polynomials in t


def _t_poly(*coeffs) -> Poly:
    return Poly(list(coeffs))


def binomial_cf_check(order: int) -> BinomialCfResult:
    """Expand ((1-y)^t - 1)/t both ways and compare exactly to y^order.

    Continued fraction (t kept symbolic, coefficients are polynomials in t):

        -2y / (2 - y + t y - (1-t^2) y^2 / (3(2-y) - (4-t^2) y^2 / (5(2-y) - ...)))

    The leading sign makes the t = 1 specialization equal -y, matching the
    binomial series sum_{n>=1} (-1)^n/n! prod_{i<n} (t-i) y^n. Level k
    contributes the partial numerator (k^2 - t^2) y^2 over (2k+1)(2-y).
    """
    if order < 4:
        raise ValueError("order must be >= 4")
    N = order
    L = order // 2 + 2
    acc = None
    for k in range(L, 0, -1):
        den = PowerSeries(
            [_t_poly(2 * (2 * k + 1)), _t_poly(-(2 * k + 1))], N
        )
        if acc is not None:
            den = den - acc
        inv = den.inverse()
        num = _t_poly(k * k, 0, -1)  # k^2 - t^2
        acc = (inv * num).shift(2).truncate(N)
    top = PowerSeries([_t_poly(2), _t_poly(-1, 1)], N) - acc  # 2 - y + t y - tail
    cf = (top.inverse() * _t_poly(-2)).shift(1).truncate(N)

    series = tuple(
        c if isinstance(c, Poly) else Poly([c]) for c in cf.coeffs
    )
    prod = Poly([1])
    for n in range(1, N + 1):
        if n > 1:
            prod = prod * Poly([-(n - 1), 1])  # 't - (n-1)'
        direct = prod * Fraction((-1) ** n, factorial(n))
        if series[n] != direct:
            return BinomialCfResult(order, False, n, series)
    if series[0] != Poly([0]):
        return BinomialCfResult(order, False, 0, series)
    return BinomialCfResult(order, True, None, series)


@dataclass(frozen=True)
class PositivityResult:
    m_max: int
    passed: bool
    first_negative: tuple[int, int] | None  # (y-degree, z-degree)
    cf_coefficients: tuple[tuple[Fraction, ...], ...]


def _positivity_cf_series(m_max: int, order: int) -> PowerSeries:
    """The z-form continued fraction  z y / (3(2-y) - (3+z) y^2 / (5(2-y) - ...)),
    expanded with floor(m_max/2)+1 levels as a series in y with z-polynomial
    coefficients."""
    L = m_max // 2 + 1
    acc = None
    for k in range(L, 0, -1):
        den = PowerSeries([Poly([2 * (2 * k + 1)]), Poly([-(2 * k + 1)])], order)
        if acc is not None:
            den = den - acc
        inv = den.inverse()
        if k == 1:
            num = Poly([0, 1])  # z
            shift = 1
        else:
            num = Poly([k * k - 1, 1])  # (k^2 - 1) + z
            shift = 2
        acc = (inv * num).shift(shift).truncate(order)
    return acc


def positivity_truncation_check(m_max: int) -> PositivityResult:
    """Expand the derivative construction's continued fraction through y^m_max
    and assert every y-coefficient is a z-polynomial with nonnegative
    coefficients (the bottom-up truncation argument; differentiating in y and
    adding the positive 2/y^2 term preserves nonnegativity)."""
    if m_max < 2:
        raise ValueError("m_max must be >= 2")
    cf = _positivity_cf_series(m_max, m_max)
    rows = []
    first_neg = None
    for mdeg in range(m_max + 1):
        c = cf.coefficient(mdeg)
        coeffs = c.coeffs if isinstance(c, Poly) else (Fraction(c),)
        rows.append(tuple(coeffs))
        if first_neg is None:
            for zdeg, v in enumerate(coeffs):
                if v < 0:
                    first_neg = (mdeg, zdeg)
                    break
    return PositivityResult(m_max, first_neg is None, first_neg, tuple(rows))


def positivity_genfunc_matrix(m_max: int) -> tuple[tuple[Fraction, ...], ...]:
    """Assemble (log(1-y))^2 d/dy [ sqrt(1-z)/((1-y)^{sqrt(1-z)} - 1) ] from
    the continued-fraction route:

        (log(1-y)/y)^2 * (1 + (y^2/2) d/dy CF(y,z))

    and return the same matrix shape as the generating-function oracle, for
    exact cross-route comparison."""
    order = m_max + 4
    ell = PowerSeries.neg_log1m(order)
    ell_over_y = ell.shift(-1)
    A = ell_over_y * ell_over_y
    cf = _positivity_cf_series(m_max, order)
    B = cf.derivative().shift(2) * Fraction(1, 2) + 1
    R = A * B
    k_max = m_max // 2 + 1
    rows = []
    for mdeg in range(m_max + 1):
        c = R.coefficient(mdeg)
        coeffs = list(c.coeffs) if isinstance(c, Poly) else [Fraction(c)]
        coeffs += [Fraction(0)] * (k_max - len(coeffs))
        rows.append(tuple(coeffs[:k_max]))
    return tuple(rows)


# ---------------------------------------------------------------------------
# independent zeta reference and the convergence probe
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ZetaReference:
    value: mp.mpc
    precision: int
    terms: int
    agreement_width: float


def _cvz_alternating(a, n: int) -> mp.mpc:
    """Accelerated alternating sum sum_{k>=0} (-1)^k a(k) using the
    Chebyshev-weight scheme; error decays like (3+sqrt(8))^-n for weights
    coming from a measure on [0,1], with a growth factor for complex ones."""
    d = (3 + 2 * mp.sqrt(2)) ** n
    d = (d + 1 / d) / 2
    b = mp.mpf(-1)
    c = -d
    s = mp.mpc(0)
    for k in range(n):
        c = b - c
        s += c * a(k)
        b = b * (k + n) * (k - n) / ((k + mp.mpf(1) / 2) * (k + 1))
    return s / d


def zeta_reference(s, precision: int = 256) -> ZetaReference:
    """zeta(s) by the eta-series route with convergence acceleration.

    Independent of every object built elsewhere in this package: the only
    inputs are the alternating series eta(s) = sum (-1)^{k-1} k^{-s} and the
    factor 1/(1 - 2^{1-s}). Runs the accelerated sum at two depths; if the
    two disagree beyond the requested precision, raises rather than report.
    """
    with mp.workprec(precision + 30):
        z = _to_mpc(s)
        if z == 1:
            raise ValueError("zeta reference undefined at s = 1")
        tail = abs(mp.im(z)) * mp.pi / 2
        n = int((precision * math.log(2) + float(tail) + 25) / math.log(3 + math.sqrt(8))) + 10
        conv = 1 - mp.power(2, 1 - z)
        if abs(conv) < mp.mpf(2) ** (-precision // 2):
            raise ReferenceAccuracyError("eta-to-zeta conversion factor too small at this s")
        a = lambda k: mp.power(k + 1, -z)
        v1 = _cvz_alternating(a, n) / conv
        v2 = _cvz_alternating(a, n + 16) / conv
        width = abs(v1 - v2)
        tol = mp.mpf(2) ** (8 - precision) * (1 + abs(v2))
        if width > tol:
            raise ReferenceAccuracyError(
                f"reference did not converge at {precision} bits "
                f"(agreement width {mp.nstr(width, 5)})"
            )
    with mp.workprec(precision):
        return ZetaReference(+v2, precision, n + 16, float(width))


@dataclass(frozen=True)
class ConvergenceRow:
    m: int
    error: float
    error_str: str  # 30 significant digits


@dataclass(frozen=True)
class ConvergencePoint:
    s_str: str
    zeta_str: str
    rows: tuple[ConvergenceRow, ...]
    strictly_decreasing: bool


@dataclass(frozen=True)
class ConvergenceProbe:
    precision: int
    points: tuple[ConvergencePoint, ...]


def convergence_probe(s_points, m_list, precision: int = 256,
                      bern: BernoulliTable | None = None) -> ConvergenceProbe:
    """|F_m(s)/((s-1) G_m(s)) - zeta_ref(s)| for each s and m, with a flag for
    strict decrease along m_list. Every s must have Re s > 0 and s != 1."""
    m_list = list(m_list)
    if bern is None or bern.n_max < max(m_list):
        bern = bernoulli_table(max(m_list))
    pts = []
    for s in s_points:
        with mp.workprec(precision + 20):
            z = _to_mpc(s)
            if not (mp.re(z) > 0) or z == 1:
                raise ValueError("probe points need Re s > 0 and s != 1")
            ref = zeta_reference(s, precision).value
            rows = []
            for m in m_list:
                fv = _pf_mp_value(build_f(m, bern), z)
                gv = _pf_mp_value(build_g(m), z)
                ratio = fv / ((z - 1) * gv)
                err = abs(ratio - ref)
                rows.append(ConvergenceRow(m, float(err), mp.nstr(err, 30)))
            dec = all(rows[i].error > rows[i + 1].error for i in range(len(rows) - 1))
            pts.append(ConvergencePoint(mp.nstr(z, 20), mp.nstr(ref, 30), tuple(rows), dec))
    return ConvergenceProbe(precision, tuple(pts))


def _pf_mp_value(pf, z: mp.mpc) -> mp.mpc:
    acc = mp.mpc(0)
    for p, r in pf.terms:
        acc += mp.mpf(r.numerator) / r.denominator / (z - p)
    return acc


def seeded_strip_points(seed: int, count: int, denom: int = 64) -> list[QComplex]:
    """Deterministic pseudo-random rational points with 0 < sigma < 1 and
    |t| <= 1, reproducible from the recorded seed."""
    import random

    rng = random.Random(seed)
    pts = []
    for _ in range(count):
        sigma = Fraction(rng.randint(1, denom - 1), denom)
        t = Fraction(rng.randint(-denom, denom), denom)
        pts.append(QComplex(sigma, t))
    return pts
