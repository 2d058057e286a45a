"""Exact coefficient sequences for the rational zeta approximants.

The polynomial p_m(t) = (1 - t)(1 - t/2)...(1 - t/m) has coefficients
p_m(t) = sum_j (-1)^j a_{m,j} t^j. Everything downstream (the partial
fractions, the factorial-series coefficients c_{m,k}, the continued
fractions) is built from the a_{m,j}, the Bernoulli numbers and the harmonic
numbers, all held as exact rationals.

Internally the rows are carried as integers: m! * a_{m,j} is the unsigned
Stirling number of the first kind |s(m+1, j+1)|, and the row recurrence
S_m[j] = m*S_{m-1}[j] + S_{m-1}[j-1] stays in integer arithmetic, which keeps
the long exact sweeps free of gcd reduction costs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, log
from typing import Iterator

from .errors import InternalConsistencyError
from .series import PowerSeries, TruncationOrderError

__all__ = [
    "CoeffTable",
    "BernoulliTable",
    "HarmonicValue",
    "CSequence",
    "SinhSeries",
    "coeff_table",
    "stirling_rows",
    "bernoulli_table",
    "harmonic",
    "harmonic_sums",
    "c_direct",
    "c_sequences",
    "c_residue_oracle",
    "c_genfunc_oracle",
    "sinh_series",
    "a_invariant_witness",
    "c_positivity_witness",
    "c1_identity_witness",
    "growth_band_check",
]


# ---------------------------------------------------------------------------
# coefficient tables a_{m,j}
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CoeffTable:
    """The exact coefficients a_{m,0..m}, with a_{m,j} stored in lowest terms."""

    m: int
    a: tuple[Fraction, ...]

    def ratio(self, j: int) -> Fraction:
        """a_j / a_{j-1} for 1 <= j <= m."""
        return self.a[j] / self.a[j - 1]

    def validate(self, deep: bool = False) -> None:
        """Check the structural invariants; `deep` also verifies that the
        polynomial vanishes at t = 1..m (an O(m^2) integer computation)."""
        m = self.m
        if len(self.a) != m + 1:
            raise InternalConsistencyError(f"table length {len(self.a)} != m+1 = {m + 1}")
        if self.a[0] != 1:
            raise InternalConsistencyError("a[0] must be 1")
        if self.a[m] != Fraction(1, factorial(m)):
            raise InternalConsistencyError("a[m] must be 1/m!")
        if m >= 1 and self.a[1] != harmonic(m).h:
            raise InternalConsistencyError("a[1] must be the m-th harmonic number")
        if any(x <= 0 for x in self.a):
            raise InternalConsistencyError("all a[j] must be positive")
        if deep:
            fm = factorial(m)
            S = [int(x * fm) for x in self.a]
            for k in range(1, m + 1):
                if _row_eval_at_int(S, k) != 0:
                    raise InternalConsistencyError(f"p_{m} does not vanish at t={k}")


def stirling_rows(m_max: int) -> Iterator[tuple[int, list[int]]]:
    """Yield (m, S_m) for m = 0..m_max where S_m[j] = m! * a_{m,j}.

    The yielded list is freshly allocated each step and safe to keep.
    """
    row = [1]
    yield 0, row
    for m in range(1, m_max + 1):
        prev = row
        row = [0] * (m + 1)
        row[0] = m * prev[0]
        for j in range(1, m):
            row[j] = m * prev[j] + prev[j - 1]
        row[m] = prev[m - 1]
        yield m, row


def _stirling_row(m: int) -> list[int]:
    for mm, row in stirling_rows(m):
        pass
    return row


def _row_eval_at_int(S: list[int], k: int) -> int:
    """m! * p_m(k) via Horner on the signed integer row."""
    acc = 0
    for j in range(len(S) - 1, -1, -1):
        c = S[j] if j % 2 == 0 else -S[j]
        acc = acc * k + c
    return acc


def coeff_table(m: int) -> CoeffTable:
    """Exact a_{m,j} by the row recurrence a_{m,j} = a_{m-1,j} + a_{m-1,j-1}/m."""
    if m < 0:
        raise ValueError("m must be >= 0")
    S = _stirling_row(m)
    fm = factorial(m)
    return CoeffTable(m, tuple(Fraction(s, fm) for s in S))


# ---------------------------------------------------------------------------
# Bernoulli numbers
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BernoulliTable:
    """B_0..B_{n_max} with the convention B_1 = -1/2."""

    n_max: int
    b: tuple[Fraction, ...]

    def __getitem__(self, j: int) -> Fraction:
        return self.b[j]


def _bernoulli_recurrence(n_max: int) -> list[Fraction]:
    # sum_{k=0}^{n} C(n+1, k) B_k = 0 for n >= 1
    B = [Fraction(1)]
    for n in range(1, n_max + 1):
        s = Fraction(0)
        for k in range(n):
            if B[k]:
                s += comb(n + 1, k) * B[k]
        B.append(-s / (n + 1))
    return B


def _bernoulli_akiyama_tanigawa(n_max: int) -> list[Fraction]:
    # The tableau natively produces B_1 = +1/2; flip it to the B_1 = -1/2
    # convention used throughout (even indices agree in both conventions).
    A = [Fraction(0)] * (n_max + 1)
    out = []
    for m in range(n_max + 1):
        A[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            A[j - 1] = j * (A[j - 1] - A[j])
        out.append(A[0])
    if n_max >= 1:
        out[1] = -out[1]
    return out


def bernoulli_table(n_max: int, cross_check: bool = True) -> BernoulliTable:
    """Exact Bernoulli numbers, computed by the binomial recurrence and,
    unless disabled, confirmed entry by entry against an Akiyama-Tanigawa
    tableau. The two routes must agree exactly."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    B = _bernoulli_recurrence(n_max)
    if cross_check:
        B2 = _bernoulli_akiyama_tanigawa(n_max)
        if B != B2:
            bad = next(i for i in range(n_max + 1) if B[i] != B2[i])
            raise InternalConsistencyError(
                f"Bernoulli cross-check failed at index {bad}: {B[bad]} vs {B2[bad]}"
            )
    return BernoulliTable(n_max, tuple(B))


# ---------------------------------------------------------------------------
# harmonic numbers
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HarmonicValue:
    m: int
    h: Fraction


def harmonic(m: int) -> HarmonicValue:
    """h_m = sum_{r<=m} 1/r, exactly; h_0 = 0."""
    if m < 0:
        raise ValueError("m must be >= 0")
    h = Fraction(0)
    for r in range(1, m + 1):
        h += Fraction(1, r)
    return HarmonicValue(m, h)


def harmonic_sums(m_max: int) -> Iterator[HarmonicValue]:
    """Yield h_0, h_1, ..., h_{m_max} incrementally."""
    h = Fraction(0)
    yield HarmonicValue(0, h)
    for m in range(1, m_max + 1):
        h += Fraction(1, m)
        yield HarmonicValue(m, h)


# ---------------------------------------------------------------------------
# the c_{m,k} sequence and its oracles
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CSequence:
    """c_{m,0..K} with K = floor(m/2) + 1; c[0] = 1."""

    m: int
    c: tuple[Fraction, ...]

    @property
    def k_max(self) -> int:
        return len(self.c) - 1

    def ratio(self, k: int) -> Fraction:
        return self.c[k] / self.c[k - 1]


def _c_from_int_row(m: int, S: list[int], bern: BernoulliTable) -> tuple[Fraction, ...]:
    fm = factorial(m)
    J = m // 2
    # T_j = a_{m,2j} (1-2j) B_{2j}
    T = [Fraction(S[2 * j] * (1 - 2 * j), fm) * bern[2 * j] for j in range(J + 1)]
    K = J + 1
    out = [Fraction(1)]
    for k in range(1, K + 1):
        s = Fraction(0)
        for j in range(k - 1, J + 1):
            s += T[j] * comb(j, k - 1)
        out.append((m + 1) * s if k % 2 == 1 else -(m + 1) * s)
    return tuple(out)


def c_direct(m: int, bern: BernoulliTable | None = None) -> CSequence:
    """c_{m,k} = (m+1)(-1)^{k-1} sum_{j<=m/2} a_{m,2j}(1-2j)B_{2j} C(j,k-1),
    with c_{m,0} = 1. Binomials with k-1 > j vanish, which terminates the sum."""
    if m < 1:
        raise ValueError("m must be >= 1")
    if bern is None or bern.n_max < m:
        bern = bernoulli_table(m)
    return CSequence(m, _c_from_int_row(m, _stirling_row(m), bern))


def c_sequences(m_max: int, bern: BernoulliTable | None = None) -> Iterator[CSequence]:
    """Yield c-sequences for m = 1..m_max, sharing one coefficient-row sweep."""
    if bern is None or bern.n_max < m_max:
        bern = bernoulli_table(m_max)
    for m, S in stirling_rows(m_max):
        if m >= 1:
            yield CSequence(m, _c_from_int_row(m, S, bern))


def c_residue_oracle(m: int, bern: BernoulliTable | None = None) -> CSequence:
    """Recover c_{m,k} from the poles of the normalized approximant.

    (m+1) s F_m(s) - 1 has residue (m+1) a_{m,2j} (1-2j) B_{2j} at s = 1-2j.
    Writing the factorial series in the basis
        phi_k(s) = 2^{k-1}(k-1)! / ((s-1)(s+1)...(s+2k-3)),
    the residue of phi_k at s = 1-2j is (-1)^j C(k-1, j), so matching
    residues gives an upper-triangular system with unit diagonal for the
    c_{m,k}. The solve is exact and must reproduce c_direct entry by entry.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    if bern is None or bern.n_max < m:
        bern = bernoulli_table(m)
    S = _stirling_row(m)
    fm = factorial(m)
    J = m // 2
    K = J + 1
    R = [Fraction((m + 1) * S[2 * j] * (1 - 2 * j), fm) * bern[2 * j] for j in range(J + 1)]
    beta: list[Fraction] = [Fraction(0)] * (K + 1)
    for j in range(J, -1, -1):
        sign = -1 if j % 2 else 1
        acc = Fraction(0)
        for k in range(j + 2, K + 1):
            if beta[k]:
                acc += beta[k] * (sign * comb(k - 1, j))
        diag = sign  # C(j, j) = 1
        if diag == 0:
            raise InternalConsistencyError("singular triangular system in residue oracle")
        beta[j + 1] = (R[j] - acc) / diag
    beta[0] = Fraction(1)
    return CSequence(m, tuple(beta))


def c_genfunc_oracle(
    m_max: int, k_max: int | None = None, order: int | None = None
) -> tuple[tuple[Fraction, ...], ...]:
    """Coefficients of the bivariate generating function, via series arithmetic.

    Expands (log(1-y))^2 * d/dy [ sqrt(1-z) / ((1-y)^{sqrt(1-z)} - 1) ] using
    the even-index Bernoulli expansion: only even powers of sqrt(1-z)
    survive, so each y-degree carries a polynomial in z. Returns the matrix
    M[m][t] = coefficient of y^m z^t for m = 0..m_max, t = 0..k_max-1.

    The claim this oracle tests is M[m][k-1] == c_{m,k} / (m+1) for m >= 1,
    with M[0][0] == 1.
    """
    if k_max is None:
        k_max = m_max // 2 + 1
    if order is None:
        order = m_max + 5
    if order < m_max + 2:
        raise TruncationOrderError(
            f"truncation order {order} is insufficient for m_max={m_max} (need >= {m_max + 2})"
        )
    bern = bernoulli_table(2 * (m_max // 2))
    inv1my = PowerSeries.geometric(order)
    neglog = PowerSeries.neg_log1m(order)
    rows = [[Fraction(0)] * k_max for _ in range(m_max + 1)]
    pw = PowerSeries.constant(1, order)  # (-log(1-y))^{2i}
    for i in range(m_max // 2 + 1):
        j = 2 * i
        if i > 0:
            pw = pw * neglog * neglog
        yser = inv1my * pw
        scale = Fraction(1 - j, factorial(j)) * bern[j]
        if scale == 0:
            continue
        # (1-z)^i contributes C(i,t)(-1)^t to z^t
        zcol = [Fraction((-1) ** t * comb(i, t)) for t in range(min(i, k_max - 1) + 1)]
        for mm in range(m_max + 1):
            ym = yser.coefficient(mm)
            if not ym:
                continue
            base = scale * ym
            for t, zc in enumerate(zcol):
                rows[mm][t] += base * zc
    return tuple(tuple(r) for r in rows)


# ---------------------------------------------------------------------------
# the sinh-kernel family
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SinhSeries:
    """Exact z-expansion coefficients of the truncated sinh kernel.

    The kernel r^2 u / sinh^2(r sqrt(u)/2) equals 2 / H(u) with
    H(u) = sum_{n>=1} r^{2n-2} u^{n-1} / (2n)!. The stored d[k] are the
    z-coefficients of 2 / H_N(1-z), where H_N is the n_terms-term truncation
    of H; d[0] is exactly 2 divided by the truncated sum at u = 1.
    """

    r_squared: Fraction
    d: tuple[Fraction, ...]


def sinh_series(r_squared, n_terms: int) -> SinhSeries:
    """Expand the truncated kernel in z = 1 - u through degree n_terms - 1.

    Pipeline: build the truncated denominator series in u (exact rationals),
    substitute u = 1 - z exactly (binomial expansion of a polynomial), then
    invert as a z-power series. r_squared = 0 is the degenerate limit and
    yields the constant series 4.
    """
    r2 = Fraction(r_squared)
    if r2 < 0:
        raise ValueError("r_squared must be >= 0")
    if n_terms < 1:
        raise ValueError("n_terms must be >= 1")
    H = PowerSeries(
        [Fraction(r2**i, factorial(2 * i + 2)) for i in range(n_terms)],
        n_terms - 1,
    )
    Hz = H.compose_affine(1, -1)  # u = 1 - z
    d = Hz.inverse() * 2
    return SinhSeries(r2, tuple(d.coeffs))


# ---------------------------------------------------------------------------
# exact invariant sweeps (witness = None means the property held)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Witness:
    """First counterexample found by a sweep, with both sides exact."""

    check: str
    m: int
    index: int
    lhs: Fraction
    rhs: Fraction

    def __str__(self):
        return f"{self.check} fails at m={self.m}, index {self.index}: {self.lhs} vs {self.rhs}"


def a_invariant_witness(m_max: int, deep_roots: bool = True) -> Witness | None:
    """Exact sweep of the coefficient-table invariants for all m <= m_max.

    Covers: a_0 = 1, a_1 = h_m, a_m = 1/m!, positivity, vanishing of p_m at
    t = 1..m (when deep_roots), log-concavity a_j^2 >= a_{j-1} a_{j+1},
    Newton's binomial-normalized log-concavity, and the resulting
    non-increase of j a_j / a_{j-1}. All comparisons are integer-exact.
    """
    hnum, hden = 0, 1
    fm = 1
    for m, S in stirling_rows(m_max):
        if m >= 1:
            hnum = hnum * m + hden
            hden = hden * m
            fm *= m
        if S[0] != fm:
            return Witness("a0=1", m, 0, Fraction(S[0], fm), Fraction(1))
        if m >= 1:
            # a_1 = h_m  <=>  S[1] * hden == hnum * m!
            if S[1] * hden != hnum * fm:
                return Witness("a1=h_m", m, 1, Fraction(S[1], fm), Fraction(hnum, hden))
            if S[m] != 1:
                return Witness("am=1/m!", m, m, Fraction(S[m], fm), Fraction(1, fm))
        if any(s <= 0 for s in S):
            j = next(j for j, s in enumerate(S) if s <= 0)
            return Witness("positivity", m, j, Fraction(S[j], fm), Fraction(0))
        if deep_roots:
            for k in range(1, m + 1):
                v = _row_eval_at_int(S, k)
                if v != 0:
                    return Witness("root-vanishing", m, k, Fraction(v, fm), Fraction(0))
        for j in range(1, m):
            if S[j] * S[j] < S[j - 1] * S[j + 1]:
                return Witness(
                    "log-concavity", m, j, Fraction(S[j] ** 2), Fraction(S[j - 1] * S[j + 1])
                )
            # j a_j / a_{j-1} non-increasing:  j S_j^2 >= (j+1) S_{j+1} S_{j-1}
            if j * S[j] * S[j] < (j + 1) * S[j + 1] * S[j - 1]:
                return Witness(
                    "newton-ratio", m, j,
                    Fraction(j * S[j] ** 2), Fraction((j + 1) * S[j + 1] * S[j - 1]),
                )
            # binomial-normalized log-concavity (Newton's inequalities)
            lhs = S[j] * S[j] * comb(m, j - 1) * comb(m, j + 1)
            rhs = S[j - 1] * S[j + 1] * comb(m, j) ** 2
            if lhs < rhs:
                return Witness("newton-binomial", m, j, Fraction(lhs), Fraction(rhs))
    return None


def c_positivity_witness(m_max: int, bern: BernoulliTable | None = None) -> Witness | None:
    """Every c_{m,k} must be strictly positive, for all m <= m_max."""
    for seq in c_sequences(m_max, bern):
        for k, v in enumerate(seq.c):
            if v <= 0:
                return Witness("c-positivity", seq.m, k, v, Fraction(0))
    return None


def c1_identity_witness(m_max: int, bern: BernoulliTable | None = None) -> Witness | None:
    """Observed identity c_{m,1} = 2(m+1)/(m+2) h_{m+1}, checked exactly.

    Verified as a numerical observation, not assumed anywhere else.
    """
    if bern is None or bern.n_max < m_max:
        bern = bernoulli_table(m_max)
    hs = harmonic_sums(m_max + 1)
    next(hs)  # h_0
    next(hs)  # h_1
    fm = 1
    for m, S in stirling_rows(m_max):
        if m < 1:
            continue
        fm *= m
        h_next = next(hs).h  # h_{m+1}
        J = m // 2
        c1 = (m + 1) * sum(
            Fraction(S[2 * j] * (1 - 2 * j), fm) * bern[2 * j] for j in range(J + 1)
        )
        expected = Fraction(2 * (m + 1), m + 2) * h_next
        if c1 != expected:
            return Witness("c1-identity", m, 1, c1, expected)
    return None


def growth_band_check(m: int = 1000, j_max: int = 3, lo: float = 1 / 3, hi: float = 3.0) -> bool:
    """Sanity band: a_{m,j} / ((log m)^j / j!) stays within [lo, hi] for small j.

    A float check by design; the growth statement has no exact constants.
    """
    table = coeff_table(m)
    for j in range(1, j_max + 1):
        ratio = float(table.a[j]) / (log(m) ** j / factorial(j))
        if not (lo <= ratio <= hi):
            return False
    return True
