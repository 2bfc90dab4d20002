"""The four cumulant families as exact moment polynomials, univariate
conversions, the tilde and dilation transforms, and the beta coefficients.

Cumulant families (multivariate, as polynomials in moment symbols):

* classical K_n: Moebius inversion over the full partition lattice P(n);
* free      R_n: Moebius inversion over noncrossing partitions NC(n);
* Boolean   B_n: Moebius inversion over interval partitions I(n);
* monotone  H_n: triangular solve of
      m_{[n]} = sum over NC(n) of H_pi / tau(pi)!
  which is the ungrouped form of the ordered-partition sum with weights
  1/|pi|! (each noncrossing pi admits |pi|!/tau(pi)! monotone orders).

Univariate sequences use moments as the universal pivot basis: every
family has a defining moment-cumulant sum over its lattice, evaluated or
triangularly inverted with exact rationals.

The beta coefficients express classical cumulants in the monotone family:
K_n = sum over P(n) of beta(pi) H_pi.  Two independent routes are
implemented: the closed sum

    beta(pi) = sum over sigma >= pi with all restrictions noncrossing of
               mu_P(sigma, top) / prod_W tau(pi|_W)!

and the recursion obtained by peeling the top of the lattice.  Both are
memoized on the anti-interval digraph, which determines beta.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .algebra import (
    MomentPolynomial,
    Polynomial,
    TruncatedSeries,
    moment_monomial,
)
from .forests import labelling_polynomial_of, partition_tree_factorial
from .graphs import anti_interval_digraph, digraph_key
from .limits import check_limit
from .partitions import SetPartition, mobius_to_top, partitions_of
from .permutations import eulerian_polynomial

__all__ = [
    "CumulantKind",
    "cumulant_poly",
    "partitioned_cumulant",
    "moments_from_cumulants",
    "cumulants_from_moments",
    "convert_sequence",
    "moment_series",
    "sequence_series",
    "tilde_transform",
    "monotone_dilate",
    "lenczewski_sum_check",
    "boolean_poisson_kappa",
    "determinant_cumulants",
    "determinant_moments",
    "beta_recursive",
    "beta_formula",
    "beta",
    "BetaTable",
    "build_beta_table",
    "beta_expansion_check",
    "logbessel_beta_check",
    "nested_pair_partition",
]


class CumulantKind(enum.Enum):
    CLASSICAL = "classical"
    FREE = "free"
    BOOLEAN = "boolean"
    MONOTONE = "monotone"

    @classmethod
    def parse(cls, text: str) -> "CumulantKind":
        aliases = {
            "k": cls.CLASSICAL,
            "r": cls.FREE,
            "b": cls.BOOLEAN,
            "h": cls.MONOTONE,
        }
        t = text.strip().lower()
        if t in aliases:
            return aliases[t]
        return cls(t)


_LATTICE_OF_KIND = {
    CumulantKind.CLASSICAL: "all",
    CumulantKind.FREE: "noncrossing",
    CumulantKind.BOOLEAN: "interval",
    CumulantKind.MONOTONE: "noncrossing",
}


def _kind_weight(kind: CumulantKind, pi: SetPartition) -> Fraction:
    if kind is CumulantKind.MONOTONE:
        return Fraction(1, partition_tree_factorial(pi))
    return Fraction(1)


# ---------------------------------------------------------------------------
# Multivariate cumulant polynomials
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def cumulant_poly(kind: CumulantKind, n: int) -> MomentPolynomial:
    """The n-th cumulant of (X_1, ..., X_n) as a moment polynomial."""
    if n < 1:
        raise ValueError("n must be positive")
    if kind is CumulantKind.CLASSICAL:
        check_limit("cumulant-classical", n)
        out = MomentPolynomial.zero(n)
        for pi in partitions_of(n, "all"):
            out = out + mobius_to_top(pi, "P") * moment_monomial(pi)
        return out
    check_limit("cumulant-other", n)
    if kind is CumulantKind.FREE:
        out = MomentPolynomial.zero(n)
        for pi in partitions_of(n, "noncrossing"):
            out = out + mobius_to_top(pi, "NC") * moment_monomial(pi)
        return out
    if kind is CumulantKind.BOOLEAN:
        out = MomentPolynomial.zero(n)
        for pi in partitions_of(n, "interval"):
            out = out + mobius_to_top(pi, "I") * moment_monomial(pi)
        return out
    # Monotone: triangular solve against the tau-weighted noncrossing sum.
    out = MomentPolynomial.symbol(n, range(1, n + 1))
    for pi in partitions_of(n, "noncrossing"):
        if pi.num_blocks == 1:
            continue
        out = out - _kind_weight(kind, pi) * partitioned_cumulant(kind, pi)
    return out


@lru_cache(maxsize=None)
def partitioned_cumulant(kind: CumulantKind, pi: SetPartition) -> MomentPolynomial:
    """Product over the blocks V of pi of the |V|-th cumulant on X_V."""
    out = MomentPolynomial.one(pi.n)
    for block in pi.blocks:
        mapping = {j + 1: v for j, v in enumerate(block)}
        out = out * cumulant_poly(kind, len(block)).relabel(mapping)
    return out


# ---------------------------------------------------------------------------
# Univariate sequences (moments as the pivot basis)
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _profiles(kind: CumulantKind, n: int):
    """(block sizes, weight) for every partition in the kind's lattice."""
    return tuple(
        (pi.block_sizes(), _kind_weight(kind, pi))
        for pi in partitions_of(n, _LATTICE_OF_KIND[kind])
    )


def moments_from_cumulants(kind: CumulantKind, values) -> list:
    """m_n = sum over the lattice of weight * prod of cumulants per block."""
    values = list(values)
    out = []
    for n in range(1, len(values) + 1):
        total = 0
        for sizes, weight in _profiles(kind, n):
            term = weight
            for s in sizes:
                term = term * values[s - 1]
            total = total + term
        out.append(total)
    return out


def cumulants_from_moments(kind: CumulantKind, moments) -> list:
    """Triangular inversion of the defining moment-cumulant sum."""
    moments = list(moments)
    out: list = []
    for n in range(1, len(moments) + 1):
        acc = moments[n - 1]
        for sizes, weight in _profiles(kind, n):
            if len(sizes) == 1:
                continue  # the top partition carries the unknown
            term = weight
            for s in sizes:
                term = term * out[s - 1]
            acc = acc - term
        out.append(acc)
    return out


_SEQUENCE_KINDS = {
    "moments": None,
    "classical": CumulantKind.CLASSICAL,
    "free": CumulantKind.FREE,
    "boolean": CumulantKind.BOOLEAN,
    "monotone": CumulantKind.MONOTONE,
}


def convert_sequence(src: str, dst: str, values) -> list:
    """Exact univariate conversion between moment/cumulant coordinates."""
    values = list(values)
    for name in (src, dst):
        if name not in _SEQUENCE_KINDS:
            raise ValueError(f"unknown sequence kind {name!r}")
    if src == dst:
        return values
    moments = (
        values
        if src == "moments"
        else moments_from_cumulants(_SEQUENCE_KINDS[src], values)
    )
    if dst == "moments":
        return moments
    return cumulants_from_moments(_SEQUENCE_KINDS[dst], moments)


def moment_series(moments, order: int | None = None) -> TruncatedSeries:
    """Ordinary generating function 1 + sum m_k z^k."""
    moments = list(moments)
    return TruncatedSeries([Fraction(1)] + [Fraction(v) for v in moments], order)


def sequence_series(values, order: int | None = None) -> TruncatedSeries:
    """Ordinary generating function sum a_k z^k (zero constant term)."""
    values = list(values)
    return TruncatedSeries([Fraction(0)] + [Fraction(v) for v in values], order)


# ---------------------------------------------------------------------------
# Tilde transform and monotone dilation
# ---------------------------------------------------------------------------


def tilde_transform(moments) -> list:
    """Moments of the companion variable with free cumulants -Boolean(X).

    The output sequence satisfies Boolean(out) = -free(in) and
    monotone(out) = -monotone(in); both are verified here, and the
    transform is an involution on moment sequences.
    """
    moments = list(moments)
    b = cumulants_from_moments(CumulantKind.BOOLEAN, moments)
    out = moments_from_cumulants(CumulantKind.FREE, [-x for x in b])
    r = cumulants_from_moments(CumulantKind.FREE, moments)
    if cumulants_from_moments(CumulantKind.BOOLEAN, out) != [-x for x in r]:
        raise AssertionError("tilde transform violated Boolean = -free")
    h = cumulants_from_moments(CumulantKind.MONOTONE, moments)
    if cumulants_from_moments(CumulantKind.MONOTONE, out) != [-x for x in h]:
        raise AssertionError("tilde transform violated monotone negation")
    return out


def monotone_dilate(cumulants, t) -> list:
    """Moments after scaling every monotone cumulant by t.

    m_n(t) = sum over NC(n) of t^|pi| / tau(pi)! * prod h_{|V|}; t = 1 is
    the plain moment-cumulant formula and t = -1 gives the tilde companion.
    """
    cumulants = list(cumulants)
    t = Fraction(t)
    out = []
    for n in range(1, len(cumulants) + 1):
        total = 0
        for sizes, weight in _profiles(CumulantKind.MONOTONE, n):
            term = weight * t ** len(sizes)
            for s in sizes:
                term = term * cumulants[s - 1]
            total = total + term
        out.append(total)
    return out


# ---------------------------------------------------------------------------
# Colored sums, Boolean Poisson, determinants
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _univariate_cumulant(kind: CumulantKind, k: int) -> MomentPolynomial:
    return cumulant_poly(kind, k).univariate()


def _univariate_partitioned(kind: CumulantKind, sizes) -> MomentPolynomial:
    out = MomentPolynomial.one(max(sizes))
    for s in sizes:
        out = out * _univariate_cumulant(kind, s)
    return out


def lenczewski_sum_check(n: int, colors: int) -> dict:
    """Check sum over NC(n) of P_pi(N) r_pi against the moment of the
    N-fold monotone dilation, as exact univariate moment polynomials."""
    if not 1 <= n <= 7:
        raise ValueError("n must be in 1..7")
    if not 1 <= colors <= 5:
        raise ValueError("colors must be in 1..5")
    lhs = MomentPolynomial.zero(n)
    rhs = MomentPolynomial.zero(n)
    for pi in partitions_of(n, "noncrossing"):
        count = labelling_polynomial_of(pi).evaluate(colors)
        lhs = lhs + count * _univariate_partitioned(CumulantKind.FREE, pi.block_sizes())
        weight = Fraction(colors) ** pi.num_blocks / partition_tree_factorial(pi)
        rhs = rhs + weight * _univariate_partitioned(
            CumulantKind.MONOTONE, pi.block_sizes()
        )
    holds = lhs == rhs
    return {
        "identity": "lenczewski_sum",
        "n": n,
        "colors": colors,
        "holds": holds,
        "lhs_terms": lhs.num_terms(),
        "rhs_terms": rhs.num_terms(),
        "witness": None if holds else repr(lhs - rhs),
    }


def boolean_poisson_kappa(n: int) -> Polynomial:
    """Classical cumulant of the law whose Boolean cumulants all equal x.

    Computed by converting b_k = x to moments and then to classical
    cumulants with polynomial coefficients; the result is asserted to be
    x * E_{n-1}(-x) with E the Eulerian polynomial.
    """
    if not 1 <= n <= 9:
        raise ValueError("n must be in 1..9")
    x = Polynomial.monomial(1, 1, "x")
    moments = moments_from_cumulants(CumulantKind.BOOLEAN, [x] * n)
    kappa = cumulants_from_moments(CumulantKind.CLASSICAL, moments)[n - 1]
    if not isinstance(kappa, Polynomial):
        kappa = Polynomial.constant(kappa, "x")
    expected = x * eulerian_polynomial(n - 1).scale_argument(-1)
    expected = Polynomial(expected.coeffs, "x")
    if kappa != expected:
        raise AssertionError(
            f"Boolean-Poisson classical cumulant mismatch at n={n}: "
            f"{kappa} vs {expected}"
        )
    return kappa


def _det(matrix) -> Fraction:
    """Exact determinant by Gaussian elimination with row pivoting."""
    m = [row[:] for row in matrix]
    size = len(m)
    det = Fraction(1)
    for col in range(size):
        pivot = next((r for r in range(col, size) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = Fraction(1) / m[col][col]
        for r in range(col + 1, size):
            if m[r][col]:
                f = m[r][col] * inv
                for c in range(col, size):
                    m[r][c] -= f * m[col][c]
    return det


def determinant_cumulants(kind: str, moments) -> list[Fraction]:
    """Classical or Boolean cumulants via the Hessenberg determinants.

    classical: kappa_k = (-1)^(k-1) (k-1)! det A_k with A_k[i][0] =
    m_i/(i-1)!, A_k[i][j] = m_{i-j+1}/(i-j+1)! below the superdiagonal of
    ones; Boolean: b_k = (-1)^(k-1) det of the Toeplitz variant with plain
    m entries.  Must agree with the Moebius route.
    """
    moments = [Fraction(v) for v in moments]
    n = len(moments)
    if n > 9:
        raise ValueError("determinant route limited to n <= 9")

    def m(i):
        return moments[i - 1]

    out = []
    for k in range(1, n + 1):
        rows = []
        for i in range(1, k + 1):
            row = []
            for j in range(1, k + 1):
                if j == i + 1:
                    row.append(Fraction(1))
                elif j > i + 1:
                    row.append(Fraction(0))
                elif kind == "classical":
                    if j == 1:
                        row.append(m(i) / factorial(i - 1))
                    else:
                        row.append(m(i - j + 1) / factorial(i - j + 1))
                elif kind == "boolean":
                    row.append(m(i - j + 1))
                else:
                    raise ValueError(f"unknown determinant kind {kind!r}")
            rows.append(row)
        value = (-1) ** (k - 1) * _det(rows)
        if kind == "classical":
            value *= factorial(k - 1)
        out.append(value)
    return out


def determinant_moments(kind: str, cumulants) -> list[Fraction]:
    """Inverse determinants: moments from classical or Boolean cumulants."""
    cumulants = [Fraction(v) for v in cumulants]
    n = len(cumulants)
    if n > 9:
        raise ValueError("determinant route limited to n <= 9")

    def c(i):
        return cumulants[i - 1]

    out = []
    for k in range(1, n + 1):
        rows = []
        for i in range(1, k + 1):
            row = []
            for j in range(1, k + 1):
                if j == i + 1:
                    row.append(Fraction(-i if kind == "classical" else -1))
                elif j > i + 1:
                    row.append(Fraction(0))
                elif kind == "classical":
                    row.append(c(i - j + 1) / factorial(i - j))
                elif kind == "boolean":
                    row.append(c(i - j + 1))
                else:
                    raise ValueError(f"unknown determinant kind {kind!r}")
            rows.append(row)
        out.append(_det(rows))
    return out


# ---------------------------------------------------------------------------
# Beta coefficients
# ---------------------------------------------------------------------------

_BETA_FORMULA_MEMO: dict[tuple, Fraction] = {}
_BETA_RECURSIVE_MEMO: dict[tuple, Fraction] = {}


def _coarsening_blocks(pi: SetPartition):
    """Unions of pi-blocks for every partition of the block-index set."""
    k = pi.num_blocks
    for grouping in partitions_of(k, "all"):
        yield [
            sorted(x for idx in cls for x in pi.blocks[idx - 1])
            for cls in grouping.blocks
        ]


def beta_formula(pi: SetPartition) -> Fraction:
    """Closed sum for beta over coarsenings with noncrossing restrictions."""
    check_limit("beta-blocks", pi.num_blocks)
    key = digraph_key(anti_interval_digraph(pi))
    hit = _BETA_FORMULA_MEMO.get(key)
    if hit is not None:
        return hit
    total = Fraction(0)
    for parts in _coarsening_blocks(pi):
        restrictions = [pi.restrict(w) for w in parts]
        if all(r.is_noncrossing() for r in restrictions):
            tau = 1
            for r in restrictions:
                tau *= partition_tree_factorial(r)
            s = len(parts)
            total += Fraction((-1) ** (s - 1) * factorial(s - 1), tau)
    _BETA_FORMULA_MEMO[key] = total
    return total


def beta_recursive(pi: SetPartition) -> Fraction:
    """beta by peeling the top of the partition lattice.

    beta(pi) = [pi noncrossing]/tau(pi)! - sum over sigma in [pi, top)
    of prod over blocks W of sigma of beta(pi|_W).
    """
    check_limit("beta-blocks", pi.num_blocks)
    key = digraph_key(anti_interval_digraph(pi))
    hit = _BETA_RECURSIVE_MEMO.get(key)
    if hit is not None:
        return hit
    total = Fraction(0)
    for parts in _coarsening_blocks(pi):
        if len(parts) == 1:
            continue  # sigma = top is excluded
        prod = Fraction(1)
        for w in parts:
            prod *= beta_recursive(pi.restrict(w))
            if prod == 0:
                break
        total += prod
    if pi.is_noncrossing():
        value = Fraction(1, partition_tree_factorial(pi)) - total
    else:
        value = -total
    _BETA_RECURSIVE_MEMO[key] = value
    return value


def beta(pi: SetPartition) -> Fraction:
    """The coefficient of H_pi in the classical cumulant K_n."""
    return beta_formula(pi)


@dataclass(frozen=True)
class BetaTable:
    """beta values for all partitions of [n], keyed by digraph."""

    n: int
    rows: tuple[tuple[SetPartition, tuple, Fraction], ...]

    def by_key(self) -> dict[tuple, Fraction]:
        return {key: value for _, key, value in self.rows}

    def value(self, pi: SetPartition) -> Fraction:
        return self.by_key()[digraph_key(anti_interval_digraph(pi))]


def build_beta_table(n: int, check_routes: bool = False) -> BetaTable:
    rows = []
    for pi in partitions_of(n, "all"):
        key = digraph_key(anti_interval_digraph(pi))
        value = beta_formula(pi)
        if check_routes and beta_recursive(pi) != value:
            raise AssertionError(f"beta route mismatch at {pi}")
        rows.append((pi, key, value))
    return BetaTable(n, tuple(rows))


def beta_expansion_check(n: int) -> dict:
    """Verify K_n = sum over P(n) of beta(pi) H_pi exactly."""
    if not 1 <= n <= 6:
        raise ValueError("n must be in 1..6")
    lhs = cumulant_poly(CumulantKind.CLASSICAL, n)
    rhs = MomentPolynomial.zero(n)
    for pi in partitions_of(n, "all"):
        b = beta_formula(pi)
        if b:
            rhs = rhs + b * partitioned_cumulant(CumulantKind.MONOTONE, pi)
    holds = lhs == rhs
    return {
        "identity": "beta_expansion",
        "n": n,
        "holds": holds,
        "lhs_terms": lhs.num_terms(),
        "rhs_terms": rhs.num_terms(),
        "witness": None if holds else repr(lhs - rhs),
    }


def nested_pair_partition(n: int) -> SetPartition:
    """The fully nested pairing {{1,2n},{2,2n-1},...,{n,n+1}}."""
    return SetPartition.from_blocks(
        2 * n, [[i, 2 * n + 1 - i] for i in range(1, n + 1)]
    )


def logbessel_beta_check(max_n: int) -> dict:
    """Match n! beta(nested pairing) against the log-Bessel coefficients.

    The exponential generating function of beta over the nested pairings
    is log(1 + F) with F = sum z^k/(k!)^2, by the product formula for the
    relevant incidence-algebra convolution; the resulting integer sequence
    b_n = n! beta starts 1, -1, 4, -33, 456 and its unsigned version obeys
    the classical convolution recursion
    a_{m+1} = sum_k C(m,k) C(m,k-1) a_k a_{m+1-k}.
    """
    if not 1 <= max_n <= 7:
        raise ValueError("max_n must be in 1..7")
    f = TruncatedSeries(
        [0] + [Fraction(1, factorial(k) ** 2) for k in range(1, max_n + 1)]
    )
    log_series = (1 + f).log()
    from_series = [
        factorial(k) ** 2 * log_series.coefficient(k) for k in range(1, max_n + 1)
    ]
    from_beta = [
        factorial(k) * beta_formula(nested_pair_partition(k))
        for k in range(1, max_n + 1)
    ]
    series_ok = from_series == from_beta
    unsigned = [(-1) ** (k - 1) * v for k, v in enumerate(from_beta, start=1)]
    signs_ok = all(v > 0 for v in unsigned)
    carlitz_ok = all(
        unsigned[m]
        == sum(
            comb(m, k) * comb(m, k - 1) * unsigned[k - 1] * unsigned[m - k]
            for k in range(1, m + 1)
        )
        for m in range(1, max_n)
    )
    holds = series_ok and signs_ok and carlitz_ok
    return {
        "identity": "logbessel_carlitz",
        "n": max_n,
        "holds": holds,
        "sequence": [str(v) for v in from_beta],
        "series_match": series_ok,
        "carlitz": carlitz_ok,
        "witness": None if holds else f"series={from_series} beta={from_beta}",
    }
