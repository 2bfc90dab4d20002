"""Exact scalar, polynomial, power-series and moment-polynomial arithmetic.

Everything in this package is computed over exact rationals
(`fractions.Fraction`); no floating point is used anywhere.  This module is
the arithmetic foundation:

* rationals and their text form ("p/q", or just "p" when q == 1),
* dense univariate polynomials over the rationals,
* truncated formal power series with exact coefficients,
* Bernoulli numbers/polynomials and Faulhaber summation polynomials,
* the formal moment-polynomial ring in which cumulant identities are stated.

Bernoulli convention
--------------------
``bernoulli_number(n)`` returns B_n(1), the n-th Bernoulli polynomial
evaluated at 1, so ``bernoulli_number(1) == +1/2``.  The polynomials B_n(x)
are the coefficients of z*exp(x*z)/(exp(z) - 1) = sum B_n(x) z^n / n!.

Moment polynomials
------------------
A moment symbol m_S is indexed by a nonempty subset S of [n] and stands for
the joint moment of the variables listed in S (each identity in scope is
multilinear, so no variable ever repeats inside one symbol).  A monomial is
a *multiset* of symbols: products such as m_{1}*m_{1} cannot come from a
partition but do occur in intermediate arithmetic and are representable.
Symbols inside a monomial are kept sorted by (size, subset), which makes
equality canonical and decidable term by term.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

Rational = Fraction

__all__ = [
    "Rational",
    "rational_to_str",
    "rational_from_str",
    "Polynomial",
    "TruncatedSeries",
    "bernoulli_polynomial",
    "bernoulli_number",
    "faulhaber_polynomial",
    "MomentPolynomial",
    "moment_symbol",
    "moment_monomial",
]


def rational_to_str(x: Fraction) -> str:
    """Serialize a rational as "p/q", or "p" when the denominator is 1."""
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def rational_from_str(s: str) -> Fraction:
    """Parse "p/q" or "p" (Fraction accepts both)."""
    return Fraction(s.strip())


# ---------------------------------------------------------------------------
# Polynomials
# ---------------------------------------------------------------------------


class Polynomial:
    """Dense univariate polynomial over Fraction, lowest degree first.

    Trailing zero coefficients are stripped; the zero polynomial has
    ``degree() is None`` (the distinguished sentinel).  Binary operations
    require matching indeterminate names, except that constants mix freely.
    """

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs=(), var: str = "x"):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)
        self.var = var

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, var: str = "x") -> "Polynomial":
        return cls((), var)

    @classmethod
    def constant(cls, c, var: str = "x") -> "Polynomial":
        return cls((Fraction(c),), var)

    @classmethod
    def monomial(cls, degree: int, coeff=1, var: str = "x") -> "Polynomial":
        return cls((0,) * degree + (Fraction(coeff),), var)

    @classmethod
    def from_json(cls, data, var: str = "x") -> "Polynomial":
        return cls([rational_from_str(s) for s in data], var)

    # -- structure ----------------------------------------------------------

    def degree(self) -> int | None:
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def _join_var(self, other: "Polynomial") -> str:
        if self.var == other.var or other.is_zero() or other.degree() == 0:
            return self.var
        if self.is_zero() or self.degree() == 0:
            return other.var
        raise ValueError(f"mixed indeterminates {self.var!r} and {other.var!r}")

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(other, self.var)
        var = self._join_var(other)
        m = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(
            [self.coefficient(k) + other.coefficient(k) for k in range(m)], var
        )

    __radd__ = __add__

    def __neg__(self):
        return Polynomial([-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(other, self.var)
        return self + (-other)

    def __rsub__(self, other):
        return Polynomial.constant(other, self.var) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = Fraction(other)
            return Polynomial([c * a for a in self.coeffs], self.var)
        var = self._join_var(other)
        if self.is_zero() or other.is_zero():
            return Polynomial.zero(var)
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(out, var)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        c = Fraction(scalar)
        return Polynomial([a / c for a in self.coeffs], self.var)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        return self.coeffs == Polynomial.constant(other).coeffs

    def __hash__(self):
        return hash(self.coeffs)

    # -- calculus -----------------------------------------------------------

    def evaluate(self, x) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * Fraction(x) + c
        return acc

    def derivative(self) -> "Polynomial":
        return Polynomial(
            [k * c for k, c in enumerate(self.coeffs)][1:], self.var
        )

    def compose(self, inner: "Polynomial") -> "Polynomial":
        """Substitute `inner` for the indeterminate (Horner)."""
        acc = Polynomial.zero(inner.var)
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def scale_argument(self, c) -> "Polynomial":
        """Return p(c*x)."""
        c = Fraction(c)
        return Polynomial(
            [a * c**k for k, a in enumerate(self.coeffs)], self.var
        )

    # -- text ---------------------------------------------------------------

    def to_json(self) -> list[str]:
        return [rational_to_str(c) for c in self.coeffs]

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                parts.append(rational_to_str(c))
            else:
                mono = self.var if k == 1 else f"{self.var}^{k}"
                parts.append(mono if c == 1 else f"{rational_to_str(c)}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


# ---------------------------------------------------------------------------
# Truncated power series
# ---------------------------------------------------------------------------


class TruncatedSeries:
    """Formal power series over Fraction truncated at a fixed order.

    A series of order N stores the coefficients of z^0 .. z^N; all
    operations discard higher terms.  Mixing two orders takes the minimum
    and marks the result with ``order_mixed = True`` (metadata only: it
    never affects equality).
    """

    __slots__ = ("order", "coeffs", "order_mixed")

    def __init__(self, coeffs, order: int | None = None, order_mixed: bool = False):
        cs = [Fraction(c) for c in coeffs]
        if order is None:
            order = len(cs) - 1 if cs else 0
        if order < 0:
            raise ValueError("series order must be nonnegative")
        cs = cs[: order + 1]
        cs += [Fraction(0)] * (order + 1 - len(cs))
        self.coeffs = tuple(cs)
        self.order = order
        self.order_mixed = order_mixed

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls((), order)

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls((1,), order)

    @classmethod
    def z(cls, order: int) -> "TruncatedSeries":
        return cls((0, 1), order)

    @classmethod
    def from_json(cls, data, order: int | None = None) -> "TruncatedSeries":
        return cls([rational_from_str(s) for s in data], order)

    # -- structure ----------------------------------------------------------

    def coefficient(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k <= self.order else Fraction(0)

    def truncate(self, order: int) -> "TruncatedSeries":
        return TruncatedSeries(self.coeffs[: order + 1], order, self.order_mixed)

    def _align(self, other: "TruncatedSeries"):
        order = min(self.order, other.order)
        mixed = self.order_mixed or other.order_mixed or self.order != other.order
        return order, mixed

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            cs = list(self.coeffs)
            cs[0] += Fraction(other)
            return TruncatedSeries(cs, self.order, self.order_mixed)
        order, mixed = self._align(other)
        return TruncatedSeries(
            [self.coefficient(k) + other.coefficient(k) for k in range(order + 1)],
            order,
            mixed,
        )

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries([-c for c in self.coeffs], self.order, self.order_mixed)

    def __sub__(self, other):
        if not isinstance(other, TruncatedSeries):
            cs = list(self.coeffs)
            cs[0] -= Fraction(other)
            return TruncatedSeries(cs, self.order, self.order_mixed)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            c = Fraction(other)
            return TruncatedSeries(
                [c * a for a in self.coeffs], self.order, self.order_mixed
            )
        order, mixed = self._align(other)
        out = [Fraction(0)] * (order + 1)
        for i in range(order + 1):
            a = self.coefficient(i)
            if a:
                for j in range(order + 1 - i):
                    b = other.coefficient(j)
                    if b:
                        out[i + j] += a * b
        return TruncatedSeries(out, order, mixed)

    __rmul__ = __mul__

    def compose(self, inner: "TruncatedSeries") -> "TruncatedSeries":
        """Return self(inner); `inner` must have zero constant term."""
        if inner.coefficient(0) != 0:
            raise ValueError("series composition needs zero constant term inside")
        order, mixed = self._align(inner)
        acc = TruncatedSeries.zero(order)
        for c in reversed(self.coeffs[: order + 1]):
            acc = acc * inner.truncate(order) + c
        acc.order_mixed = acc.order_mixed or mixed
        return acc

    def reciprocal(self) -> "TruncatedSeries":
        """Multiplicative inverse; the constant term must be nonzero."""
        c0 = self.coefficient(0)
        if c0 == 0:
            raise ValueError("series reciprocal needs a nonzero constant term")
        inv0 = Fraction(1) / c0
        out = [inv0] + [Fraction(0)] * self.order
        for k in range(1, self.order + 1):
            s = Fraction(0)
            for j in range(1, k + 1):
                s += self.coefficient(j) * out[k - j]
            out[k] = -inv0 * s
        return TruncatedSeries(out, self.order, self.order_mixed)

    def log(self) -> "TruncatedSeries":
        """Logarithm of a series with constant term 1 (zero constant term out).

        Uses the termwise recurrence derived from f = exp(l), f' = l' f:
        l_k = f_k - (1/k) * sum_{j<k} j * l_j * f_{k-j}.
        """
        if self.coefficient(0) != 1:
            raise ValueError("series log needs constant term 1")
        out = [Fraction(0)] * (self.order + 1)
        for k in range(1, self.order + 1):
            s = Fraction(0)
            for j in range(1, k):
                s += j * out[j] * self.coefficient(k - j)
            out[k] = self.coefficient(k) - s / k
        return TruncatedSeries(out, self.order, self.order_mixed)

    def exp(self) -> "TruncatedSeries":
        """Exponential of a series with zero constant term.

        Implemented as the functional inverse of `log` by Newton iteration
        h <- h*(1 + self - log h), doubling the correct order each step.
        """
        if self.coefficient(0) != 0:
            raise ValueError("series exp needs zero constant term")
        h = TruncatedSeries.one(self.order)
        correct = 0
        while correct < self.order:
            correct = min(2 * correct + 1, self.order)
            h = h * (TruncatedSeries.one(self.order) + self - h.log())
        h.order_mixed = self.order_mixed
        return h

    # -- text ---------------------------------------------------------------

    def to_json(self) -> list[str]:
        return [rational_to_str(c) for c in self.coeffs]

    def __repr__(self):
        body = " + ".join(
            f"{rational_to_str(c)}*z^{k}" for k, c in enumerate(self.coeffs) if c
        )
        return f"TruncatedSeries({body or '0'}; O(z^{self.order + 1}))"


# ---------------------------------------------------------------------------
# Bernoulli / Faulhaber
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _bernoulli_at_zero(n: int) -> Fraction:
    # B_0 = 1 and sum_{k<=n} C(n+1,k) B_k = 0, which gives B_1(0) = -1/2.
    if n == 0:
        return Fraction(1)
    s = Fraction(0)
    for k in range(n):
        s += comb(n + 1, k) * _bernoulli_at_zero(k)
    return -s / (n + 1)


@lru_cache(maxsize=None)
def bernoulli_polynomial(n: int) -> Polynomial:
    """B_n(x) = sum_k C(n,k) B_k(0) x^(n-k)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    coeffs = [Fraction(0)] * (n + 1)
    for k in range(n + 1):
        coeffs[n - k] = comb(n, k) * _bernoulli_at_zero(k)
    return Polynomial(coeffs, "x")


def bernoulli_number(n: int) -> Fraction:
    """B_n(1); equals B_n(0) except that bernoulli_number(1) == +1/2."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return bernoulli_polynomial(n).evaluate(1)


@lru_cache(maxsize=None)
def faulhaber_polynomial(j: int) -> Polynomial:
    """The polynomial Q (in N) with Q(N) = sum_{k=1..N} k^j.

    Q = (B_{j+1}(N+1) - B_{j+1}(0)) / (j+1); degree j+1, zero constant term.
    """
    if j < 0:
        raise ValueError("j must be nonnegative")
    b = bernoulli_polynomial(j + 1)
    shifted = b.compose(Polynomial((1, 1), "N"))  # B_{j+1}(N+1)
    q = (shifted - shifted.coefficient(0)) / (j + 1)
    q = Polynomial(q.coeffs, "N")
    assert q.coefficient(0) == 0
    return q


# ---------------------------------------------------------------------------
# Moment polynomials
# ---------------------------------------------------------------------------


def moment_symbol(elements) -> tuple[int, ...]:
    """Canonical moment symbol: a nonempty strictly increasing int tuple."""
    sym = tuple(elements)
    if not sym:
        raise ValueError("moment symbol must be nonempty")
    if any(b <= a for a, b in zip(sym, sym[1:])):
        raise ValueError(f"moment symbol must be strictly increasing: {sym}")
    return sym


def _sort_monomial(syms) -> tuple[tuple[int, ...], ...]:
    return tuple(sorted(syms, key=lambda s: (len(s), s)))


class MomentPolynomial:
    """Exact polynomial in formal moment symbols m_S, S a subset of [n].

    Terms map canonical monomials (sorted multisets of symbols) to nonzero
    rationals.  Equality compares terms only; the ambient n is bookkeeping
    (binary operations take the larger ambient).
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        if n < 0:
            raise ValueError("ambient n must be nonnegative")
        self.n = n
        canon: dict[tuple, Fraction] = {}
        for mono, coeff in (terms or {}).items():
            coeff = Fraction(coeff)
            if coeff == 0:
                continue
            mono = _sort_monomial(moment_symbol(s) for s in mono)
            for sym in mono:
                if sym[-1] > n:
                    raise ValueError(f"symbol {sym} outside ambient [{n}]")
            canon[mono] = canon.get(mono, Fraction(0)) + coeff
            if canon[mono] == 0:
                del canon[mono]
        self.terms = canon

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> "MomentPolynomial":
        return cls(n)

    @classmethod
    def _raw(cls, n: int, terms: dict) -> "MomentPolynomial":
        """Wrap an already-canonical term dict without revalidation."""
        out = cls.__new__(cls)
        out.n = n
        out.terms = terms
        return out

    @classmethod
    def one(cls, n: int) -> "MomentPolynomial":
        return cls(n, {(): 1})

    @classmethod
    def symbol(cls, n: int, subset) -> "MomentPolynomial":
        return cls(n, {(moment_symbol(subset),): 1})

    # -- structure ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def num_terms(self) -> int:
        return len(self.terms)

    def sorted_terms(self):
        return sorted(self.terms.items())

    def __eq__(self, other):
        if not isinstance(other, MomentPolynomial):
            return NotImplemented
        return self.terms == other.terms

    # -- arithmetic ---------------------------------------------------------

    def _merge(self, other: "MomentPolynomial", sign: int) -> "MomentPolynomial":
        out = dict(self.terms)
        for mono, c in other.terms.items():
            out[mono] = out.get(mono, Fraction(0)) + sign * c
            if out[mono] == 0:
                del out[mono]
        res = MomentPolynomial.__new__(MomentPolynomial)
        res.n = max(self.n, other.n)
        res.terms = out
        return res

    def __add__(self, other):
        if not isinstance(other, MomentPolynomial):
            return NotImplemented
        return self._merge(other, 1)

    def __sub__(self, other):
        if not isinstance(other, MomentPolynomial):
            return NotImplemented
        return self._merge(other, -1)

    def __neg__(self):
        res = MomentPolynomial.__new__(MomentPolynomial)
        res.n = self.n
        res.terms = {m: -c for m, c in self.terms.items()}
        return res

    def __mul__(self, other):
        if not isinstance(other, MomentPolynomial):
            c = Fraction(other)
            res = MomentPolynomial.__new__(MomentPolynomial)
            res.n = self.n
            res.terms = {m: c * v for m, v in self.terms.items()} if c else {}
            return res
        out: dict[tuple, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = _sort_monomial(m1 + m2)
                out[mono] = out.get(mono, Fraction(0)) + c1 * c2
                if out[mono] == 0:
                    del out[mono]
        res = MomentPolynomial.__new__(MomentPolynomial)
        res.n = max(self.n, other.n)
        res.terms = out
        return res

    __rmul__ = __mul__

    # -- transformations ----------------------------------------------------

    def relabel(self, mapping: dict[int, int]) -> "MomentPolynomial":
        """Push symbols through an order-preserving injection of indices."""
        new_n = max(mapping.values(), default=self.n)
        out: dict[tuple, Fraction] = {}
        for mono, c in self.terms.items():
            new_mono = _sort_monomial(
                tuple(mapping[i] for i in sym) for sym in mono
            )
            out[new_mono] = out.get(new_mono, Fraction(0)) + c
        return MomentPolynomial(max(self.n, new_n), out)

    def univariate(self) -> "MomentPolynomial":
        """Identify all variables: each symbol S becomes the symbol (1..|S|).

        This is the specialization X_1 = ... = X_n = X; two multivariate
        polynomials with equal univariate images agree as univariate
        identities.
        """
        out: dict[tuple, Fraction] = {}
        for mono, c in self.terms.items():
            new_mono = _sort_monomial(
                tuple(range(1, len(sym) + 1)) for sym in mono
            )
            v = out.get(new_mono, Fraction(0)) + c
            if v:
                out[new_mono] = v
            else:
                out.pop(new_mono, None)
        return MomentPolynomial._raw(self.n, out)

    def evaluate(self, value_of_symbol) -> Fraction:
        """Evaluate with `value_of_symbol(sym) -> Fraction` per symbol."""
        total = Fraction(0)
        for mono, c in self.terms.items():
            prod = c
            for sym in mono:
                prod *= Fraction(value_of_symbol(sym))
            total += prod
        return total

    # -- text ---------------------------------------------------------------

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for mono, c in self.sorted_terms():
            body = "*".join("m{%s}" % ",".join(map(str, s)) for s in mono) or "1"
            if c == 1 and mono:
                parts.append(body)
            elif c == -1 and mono:
                parts.append(f"-{body}")
            else:
                parts.append(f"{rational_to_str(c)}*{body}" if mono else rational_to_str(c))
        return " + ".join(parts).replace("+ -", "- ")


def moment_monomial(partition) -> MomentPolynomial:
    """The monomial prod_{V in pi} m_V with coefficient 1.

    Accepts any object exposing ``n`` and ``blocks`` (a SetPartition).
    """
    return MomentPolynomial(
        partition.n, {tuple(tuple(b) for b in partition.blocks): 1}
    )
