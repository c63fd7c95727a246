"""Bochner differential operators, the triangular delta table, and the exact
two-way conversion between them.

The conversion pair is the backbone of the package: for a normalized
operator sum_i a_i(x) d^i of order N,

    delta(n, k) = sum_{i=k}^{n} C(n, i) i! a_{i, i-k}

and conversely

    n! a_{n, n-k} = sum_{i=k}^{n} C(n, i) (-1)^(n-i) delta(i, k),

where a_{i, j} is the x^j coefficient of a_i and a_i = 0 above the order.
Either direction determines the other exactly.
"""
from __future__ import annotations

from fractions import Fraction

from .errors import DomainError, InsufficientData, InvalidOperator
from .polynomials import Poly
from .scalars import GaussianRational, ZERO, comb, factorial, scalar


class BochnerOperator:
    """Differential operator sum_{i=0}^{N} a_i(x) d^i with deg(a_i) <= i.

    coeffs[i] is the polynomial multiplying the i-th derivative.  The leading
    coefficient a_N must not vanish identically and the order N is at least
    one.  a_0 may be a nonzero constant until `normalize` strips it.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        polys = tuple(p if isinstance(p, Poly) else Poly(p) for p in coeffs)
        if len(polys) < 2:
            raise InvalidOperator("operator order must be at least 1")
        for i, a in enumerate(polys):
            if a.degree is not None and a.degree > i:
                raise InvalidOperator(
                    f"coefficient of derivative {i} has degree {a.degree} > {i}"
                )
        if not polys[-1]:
            raise InvalidOperator("leading coefficient is identically zero")
        self.coeffs = polys

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, i: int, j: int) -> GaussianRational:
        """The x^j coefficient of a_i, zero above the order."""
        if i < 0 or j < 0:
            raise DomainError(f"negative coefficient index ({i}, {j})")
        if i >= len(self.coeffs):
            return ZERO
        return self.coeffs[i].coeff(j)

    def is_normalized(self) -> bool:
        return not self.coeffs[0]

    def __eq__(self, other):
        if not isinstance(other, BochnerOperator):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __str__(self):
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            a = self.coeffs[i]
            if not a:
                continue
            d_part = "" if i == 0 else ("d" if i == 1 else f"d^{i}")
            parts.append(f"({a}){d_part}" if d_part else f"({a})")
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"BochnerOperator('{self}')"


class DeltaTable:
    """Triangular table delta(n, k) for 0 <= k <= n <= n_max.

    When tagged with an operator order, rows are clipped at that order and
    the zero tail delta(n, k) = 0 for order < k <= n is implicit.  Entries
    with k > n are zero by convention and never stored.
    """

    __slots__ = ("rows", "order")

    def __init__(self, rows, order=None):
        if order is not None and order < 1:
            raise DomainError(f"order tag must be positive, got {order}")
        stored = []
        for n, row in enumerate(rows):
            entries = tuple(scalar(v) for v in row)
            expected = n + 1 if order is None else min(n, order) + 1
            if len(entries) != expected:
                raise DomainError(
                    f"row {n} must have {expected} entries, got {len(entries)}"
                )
            stored.append(entries)
        self.rows = tuple(stored)
        self.order = order

    @property
    def n_max(self) -> int:
        return len(self.rows) - 1

    def value(self, n: int, k: int) -> GaussianRational:
        if n < 0 or k < 0:
            raise DomainError(f"negative table index ({n}, {k})")
        if k > n:
            return ZERO
        if self.order is not None and k > self.order:
            return ZERO
        if n >= len(self.rows):
            raise InsufficientData(
                f"table holds rows up to {self.n_max}, row {n} requested"
            )
        return self.rows[n][k]

    def __eq__(self, other):
        if not isinstance(other, DeltaTable):
            return NotImplemented
        return self.rows == other.rows and self.order == other.order

    def __repr__(self):
        return f"DeltaTable(n_max={self.n_max}, order={self.order})"


def normalize(op: BochnerOperator):
    """Strip the constant term a_0, returning (operator, removed constant).

    The eigenvalues of the input are those of the normalized operator
    shifted up by the removed constant.
    """
    shift = op.coeffs[0].coeff(0)
    if not op.coeffs[0]:
        return op, ZERO
    return BochnerOperator((Poly(),) + op.coeffs[1:]), shift


def deltas_from_operator(op: BochnerOperator, n_max: int) -> DeltaTable:
    """Build the delta table of a normalized operator up to row n_max."""
    if n_max < 0:
        raise DomainError(f"n_max must be nonnegative, got {n_max}")
    if not op.is_normalized():
        raise InvalidOperator("operator must be normalized (a_0 = 0) first")
    order = op.order
    rows = []
    for n in range(n_max + 1):
        width = min(n, order)
        row = []
        for k in range(width + 1):
            total = ZERO
            for i in range(k, width + 1):
                a = op.coefficient(i, i - k)
                if a:
                    total = total + (comb(n, i) * factorial(i)) * a
            row.append(total)
        rows.append(row)
    return DeltaTable(rows, order=order)


def coefficient_from_deltas(table: DeltaTable, n: int, k: int) -> GaussianRational:
    """The x^(n-k) coefficient of a_n recovered from delta rows k..n."""
    if n < 0 or not 0 <= k <= n:
        raise DomainError(f"coefficient position ({n}, {k}) outside the triangle")
    if table.n_max < n:
        raise InsufficientData(
            f"need delta rows up to {n}, table holds {table.n_max}"
        )
    total = ZERO
    for i in range(k, n + 1):
        sign = 1 if (n - i) % 2 == 0 else -1
        weight = sign * comb(n, i)
        if weight:
            total = total + weight * table.value(i, k)
    return total * Fraction(1, factorial(n))


def operator_from_deltas(table: DeltaTable, order: int) -> BochnerOperator:
    """Invert the delta table into the operator of the given order.

    Trailing identically-zero coefficient polynomials are trimmed, so a table
    produced by an operator of lower true order still inverts cleanly.
    """
    if order < 1:
        raise DomainError(f"order must be positive, got {order}")
    if table.n_max < order:
        raise InsufficientData(
            f"need delta rows up to {order}, table holds {table.n_max}"
        )
    polys = []
    for n in range(order + 1):
        polys.append(Poly([coefficient_from_deltas(table, n, n - j) for j in range(n + 1)]))
    while len(polys) > 2 and not polys[-1]:
        polys.pop()
    return BochnerOperator(polys)


# -- classical presets ----------------------------------------------------


def _real_rational(value, name) -> GaussianRational:
    v = scalar(value)
    if v.im:
        raise DomainError(f"{name} must be a real rational, got {v}")
    return v


def hermite_operator() -> BochnerOperator:
    """d^2 - 2x d; eigenvalues -2n."""
    return BochnerOperator([Poly(), Poly([0, -2]), Poly([1])])


def laguerre_operator(alpha) -> BochnerOperator:
    """x d^2 + (alpha + 1 - x) d; eigenvalues -n.  alpha > -1 is the
    classical range but is not enforced."""
    a = _real_rational(alpha, "alpha")
    return BochnerOperator([Poly(), Poly([a + 1, -1]), Poly([0, 1])])


def jacobi_operator(alpha, beta) -> BochnerOperator:
    """(1 - x^2) d^2 + (beta - alpha - (alpha + beta + 2) x) d.

    This normalization gives eigenvalues -n(n + 1 + alpha + beta).
    """
    a = _real_rational(alpha, "alpha")
    b = _real_rational(beta, "beta")
    return BochnerOperator([Poly(), Poly([b - a, -(a + b + 2)]), Poly([1, 0, -1])])
