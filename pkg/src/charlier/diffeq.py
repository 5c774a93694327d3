"""The difference equation of the point-mass family and its coefficients.

The point-mass polynomials are eigenfunctions of an operator of the shape

    N * sum_{i>=0} ai(x) Delta^i  +  x Delta Nabla  +  (a - x) Delta  +  n,

where the coefficients ``ai`` for i >= 1 are polynomials in x and a that do
not depend on the degree n, and the order-zero coefficient ``a0`` is a
polynomial in a depending on n only.  For nonzero mass the operator has
unbounded order, yet it acts exactly on polynomials: terms of total order
above the x-degree of the argument annihilate it, so every series here is a
finite sum with no truncation error.

This module builds the coefficient families, assembles the equation, and
certifies the structural facts about the coefficients (vanishing at x = 0,
degree bounds in x and a, leading coefficients in both variables, uniqueness
through forward substitution, and the mixed forward/backward variants).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from math import factorial
from typing import Callable, Iterable

from .classical import charlier, charlier_mirror, laguerre
from .pointmass import gen_charlier
from .polynomials import A, N, Poly, Var, X, parity_sign

CoeffProvider = Callable[[int], Poly]


# -- difference operators ----------------------------------------------------


@dataclass(frozen=True)
class DiffTerm:
    """coeff * Delta^delta_order Nabla^nabla_order."""

    coeff: Poly
    delta_order: int
    nabla_order: int


class DiffOperator:
    """Finite linear combination of mixed forward and backward differences."""

    __slots__ = ("terms",)

    def __init__(self, items: Iterable[tuple[Poly, int, int]]) -> None:
        merged: dict[tuple[int, int], Poly] = {}
        for coeff, d, m in items:
            if d < 0 or m < 0:
                raise ValueError("difference orders must be nonnegative")
            key = (d, m)
            merged[key] = merged.get(key, Poly()) + coeff
        self.terms = tuple(
            DiffTerm(c, d, m) for (d, m), c in sorted(merged.items()) if c
        )

    def apply(self, y: Poly) -> Poly:
        """Apply to a polynomial.

        Terms whose total order exceeds deg_x(y) contribute exactly zero and
        are skipped, which is what makes unbounded-order operators act as
        finite sums on polynomials.
        """
        deg = y.degree_in(Var.X)
        out = Poly()
        for term in self.terms:
            if term.delta_order + term.nabla_order > deg:
                continue
            z = y
            for _ in range(term.nabla_order):
                z = z.nabla()
            for _ in range(term.delta_order):
                z = z.delta()
            out = out + term.coeff * z
        return out


def classical_operator(n: int) -> DiffOperator:
    """x Delta Nabla + (a - x) Delta + n, which annihilates charlier(n)."""
    return DiffOperator([(X, 1, 1), (A - X, 1, 0), (Poly.const(n), 0, 0)])


# -- the coefficient families ------------------------------------------------


@cache
def coeff_a0(n: int) -> Poly:
    """Order-zero coefficient for degree n: a polynomial in a alone.

    Equals (-1)^(n-1) charlier(n-1) evaluated at x = -2; zero at n = 0.
    """
    if n < 0:
        raise ValueError("degree must be >= 0")
    return charlier(n - 1).substitute(Var.X, -2) * parity_sign(n - 1)


@cache
def coeff_ai(i: int) -> Poly:
    """Coefficient of the i-th forward difference, i >= 1; independent of n."""
    if i < 1:
        raise ValueError("order must be >= 1")
    total = Poly()
    for k in range(1, i + 1):
        # charlier(i-k) at parameter -a and argument 1-x
        front = charlier_mirror(i - k).shift_x(-1)
        ck = charlier(k)
        bracket = ck.substitute(Var.X, -1) * ck.shift_x(-2) - ck.substitute(
            Var.X, -2
        ) * ck.shift_x(-1)
        total = total + front * bracket * parity_sign(k)
    return total


def _table(coeffs: CoeffProvider | None) -> CoeffProvider:
    return coeff_ai if coeffs is None else coeffs


@dataclass(frozen=True)
class CoeffTable:
    """Both coefficient families: a0 keyed by degree n, ai keyed by order i."""

    a0: dict[int, Poly]
    ai: dict[int, Poly]


def build_coeff_table(max_i: int, coeffs: CoeffProvider | None = None) -> CoeffTable:
    if max_i < 1:
        raise ValueError("max_i must be >= 1")
    table = _table(coeffs)
    return CoeffTable(
        a0={n: coeff_a0(n) for n in range(max_i + 1)},
        ai={i: table(i) for i in range(1, max_i + 1)},
    )


def mass_operator(n: int, order: int, coeffs: CoeffProvider | None = None) -> DiffOperator:
    """sum_{i=0}^{order} ai Delta^i with the degree-n order-zero coefficient."""
    table = _table(coeffs)
    items = [(coeff_a0(n), 0, 0)]
    items.extend((table(i), i, 0) for i in range(1, order + 1))
    return DiffOperator(items)


# -- the equation itself -----------------------------------------------------


def apply_difference_equation(n: int, coeffs: CoeffProvider | None = None) -> Poly:
    """Left-hand side of the full equation at y = gen_charlier(n).

    The mass sum is truncated at order n, which is exact since the argument
    has x-degree n.  The contract is that the result is the zero polynomial
    in (x, a, N).
    """
    y = gen_charlier(n)
    return N * mass_operator(n, n, coeffs).apply(y) + classical_operator(n).apply(y)


def verify_difference_equation(n: int, coeffs: CoeffProvider | None = None) -> bool:
    return not apply_difference_equation(n, coeffs)


def mass_action_residual(n: int, coeffs: CoeffProvider | None = None) -> Poly:
    """Action of the mass operator on charlier(n), minus its closed form
    (-1)^(n-1) C_n(0) C_{n-1}(x-2)."""
    op = mass_operator(n, n, coeffs)
    rhs = charlier(n).substitute(Var.X, 0) * charlier(n - 1).shift_x(-2) * parity_sign(
        n - 1
    )
    return op.apply(charlier(n)) - rhs


def mass_action_shifted_residual(n: int, coeffs: CoeffProvider | None = None) -> Poly:
    """Same action on charlier(n) shifted by -1; closed form carries C_n(-1)."""
    op = mass_operator(n, n, coeffs)
    rhs = charlier(n).substitute(Var.X, -1) * charlier(n - 1).shift_x(-2) * parity_sign(
        n - 1
    )
    return op.apply(charlier(n).shift_x(-1)) - rhs


def mass_action_cross_residual(n: int, coeffs: CoeffProvider | None = None) -> Poly:
    """C_n(-1) times the action at x, minus C_n(0) times the action at x-1."""
    op = mass_operator(n, n, coeffs)
    cn = charlier(n)
    return cn.substitute(Var.X, -1) * op.apply(cn) - cn.substitute(Var.X, 0) * op.apply(
        cn.shift_x(-1)
    )


def verify_mass_action(n: int) -> bool:
    return not mass_action_residual(n)


def verify_mass_action_shifted(n: int) -> bool:
    return not mass_action_shifted_residual(n)


def verify_mass_action_cross(n: int) -> bool:
    return not mass_action_cross_residual(n)


def shifted_second_order_residual(n: int) -> Poly:
    """a C_n(x) + (n-a-x) C_n(x-1) + x C_n(x-2) collapses to -C_{n-1}(x-2)."""
    if n < 1:
        raise ValueError("index must be >= 1")
    cn = charlier(n)
    lhs = A * cn + (n - A - X) * cn.shift_x(-1) + X * cn.shift_x(-2)
    return lhs + charlier(n - 1).shift_x(-2)


def verify_shifted_second_order(n: int) -> bool:
    return not shifted_second_order_residual(n)


# -- leading coefficients and degree structure -------------------------------


def leading_x_coeff(i: int, coeffs: CoeffProvider | None = None) -> Poly:
    """Coefficient of x^i in coeff_ai(i), a polynomial in a."""
    return _table(coeffs)(i).coeff_of(Var.X, i)


def leading_x_closed_form(i: int) -> Poly:
    """(-1)^i / i! times charlier(i-1) evaluated at x = i - 2."""
    if i < 1:
        raise ValueError("order must be >= 1")
    return charlier(i - 1).substitute(Var.X, i - 2) * Fraction(
        parity_sign(i), factorial(i)
    )


def leading_x_laguerre_form(i: int) -> Poly:
    """(-1)^i / i! times the Laguerre polynomial of degree i-1, parameter -1."""
    if i < 1:
        raise ValueError("order must be >= 1")
    return laguerre(i - 1, -1, Var.A) * Fraction(parity_sign(i), factorial(i))


def leading_x_laguerre_chain(i: int) -> Poly:
    """For i >= 2, the same value through the degree i-2 Laguerre polynomial
    with parameter +1, scaled by -a/(i-1)."""
    if i < 2:
        raise ValueError("chain form needs order >= 2")
    return (
        laguerre(i - 2, 1, Var.A)
        * A
        * Fraction(-parity_sign(i), factorial(i) * (i - 1))
    )


def verify_leading_x(i: int, coeffs: CoeffProvider | None = None) -> bool:
    """The x^i coefficient matches every closed form and is not the zero
    polynomial in a."""
    h = leading_x_coeff(i, coeffs)
    if not h:
        return False
    if h != leading_x_closed_form(i) or h != leading_x_laguerre_form(i):
        return False
    if i >= 2 and h != leading_x_laguerre_chain(i):
        return False
    return True


def verify_degree_claims(i: int, coeffs: CoeffProvider | None = None) -> bool:
    """Structure of coeff_ai(i): vanishes at x = 0, x-degree at most i,
    a-degree exactly 2i-2, and the a^(2i-2) coefficient is
    (-1)^i x / (i! (i-1)!)."""
    if i < 1:
        raise ValueError("order must be >= 1")
    ai = _table(coeffs)(i)
    if ai.substitute(Var.X, 0):
        return False
    if ai.degree_in(Var.X) > i:
        return False
    if ai.degree_in(Var.A) != 2 * i - 2:
        return False
    expected = X * Fraction(parity_sign(i), factorial(i) * factorial(i - 1))
    return ai.coeff_of(Var.A, 2 * i - 2) == expected


def verify_degree_escalation(i: int, coeffs: CoeffProvider | None = None) -> bool:
    """If the x-degree of coeff_ai(i) falls below i, the next coefficient
    attains full x-degree i+1."""
    table = _table(coeffs)
    if table(i).degree_in(Var.X) >= i:
        return True
    return table(i + 1).degree_in(Var.X) == i + 1


def verify_mixed_leading(i: int, k: int, n: int) -> bool:
    """Delta^k Nabla^(i-k) and Delta^i agree on the x^(n-i) coefficient of
    charlier(n)."""
    if not 0 <= k <= i <= n:
        raise ValueError("need 0 <= k <= i <= n")
    mixed = charlier(n)
    for _ in range(i - k):
        mixed = mixed.nabla()
    for _ in range(k):
        mixed = mixed.delta()
    pure = charlier(n)
    for _ in range(i):
        pure = pure.delta()
    return mixed.coeff_of(Var.X, n - i) == pure.coeff_of(Var.X, n - i)


# -- uniqueness through forward substitution ---------------------------------


def forward_substitution_rhs(n: int) -> Poly:
    """Right-hand side of the unit triangular system that determines the
    coefficients of order 1..n once a0 is fixed."""
    if n < 1:
        raise ValueError("index must be >= 1")
    cn = charlier(n)
    prev = charlier(n - 1)
    return (
        cn.substitute(Var.X, -1) * prev.shift_x(-2)
        - prev.substitute(Var.X, -2) * cn.shift_x(-1)
    ) * parity_sign(n - 1)


def solve_coefficients(max_i: int) -> dict[int, Poly]:
    """Recompute the order-i coefficients by forward substitution in the
    system sum_{i=1}^{n} ai * charlier(n-i)(x-1) = rhs(n).

    The system is unit triangular (the coefficient of the newest unknown is
    charlier(0) = 1), so each step determines one coefficient exactly.  This
    is an independent route to the same family and doubles as the uniqueness
    certificate.
    """
    if max_i < 1:
        raise ValueError("max_i must be >= 1")
    solved: dict[int, Poly] = {}
    for n in range(1, max_i + 1):
        acc = forward_substitution_rhs(n)
        for i in range(1, n):
            acc = acc - solved[i] * charlier(n - i).shift_x(-1)
        solved[n] = acc
    return solved


def verify_uniqueness(max_i: int, coeffs: CoeffProvider | None = None) -> bool:
    """Forward substitution reproduces the closed-form coefficients."""
    table = _table(coeffs)
    solved = solve_coefficients(max_i)
    return all(solved[i] == table(i) for i in range(1, max_i + 1))


# -- the unbounded-order rewritings ------------------------------------------


def backshift_residual(y: Poly) -> Poly:
    """y(x-1) minus the alternating sum of forward differences of y,
    truncated (exactly) at the x-degree of y."""
    total = Poly()
    z = y
    sign = 1
    for _ in range(y.degree_in(Var.X) + 1):
        total = total + z * sign
        z = z.delta()
        sign = -sign
    return y.shift_x(-1) - total


def verify_backshift_expansion(y: Poly) -> bool:
    return not backshift_residual(y)


def classical_infinite_order_residual(n: int) -> Poly:
    """x * sum_{i>=1} (-1)^i Delta^i y + a Delta y + n y at y = charlier(n)."""
    if n < 0:
        raise ValueError("index must be >= 0")
    y = charlier(n)
    total = Poly()
    z = y.delta()
    sign = -1
    for _ in range(n):
        total = total + z * sign
        z = z.delta()
        sign = -sign
    return X * total + A * y.delta() + n * y


def verify_classical_infinite_order(n: int) -> bool:
    return not classical_infinite_order_residual(n)


def combined_equation_residual(n: int, coeffs: CoeffProvider | None = None) -> Poly:
    """The equation with the classical part expanded through the alternating
    difference series, at y = gen_charlier(n)."""
    if n < 0:
        raise ValueError("index must be >= 0")
    y = gen_charlier(n)
    alternating = Poly()
    z = y.delta()
    sign = -1
    for _ in range(n):
        alternating = alternating + z * sign
        z = z.delta()
        sign = -sign
    return (
        N * mass_operator(n, n, coeffs).apply(y)
        + X * alternating
        + A * y.delta()
        + n * y
    )


def verify_combined_equation(n: int, coeffs: CoeffProvider | None = None) -> bool:
    return not combined_equation_residual(n, coeffs)


# -- shared roots of consecutive leading coefficients -------------------------


def _resultant(pc: list[Fraction], qc: list[Fraction]) -> Fraction:
    """Resultant of two univariate polynomials from descending coefficients."""
    m, n = len(pc) - 1, len(qc) - 1
    size = m + n
    if size == 0:
        return Fraction(1)
    rows: list[list[Fraction]] = []
    for r in range(n):
        rows.append([Fraction(0)] * r + pc + [Fraction(0)] * (n - 1 - r))
    for r in range(m):
        rows.append([Fraction(0)] * r + qc + [Fraction(0)] * (m - 1 - r))
    det = Fraction(1)
    for col in range(size):
        pivot = next((r for r in range(col, size) if rows[r][col]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        det *= rows[col][col]
        inv = 1 / rows[col][col]
        for r in range(col + 1, size):
            f = rows[r][col] * inv
            if f:
                rows[r] = [rv - f * cv for rv, cv in zip(rows[r], rows[col])]
    return det


def _coeff_list_in_a(p: Poly) -> list[Fraction]:
    deg = p.degree_in(Var.A)
    if deg < 0:
        raise ValueError("zero polynomial has no coefficient list")
    return [p.coeff_of(Var.A, d).constant_value() for d in range(deg, -1, -1)]


def _strip_a_factor(coeffs: list[Fraction]) -> list[Fraction]:
    # Drop the common a^v monomial factor (trailing zeros in descending order).
    out = list(coeffs)
    while len(out) > 1 and not out[-1]:
        out.pop()
    return out


def verify_leading_coprime(i: int) -> bool:
    """Consecutive leading x-coefficients share no root a > 0.

    For orders >= 2 every leading coefficient carries a plain factor a, so
    the two polynomials always meet at a = 0; that point lies outside the
    parameter domain of the weight.  After stripping the common a-power the
    resultant must be a nonzero rational, which certifies that no further
    root is shared anywhere.
    """
    h_i = _strip_a_factor(_coeff_list_in_a(leading_x_closed_form(i)))
    h_next = _strip_a_factor(_coeff_list_in_a(leading_x_closed_form(i + 1)))
    return bool(_resultant(h_i, h_next))
