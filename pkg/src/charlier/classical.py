"""The classical Charlier family and its identity toolbox.

``charlier(n)`` is the degree-n orthogonal polynomial for the Poisson-type
weight with parameter a, normalized so the leading x-coefficient is 1/n!.
The index -1 is legal and names the zero polynomial, which keeps the
recurrences used downstream free of special cases.

Alongside the family itself this module carries the helpers everything else
leans on: the Laguerre polynomials with a symbolic parameter, the moment
functional of the weight (Stirling-number closed form), and exact checks of
the classical identities (degree lowering, the second order difference
equation, the convolution identity, shift expansions, value formulas).
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache
from math import factorial

from .polynomials import A, Poly, RationalLike, Var, X, parity_sign


def binom_poly(k: int) -> Poly:
    """binom(x, k) as the falling-factorial polynomial x(x-1)...(x-k+1)/k!."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    out = Poly.const(Fraction(1, factorial(k)))
    for j in range(k):
        out = out * (X - j)
    return out


def binom_rational(p: RationalLike, k: int) -> Fraction:
    """binom(p, k) for arbitrary rational p, via the falling factorial."""
    p = Fraction(p)
    out = Fraction(1, factorial(k))
    for j in range(k):
        out *= p - j
    return out


@cache
def charlier(n: int) -> Poly:
    """Degree-n member of the family; n = -1 gives the zero polynomial."""
    if n < -1:
        raise ValueError("index must be >= -1")
    if n == -1:
        return Poly()
    total = Poly()
    for k in range(n + 1):
        total = total + binom_poly(k) * A ** (n - k) * Fraction(
            parity_sign(n - k), factorial(n - k)
        )
    return total


def charlier_mirror(n: int) -> Poly:
    """charlier(n) with both the parameter a and the argument x negated."""
    return charlier(n).negate_var(Var.A).negate_var(Var.X)


def value_at_zero(n: int) -> Poly:
    """Closed form of charlier(n) at x = 0: (-a)^n / n!."""
    if n < 0:
        raise ValueError("index must be >= 0")
    return A**n * Fraction(parity_sign(n), factorial(n))


def value_at_minus_one(n: int) -> Poly:
    """Closed form at x = -1: (-1)^n times the partial sum of a^k/k!, k <= n."""
    if n < 0:
        raise ValueError("index must be >= 0")
    s = parity_sign(n)
    return Poly({(0, k, 0): Fraction(s, factorial(k)) for k in range(n + 1)})


def laguerre(n: int, alpha: Poly | RationalLike, t: Var) -> Poly:
    """Degree-n Laguerre polynomial in the variable t with parameter alpha.

    alpha may be any polynomial not involving t, so connection formulas with
    a polynomial parameter stay exact.
    """
    if n < 0:
        raise ValueError("degree must be >= 0")
    if not isinstance(alpha, Poly):
        alpha = Poly.const(alpha)
    if alpha.degree_in(t) > 0:
        raise ValueError("alpha must not involve t")
    tv = Poly.variable(t)
    total = Poly()
    for k in range(n + 1):
        falling = 1
        for j in range(k):
            falling *= -n + j
        rising = Poly.const(1)
        for j in range(n - k):
            rising = rising * (alpha + (k + 1 + j))
        total = total + rising * tv**k * Fraction(falling, factorial(k))
    return total / factorial(n)


# -- identity checks ---------------------------------------------------------


def verify_laguerre_relation(n: int) -> bool:
    """charlier(n) equals the Laguerre polynomial in a with parameter x - n."""
    return charlier(n) == laguerre(n, X - n, Var.A)


def verify_lowering(n: int) -> bool:
    """The forward difference sends charlier(n) to charlier(n-1)."""
    if n < 0:
        raise ValueError("index must be >= 0")
    return charlier(n).delta() == charlier(n - 1)


def second_order_residual(n: int) -> Poly:
    """a*y(x+1) + (n-a-x)*y(x) + x*y(x-1) at y = charlier(n); identically zero."""
    y = charlier(n)
    return A * y.shift_x(1) + (n - A - X) * y + X * y.shift_x(-1)


def verify_second_order(n: int) -> bool:
    return not second_order_residual(n)


def shift_identity_residual(n: int, p: RationalLike) -> Poly:
    """charlier(n) at x + p minus its expansion sum binom(p, k) charlier(n-k)."""
    p = Fraction(p)
    rhs = Poly()
    for k in range(n + 1):
        rhs = rhs + charlier(n - k) * binom_rational(p, k)
    return charlier(n).shift_x(p) - rhs


def verify_shift_identity(n: int, p: RationalLike) -> bool:
    return not shift_identity_residual(n, p)


def convolution_residual(i: int, j: int) -> Poly:
    """sum_k charlier(i-k) * charlier_mirror(k-j), minus the Kronecker delta."""
    if not 0 <= j <= i:
        raise ValueError("need 0 <= j <= i")
    total = Poly()
    for k in range(j, i + 1):
        total = total + charlier(i - k) * charlier_mirror(k - j)
    return total - (1 if i == j else 0)


def verify_convolution(i: int, j: int) -> bool:
    return not convolution_residual(i, j)


def verify_inverse_matrix(n: int) -> bool:
    """The unit triangular matrices with entries charlier(i-j) and
    charlier_mirror(i-j) multiply to the identity over the polynomial ring."""
    if n < 1:
        raise ValueError("matrix size must be >= 1")
    lower = [[charlier(i - j) if j <= i else Poly() for j in range(n)] for i in range(n)]
    mirror = [[charlier_mirror(i - j) if j <= i else Poly() for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(n):
            entry = Poly()
            for k in range(n):
                entry = entry + lower[i][k] * mirror[k][j]
            if entry != (1 if i == j else 0):
                return False
    return True


def verify_value_formulas(n: int) -> bool:
    """Substitution into charlier(n) reproduces both closed-form values."""
    cn = charlier(n)
    return cn.substitute(Var.X, 0) == value_at_zero(n) and cn.substitute(
        Var.X, -1
    ) == value_at_minus_one(n)


def verify_value_difference(n: int) -> bool:
    """C_n(0) - C_n(-1) equals C_{n-1}(-1), as polynomials in a."""
    if n < 1:
        raise ValueError("index must be >= 1")
    cn = charlier(n)
    lhs = cn.substitute(Var.X, 0) - cn.substitute(Var.X, -1)
    return lhs == charlier(n - 1).substitute(Var.X, -1)


# -- the moment functional ---------------------------------------------------


@cache
def stirling2(k: int, j: int) -> int:
    """Partitions of a k-set into j nonempty blocks."""
    if k == 0:
        return 1 if j == 0 else 0
    if j <= 0 or j > k:
        return 0
    return j * stirling2(k - 1, j) + stirling2(k - 1, j - 1)


@cache
def moment(k: int) -> Poly:
    """k-th moment of the unit-mass Poisson-type weight, as a polynomial in a."""
    if k < 0:
        raise ValueError("moment order must be >= 0")
    return Poly({(0, j, 0): stirling2(k, j) for j in range(k + 1)})


def inner_product_classical(p: Poly, q: Poly) -> Poly:
    """Bilinear moment functional: expand p*q in x and send x^k to moment(k)."""
    product = p * q
    total = Poly()
    for k in range(product.degree_in(Var.X) + 1):
        total = total + product.coeff_of(Var.X, k) * moment(k)
    return total


def orthogonality_residual(m: int, n: int) -> Poly:
    """inner product of charlier(m), charlier(n) minus its closed form."""
    if m < 0 or n < 0:
        raise ValueError("indices must be >= 0")
    expected = A**n * Fraction(1, factorial(n)) if m == n else Poly()
    return inner_product_classical(charlier(m), charlier(n)) - expected
