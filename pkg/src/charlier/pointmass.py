"""Charlier polynomials for the Poisson-type weight with a point mass at 0.

The modified inner product adds N f(0) g(0) to the moment functional of the
classical weight.  ``gen_charlier(n)`` is the degree-n polynomial orthogonal
for that inner product, carried with the mass size N as a ring indeterminate,
so orthogonality statements are zero-polynomial facts in (a, N) rather than
numeric spot checks.  Setting N = 0 recovers the classical family.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache
from math import factorial

from .classical import charlier, inner_product_classical
from .polynomials import N, Poly, Var, X, parity_sign


@cache
def gen_charlier(n: int) -> Poly:
    """Degree-n member of the point-mass family, affine in N.

    Built as a combination of charlier(n) and its backward shift whose
    weights are fixed by the two orthogonality conditions the classical
    family does not already grant.
    """
    if n < 0:
        raise ValueError("degree must be >= 0")
    cn = charlier(n)
    s = parity_sign(n)
    scale = 1 + N * cn.substitute(Var.X, -1) * s
    offset = N * cn.substitute(Var.X, 0) * s
    return scale * cn - offset * cn.shift_x(-1)


def alternative_form_residual(n: int) -> Poly:
    """Rewriting of gen_charlier(n) through the forward difference of the
    shifted polynomial; must agree with the direct construction."""
    if n < 0:
        raise ValueError("degree must be >= 0")
    cn = charlier(n)
    s = parity_sign(n)
    scale = 1 - N * charlier(n - 1).substitute(Var.X, -1) * s
    alt = scale * cn + N * cn.substitute(Var.X, 0) * s * cn.shift_x(-1).delta()
    return alt - gen_charlier(n)


def verify_alternative_form(n: int) -> bool:
    return not alternative_form_residual(n)


def inner_product_general(p: Poly, q: Poly) -> Poly:
    """Moment functional of the classical weight plus the mass term N p(0) q(0)."""
    return inner_product_classical(p, q) + N * p.substitute(Var.X, 0) * q.substitute(
        Var.X, 0
    )


def orthogonality_residual(m: int, n: int) -> Poly:
    """inner_product_general of two distinct family members; identically zero."""
    if not 0 <= m < n:
        raise ValueError("need 0 <= m < n")
    return inner_product_general(gen_charlier(m), gen_charlier(n))


def verify_orthogonality(m: int, n: int) -> bool:
    return not orthogonality_residual(m, n)


def verify_construction_steps(n: int) -> bool:
    """The linear conditions that pin down gen_charlier(n).

    (a) for n >= 2, gen_charlier(n) is orthogonal to x * x^j for j <= n-2
        (the mass term drops out since the test function vanishes at 0);
    (b) for n >= 1, the chosen combination weights satisfy the remaining
        constant-function condition.
    Degrees 0 and 1 make part (a) vacuous and pass trivially.
    """
    if n < 0:
        raise ValueError("degree must be >= 0")
    y = gen_charlier(n)
    for j in range(n - 1):
        if inner_product_general(X ** (j + 1), y):
            return False
    if n >= 1:
        cn = charlier(n)
        s = parity_sign(n)
        at_zero = cn.substitute(Var.X, 0)
        at_minus_one = cn.substitute(Var.X, -1)
        scale = 1 + N * at_minus_one * s
        offset = -N * at_zero * s
        if N * scale * at_zero + (s + N * at_minus_one) * offset:
            return False
    return True


def norm_general(n: int) -> Poly:
    """Squared norm of gen_charlier(n) under the point-mass inner product.

    Nonzero as a polynomial in (a, N); its N = 0 slice is a^n / n!.
    """
    y = gen_charlier(n)
    return inner_product_general(y, y)


def norm_classical_slice(n: int) -> Poly:
    """The expected N = 0 slice of norm_general(n)."""
    return Poly.variable(Var.A) ** n * Fraction(1, factorial(n))
