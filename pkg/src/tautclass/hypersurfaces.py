"""Chern and Segre data of smooth hypersurfaces X in P^(n+1).

Chern classes of T_X come from truncating (1+H)^(n+2) / (1+dH), and the
Segre classes of the cotangent bundle admit the closed form

    s_l(Omega_X) = ( C(n+l+1, l) - d C(n+l, l-1) ) H^l,

equivalently s_l(T_X) = (-1)^l s_l(Omega_X).  The module also carries the
binomial-sum identities behind the cubic "not modified nef" intersection
number and the auxiliary sums A(k, n).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .chow import BasePoly, BaseProfile, PTClass, eval_product


def binom(a: int, b: int) -> int:
    """Binomial coefficient with C(a, b) = 0 for b < 0.

    The b = -1 case appears at the i = n boundary of the binomial sums,
    where the bracket degenerates to 1.
    """
    if b < 0:
        return 0
    return math.comb(a, b)


@dataclass(frozen=True)
class HypersurfaceSpec:
    """Dimension and degree of a smooth hypersurface in P^(n+1)."""

    n: int
    d: int

    def __post_init__(self) -> None:
        if self.n < 1 or self.d < 1:
            raise ValueError("need n >= 1 and d >= 1")

    @property
    def in_vanishing_range(self) -> bool:
        """Range where twisted symmetric vector fields vanish (n>=2, d>=3)."""
        return self.n >= 2 and self.d >= 3

    @property
    def in_modified_nef_range(self) -> bool:
        """Range of the cubic modified-nef identity (n >= 3)."""
        return self.n >= 3


def hypersurface_profile(spec: HypersurfaceSpec) -> BaseProfile:
    """Intersection profile of a degree-d hypersurface of dimension n.

    Basis {H} with H^n = d; c_j(T_X) is the degree-j coefficient of the
    series (1+H)^(n+2) / (1+dH), so in particular c_1 = (n+2-d) H.
    """
    n, d = spec.n, spec.d
    coeffs = []
    for j in range(1, n + 1):
        c = sum(math.comb(n + 2, i) * (-d) ** (j - i) for i in range(j + 1))
        coeffs.append(c)
    chern = [BasePoly.make(1, {(j,): coeffs[j - 1]}) for j in range(1, n + 1)]
    return BaseProfile.make(
        label=f"hypersurface-n{n}-d{d}",
        dim=n,
        basis=("H",),
        top_form={(n,): d},
        chern=chern,
        canonical=BasePoly.make(1, {(1,): d - n - 2}),
    )


def segre_closed_form(spec: HypersurfaceSpec, l: int) -> Fraction:
    """H^l-coefficient of s_l(T_X): (-1)^l (C(n+l+1,l) - d C(n+l,l-1))."""
    n, d = spec.n, spec.d
    if not 1 <= l <= n:
        raise ValueError(f"l must lie in 1..{n}, got {l}")
    value = binom(n + l + 1, l) - d * binom(n + l, l - 1)
    return Fraction((-1) ** l * value)


def segre_closed_form_factored(spec: HypersurfaceSpec, l: int) -> Fraction:
    """Same coefficient in the factored form C(n+l,l-1)((n+1)/l - d + 1)."""
    n, d = spec.n, spec.d
    if not 1 <= l <= n:
        raise ValueError(f"l must lie in 1..{n}, got {l}")
    factor = Fraction(n + 1, l) - d + 1
    return Fraction((-1) ** l) * binom(n + l, l - 1) * factor


def cubic_mnef_closed_form(n: int) -> Fraction:
    """-9 . 2^n / (8(2n-1)(n+1)) . C(2n, n), for n >= 3."""
    if n < 3:
        raise ValueError("the identity is asserted only for n >= 3")
    return Fraction(-9 * 2**n, 8 * (2 * n - 1) * (n + 1)) * math.comb(2 * n, n)


def cubic_mnef_number(n: int) -> Fraction:
    """zeta^2 . (zeta + pi^*H)^(2n-3) on the cubic hypersurface of dim n.

    Evaluated through the pushforward engine; the result is checked against
    the closed form and is strictly negative, which is what rules out zeta
    being modified nef.
    """
    if n < 3:
        raise ValueError("need n >= 3")
    profile = hypersurface_profile(HypersurfaceSpec(n, 3))
    zeta = PTClass.zeta(profile)
    h = PTClass.pullback(profile, profile.symbol("H"))
    value = eval_product(profile, [zeta, zeta] + [zeta + h] * (2 * n - 3))
    closed = cubic_mnef_closed_form(n)
    if value != closed:
        raise ArithmeticError(
            f"engine value {value} disagrees with closed form {closed}")
    return value


def sum_positive_part(n: int) -> Fraction:
    """Direct sum over i of C(2n-3,i) C(2n-i+1,n-i), checked in closed form.

    Closed form: 3(27n^2+9n-14) 2^n / (64(2n-1)(n+1)) . C(2n, n).
    """
    if n < 3:
        raise ValueError("need n >= 3")
    value = Fraction(sum(binom(2 * n - 3, i) * binom(2 * n - i + 1, n - i)
                         for i in range(n + 1)))
    closed = (Fraction(3 * (27 * n * n + 9 * n - 14) * 2**n,
                       64 * (2 * n - 1) * (n + 1)) * math.comb(2 * n, n))
    if value != closed:
        raise ArithmeticError(
            f"direct sum {value} disagrees with closed form {closed}")
    return value


def sum_negative_part(n: int) -> Fraction:
    """Direct sum over i of C(2n-3,i) C(2n-i,n-i-1), checked in closed form.

    Closed form: 3(3n+2)(3n-1) 2^n / (64(2n-1)(n+1)) . C(2n, n).
    """
    if n < 3:
        raise ValueError("need n >= 3")
    value = Fraction(sum(binom(2 * n - 3, i) * binom(2 * n - i, n - i - 1)
                         for i in range(n)))
    closed = (Fraction(3 * (3 * n + 2) * (3 * n - 1) * 2**n,
                       64 * (2 * n - 1) * (n + 1)) * math.comb(2 * n, n))
    if value != closed:
        raise ArithmeticError(
            f"direct sum {value} disagrees with closed form {closed}")
    return value


def comb_A_brute(k: int, n: int) -> Fraction:
    """A(k, n) = sum over 0 <= i <= n of i^k / (i! (n-i)!), exactly."""
    if k < 0 or n < 1:
        raise ValueError("need k >= 0 and n >= 1")
    return sum((Fraction(i**k, math.factorial(i) * math.factorial(n - i))
                for i in range(n + 1)), Fraction(0))


def comb_A_closed(k: int, n: int) -> Fraction | None:
    """Closed form of A(k, n) for k <= 4; None beyond the tabulated range."""
    if n < 1:
        raise ValueError("need n >= 1")
    base = Fraction(2**n, math.factorial(n))
    if k == 0:
        return base
    if k == 1:
        return Fraction(n, 2) * base
    if k == 2:
        return Fraction(n * (n + 1), 4) * base
    if k == 3:
        return Fraction(n * n * (n + 3), 8) * base
    if k == 4:
        return Fraction(n * (n + 1) * (n * n + 5 * n - 2), 16) * base
    return None


def comb_identity_A(k: int, n: int) -> tuple[Fraction, Fraction | None]:
    """Pair (brute-force sum, closed form) for A(k, n).

    For k <= 4 both entries are present and equal; for larger k only the
    direct summation is available.
    """
    brute = comb_A_brute(k, n)
    closed = comb_A_closed(k, n)
    if closed is not None and brute != closed:
        raise ArithmeticError(
            f"A({k},{n}): direct sum {brute} disagrees with closed form {closed}")
    return brute, closed


def recursion_check_A(k: int, n: int) -> bool:
    """Check A(k, n) = n A(k-1, n) - A(k-1, n-1) by direct summation."""
    if not 1 <= k <= 4 or n < 2:
        raise ValueError("need 1 <= k <= 4 and n >= 2")
    return comb_A_brute(k, n) == n * comb_A_brute(k - 1, n) - comb_A_brute(k - 1, n - 1)
