"""Exact integer arithmetic for Hirzebruch-Jung strings.

Everything here works on Python ints and :class:`fractions.Fraction`; there is
no floating point anywhere. ``gcd(x, 0) == x`` throughout, which is what
:func:`math.gcd` already does.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional, Sequence, Tuple


class StringError(ValueError):
    """Raised when a Hirzebruch-Jung string cannot be formed from its data."""


@dataclass(frozen=True)
class NegContFrac:
    numerator: int
    denominator: int
    coefficients: Tuple[int, ...]


@dataclass(frozen=True)
class HJString:
    """One Hirzebruch-Jung chain ``Str(a; b, c | n1; n2, n3)``.

    ``mus`` holds the multiplicities of the pulled-back monomial on
    ``C_0, C_1, ..., C_l, C_{l+1}``: the two ends are the strict transforms,
    the interior entries belong to the exceptional curves whose
    self-intersections are ``-coeffs[i]``.
    """

    a: int
    b: int
    c: int
    n1: int
    n2: int
    n3: int
    delta: int
    alpha: int
    coeffs: Tuple[int, ...]
    mus: Tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.coeffs)

    @property
    def interior_mus(self) -> Tuple[int, ...]:
        return self.mus[1:-1]


def gcd3(x: int, y: int, z: int) -> int:
    return gcd(gcd(x, y), z)


def neg_cont_frac(p: int, q: int) -> NegContFrac:
    """Negative continued fraction ``p/q = k1 - 1/(k2 - 1/(... - 1/kl))``.

    ``q == 0`` is only meaningful for ``p == 1`` and gives the empty expansion.
    """
    if p < 1 or not 0 <= q < p:
        raise ValueError(f"need 0 <= q < p, got p={p}, q={q}")
    if q == 0:
        if p != 1:
            raise ValueError(f"p/0 expansion only defined for p=1, got p={p}")
        return NegContFrac(1, 0, ())
    if gcd(p, q) != 1:
        raise ValueError(f"p={p} and q={q} are not coprime")
    coeffs = []
    num, den = p, q
    while den:
        # ceil(num/den), so the remainder den*k - num lies in [0, den)
        k = -(-num // den)
        coeffs.append(k)
        num, den = den, k * den - num
    return NegContFrac(p, q, tuple(coeffs))


def eval_ncf(coefficients: Sequence[int]) -> Optional[Fraction]:
    """Evaluate ``k1 - 1/(k2 - ...)`` exactly; ``None`` stands for 1/0."""
    if not coefficients:
        return None
    value = Fraction(coefficients[-1])
    for k in reversed(coefficients[:-1]):
        value = k - 1 / value
    return value


def solve_alpha(a: int, b: int, c: int) -> int:
    """The unique ``alpha`` in ``[0, delta-1]`` with ``a | alpha*c*(a,b) + b*(a,c)``."""
    gab, gac = gcd(a, b), gcd(a, c)
    delta = a // (gab * gac)
    if delta == 1:
        return 0
    # divide the congruence through by (a,b)*(a,c): delta | alpha*c' + b'
    b_red, c_red = b // gab, c // gac
    alpha = (-b_red * pow(c_red, -1, delta)) % delta
    assert (alpha * c * gab + b * gac) % a == 0
    return alpha


def hj_string(a: int, b: int, c: int, n1: int, n2: int, n3: int) -> HJString:
    """Build ``Str(a; b, c | n1; n2, n3)`` with all of its multiplicities.

    Raises:
        StringError: if ``gcd(a, b, c) != 1`` ("non-coprime input") or if
            ``(a,b)*(a,c)`` does not divide ``a`` ("delta not integral").
    """
    if a < 1 or min(b, c, n1, n2, n3) < 0:
        raise StringError(f"invalid string data ({a};{b},{c}|{n1};{n2},{n3})")
    if gcd3(a, b, c) != 1:
        raise StringError(f"non-coprime input: gcd({a},{b},{c}) != 1")
    gab, gac = gcd(a, b), gcd(a, c)
    if a % (gab * gac):
        raise StringError(f"delta not integral: {gab}*{gac} does not divide {a}")
    delta = a // (gab * gac)
    alpha = solve_alpha(a, b, c)
    coeffs = neg_cont_frac(delta, alpha).coefficients

    mu_last = b * n1 + a * n2
    mu_first = c * n1 + a * n3
    if mu_last % gab or mu_first % gac:
        raise StringError("end multiplicities are not integral")
    mu_last //= gab
    mu_first //= gac

    if not coeffs:
        return HJString(a, b, c, n1, n2, n3, delta, alpha, (), (mu_first, mu_last))

    top = alpha * mu_first + mu_last
    if top % delta:
        raise StringError(f"mu_1 not integral: {delta} does not divide {top}")
    mus = [mu_first, top // delta]
    for k in coeffs:
        mus.append(k * mus[-1] - mus[-2])
    if mus[-1] != mu_last:
        raise StringError(
            f"multiplicity recursion does not close: {mus[-1]} != {mu_last}"
        )
    return HJString(a, b, c, n1, n2, n3, delta, alpha, coeffs, tuple(mus))
