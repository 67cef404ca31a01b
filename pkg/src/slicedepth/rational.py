"""Exact continued-fraction arithmetic for 2-bridge knots.

Fractions are :class:`fractions.Fraction`: always reduced, denominator
positive, sign on the numerator.  Nothing here touches floating point.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    BadParity,
    EmptySequence,
    IdentityViolation,
    NotEven,
    OutOfRange,
    ZeroTailValue,
)

__all__ = [
    "EvenCF",
    "PellRecord",
    "determinant",
    "eval_cf",
    "even_cf",
    "pell_family",
    "sqrt_cf_terms",
    "two_bridge_representatives",
]


@dataclass(frozen=True)
class EvenCF:
    """Coefficients ``(a_1, ..., a_m)`` of ``C(a_1, ..., a_m)``, all even and nonzero.

    Odd length is allowed here (it is a link, not a knot); the word
    builder is where that gets rejected.
    """

    coefficients: tuple[int, ...]

    def __init__(self, coefficients: Iterable[int]):
        coeffs = tuple(int(a) for a in coefficients)
        for i, a in enumerate(coeffs, start=1):
            if a == 0 or a % 2:
                raise NotEven(f"coefficient a_{i} = {a} is not a nonzero even integer")
        object.__setattr__(self, "coefficients", coeffs)

    def __iter__(self) -> Iterator[int]:
        return iter(self.coefficients)

    def __len__(self) -> int:
        return len(self.coefficients)

    def __getitem__(self, i):
        return self.coefficients[i]

    def __str__(self) -> str:
        return "C(" + ",".join(str(a) for a in self.coefficients) + ")"

    def value(self) -> Fraction:
        return eval_cf(self.coefficients)


def eval_cf(coefficients: Sequence[int]) -> Fraction:
    """Evaluate ``a_1 + 1/(a_2 + 1/(... + 1/a_m))`` exactly, innermost first."""
    coeffs = list(coefficients)
    if not coeffs:
        raise EmptySequence("continued fraction needs at least one coefficient")
    # value = num/den; each step maps it to a + den/num.
    num, den = coeffs[-1], 1
    for i in range(len(coeffs) - 2, -1, -1):
        if num == 0:
            raise ZeroTailValue(
                f"tail starting at a_{i + 2} evaluates to 0; cannot take its reciprocal"
            )
        num, den = coeffs[i] * num + den, num
    return Fraction(num, den)


def even_cf(f: Fraction) -> EvenCF:
    """All-even continued fraction of ``p/q`` with ``p`` odd, ``q`` even, ``0 < q < |p|``.

    Repeatedly peel off the even integer nearest the current value and
    invert the remainder.  The remainder always lies strictly inside
    (-1, 1), so numerators shrink and the loop terminates; the values
    alternate between odd/even and even/odd, so no tie ever occurs.

    >>> even_cf(Fraction(7, 2))
    EvenCF(coefficients=(4, -2))
    """
    f = Fraction(f)
    p, q = f.numerator, f.denominator
    if p % 2 == 0 or q % 2:
        raise BadParity(f"{f} needs an odd numerator and an even denominator")
    if q >= abs(p):
        raise OutOfRange(f"{f} needs 0 < q < |p|")

    coeffs = []
    num, den = p, q  # current value num/den, den > 0
    while True:
        # A tie would need num/den to be an odd integer.
        assert not (den == 1 and num % 2), (num, den)
        a = 2 * ((num + den) // (2 * den))
        coeffs.append(a)
        rest = num - a * den
        if rest == 0:
            break
        num, den = (den, rest) if rest > 0 else (-den, -rest)

    cf = EvenCF(coeffs)
    if eval_cf(cf.coefficients) != f:
        raise IdentityViolation(f"even expansion {cf} does not evaluate back to {f}")
    return cf


def determinant(f: Fraction) -> int:
    """Determinant ``|Delta(-1)|`` of the 2-bridge knot with fraction ``f``, i.e. ``|p|``."""
    f = Fraction(f)
    if f.numerator % 2 == 0:
        raise BadParity(f"{f}: a 2-bridge knot fraction has odd numerator")
    return abs(f.numerator)


def two_bridge_representatives(f: Fraction) -> list[Fraction]:
    """Fractions ``p/q'`` in even normal form presenting the same knot as ``f`` up to mirror.

    ``S(p, q)`` and ``S(p, q')`` agree up to mirror image exactly when
    ``q' = +-q^(+-1) mod p``.  Only the even residues in ``(0, p)`` are
    kept, with the residues of ``q`` itself listed before those of its
    inverse.
    """
    f = Fraction(f)
    p = determinant(f)
    q = f.denominator
    if p == 1:
        return []
    inv = pow(q, -1, p)
    out: list[Fraction] = []
    for r in (q % p, -q % p, inv, -inv % p):
        if r % 2 == 0 and 0 < r < p:
            rep = Fraction(p, r)
            if rep not in out:
                out.append(rep)
    return out


def sqrt_cf_terms(d: int) -> Iterator[int]:
    """Yield the (infinite, periodic) continued fraction terms of ``sqrt(d)``."""
    a0 = math.isqrt(d)
    if a0 * a0 == d:
        raise ValueError(f"{d} is a perfect square")
    m, den, a = 0, 1, a0
    while True:
        yield a
        m = den * a - m
        den = (d - m * m) // den
        a = (a0 + m) // den


@dataclass(frozen=True)
class PellRecord:
    index: int
    convergent_x: int
    convergent_y: int
    shifted_p: int
    shifted_q: int

    @property
    def shifted(self) -> Fraction:
        return Fraction(self.shifted_p, self.shifted_q)


PELL_DISCRIMINANTS = (5, 6)


def pell_family(d: int, count: int) -> list[PellRecord]:
    """First ``count`` odd-index convergents of ``sqrt(d)`` shifted by +2.

    The n-th convergent ``x_n/y_n`` uses terms ``a_0..a_n``.  For odd n it
    solves ``x^2 - d*y^2 = 1``, and ``p/q = x/y + 2`` then satisfies
    ``p^2 - 4pq - (d - 4)q^2 = 1``.  Both identities are checked on every
    record.  ``d = 5`` gives ``C(4,...,4)``, ``d = 6`` gives ``C(4,2,...,4,2)``.
    """
    if d not in PELL_DISCRIMINANTS:
        raise ValueError(f"d must be one of {PELL_DISCRIMINANTS}, got {d}")
    if count < 1:
        raise ValueError("count must be positive")

    records = []
    x, x_prev = 1, 0
    y, y_prev = 0, 1
    for n, a in enumerate(sqrt_cf_terms(d)):
        x, x_prev = a * x + x_prev, x
        y, y_prev = a * y + y_prev, y
        if n % 2 == 0:
            continue
        shifted = Fraction(x, y) + 2
        rec = PellRecord(n, x, y, shifted.numerator, shifted.denominator)
        p, q = rec.shifted_p, rec.shifted_q
        if x * x - d * y * y != 1:
            raise IdentityViolation(f"x^2 - {d}y^2 != 1 at index {n}: {x}, {y}")
        if p * p - 4 * p * q - (d - 4) * q * q != 1:
            raise IdentityViolation(f"shifted identity fails at index {n}: {p}/{q}")
        records.append(rec)
        if len(records) == count:
            return records
    raise AssertionError("unreachable")
