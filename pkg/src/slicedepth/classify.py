"""Slice-depth bounds for twist spins of several knot families.

Each ``classify_*`` function returns a :class:`SliceDepthVerdict` for the
n-twist spin of the input knot.  A bound is either an integer or
``None`` (unknown), never a placeholder 0 or infinity.
"""

from __future__ import annotations

import enum
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Union

from .errors import InvalidPretzel
from .rational import EvenCF, determinant, eval_cf, even_cf, two_bridge_representatives
from .words import ReductionWitness, build_word, reduces

__all__ = [
    "Bound",
    "Justification",
    "RibbonOneFusionData",
    "SliceDepthVerdict",
    "TwoBridgeAnalysis",
    "UnknottingBand",
    "UnknottingBandData",
    "analyze_two_bridge",
    "classify_pretzel",
    "classify_ribbon_one_fusion",
    "classify_two_bridge",
    "classify_unknotting",
    "pretzel_index",
]

TWO_BRIDGE_WORD = (
    "2-bridge: O/E word of the even continued fraction reduces to '' or 'O', "
    "so tau^n(k) is 1-slice"
)
JOSEPH_DETERMINANT = (
    "Joseph (Alexander ideal): determinant > 1, so tau^2(k) is not 0-slice"
)
PRETZEL_TWO_BANDS = "pretzel P(4i+1, 8i+1, 8i+3): tau^n(k) is 2-slice"
DAI_MILLER_PRETZEL = (
    "Dai-Miller: the 2-twist spins of P(2i+1, 4i+1, 4i+3) are not 0-slice"
)
RIBBON_PARITY = (
    "ribbon 1-fusion: a_1 + ... + a_m + sigma + w is even, so tau^n(k) is 2-slice"
)
UNKNOTTING_PARITY = (
    "unknotting bands: sigma_i + w_i + lambda_i is even for every band, "
    "so tau^n(k) is u-slice"
)


class Bound(enum.Enum):
    LOWER = "lower"
    UPPER = "upper"


class Justification(NamedTuple):
    bound: Bound
    value: int
    citation: str


@dataclass(frozen=True)
class SliceDepthVerdict:
    """Known bounds on ``sd(tau^n(k))`` with the result backing each one."""

    twist: int
    lower: int | None = None
    upper: int | None = None
    justifications: tuple[Justification, ...] = ()

    def __post_init__(self):
        if self.twist < 1:
            raise ValueError(f"twist must be a positive integer, got {self.twist}")
        for name in ("lower", "upper"):
            value = getattr(self, name)
            if value is not None and value < 0:
                raise ValueError(f"{name} bound must be non-negative, got {value}")
        if self.lower is not None and self.upper is not None and self.lower > self.upper:
            raise ValueError(f"lower bound {self.lower} exceeds upper bound {self.upper}")
        for bound, value in ((Bound.LOWER, self.lower), (Bound.UPPER, self.upper)):
            if value is None:
                continue
            if not any(j.bound is bound and j.value == value for j in self.justifications):
                raise ValueError(f"{bound.value} bound {value} has no justification")

    @property
    def exact(self) -> bool:
        return self.lower is not None and self.lower == self.upper

    @property
    def slice_depth(self) -> int | None:
        return self.lower if self.exact else None

    def to_dict(self) -> dict:
        return {
            "twist": self.twist,
            "lower": self.lower,
            "upper": self.upper,
            "exact": self.exact,
            "justifications": [
                {"bound": j.bound.value, "value": j.value, "citation": j.citation}
                for j in self.justifications
            ],
        }


def _verdict(twist: int, lower=None, upper=None) -> SliceDepthVerdict:
    """Build a verdict from ``(value, citation)`` pairs for each bound."""
    justifications = []
    lo = up = None
    if lower is not None:
        lo, cite = lower
        justifications.append(Justification(Bound.LOWER, lo, cite))
    if upper is not None:
        up, cite = upper
        justifications.append(Justification(Bound.UPPER, up, cite))
    return SliceDepthVerdict(twist, lo, up, tuple(justifications))


def _check_twist(n: int) -> None:
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ValueError(f"twist must be a positive integer, got {n!r}")


# -- 2-bridge knots ----------------------------------------------------------


class Candidate(NamedTuple):
    fraction: Fraction
    cf: EvenCF
    word: str
    accepted: bool
    witness: ReductionWitness | None


@dataclass(frozen=True)
class TwoBridgeAnalysis:
    """Everything :func:`analyze_two_bridge` looked at, plus the verdict."""

    fraction: Fraction
    determinant: int
    candidates: tuple[Candidate, ...]
    verdict: SliceDepthVerdict

    @property
    def accepted(self) -> bool:
        return any(c.accepted for c in self.candidates)

    @property
    def chosen(self) -> Candidate:
        """The first accepting presentation, or the primary one if none accepts."""
        for c in self.candidates:
            if c.accepted:
                return c
        return self.candidates[0]


def _candidate(f: Fraction, cf: EvenCF) -> Candidate:
    word = build_word(cf)
    accepted, witness = reduces(word)
    return Candidate(f, cf, word, accepted, witness)


TwoBridgeInput = Union[EvenCF, Sequence[int], Fraction]


def analyze_two_bridge(
    knot: TwoBridgeInput, twist: int, representative_search: bool = True
) -> TwoBridgeAnalysis:
    """Run the word test on a 2-bridge knot and collect the bounds.

    ``knot`` is either an even continued fraction (``EvenCF`` or a plain
    integer sequence) or a ``Fraction``.  The given presentation is tried
    first.  With ``representative_search`` the other even presentations
    ``p/q'`` of the same knot (``q' = +-q^(+-1) mod p``) are tried as
    well, and the upper bound holds if any of them is accepted.  A
    fraction with odd ``q`` needs the search to find an even presentation.
    """
    _check_twist(twist)
    candidates: list[Candidate] = []
    if isinstance(knot, Fraction):
        f = knot
        if not representative_search or (f.denominator % 2 == 0 and f.denominator < abs(f.numerator)):
            candidates.append(_candidate(f, even_cf(f)))
    else:
        cf = EvenCF(knot)
        build_word(cf)
        f = eval_cf(cf.coefficients)
        candidates.append(_candidate(f, cf))

    det = determinant(f)
    if representative_search:
        seen = {(abs(c.fraction.numerator), c.fraction.denominator) for c in candidates}
        for rep in two_bridge_representatives(f):
            if (rep.numerator, rep.denominator) not in seen:
                candidates.append(_candidate(rep, even_cf(rep)))
        if not candidates:
            # No even presentation exists (p = 1): surface the normal-form error.
            even_cf(f)

    accepted = any(c.accepted for c in candidates)
    lower = (1, JOSEPH_DETERMINANT) if twist == 2 and det > 1 else None
    upper = (1, TWO_BRIDGE_WORD) if accepted else None
    return TwoBridgeAnalysis(f, det, tuple(candidates), _verdict(twist, lower, upper))


def classify_two_bridge(
    knot: TwoBridgeInput, twist: int, representative_search: bool = True
) -> SliceDepthVerdict:
    """Slice-depth bounds for the ``twist``-twist spin of a 2-bridge knot.

    Upper bound 1 when the O/E word of some presentation reduces to ``""``
    or ``"O"``.  For ``twist == 2`` the determinant ``|p| > 1`` gives lower
    bound 1, so an accepted knot has slice depth exactly 1.

    >>> classify_two_bridge([4, 4], 2).slice_depth
    1
    """
    return analyze_two_bridge(knot, twist, representative_search).verdict


# -- pretzel knots -----------------------------------------------------------


def pretzel_index(p: int, q: int, r: int, allow_i_zero: bool = False) -> int | None:
    """Return ``i`` if ``{p, q, r} = {4i+1, 8i+1, 8i+3}``, else ``None``.

    A 3-strand pretzel knot is unchanged by permuting its strands, so the
    parameters are compared as a sorted triple.  ``i >= 1`` unless
    ``allow_i_zero`` (which admits ``P(1, 1, 3)``).
    """
    a, b, c = sorted((p, q, r))
    if a % 4 != 1 or b != 2 * a - 1 or c != 2 * a + 1:
        return None
    i = (a - 1) // 4
    if i < (0 if allow_i_zero else 1):
        return None
    return i


def classify_pretzel(
    p: int, q: int, r: int, twist: int, allow_i_zero: bool = False
) -> SliceDepthVerdict:
    _check_twist(twist)
    for name, value in (("p", p), ("q", q), ("r", r)):
        if value % 2 == 0:
            raise InvalidPretzel(f"P({p},{q},{r}): {name} = {value} is even; not a knot here")
    if pretzel_index(p, q, r, allow_i_zero) is None:
        return _verdict(twist)
    lower = (1, DAI_MILLER_PRETZEL) if twist == 2 else None
    return _verdict(twist, lower, (2, PRETZEL_TWO_BANDS))


# -- ribbon knots of 1-fusion -------------------------------------------------


@dataclass(frozen=True)
class RibbonOneFusionData:
    """Winding numbers ``a_1..a_m`` of ``R(a_1, ..., a_m)`` with the band's twist data.

    ``sigma`` is the signed count of full twists in the ribbon band and
    ``w`` the crossing-sign sum of the band core once the band is unknotted.
    """

    windings: tuple[int, ...]
    sigma: int
    w: int

    def __init__(self, windings: Iterable[int], sigma: int, w: int):
        windings = tuple(int(a) for a in windings)
        if not windings:
            raise ValueError("a ribbon knot of 1-fusion needs at least one winding number")
        object.__setattr__(self, "windings", windings)
        object.__setattr__(self, "sigma", int(sigma))
        object.__setattr__(self, "w", int(w))

    @property
    def twist_total(self) -> int:
        return sum(self.windings) + self.sigma + self.w


def classify_ribbon_one_fusion(data: RibbonOneFusionData, twist: int) -> SliceDepthVerdict:
    _check_twist(twist)
    if data.twist_total % 2:
        return _verdict(twist)
    return _verdict(twist, upper=(2, RIBBON_PARITY))


# -- knots with unknotting number u ------------------------------------------


class UnknottingBand(NamedTuple):
    sigma: int
    w: int
    wraps: int

    @property
    def twist_total(self) -> int:
        return self.sigma + self.w + self.wraps


@dataclass(frozen=True)
class UnknottingBandData:
    """One ``(sigma_i, w_i, lambda_i)`` triple per band ``S_i``; ``u`` is the band count."""

    bands: tuple[UnknottingBand, ...]

    def __init__(self, bands: Iterable[tuple[int, int, int]]):
        bands = tuple(UnknottingBand(*map(int, b)) for b in bands)
        if not bands:
            raise ValueError("need at least one band (u >= 1)")
        for i, band in enumerate(bands, start=1):
            if band.wraps < 0:
                raise ValueError(f"band {i}: wrap count lambda must be non-negative")
        object.__setattr__(self, "bands", bands)

    @property
    def u(self) -> int:
        return len(self.bands)


def classify_unknotting(data: UnknottingBandData, twist: int) -> SliceDepthVerdict:
    _check_twist(twist)
    if any(band.twist_total % 2 for band in data.bands):
        return _verdict(twist)
    return _verdict(twist, upper=(data.u, UNKNOTTING_PARITY))
