"""
Generator sequences for Hridaya kolams.

With m dots per arm and n arms, the sequence is

    a_0 = m,  a_k = (k * n) mod m   for k = 1 .. m-1

and every zero residue is written as m. When gcd(m, n) = 1, n generates the
cyclic group Z_m, so the m terms are a permutation of {1 .. m} and the stroke
closes in a single loop.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Sequence

from kolam.exceptions import BulgeOutOfRange, NotCoprime, ProductTooLarge, ZeroOrNegative
from kolam.geometry import ConnectionStyle

logger = logging.getLogger(__name__)

# m*n has to fit a signed 32-bit word.
MAX_DOT_COUNT = 2**31 - 1

DEFAULT_BULGE = Fraction(3, 10)

CYCLE_ARROW = "→"


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        # 0.3 should mean 3/10, not the binary expansion of 0.3
        return Fraction(repr(value))
    return Fraction(value)


@dataclass(frozen=True)
class KolamSpec:
    """Validated (m, n) pair plus the connection style used when drawing."""

    m: int
    n: int
    style: ConnectionStyle = ConnectionStyle.STRAIGHT
    bulge: Fraction = field(default=DEFAULT_BULGE)

    def __post_init__(self):
        for name, value in (("m", self.m), ("n", self.n)):
            if isinstance(value, bool) or not isinstance(value, int) or value < 1:
                raise ZeroOrNegative(name, value)
        if self.m * self.n > MAX_DOT_COUNT:
            raise ProductTooLarge(self.m, self.n, MAX_DOT_COUNT)
        divisor = math.gcd(self.m, self.n)
        if divisor != 1:
            raise NotCoprime(self.m, self.n, divisor)

        object.__setattr__(self, "style", ConnectionStyle(self.style))
        try:
            bulge = _as_fraction(self.bulge)
        except (TypeError, ValueError) as exc:
            raise BulgeOutOfRange(self.bulge) from exc
        if not 0 < bulge < 1:
            raise BulgeOutOfRange(bulge)
        object.__setattr__(self, "bulge", bulge)

    @property
    def dot_count(self) -> int:
        return self.m * self.n

    def __str__(self):
        return f"m={self.m}, n={self.n}, style={self.style.value}, bulge={self.bulge}"


def make_spec(m, n, style=ConnectionStyle.STRAIGHT, bulge=None) -> KolamSpec:
    """
    Build a KolamSpec, raising a SpecError subclass if (m, n, bulge) is invalid.

    ``bulge`` defaults to 3/10 and accepts anything Fraction understands
    ("0.3", 0.3, Fraction(3, 10)).
    """
    return KolamSpec(m=m, n=n, style=style, bulge=DEFAULT_BULGE if bulge is None else bulge)


@dataclass(frozen=True)
class GeneratorSequence:
    terms: tuple

    @property
    def m(self) -> int:
        return len(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self) -> Iterator[int]:
        return iter(self.terms)

    def __getitem__(self, index):
        return self.terms[index]

    def index_of(self, value: int) -> int:
        return self.terms.index(value)


def generate_sequence(spec: KolamSpec) -> GeneratorSequence:
    m, n = spec.m, spec.n
    terms = tuple(((k * n) % m) or m for k in range(m))
    logger.debug("generated sequence for %s: %s", spec, terms)
    return GeneratorSequence(terms)


def sequence_cycle_string(seq: GeneratorSequence | Sequence[int]) -> str:
    """Render a cycle the way the published table prints it: 4→3→2→1→4."""
    terms = list(seq)
    return CYCLE_ARROW.join(str(term) for term in terms + terms[:1])


def coprime_arms(m: int, limit: int, start: int = 1) -> list[int]:
    """All arm counts n in [start, limit] with gcd(m, n) = 1."""
    return [n for n in range(start, limit + 1) if math.gcd(m, n) == 1]


def _rotations(terms: Sequence[int]):
    for shift in range(len(terms)):
        yield tuple(terms[shift:]) + tuple(terms[:shift])


def cycles_equivalent(a: Sequence[int], b: Sequence[int]) -> bool:
    """
    True when both cycles trace the same closed loop, allowing any starting
    term and either direction of travel.
    """
    a = tuple(a)
    b = tuple(b)
    if len(a) != len(b):
        return False
    if not a:
        return True
    return b in set(_rotations(a)) or b in set(_rotations(a[::-1]))
