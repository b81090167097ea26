"""Bit vectors, Boolean functions and the three sensitivity measures.

Everything here is the slow-but-obviously-correct reference path: each
function value is recomputed from scratch.  The fast incremental engine
(see ``engine``) is validated against these routines.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .errors import ContractViolationError, ExhaustiveLimitError

#: Largest arity the naive exhaustive routines accept by default.
DEFAULT_NAIVE_LIMIT = 16


@dataclass(frozen=True)
class BitVector:
    """An input point of the n-dimensional Boolean hypercube.

    Bit j holds x_j; the canonical integer encoding puts x_0 in the least
    significant bit, so ``value = sum(x_j * 2**j)``.
    """

    n: int
    value: int

    def __post_init__(self):
        if self.n < 1:
            raise ContractViolationError(f"n must be positive, got {self.n}")
        if not 0 <= self.value < (1 << self.n):
            raise ContractViolationError(
                f"value {self.value} does not fit in {self.n} bits"
            )

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> "BitVector":
        bits = tuple(bits)
        if any(b not in (0, 1) for b in bits):
            raise ContractViolationError(f"bits must be 0/1, got {bits}")
        value = 0
        for j, b in enumerate(bits):
            value |= b << j
        return cls(len(bits), value)

    @classmethod
    def from_string(cls, s: str) -> "BitVector":
        """Parse a bitstring whose leftmost character is x_0."""
        for pos, ch in enumerate(s):
            if ch not in "01":
                raise ContractViolationError(
                    f"bad character {ch!r} at position {pos} in bitstring"
                )
        if not s:
            raise ContractViolationError("empty bitstring")
        return cls.from_bits(int(ch) for ch in s)

    @classmethod
    def zeros(cls, n: int) -> "BitVector":
        return cls(n, 0)

    @classmethod
    def ones(cls, n: int) -> "BitVector":
        return cls(n, (1 << n) - 1)

    def bit(self, i: int) -> int:
        self._check_index(i)
        return (self.value >> i) & 1

    @property
    def bits(self) -> tuple:
        return tuple((self.value >> j) & 1 for j in range(self.n))

    def flip(self, i: int) -> "BitVector":
        self._check_index(i)
        return BitVector(self.n, self.value ^ (1 << i))

    def to_string(self) -> str:
        """Bitstring with x_0 leftmost (matches the tuple notation)."""
        return "".join(str(b) for b in self.bits)

    def to_hex(self) -> str:
        """Canonical integer in hex, zero-padded to the vector width."""
        return f"0x{self.value:0{(self.n + 3) // 4}x}"

    def _check_index(self, i: int) -> None:
        if not 0 <= i < self.n:
            raise ContractViolationError(
                f"flip index {i} out of range for n={self.n}"
            )

    def __str__(self):
        return self.to_string()


def flip(x: BitVector, i: int) -> BitVector:
    """Return x with coordinate i flipped; x itself is untouched."""
    return x.flip(i)


class BooleanFunction(ABC):
    """A total map from the n-cube to {0, 1}.

    Subclasses may override ``eval_mask`` with a cheaper evaluation on the
    canonical integer encoding; it must agree with ``eval`` everywhere.
    """

    n: int

    @abstractmethod
    def eval(self, x: BitVector) -> int:
        ...

    def eval_mask(self, mask: int) -> int:
        return self.eval(BitVector(self.n, mask))

    def _check_arity(self, x: BitVector) -> None:
        if x.n != self.n:
            raise ContractViolationError(
                f"arity mismatch: function has n={self.n}, input has n={x.n}"
            )


def sensitivity(f: BooleanFunction, x: BitVector) -> int:
    """Number of coordinates whose flip changes f(x)."""
    return len(sensitive_coordinates(f, x))


def sensitive_coordinates(f: BooleanFunction, x: BitVector) -> list:
    f._check_arity(x)
    fx = f.eval_mask(x.value)
    return [
        i for i in range(x.n) if f.eval_mask(x.value ^ (1 << i)) != fx
    ]


@dataclass(frozen=True)
class NaiveScanResult:
    """One full double-loop pass over the hypercube."""

    n: int
    min_sen: int
    min_witness: BitVector
    max_sen: int
    max_witness: BitVector
    total_sensitivity: int


def naive_full_scan(
    f: BooleanFunction, limit: int = DEFAULT_NAIVE_LIMIT
) -> NaiveScanResult:
    """Evaluate Sen(f, x) at every input by brute force.

    Witnesses are the achievers with the smallest canonical encoding;
    iterating masks in ascending order makes the first strict improvement
    canonical automatically.
    """
    n = f.n
    if n > limit:
        raise ExhaustiveLimitError(
            f"n={n} exceeds the naive exhaustive limit {limit}"
        )
    min_sen, max_sen = n + 1, -1
    min_wit = max_wit = 0
    total = 0
    for mask in range(1 << n):
        fx = f.eval_mask(mask)
        sen = 0
        for i in range(n):
            if f.eval_mask(mask ^ (1 << i)) != fx:
                sen += 1
        total += sen
        if sen < min_sen:
            min_sen, min_wit = sen, mask
        if sen > max_sen:
            max_sen, max_wit = sen, mask
    return NaiveScanResult(
        n=n,
        min_sen=min_sen,
        min_witness=BitVector(n, min_wit),
        max_sen=max_sen,
        max_witness=BitVector(n, max_wit),
        total_sensitivity=total,
    )


def min_sensitivity_naive(
    f: BooleanFunction, limit: int = DEFAULT_NAIVE_LIMIT
) -> tuple:
    r = naive_full_scan(f, limit)
    return r.min_sen, r.min_witness


def max_sensitivity_naive(
    f: BooleanFunction, limit: int = DEFAULT_NAIVE_LIMIT
) -> tuple:
    r = naive_full_scan(f, limit)
    return r.max_sen, r.max_witness


def average_sensitivity(
    f: BooleanFunction, limit: int = DEFAULT_NAIVE_LIMIT
) -> Fraction:
    """Mean sensitivity over all 2^n inputs, as an exact rational."""
    r = naive_full_scan(f, limit)
    return Fraction(r.total_sensitivity, 1 << f.n)
