"""The two weighted sum function families and their structural facts.

The simplified family evaluates f(X) = x_{s(X)} with s(X) = sum(k*x_k) mod n
over indices 0..n-1.  The original family works over indices 1..n modulo the
smallest prime p >= n, falling back to x_1 when the residue lands above n.
Alongside the functions live the constructive witnesses and closed forms
used by the checkers, plus a classifier that predicts the minimum
sensitivity wherever the known structural results apply.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Optional

from .core import BitVector, BooleanFunction
from .errors import ContractViolationError


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    i = 5
    while i <= isqrt(n):
        if n % i == 0 or n % (i + 2) == 0:
            return False
        i += 6
    return True


def smallest_prime_geq(n: int) -> int:
    """Least prime p with p >= n (p = 2 for n <= 2)."""
    if n < 1:
        raise ContractViolationError(f"n must be positive, got {n}")
    p = max(n, 2)
    while not is_prime(p):
        p += 1
    return p


class SimplifiedWSF(BooleanFunction):
    """f(X) = x_{s(X)}, s(X) = sum(k * x_k) mod n, indices 0..n-1."""

    def __init__(self, n: int):
        if n < 1:
            raise ContractViolationError(f"n must be positive, got {n}")
        self.n = n

    def eval(self, x: BitVector) -> int:
        self._check_arity(x)
        return self.eval_mask(x.value)

    def eval_mask(self, mask: int) -> int:
        s = 0
        for k in range(self.n):
            if (mask >> k) & 1:
                s += k
        return (mask >> (s % self.n)) & 1

    def __repr__(self):
        return f"SimplifiedWSF(n={self.n})"


def weight_sum(wsf: SimplifiedWSF, x: BitVector) -> int:
    """s(X) = sum(k * x_k) mod n, representative in [0, n)."""
    if x.n != wsf.n:
        raise ContractViolationError(
            f"arity mismatch: function has n={wsf.n}, input has n={x.n}"
        )
    return sum(k for k in range(wsf.n) if x.bit(k)) % wsf.n


def simplified_eval(wsf: SimplifiedWSF, x: BitVector) -> int:
    return x.bit(weight_sum(wsf, x))


def incremental_weight_update(s: int, i: int, new_bit: int, n: int) -> int:
    """Residue after bit i changes to new_bit: one +-i step mod n."""
    if not 0 <= s < n:
        raise ContractViolationError(f"residue {s} out of range for n={n}")
    if not 0 <= i < n:
        raise ContractViolationError(f"index {i} out of range for n={n}")
    if new_bit not in (0, 1):
        raise ContractViolationError(f"new_bit must be 0/1, got {new_bit}")
    return (s + i) % n if new_bit else (s - i) % n


def fast_sensitivity(wsf: SimplifiedWSF, x: BitVector) -> int:
    """Sen(f, X) in O(n) via the incremental residue update."""
    return len(fast_sensitive_coordinates(wsf, x))


def fast_sensitive_coordinates(wsf: SimplifiedWSF, x: BitVector) -> list:
    """Coordinates whose flip changes f(X), one O(1) check per flip.

    The flipped vector differs from X at i only, so its function value is
    X's bit at the updated residue, inverted exactly when that residue is i.
    """
    if x.n != wsf.n:
        raise ContractViolationError(
            f"arity mismatch: function has n={wsf.n}, input has n={x.n}"
        )
    n, mask = wsf.n, x.value
    s = weight_sum(wsf, x)
    fx = (mask >> s) & 1
    out = []
    for i in range(n):
        new_bit = 1 - ((mask >> i) & 1)
        s2 = incremental_weight_update(s, i, new_bit, n)
        f2 = (mask >> s2) & 1
        if s2 == i:
            f2 ^= 1
        if f2 != fx:
            out.append(i)
    return out


class OriginalWSF(BooleanFunction):
    """The Savicky-Zak family over indices 1..n modulo the smallest prime p >= n.

    Externally the variables are x_1..x_n; bit j of the stored BitVector
    holds x_{j+1}.  The residue representative lives in [1, p] (residue 0
    reads as p), and values above n fall back to x_1.
    """

    def __init__(self, n: int):
        if n < 1:
            raise ContractViolationError(f"n must be positive, got {n}")
        self.n = n
        self.p = smallest_prime_geq(n)

    def eval(self, x: BitVector) -> int:
        self._check_arity(x)
        return self.eval_mask(x.value)

    def eval_mask(self, mask: int) -> int:
        s = 0
        for j in range(self.n):
            if (mask >> j) & 1:
                s += j + 1
        s %= self.p
        if s == 0:
            s = self.p
        if s <= self.n:
            return (mask >> (s - 1)) & 1
        return mask & 1

    def weight_sum(self, x: BitVector) -> int:
        """Residue of sum(k * x_k, k=1..n) mod p, representative in [1, p]."""
        self._check_arity(x)
        s = sum(j + 1 for j in range(self.n) if x.bit(j)) % self.p
        return s if s else self.p

    def __repr__(self):
        return f"OriginalWSF(n={self.n}, p={self.p})"


def original_eval(wsf: OriginalWSF, x: BitVector) -> int:
    return wsf.eval(x)


def theorem42_witness(n: int, p: int) -> BitVector:
    """Zero-sensitivity input for the simplified family when p**2 divides n.

    Ones sit exactly on the residue class i = p-1 (mod p).
    """
    if p < 3:
        raise ContractViolationError(f"p must be at least 3, got {p}")
    if not is_prime(p):
        raise ContractViolationError(f"p must be prime, got {p}")
    if n % (p * p) != 0:
        raise ContractViolationError(f"p^2 = {p * p} does not divide n = {n}")
    value = 0
    for i in range(p - 1, n, p):
        value |= 1 << i
    return BitVector(n, value)


def odd_prime_square_divisors(n: int) -> list:
    """Odd primes p with p**2 | n, ascending."""
    out = []
    p = 3
    while p * p <= n:
        if is_prime(p) and n % (p * p) == 0:
            out.append(p)
        p += 2
    return out


def theorem42_witness_auto(n: int) -> BitVector:
    """Witness for the smallest qualifying odd prime."""
    ps = odd_prime_square_divisors(n)
    if not ps:
        raise ContractViolationError(
            f"no odd prime p with p^2 | n for n = {n}"
        )
    return theorem42_witness(n, ps[0])


def all_ones_sensitivity_closed_form(n: int) -> int:
    """Sensitivity of the all-ones input: 0 for n=4k+2, 1 for odd n, 2 for n=4k."""
    if n < 1:
        raise ContractViolationError(f"n must be positive, got {n}")
    if n % 2 == 1:
        return 1
    return 0 if n % 4 == 2 else 2


PREDICT_ZERO = "Zero"
PREDICT_ONE = "One"
PREDICT_UNKNOWN = "Unknown"

JUSTIFY_MOD4 = "Lemma4.3-corollary"
JUSTIFY_PSQ = "Thm4.2"
JUSTIFY_PRIME = "Thm4.4"
JUSTIFY_NONE = "none"


@dataclass(frozen=True)
class MinSPrediction:
    n: int
    predicted: str
    justification: str
    p: Optional[int] = None

    def expected_value(self) -> Optional[int]:
        if self.predicted == PREDICT_ZERO:
            return 0
        if self.predicted == PREDICT_ONE:
            return 1
        return None


def classify_min_sensitivity(n: int) -> MinSPrediction:
    """Predict minS where a structural result decides it.

    Rule order is fixed (n = 4k+2, then p^2 | n, then prime n > 4) so that
    reports stay deterministic; every rule that fires agrees on the value.
    """
    if n < 1:
        raise ContractViolationError(f"n must be positive, got {n}")
    if n % 4 == 2:
        return MinSPrediction(n, PREDICT_ZERO, JUSTIFY_MOD4)
    ps = odd_prime_square_divisors(n)
    if ps:
        return MinSPrediction(n, PREDICT_ZERO, JUSTIFY_PSQ, p=ps[0])
    if n > 4 and is_prime(n):
        return MinSPrediction(n, PREDICT_ONE, JUSTIFY_PRIME)
    return MinSPrediction(n, PREDICT_UNKNOWN, JUSTIFY_NONE)
