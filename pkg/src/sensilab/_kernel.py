"""Hot loop of the exhaustive engine.

One chunk sweeps a fixed-prefix slice of the hypercube in reflected
Gray-code order, keeping the weight-sum residue current with a single
+-j (mod n) step per visited input.  Per input, each of the n flip checks
is O(1): the candidate bit index is the updated residue, read from the
unflipped mask and inverted when it coincides with the flipped position.

Compiled with numba when available; the plain-Python body is identical
(and is what the small-n unit tests exercise via ``scan_chunk_py``).
"""

from __future__ import annotations

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]

        def wrap(fn):
            return fn

        return wrap


STATUS_COMPLETE = 0
STATUS_FOUND_EARLY = 1
STATUS_CANCELLED = 2


def scan_chunk_py(n, base_mask, s0, count, early_min, early_max, cancel):
    """Scan ``count`` inputs starting at ``base_mask`` (residue ``s0``).

    Returns (min_sen, min_witness, max_sen, max_witness, total, scanned,
    status).  Witness ties break toward the smaller canonical encoding, so
    the result is independent of visiting order.  ``early_min`` / ``early_max``
    stop the sweep once a sensitivity at or beyond the bound is seen
    (disable with -1 / n+1); ``cancel`` is a shared one-byte array polled
    every 8192 steps so sibling chunks can stop a search that already
    found its target.
    """
    mask = base_mask
    s = s0
    min_sen = n + 1
    min_wit = -1
    max_sen = -1
    max_wit = -1
    total = 0
    t = 0
    while True:
        fx = (mask >> s) & 1
        sen = 0
        for i in range(n):
            if (mask >> i) & 1:
                s2 = s - i
                if s2 < 0:
                    s2 += n
            else:
                s2 = s + i
                if s2 >= n:
                    s2 -= n
            f2 = (mask >> s2) & 1
            if s2 == i:
                f2 ^= 1
            if f2 != fx:
                sen += 1
        total += sen
        if sen < min_sen or (sen == min_sen and mask < min_wit):
            min_sen = sen
            min_wit = mask
        if sen > max_sen or (sen == max_sen and mask < max_wit):
            max_sen = sen
            max_wit = mask
        if sen <= early_min or sen >= early_max:
            cancel[0] = 1
            return (min_sen, min_wit, max_sen, max_wit, total, t + 1, 1)
        t += 1
        if t == count:
            return (min_sen, min_wit, max_sen, max_wit, total, t, 0)
        if (t & 8191) == 0 and cancel[0] != 0:
            return (min_sen, min_wit, max_sen, max_wit, total, t, 2)
        # Gray step: the flipped bit is the ruler function of t.
        j = 0
        tt = t
        while (tt & 1) == 0:
            tt >>= 1
            j += 1
        bit = 1 << j
        mask ^= bit
        if mask & bit:
            s += j
            if s >= n:
                s -= n
        else:
            s -= j
            if s < 0:
                s += n


scan_chunk = njit(cache=True, nogil=True)(scan_chunk_py)
