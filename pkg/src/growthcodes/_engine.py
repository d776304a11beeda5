"""Exhaustive minimum-weight search engines.

Two exact strategies:

* message enumeration walks all q^k - 1 nonzero messages. Over GF(2) the
  codeword is kept bit-packed and stepped in Gray-code order (one XOR per
  step, hardware popcount for weights). Other primes run a mixed-radix
  odometer over the leading message digits while the trailing digits are
  enumerated as one vectorized batch; zero coordinates of each candidate are
  counted through packed per-residue bit masks, so the inner loop is all
  word-level AND + popcount.
* support enumeration searches codewords by increasing support size against
  the parity-check matrix, exhausting every candidate of weight < w before
  accepting w. Exact, and cheap precisely when the code rate is high (small
  redundancy forces a small minimum distance).

Both engines are deterministic. The message engine may split the message
space into disjoint contiguous ranges evaluated concurrently; the minimum is
independent of the partition count and schedule.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from .errors import BudgetExceededError
from .linalg import _rref

DEFAULT_ENUMERATION_BUDGET = 1 << 26

# Batch-size caps: trailing-digit combinations per vectorized block, and a
# memory cap on the transient offsets table.
_MAX_BATCH = 4096
_MAX_BATCH_CELLS = 8_000_000

if hasattr(np, "bitwise_count"):

    def _row_popcount(words: np.ndarray) -> np.ndarray:
        return np.bitwise_count(words).sum(axis=-1, dtype=np.int64)

else:  # numpy < 2.0
    _BYTE_POP = np.array([bin(i).count("1") for i in range(256)], dtype=np.uint8)

    def _row_popcount(words: np.ndarray) -> np.ndarray:
        as_bytes = words.view(np.uint8).reshape(words.shape[0], -1)
        return _BYTE_POP[as_bytes].sum(axis=-1, dtype=np.int64)


def _pack_rows(bools: np.ndarray, width_words: int) -> np.ndarray:
    """Pack a boolean array (rows, n) into little-endian uint64 words."""
    rows, n = bools.shape
    padded = width_words * 64
    if n != padded:
        tmp = np.zeros((rows, padded), dtype=bool)
        tmp[:, :n] = bools
        bools = tmp
    packed = np.packbits(bools, axis=-1, bitorder="little")
    return np.ascontiguousarray(packed).view(np.uint64)


def _partition(total: int, parts: int) -> list[tuple[int, int]]:
    parts = max(1, parts)
    bounds = [total * i // parts for i in range(parts + 1)]
    return [(bounds[i], bounds[i + 1]) for i in range(parts) if bounds[i] < bounds[i + 1]]


def _scan_ranges(scan, ranges, workers, sentinel):
    if len(ranges) <= 1 or workers <= 1:
        results = [scan(lo, hi) for lo, hi in ranges]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda r: scan(*r), ranges))
    return min(results, default=sentinel)


def _min_weight_gf2(rows: np.ndarray, workers: int) -> int:
    k, n = rows.shape
    width = (n + 63) // 64
    packed = _pack_rows(rows.astype(bool), width)
    t = 1
    while t < k and (1 << (t + 1)) <= _MAX_BATCH and (1 << (t + 1)) * width <= _MAX_BATCH_CELLS:
        t += 1
    batch = 1 << t
    offsets = np.zeros((batch, width), dtype=np.uint64)
    for m in range(1, batch):
        low = (m & -m).bit_length() - 1
        offsets[m] = offsets[m ^ (1 << low)] ^ packed[k - t + low]
    high_total = 1 << (k - t)

    def scan(lo: int, hi: int) -> int:
        gray = lo ^ (lo >> 1)
        base = np.zeros(width, dtype=np.uint64)
        for b in range(k - t):
            if (gray >> b) & 1:
                base ^= packed[b]
        best = n + 1
        for h in range(lo, hi):
            if h > lo:
                base = base ^ packed[(h & -h).bit_length() - 1]
            weights = _row_popcount(base[None, :] ^ offsets)
            if h == 0:
                weights[0] = n + 1
            m = int(weights.min())
            if m < best:
                best = m
                if best == 1:
                    break
        return best

    return _scan_ranges(scan, _partition(high_total, workers), workers, n + 1)


def _min_weight_generic(p: int, rows: np.ndarray, workers: int) -> int:
    k, n = rows.shape
    width = (n + 63) // 64
    t = 1
    while t < k and p ** (t + 1) <= _MAX_BATCH and p ** (t + 1) * n <= _MAX_BATCH_CELLS:
        t += 1
    batch = p**t
    offsets = np.zeros((1, n), dtype=np.int64)
    for d in range(t):
        row = rows[k - 1 - d]
        multiples = np.arange(p, dtype=np.int64)[None, :, None] * row[None, None, :]
        offsets = ((offsets[:, None, :] + multiples) % p).reshape(-1, n)
    residue_masks = np.stack([_pack_rows(offsets == v, width) for v in range(p)])
    del offsets
    high_rows = rows[: k - t]
    high_total = p ** (k - t)

    def scan(lo: int, hi: int) -> int:
        digits = np.zeros(k - t, dtype=np.int64)
        rem = lo
        for i in range(k - t):
            digits[i] = rem % p
            rem //= p
        base = (digits @ high_rows) % p if k > t else np.zeros(n, dtype=np.int64)
        best = n + 1
        for h in range(lo, hi):
            if h > lo:
                i = 0
                while True:
                    base += high_rows[i]
                    np.subtract(base, p, out=base, where=base >= p)
                    digits[i] += 1
                    if digits[i] < p:
                        break
                    digits[i] = 0
                    i += 1
            target = (p - base) % p
            present = np.bincount(target, minlength=p)
            zero_counts = np.zeros(batch, dtype=np.int64)
            for v in range(p):
                if present[v] == 0:
                    continue
                mask = _pack_rows((target == v)[None, :], width)[0]
                zero_counts += _row_popcount(residue_masks[v] & mask[None, :])
            weights = n - zero_counts
            if h == 0:
                weights[0] = n + 1
            m = int(weights.min())
            if m < best:
                best = m
                if best == 1:
                    break
        return best

    return _scan_ranges(scan, _partition(high_total, workers), workers, n + 1)


def min_weight_enumeration(p: int, rows: np.ndarray, *, workers: int = 1) -> int:
    """Exact minimum nonzero-codeword weight by full message enumeration.

    ``rows`` is the (k, n) generator with canonical residues; the caller is
    responsible for checking p**k against the enumeration budget.
    """
    if p == 2:
        return _min_weight_gf2(rows, workers)
    return _min_weight_generic(p, rows, workers)


def parity_check_matrix(rows: np.ndarray, p: int) -> np.ndarray:
    """An (n-k) x n matrix whose kernel is the row space of ``rows``."""
    k, n = rows.shape
    reduced, pivots = _rref(rows, p)
    assert len(pivots) == k, "parity check requires a full-rank generator"
    pivot_set = set(pivots)
    free = [j for j in range(n) if j not in pivot_set]
    check = np.zeros((n - k, n), dtype=np.int64)
    pivot_idx = np.array(pivots, dtype=np.intp)
    for idx, f in enumerate(free):
        check[idx, f] = 1
        check[idx, pivot_idx] = (-reduced[:k, f]) % p
    return check


def min_weight_support_search(p: int, rows: np.ndarray, *, budget: int) -> int:
    """Exact minimum weight by increasing-support enumeration.

    Enumerates every support of size w (and every value pattern up to
    scaling) against the parity-check matrix, for w = 1, 2, ... until a
    codeword is found; all lighter candidates have then been exhausted. The
    budget counts candidate vectors tested.
    """
    k, n = rows.shape
    if k == n:
        return 1
    check = parity_check_matrix(rows, p)
    spent = 0
    if p == 2:
        col_words = [int.from_bytes(np.packbits(check[:, j] != 0).tobytes(), "big") for j in range(n)]
        for w in range(1, n + 1):
            layer = math.comb(n, w)
            if spent + layer > budget:
                raise BudgetExceededError(
                    f"support search needs {spent + layer} candidates, budget is {budget}",
                    required=spent + layer,
                    budget=budget,
                )
            spent += layer
            for combo in itertools.combinations(range(n), w):
                acc = 0
                for j in combo:
                    acc ^= col_words[j]
                if acc == 0:
                    return w
    else:
        for w in range(1, n + 1):
            layer = math.comb(n, w) * (p - 1) ** (w - 1)
            if spent + layer > budget:
                raise BudgetExceededError(
                    f"support search needs {spent + layer} candidates, budget is {budget}",
                    required=spent + layer,
                    budget=budget,
                )
            spent += layer
            patterns = np.array(
                [(1,) + tail for tail in itertools.product(range(1, p), repeat=w - 1)],
                dtype=np.int64,
            )
            for combo in itertools.combinations(range(n), w):
                syndromes = check[:, combo] @ patterns.T % p
                if not syndromes.any(axis=0).all():
                    return w
    raise AssertionError("unreachable: a nonzero codeword of weight <= n always exists")
