"""Vectorized enumeration kernels for the exhaustive searches.

Codewords and error vectors are enumerated as numpy arrays of integer
encodings.  In characteristic 2 the encoding makes field addition a plain
XOR, so syndromes pack into single integers and accumulate with bitwise ops;
odd characteristic goes through a q x q addition-table gather instead.
Everything here is deterministic; chunking only bounds memory.
"""

from __future__ import annotations

from itertools import combinations, product

import numpy as np

from .errors import BudgetExceeded, InvariantViolation

DEFAULT_BUDGET = 1 << 24
_CHUNK_ROWS = 1 << 20


def _dtype_for(q: int):
    return np.uint8 if q <= 256 else np.uint16


def _np_add_table(ctx):
    if ctx._add is None:
        raise BudgetExceeded(
            f"no addition table for {ctx!r}; enumeration kernels support "
            "characteristic 2 or q <= 1024")
    return np.array(ctx._add, dtype=_dtype_for(ctx.q))


def _np_sub_table(ctx):
    q = ctx.q
    return np.array([[ctx.sub_i(a, b) for b in range(q)] for a in range(q)],
                    dtype=_dtype_for(q))


def pack_syndrome(digits, q: int) -> int:
    v = 0
    for d in reversed(list(digits)):
        v = v * q + int(d)
    return v


def syndrome_pack_of(H_int, v_int, ctx) -> int:
    """Packed syndrome of a vector under parity rows H_int."""
    digs = []
    for row in H_int:
        acc = 0
        for h, x in zip(row, v_int):
            acc = ctx.add_i(acc, ctx.mul_i(h, x))
        digs.append(acc)
    return pack_syndrome(digs, ctx.q)


# ---------------------------------------------------------------------------
# Codeword enumeration
# ---------------------------------------------------------------------------

def _scaled_rows(G_int, ctx):
    """scaled[i][c] = c * (row i), one (q, n) array per generator row."""
    q = ctx.q
    dt = _dtype_for(q)
    return [np.array([[ctx.mul_i(c, g) for g in row] for c in range(q)],
                     dtype=dt) for row in G_int]


def codeword_blocks(G_int, ctx, budget=DEFAULT_BUDGET):
    """Yield (start_index, block) covering all q^k codewords in index order.

    The message with index M has row-i coefficient (M // q^i) % q.
    """
    k = len(G_int)
    n = len(G_int[0]) if k else 0
    q = ctx.q
    total = q ** k
    if total > budget:
        raise BudgetExceeded(f"q^k = {total} exceeds budget {budget}")
    if k == 0:
        yield 0, np.zeros((1, n), dtype=_dtype_for(q))
        return
    scaled = _scaled_rows(G_int, ctx)
    char2 = ctx.p == 2
    add = None if char2 else _np_add_table(ctx)

    inner = 0
    while inner < k and q ** (inner + 1) <= _CHUNK_ROWS:
        inner += 1
    inner = max(inner, 1)

    block = np.zeros((1, n), dtype=_dtype_for(q))
    for i in range(inner):
        s = scaled[i]
        if char2:
            block = np.bitwise_xor(s[:, None, :], block[None, :, :])
        else:
            block = add[s[:, None, :], block[None, :, :]]
        block = block.reshape(-1, n)

    if inner == k:
        yield 0, block
        return

    outer_rows = G_int[inner:]
    stride = q ** inner
    idx = 0
    # outer digits vary slowest; product(... reversed) keeps global index order
    for digits in product(range(q), repeat=k - inner):
        digits = digits[::-1]
        off = [0] * n
        for d, row in zip(digits, outer_rows):
            if d:
                for j, g in enumerate(row):
                    off[j] = ctx.add_i(off[j], ctx.mul_i(d, g))
        offv = np.array(off, dtype=block.dtype)
        if char2:
            yield idx, np.bitwise_xor(block, offv[None, :])
        else:
            yield idx, add[block, offv[None, :]]
        idx += stride


def min_weight_nonzero(G_int, ctx, budget=DEFAULT_BUDGET) -> int:
    """Exact minimum Hamming weight over nonzero codewords."""
    best = None
    for start, block in codeword_blocks(G_int, ctx, budget):
        w = np.count_nonzero(block, axis=1)
        if start == 0:
            w = w[1:]  # drop the zero message
        if w.size:
            m = int(w.min())
            if best is None or m < best:
                best = m
    if best is None:
        raise InvariantViolation("no nonzero codewords")
    return best


def weight_counts(G_int, ctx, budget=DEFAULT_BUDGET) -> list[int]:
    n = len(G_int[0]) if G_int else 0
    counts = np.zeros(n + 1, dtype=np.int64)
    for _, block in codeword_blocks(G_int, ctx, budget):
        w = np.count_nonzero(block, axis=1)
        counts += np.bincount(w, minlength=n + 1)
    return [int(c) for c in counts]


def min_distance_to_vector(G_int, v_int, ctx, budget=DEFAULT_BUDGET) -> int:
    """Exact min over codewords c of the Hamming distance d(v, c)."""
    v = np.array(v_int, dtype=_dtype_for(ctx.q))
    char2 = ctx.p == 2
    sub = None if char2 else _np_sub_table(ctx)
    best = None
    for _, block in codeword_blocks(G_int, ctx, budget):
        diff = np.bitwise_xor(v[None, :], block) if char2 \
            else sub[v[None, :], block]
        m = int(np.count_nonzero(diff, axis=1).min())
        if best is None or m < best:
            best = m
        if best == 0:
            break
    return best


# ---------------------------------------------------------------------------
# Coset-leader weights by increasing-weight syndrome sweep
# ---------------------------------------------------------------------------

def _column_contributions(H_int, ctx):
    """Per column j: packed (and, for odd p, digit-array) syndromes of c*h_j."""
    q = ctx.q
    r = len(H_int)
    packs = []
    digs = []
    for j in range(len(H_int[0])):
        col = [H_int[i][j] for i in range(r)]
        mat = [[ctx.mul_i(c, h) for h in col] for c in range(q)]
        packs.append(np.array([pack_syndrome(row, q) for row in mat],
                              dtype=np.int64))
        digs.append(np.array(mat, dtype=_dtype_for(q)))
    return packs, digs


def _fold_packed_char2(parts, offset=0):
    total = 1
    for p in parts:
        total *= p.size
    if total <= _CHUNK_ROWS or len(parts) == 1:
        acc = parts[0]
        for nxt in parts[1:]:
            acc = np.bitwise_xor(acc[:, None], nxt[None, :]).reshape(-1)
        yield np.bitwise_xor(acc, offset) if offset else acc
    else:
        for v in parts[0]:
            yield from _fold_packed_char2(parts[1:], offset ^ int(v))


def _fold_digits(parts, add, radix, offset=None):
    total = 1
    for p in parts:
        total *= p.shape[0]
    if total <= _CHUNK_ROWS or len(parts) == 1:
        acc = parts[0]
        for nxt in parts[1:]:
            acc = add[acc[:, None, :], nxt[None, :, :]].reshape(
                -1, acc.shape[1])
        if offset is not None:
            acc = add[acc, offset[None, :]]
        yield acc.astype(np.int64) @ radix
    else:
        for row in parts[0]:
            off = row if offset is None else add[offset, row]
            yield from _fold_digits(parts[1:], add, radix, off)


def coset_leader_weights(H_int, n: int, ctx, budget=DEFAULT_BUDGET):
    """Leader weight per packed syndrome, plus the covering radius.

    Enumerates error vectors by increasing weight and records the first
    weight at which each syndrome appears; stops once every syndrome is
    covered.  The result does not depend on the per-weight visit order.
    """
    q = ctx.q
    r = len(H_int)
    total = q ** r
    if total > budget:
        raise BudgetExceeded(f"q^(n-k) = {total} exceeds budget {budget}")
    leader = np.full(total, 0xFF, dtype=np.uint8)
    leader[0] = 0
    if total == 1:
        return leader, 0

    packs, digs = _column_contributions(H_int, ctx)
    char2 = ctx.p == 2
    add = None if char2 else _np_add_table(ctx)
    radix = q ** np.arange(r, dtype=np.int64)

    covered = 1
    rho = 0
    for w in range(1, n + 1):
        for support in combinations(range(n), w):
            if char2:
                chunks = _fold_packed_char2([packs[j][1:] for j in support])
            else:
                chunks = _fold_digits([digs[j][1:] for j in support],
                                      add, radix)
            for syn in chunks:
                fresh = syn[leader[syn] == 0xFF]
                if fresh.size:
                    uniq = np.unique(fresh)
                    leader[uniq] = w
                    covered += uniq.size
            if covered == total:
                break
        if covered == total:
            rho = w
            break
    if covered != total:
        raise InvariantViolation("syndrome sweep did not terminate; "
                                 "parity check matrix is rank deficient")
    return leader, rho
