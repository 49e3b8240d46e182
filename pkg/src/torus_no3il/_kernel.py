"""Compiled branch-and-bound core for :mod:`torus_no3il.solver`.

Bitsets are rows of ``uint64`` words.  The search stack lives in arrays owned
by the caller, so :func:`search` can stop after a node quota and be called
again to resume exactly where it left off.
"""

import numpy as np
from numba import njit

DONE = 0
PAUSED = 1
AT_CAP = 2

_M1 = np.uint64(0x5555555555555555)
_M2 = np.uint64(0x3333333333333333)
_M4 = np.uint64(0x0F0F0F0F0F0F0F0F)
_H01 = np.uint64(0x0101010101010101)


@njit(cache=True, inline="always")
def _popcount(x):
    x = x - ((x >> np.uint64(1)) & _M1)
    x = (x & _M2) + ((x >> np.uint64(2)) & _M2)
    x = (x + (x >> np.uint64(4))) & _M4
    return np.int64((x * _H01) >> np.uint64(56))


@njit(cache=True)
def _count(row):
    total = 0
    for w in range(row.shape[0]):
        total += _popcount(row[w])
    return total


@njit(cache=True)
def _count_and(a, b):
    total = 0
    for w in range(a.shape[0]):
        total += _popcount(a[w] & b[w])
    return total


@njit(cache=True)
def _bound(k, chosen, cm, avail, partitions, pencils, use_pencils, target):
    """Upper bound on a completion; stops early once it drops to ``target``."""
    best = k + _count(avail)
    if best <= target:
        return best
    n_words = avail.shape[0]
    for p in range(partitions.shape[0]):
        total = k
        for ln in range(partitions.shape[1]):
            line = partitions[p, ln]
            free = 2 - _count_and(cm, line)
            if free > 0:
                have = _count_and(avail, line)
                total += free if have > free else have
        if total < best:
            best = total
            if best <= target:
                return best
    if use_pencils:
        for j in range(k):
            a = chosen[j]
            aw = a >> 6
            abit = np.uint64(1) << np.uint64(a & 63)
            total = 1
            for ln in range(pencils.shape[1]):
                for w in range(n_words):
                    live = (cm[w] | avail[w]) & pencils[a, ln, w]
                    if w == aw:
                        live &= ~abit
                    if live != 0:
                        total += 1
                        break
            if total < best:
                best = total
                if best <= target:
                    return best
    return best


@njit(cache=True)
def search(
    m, n, upper, translations,
    thr_ptr, thr_idx,
    partitions, pencils, use_pencils,
    depth_box, chosen, cm, avail, fresh,
    best, best_k_box, counters, node_quota, node_cap,
):
    """Run (or resume) the depth-first search.

    ``depth_box[0]`` is the current depth (-1 once finished), ``best_k_box[0]``
    the incumbent size, ``counters`` = [nodes, prunes].
    """
    depth = depth_box[0]
    best_k = best_k_box[0]
    n_words = avail.shape[1]
    quota_end = counters[0] + node_quota
    status = DONE
    while depth >= 0:
        if fresh[depth]:
            fresh[depth] = False
            counters[0] += 1
            if depth > best_k:
                best_k = depth
                for j in range(depth):
                    best[j] = chosen[j]
                if best_k == upper:
                    depth = -1
                    break
            if counters[0] >= node_cap:
                status = AT_CAP
                break
            if counters[0] >= quota_end:
                status = PAUSED
                break
        if _count(avail[depth]) == 0:
            depth -= 1
            continue
        if _bound(depth, chosen, cm[depth], avail[depth], partitions, pencils, use_pencils, best_k) <= best_k:
            counters[1] += 1
            depth -= 1
            continue
        # lowest available point
        i = -1
        for w in range(n_words):
            word = avail[depth, w]
            if word != 0:
                low = word & (~word + np.uint64(1))
                i = w * 64 + _popcount(low - np.uint64(1))
                avail[depth, w] = word ^ low
                break
        chosen[depth] = i
        ix, iy = i // n, i % n
        nxt = depth + 1
        for w in range(n_words):
            avail[nxt, w] = avail[depth, w]
            cm[nxt, w] = cm[depth, w]
        if translations and depth == 0:
            # every nonempty set translates onto one through the origin
            for w in range(n_words):
                avail[0, w] = 0
        cm[nxt, i >> 6] |= np.uint64(1) << np.uint64(i & 63)
        for j in range(depth):
            c = chosen[j]
            cx, cy = c // n, c % n
            e = ((ix - cx) % m) * n + (iy - cy) % n
            for t in range(thr_ptr[e], thr_ptr[e + 1]):
                f = thr_idx[t]
                q = ((cx + f // n) % m) * n + (cy + f % n) % n
                avail[nxt, q >> 6] &= ~(np.uint64(1) << np.uint64(q & 63))
        if translations and depth >= 1:
            # canonical translate: the second point is the least pairwise difference
            x1 = chosen[1]
            if depth == 1 and ((-ix) % m) * n + (-iy) % n < i:
                continue
            first = 0 if depth == 1 else depth
            for j in range(first, depth + 1):
                cx, cy = chosen[j] // n, chosen[j] % n
                for d in range(1, x1):
                    dx, dy = d // n, d % n
                    q = ((cx + dx) % m) * n + (cy + dy) % n
                    avail[nxt, q >> 6] &= ~(np.uint64(1) << np.uint64(q & 63))
                    q = ((cx - dx) % m) * n + (cy - dy) % n
                    avail[nxt, q >> 6] &= ~(np.uint64(1) << np.uint64(q & 63))
        fresh[nxt] = True
        depth = nxt
    depth_box[0] = depth
    best_k_box[0] = best_k
    return status
