"""Compiled kd-tree kernels used by :mod:`monotone_mst.proximity`.

Trees are implicit: a slot range ``[lo, hi)`` is a node whose splitting
point sits at ``(lo + hi) // 2``; the left and right halves are the
children.  Searches run on float copies of the coordinates and return every
slot whose float distance could tie the true minimum, so callers can finish
the comparison exactly.
"""

import numpy as np
from numba import njit

_STACK = 256


@njit(cache=True)
def build(x, y, ids, dims, lo, hi):
    stack_lo = np.empty(_STACK, np.int64)
    stack_hi = np.empty(_STACK, np.int64)
    sp = 0
    stack_lo[0] = lo
    stack_hi[0] = hi
    sp = 1
    while sp > 0:
        sp -= 1
        a = stack_lo[sp]
        b = stack_hi[sp]
        if b - a <= 0:
            continue
        mid = (a + b) >> 1
        if b - a == 1:
            dims[mid] = 0
            continue
        xmin = x[a]
        xmax = x[a]
        ymin = y[a]
        ymax = y[a]
        for k in range(a + 1, b):
            if x[k] < xmin:
                xmin = x[k]
            elif x[k] > xmax:
                xmax = x[k]
            if y[k] < ymin:
                ymin = y[k]
            elif y[k] > ymax:
                ymax = y[k]
        d = 0 if xmax - xmin >= ymax - ymin else 1
        if d == 0:
            order = np.argsort(x[a:b], kind="mergesort")
        else:
            order = np.argsort(y[a:b], kind="mergesort")
        xs = x[a:b][order]
        ys = y[a:b][order]
        ii = ids[a:b][order]
        x[a:b] = xs
        y[a:b] = ys
        ids[a:b] = ii
        dims[mid] = d
        stack_lo[sp] = a
        stack_hi[sp] = mid
        sp += 1
        stack_lo[sp] = mid + 1
        stack_hi[sp] = b
        sp += 1


@njit(cache=True)
def build_levels(lx, ly, lid, ldim, start, size, top, leaf):
    """Copy the attribute-sorted row 0 into rows ``leaf..top`` and kd-build
    every aligned chunk of ``2**level`` slots."""
    for lev in range(leaf, top + 1):
        lx[lev, start : start + size] = lx[0, start : start + size]
        ly[lev, start : start + size] = ly[0, start : start + size]
        lid[lev, start : start + size] = lid[0, start : start + size]
        width = 1 << lev
        for c in range(start, start + size, width):
            build(lx[lev], ly[lev], lid[lev], ldim[lev], c, c + width)


@njit(cache=True)
def _search(x, y, ids, dims, lo, hi, qx, qy, slack, state, cand, cand_d):
    """Depth-first nearest-first search of one implicit tree.

    ``state`` carries (best, threshold, count, overflow) across calls.
    """
    stack_lo = np.empty(_STACK, np.int64)
    stack_hi = np.empty(_STACK, np.int64)
    stack_lb = np.empty(_STACK, np.float64)
    stack_lo[0] = lo
    stack_hi[0] = hi
    stack_lb[0] = 0.0
    sp = 1
    cap = cand.shape[0]
    while sp > 0:
        sp -= 1
        a = stack_lo[sp]
        b = stack_hi[sp]
        if b <= a or stack_lb[sp] > state[1]:
            continue
        mid = (a + b) >> 1
        dx = x[mid] - qx
        dy = y[mid] - qy
        d2 = dx * dx + dy * dy
        if d2 < state[0]:
            state[0] = d2
            r = np.sqrt(d2) * (1.0 + 1e-12) + slack
            state[1] = r * r
        if d2 <= state[1]:
            c = int(state[2])
            if c < cap:
                cand[c] = ids[mid]
                cand_d[c] = d2
                state[2] = c + 1
            else:
                state[3] = 1.0
        if b - a == 1:
            continue
        diff = qx - x[mid] if dims[mid] == 0 else qy - y[mid]
        if diff < 0:
            stack_lo[sp] = mid + 1
            stack_hi[sp] = b
            stack_lb[sp] = diff * diff
            sp += 1
            stack_lo[sp] = a
            stack_hi[sp] = mid
            stack_lb[sp] = 0.0
            sp += 1
        else:
            stack_lo[sp] = a
            stack_hi[sp] = mid
            stack_lb[sp] = diff * diff
            sp += 1
            stack_lo[sp] = mid + 1
            stack_hi[sp] = b
            stack_lb[sp] = 0.0
            sp += 1


@njit(cache=True)
def _scan(x, y, ids, lo, hi, qx, qy, slack, state, cand, cand_d):
    cap = cand.shape[0]
    for k in range(lo, hi):
        dx = x[k] - qx
        dy = y[k] - qy
        d2 = dx * dx + dy * dy
        if d2 < state[0]:
            state[0] = d2
            r = np.sqrt(d2) * (1.0 + 1e-12) + slack
            state[1] = r * r
        if d2 <= state[1]:
            c = int(state[2])
            if c < cap:
                cand[c] = ids[k]
                cand_d[c] = d2
                state[2] = c + 1
            else:
                state[3] = 1.0


@njit(cache=True)
def _compact(state, cand, cand_d):
    if state[3] > 0.0:
        return -1
    k = 0
    for t in range(int(state[2])):
        if cand_d[t] <= state[1]:
            cand[k] = cand[t]
            k += 1
    return k


@njit(cache=True)
def query(x, y, ids, dims, n, qx, qy, slack, cand, cand_d):
    """Candidates over the binary-counter blocks of ``n`` slots.

    Returns the number of candidates written to ``cand`` (insertion ids),
    or -1 if the buffer overflowed.
    """
    state = np.empty(4, np.float64)
    state[0] = np.inf
    state[1] = np.inf
    state[2] = 0.0
    state[3] = 0.0
    bit = 1
    while bit * 2 <= n:
        bit *= 2
    start = 0
    while bit > 0:
        if n & bit:
            _search(x, y, ids, dims, start, start + bit, qx, qy, slack, state, cand, cand_d)
            start += bit
        bit >>= 1
    return _compact(state, cand, cand_d)


@njit(cache=True)
def range_bounds(lattr, n, lo, hi, starts, sizes, a_out, b_out, flags):
    """Per-block slot bounds of the attribute range ``[lo, hi]`` in float.

    A block is flagged when a boundary element's float attribute equals a
    float bound, since then only an exact comparison can decide it.
    """
    bit = 1
    while bit * 2 <= n:
        bit *= 2
    start = 0
    nb = 0
    while bit > 0:
        if n & bit:
            seg = lattr[start : start + bit]
            a = np.searchsorted(seg, lo, side="left")
            b = np.searchsorted(seg, hi, side="right")
            flag = 0
            if a < bit and seg[a] == lo:
                flag = 1
            if b > 0 and seg[b - 1] == hi:
                flag = 1
            starts[nb] = start
            sizes[nb] = bit
            a_out[nb] = a
            b_out[nb] = b
            flags[nb] = flag
            nb += 1
            start += bit
        bit >>= 1
    return nb


@njit(cache=True)
def range_query(lx, ly, lid, ldim, nb, starts, a_arr, b_arr, leaf, qx, qy, slack, cand, cand_d):
    """Nearest candidates among slots ``a..b`` of every block.

    Each slot range is split into aligned power-of-two chunks (the canonical
    groups of the attribute tree); chunks at ``leaf`` or above are searched
    through their kd-tree, smaller ones are scanned.
    """
    state = np.empty(4, np.float64)
    state[0] = np.inf
    state[1] = np.inf
    state[2] = 0.0
    state[3] = 0.0
    for blk in range(nb):
        start = starts[blk]
        a = a_arr[blk]
        b = b_arr[blk]
        while a < b:
            lev = 0
            while ((a >> (lev + 1)) << (lev + 1)) == a and a + (1 << (lev + 1)) <= b:
                lev += 1
            width = 1 << lev
            if lev >= leaf:
                _search(
                    lx[lev], ly[lev], lid[lev], ldim[lev],
                    start + a, start + a + width, qx, qy, slack, state, cand, cand_d,
                )
            else:
                _scan(lx[0], ly[0], lid[0], start + a, start + a + width, qx, qy, slack, state, cand, cand_d)
            a += width
    return _compact(state, cand, cand_d)
