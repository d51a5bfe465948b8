"""Search kernels shared by the region solver and the torus scanner.

Placements are pre-compiled to integer edge keys ``keys[k] = (n, e, s, w)``
such that two cells fit horizontally when ``keys[left, 1] == keys[right, 3]``
and vertically when ``keys[top, 2] == keys[bottom, 0]``.
"""

import numpy as np

from ._accel import njit

FINISHED = 0
CAPPED = 1
OUT_OF_BUDGET = 2


@njit
def backtrack(keys, nbr, order, dom_ptr, dom, cap, node_budget, first):
    """Depth-first count of assignments satisfying every edge constraint.

    ``nbr[c, side]`` is the neighbouring cell or -1, ``order`` the visiting
    order, and cell ``c`` draws candidates from ``dom[dom_ptr[c]:dom_ptr[c+1]]``.
    The first complete assignment found is copied into ``first``.
    Returns ``(count, nodes, status)``.
    """
    ncell = order.shape[0]
    rank = np.empty(ncell, np.int64)
    for i in range(ncell):
        rank[order[i]] = i
    assign = np.full(ncell, -1, np.int64)
    cursor = np.zeros(ncell + 1, np.int64)
    count = 0
    nodes = 0
    if ncell == 0:
        return 1, 0, FINISHED
    i = 0
    cursor[0] = dom_ptr[order[0]]
    while i >= 0:
        cell = order[i]
        stop = dom_ptr[cell + 1]
        found = -1
        j = cursor[i]
        while j < stop:
            k = dom[j]
            j += 1
            ok = True
            for side in range(4):
                other = nbr[cell, side]
                if other < 0:
                    continue
                if other == cell:
                    o = k
                elif rank[other] < i:
                    o = assign[other]
                else:
                    continue
                if side == 0:
                    ok = keys[o, 2] == keys[k, 0]
                elif side == 1:
                    ok = keys[k, 1] == keys[o, 3]
                elif side == 2:
                    ok = keys[k, 2] == keys[o, 0]
                else:
                    ok = keys[o, 1] == keys[k, 3]
                if not ok:
                    break
            if ok:
                found = k
                break
        cursor[i] = j
        nodes += 1
        if found < 0:
            assign[cell] = -1
            i -= 1
        else:
            assign[cell] = found
            if i + 1 == ncell:
                if count == 0:
                    first[:] = assign
                count += 1
                if count >= cap:
                    return count, nodes, CAPPED
            else:
                i += 1
                cursor[i] = dom_ptr[order[i]]
        if nodes >= node_budget:
            return count, nodes, OUT_OF_BUDGET
    return count, nodes, FINISHED


def grid_neighbours(width, height, wrap=False, shift=0):
    """Neighbour table for a rectangle, optionally a sheared torus.

    On the torus, the cell below ``(c, height-1)`` is ``((c + shift) % width, 0)``.
    """
    n = width * height
    nbr = np.full((n, 4), -1, np.int64)
    for r in range(height):
        for c in range(width):
            i = r * width + c
            if r > 0:
                nbr[i, 0] = i - width
            elif wrap:
                nbr[i, 0] = (height - 1) * width + (c - shift) % width
            if c + 1 < width:
                nbr[i, 1] = i + 1
            elif wrap:
                nbr[i, 1] = r * width
            if r + 1 < height:
                nbr[i, 2] = i + width
            elif wrap:
                nbr[i, 2] = (c + shift) % width
            if c > 0:
                nbr[i, 3] = i - 1
            elif wrap:
                nbr[i, 3] = r * width + width - 1
    return nbr
