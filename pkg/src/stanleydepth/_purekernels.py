"""Reference (non-compiled) versions of the hot kernels.

The compiled module ``_ckernels`` exposes the same two functions with the same
contracts; :mod:`stanleydepth.kernels` picks one at import.
"""

from __future__ import annotations

import numpy as np


def coverage_scan(origins, free, gens, quotient, bounds, limit):
    """Box points whose slab count disagrees with target membership.

    Scans every e with 0 <= e_j <= bounds[j] in lexicographic order (first
    coordinate slowest).  A point is correct when it lies in exactly one slab
    and belongs to the target, or in no slab and lies outside it.  Returns up
    to ``limit`` tuples ``(point, slab_count, in_target)``.
    """
    n = len(bounds)
    shape = tuple(int(b) + 1 for b in bounds)
    pts = np.indices(shape, dtype=np.int64).reshape(n, -1).T
    origins = np.asarray(origins, dtype=np.int64).reshape(-1, n)
    free = np.asarray(free, dtype=bool).reshape(-1, n)
    gens = np.asarray(gens, dtype=np.int64).reshape(-1, n)

    count = np.zeros(len(pts), dtype=np.int64)
    for o, f in zip(origins, free):
        ok = np.where(f, pts >= o, pts == o).all(axis=1)
        count += ok
    in_ideal = np.zeros(len(pts), dtype=bool)
    for g in gens:
        in_ideal |= (pts >= g).all(axis=1)
    in_target = ~in_ideal if quotient else in_ideal
    bad = np.nonzero(count != in_target.astype(np.int64))[0]
    if limit >= 0:
        bad = bad[:limit]
    return [(tuple(int(x) for x in pts[i]), int(count[i]), bool(in_target[i])) for i in bad]


def exact_cover(n_items, opt_ptr, opt_items):
    """Exact cover of items 0..n_items-1 by options, or None.

    Options are given in CSR form: option k covers
    ``opt_items[opt_ptr[k]:opt_ptr[k+1]]``.  Algorithm X with the
    fewest-remaining-options rule; ties go to the smallest item index and
    options are tried in index order, so the answer is deterministic.
    Returns the chosen option indices sorted ascending.
    """
    n_opts = len(opt_ptr) - 1
    if n_items == 0:
        return []
    options = [list(opt_items[opt_ptr[k]:opt_ptr[k + 1]]) for k in range(n_opts)]
    item_opts: list[list[int]] = [[] for _ in range(n_items)]
    for k, opt in enumerate(options):
        for i in opt:
            item_opts[i].append(k)
    count = [len(lst) for lst in item_opts]
    covered = [False] * n_items
    alive = [True] * n_opts

    def choose_item():
        best, best_count = -1, n_opts + 1
        for i in range(n_items):
            if not covered[i] and count[i] < best_count:
                best, best_count = i, count[i]
                if best_count <= 1:
                    break
        return best, best_count

    def select(k):
        removed = []
        opt = options[k]
        for i in opt:
            covered[i] = True
        for i in opt:
            for k2 in item_opts[i]:
                if alive[k2]:
                    alive[k2] = False
                    removed.append(k2)
                    for j in options[k2]:
                        if not covered[j]:
                            count[j] -= 1
        return removed

    def deselect(k, removed):
        for k2 in reversed(removed):
            alive[k2] = True
            for j in options[k2]:
                if not covered[j]:
                    count[j] += 1
        for i in options[k]:
            covered[i] = False

    remaining = n_items
    # Each frame: (candidate options, next position, selected option, removed list)
    stack: list[list] = []
    item, c = choose_item()
    if c == 0:
        return None
    stack.append([[k for k in item_opts[item] if alive[k]], 0, -1, None])
    while stack:
        frame = stack[-1]
        if frame[2] >= 0:
            deselect(frame[2], frame[3])
            remaining += len(options[frame[2]])
            frame[2] = -1
        cands, pos = frame[0], frame[1]
        if pos >= len(cands):
            stack.pop()
            continue
        k = cands[pos]
        frame[1] = pos + 1
        frame[3] = select(k)
        frame[2] = k
        remaining -= len(options[k])
        if remaining == 0:
            return sorted(f[2] for f in stack)
        item, c = choose_item()
        if c == 0:
            continue
        stack.append([[k2 for k2 in item_opts[item] if alive[k2]], 0, -1, None])
    return None
