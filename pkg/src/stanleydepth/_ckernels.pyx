# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; same contracts as ``_purekernels``."""

from libc.stdlib cimport malloc, free as cfree, calloc

import numpy as np


def coverage_scan(origins, free, gens, bint quotient, bounds, Py_ssize_t limit):
    cdef Py_ssize_t n = len(bounds)
    cdef long[:, ::1] o = np.ascontiguousarray(np.asarray(origins, dtype=np.int_).reshape(-1, n))
    cdef unsigned char[:, ::1] f = np.ascontiguousarray(np.asarray(free, dtype=np.uint8).reshape(-1, n))
    cdef long[:, ::1] gm = np.ascontiguousarray(np.asarray(gens, dtype=np.int_).reshape(-1, n))
    cdef long[::1] b = np.ascontiguousarray(np.asarray(bounds, dtype=np.int_))
    cdef Py_ssize_t r = o.shape[0], m = gm.shape[0]
    cdef Py_ssize_t s, j, k
    cdef long cnt
    cdef bint ok, member, in_target
    cdef long *e = <long *> calloc(n if n > 0 else 1, sizeof(long))
    out = []
    if e == NULL:
        raise MemoryError()
    try:
        while True:
            cnt = 0
            for s in range(r):
                ok = True
                for j in range(n):
                    if f[s, j]:
                        if e[j] < o[s, j]:
                            ok = False
                            break
                    elif e[j] != o[s, j]:
                        ok = False
                        break
                if ok:
                    cnt += 1
            member = False
            for k in range(m):
                ok = True
                for j in range(n):
                    if e[j] < gm[k, j]:
                        ok = False
                        break
                if ok:
                    member = True
                    break
            in_target = (not member) if quotient else member
            if cnt != (1 if in_target else 0):
                out.append((tuple([e[j] for j in range(n)]), cnt, bool(in_target)))
                if limit >= 0 and len(out) >= limit:
                    break
            # advance lexicographically, last coordinate fastest
            j = n - 1
            while j >= 0:
                e[j] += 1
                if e[j] <= b[j]:
                    break
                e[j] = 0
                j -= 1
            if j < 0:
                break
    finally:
        cfree(e)
    return out


cdef struct Frame:
    Py_ssize_t cand_start   # offset into the candidate buffer
    Py_ssize_t cand_len
    Py_ssize_t pos
    Py_ssize_t selected
    Py_ssize_t removed_start
    Py_ssize_t removed_len


def exact_cover(Py_ssize_t n_items, opt_ptr, opt_items):
    cdef Py_ssize_t[::1] optp = np.ascontiguousarray(np.asarray(opt_ptr, dtype=np.intp))
    cdef Py_ssize_t[::1] opti = np.ascontiguousarray(np.asarray(opt_items, dtype=np.intp))
    cdef Py_ssize_t n_opts = optp.shape[0] - 1
    if n_items == 0:
        return []
    cdef Py_ssize_t total = optp[n_opts]
    cdef Py_ssize_t i, j, k, k2, p, q, best, best_count, remaining, depth, item, c
    # item -> options (CSR)
    cdef Py_ssize_t *itemp = <Py_ssize_t *> calloc(n_items + 1, sizeof(Py_ssize_t))
    cdef Py_ssize_t *itemo = <Py_ssize_t *> malloc((total if total > 0 else 1) * sizeof(Py_ssize_t))
    cdef Py_ssize_t *fill = <Py_ssize_t *> calloc(n_items, sizeof(Py_ssize_t))
    cdef Py_ssize_t *count = <Py_ssize_t *> calloc(n_items, sizeof(Py_ssize_t))
    cdef char *covered = <char *> calloc(n_items, sizeof(char))
    cdef char *alive = <char *> malloc((n_opts if n_opts > 0 else 1) * sizeof(char))
    # every option is removed at most once along a branch; candidates are bounded the same way
    cdef Py_ssize_t *removed = <Py_ssize_t *> malloc((n_opts if n_opts > 0 else 1) * sizeof(Py_ssize_t))
    cdef Py_ssize_t *cands = <Py_ssize_t *> malloc((total if total > 0 else 1) * sizeof(Py_ssize_t))
    cdef Frame *stack = <Frame *> malloc((n_items + 1) * sizeof(Frame))
    cdef Py_ssize_t removed_top = 0, cand_top = 0
    cdef Frame *fr
    result = None
    if (itemp == NULL or itemo == NULL or fill == NULL or count == NULL or covered == NULL
            or alive == NULL or removed == NULL or cands == NULL or stack == NULL):
        cfree(itemp); cfree(itemo); cfree(fill); cfree(count); cfree(covered)
        cfree(alive); cfree(removed); cfree(cands); cfree(stack)
        raise MemoryError()
    try:
        for k in range(n_opts):
            alive[k] = 1
            for p in range(optp[k], optp[k + 1]):
                itemp[opti[p] + 1] += 1
        for i in range(n_items):
            itemp[i + 1] += itemp[i]
        for k in range(n_opts):
            for p in range(optp[k], optp[k + 1]):
                i = opti[p]
                itemo[itemp[i] + fill[i]] = k
                fill[i] += 1
        for i in range(n_items):
            count[i] = itemp[i + 1] - itemp[i]
        remaining = n_items

        # choose first item
        best = -1
        best_count = n_opts + 1
        for i in range(n_items):
            if not covered[i] and count[i] < best_count:
                best = i
                best_count = count[i]
                if best_count <= 1:
                    break
        if best_count == 0:
            return None
        depth = 0
        fr = &stack[0]
        fr.cand_start = cand_top
        fr.cand_len = 0
        for p in range(itemp[best], itemp[best + 1]):
            if alive[itemo[p]]:
                cands[cand_top] = itemo[p]
                cand_top += 1
                fr.cand_len += 1
        fr.pos = 0
        fr.selected = -1
        fr.removed_start = removed_top
        fr.removed_len = 0

        while depth >= 0:
            fr = &stack[depth]
            if fr.selected >= 0:
                # deselect
                k = fr.selected
                for q in range(fr.removed_start + fr.removed_len - 1, fr.removed_start - 1, -1):
                    k2 = removed[q]
                    alive[k2] = 1
                    for p in range(optp[k2], optp[k2 + 1]):
                        if not covered[opti[p]]:
                            count[opti[p]] += 1
                for p in range(optp[k], optp[k + 1]):
                    covered[opti[p]] = 0
                remaining += optp[k + 1] - optp[k]
                removed_top = fr.removed_start
                fr.removed_len = 0
                fr.selected = -1
            if fr.pos >= fr.cand_len:
                cand_top = fr.cand_start
                depth -= 1
                continue
            k = cands[fr.cand_start + fr.pos]
            fr.pos += 1
            # select
            for p in range(optp[k], optp[k + 1]):
                covered[opti[p]] = 1
            fr.removed_start = removed_top
            for p in range(optp[k], optp[k + 1]):
                i = opti[p]
                for q in range(itemp[i], itemp[i + 1]):
                    k2 = itemo[q]
                    if alive[k2]:
                        alive[k2] = 0
                        removed[removed_top] = k2
                        removed_top += 1
                        for j in range(optp[k2], optp[k2 + 1]):
                            if not covered[opti[j]]:
                                count[opti[j]] -= 1
            fr.removed_len = removed_top - fr.removed_start
            fr.selected = k
            remaining -= optp[k + 1] - optp[k]
            if remaining == 0:
                result = sorted([stack[q].selected for q in range(depth + 1)])
                break
            best = -1
            best_count = n_opts + 1
            for i in range(n_items):
                if not covered[i] and count[i] < best_count:
                    best = i
                    best_count = count[i]
                    if best_count <= 1:
                        break
            if best_count == 0:
                continue
            depth += 1
            fr = &stack[depth]
            fr.cand_start = cand_top
            fr.cand_len = 0
            for p in range(itemp[best], itemp[best + 1]):
                if alive[itemo[p]]:
                    cands[cand_top] = itemo[p]
                    cand_top += 1
                    fr.cand_len += 1
            fr.pos = 0
            fr.selected = -1
            fr.removed_start = removed_top
            fr.removed_len = 0
    finally:
        cfree(itemp); cfree(itemo); cfree(fill); cfree(count); cfree(covered)
        cfree(alive); cfree(removed); cfree(cands); cfree(stack)
    return result
