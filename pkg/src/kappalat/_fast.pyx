# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of kappalat._pure.

Same four kernels, same argument and result conventions; the int
bitmask rows are unpacked into flat uint64 matrices once per call.
kappalat._backend falls back to the pure module when this extension
is absent, and routes label sweeps wider than 64 join-irreducibles
to the pure module as well.
"""

from cpython.mem cimport PyMem_Malloc, PyMem_Free
from libc.stdint cimport uint64_t
from libc.string cimport memcpy, memset

cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil
    int __builtin_clzll(unsigned long long) nogil
    int __builtin_popcountll(unsigned long long) nogil

NAME = "fast"


cdef uint64_t* _matrix(list masks, Py_ssize_t n, Py_ssize_t W) except NULL:
    cdef uint64_t* mat = <uint64_t*> PyMem_Malloc(n * W * sizeof(uint64_t))
    if mat == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    cdef bytes bs
    for i in range(n):
        bs = (<object> masks[i]).to_bytes(W * 8, "little")
        memcpy(mat + i * W, <const unsigned char*> bs, W * 8)
    return mat


cdef inline bint _bit(const uint64_t* row, Py_ssize_t i) nogil:
    return (row[i >> 6] >> (i & 63)) & 1


cdef inline Py_ssize_t _row_lsb(const uint64_t* row, Py_ssize_t W) nogil:
    cdef Py_ssize_t w
    for w in range(W):
        if row[w]:
            return (w << 6) + __builtin_ctzll(row[w])
    return -1


cdef inline Py_ssize_t _row_msb(const uint64_t* row, Py_ssize_t W) nogil:
    cdef Py_ssize_t w
    for w in range(W - 1, -1, -1):
        if row[w]:
            return (w << 6) + 63 - __builtin_clzll(row[w])
    return -1


cdef inline Py_ssize_t _and_lsb(const uint64_t* r1, const uint64_t* r2, Py_ssize_t W) nogil:
    cdef Py_ssize_t w
    cdef uint64_t v
    for w in range(W):
        v = r1[w] & r2[w]
        if v:
            return (w << 6) + __builtin_ctzll(v)
    return -1


cdef inline Py_ssize_t _and_msb(const uint64_t* r1, const uint64_t* r2, Py_ssize_t W) nogil:
    cdef Py_ssize_t w
    cdef uint64_t v
    for w in range(W - 1, -1, -1):
        v = r1[w] & r2[w]
        if v:
            return (w << 6) + 63 - __builtin_clzll(v)
    return -1


def first_missing_meet(Py_ssize_t n, list up, list down):
    cdef Py_ssize_t W = (n + 63) >> 6
    cdef uint64_t* umat = _matrix(up, n, W)
    cdef uint64_t* dmat
    try:
        dmat = _matrix(down, n, W)
    except BaseException:
        PyMem_Free(umat)
        raise
    cdef Py_ssize_t a, b, m, w
    cdef const uint64_t* da
    cdef const uint64_t* db
    cdef const uint64_t* dm
    cdef bint ok
    try:
        for a in range(n):
            da = dmat + a * W
            for b in range(a + 1, n):
                if _bit(umat + a * W, b) or _bit(da, b):
                    continue
                db = dmat + b * W
                m = _and_msb(da, db, W)
                dm = dmat + m * W
                ok = True
                for w in range(W):
                    if (da[w] & db[w]) & ~dm[w]:
                        ok = False
                        break
                if not ok:
                    return (a, b)
        return None
    finally:
        PyMem_Free(umat)
        PyMem_Free(dmat)


def sd_witness(Py_ssize_t n, list up, list down):
    cdef Py_ssize_t W = (n + 63) >> 6
    cdef uint64_t* umat = _matrix(up, n, W)
    cdef uint64_t* dmat = NULL
    cdef uint64_t* fiber = NULL
    cdef uint64_t* member = NULL
    cdef Py_ssize_t* touched = NULL
    cdef unsigned char* seen = NULL
    cdef Py_ssize_t a, x, v, m, t, ntouch, w
    cdef object witness = None
    try:
        dmat = _matrix(down, n, W)
        fiber = <uint64_t*> PyMem_Malloc(n * W * sizeof(uint64_t))
        member = <uint64_t*> PyMem_Malloc(n * W * sizeof(uint64_t))
        touched = <Py_ssize_t*> PyMem_Malloc(n * sizeof(Py_ssize_t))
        seen = <unsigned char*> PyMem_Malloc(n)
        if fiber == NULL or member == NULL or touched == NULL or seen == NULL:
            raise MemoryError()
        memset(seen, 0, n)

        # join law: fibers of x -> join(a, x), accumulate meets of each fiber
        for a in range(n):
            ntouch = 0
            for x in range(n):
                v = _and_lsb(umat + a * W, umat + x * W, W)
                if not seen[v]:
                    seen[v] = 1
                    touched[ntouch] = v
                    ntouch += 1
                    memcpy(fiber + v * W, dmat + x * W, W * 8)
                    memset(member + v * W, 0, W * 8)
                else:
                    for w in range(W):
                        fiber[v * W + w] &= dmat[x * W + w]
                member[v * W + (x >> 6)] |= (<uint64_t> 1) << (x & 63)
            for t in range(ntouch):
                v = touched[t]
                seen[v] = 0
                m = _row_msb(fiber + v * W, W)
                if _and_lsb(umat + a * W, umat + m * W, W) != v:
                    witness = _locate_join_pair(umat, dmat, W, a, v, member + v * W, n)
                    return witness
        # meet law, dual
        for a in range(n):
            ntouch = 0
            for x in range(n):
                v = _and_msb(dmat + a * W, dmat + x * W, W)
                if not seen[v]:
                    seen[v] = 1
                    touched[ntouch] = v
                    ntouch += 1
                    memcpy(fiber + v * W, umat + x * W, W * 8)
                    memset(member + v * W, 0, W * 8)
                else:
                    for w in range(W):
                        fiber[v * W + w] &= umat[x * W + w]
                member[v * W + (x >> 6)] |= (<uint64_t> 1) << (x & 63)
            for t in range(ntouch):
                v = touched[t]
                seen[v] = 0
                m = _row_lsb(fiber + v * W, W)
                if _and_msb(dmat + a * W, dmat + m * W, W) != v:
                    witness = _locate_meet_pair(umat, dmat, W, a, v, member + v * W, n)
                    return witness
        return None
    finally:
        PyMem_Free(umat)
        if dmat != NULL:
            PyMem_Free(dmat)
        if fiber != NULL:
            PyMem_Free(fiber)
        if member != NULL:
            PyMem_Free(member)
        if touched != NULL:
            PyMem_Free(touched)
        if seen != NULL:
            PyMem_Free(seen)


cdef object _locate_join_pair(const uint64_t* umat, const uint64_t* dmat, Py_ssize_t W,
                              Py_ssize_t a, Py_ssize_t v, const uint64_t* member, Py_ssize_t n):
    cdef Py_ssize_t x, y
    for x in range(n):
        if not _bit(member, x):
            continue
        for y in range(x + 1, n):
            if not _bit(member, y):
                continue
            if _and_lsb(umat + a * W, umat + _and_msb(dmat + x * W, dmat + y * W, W) * W, W) != v:
                return ("join", a, x, y)
    raise AssertionError("fiber meet escaped but every pair agrees")


cdef object _locate_meet_pair(const uint64_t* umat, const uint64_t* dmat, Py_ssize_t W,
                              Py_ssize_t a, Py_ssize_t v, const uint64_t* member, Py_ssize_t n):
    cdef Py_ssize_t x, y
    for x in range(n):
        if not _bit(member, x):
            continue
        for y in range(x + 1, n):
            if not _bit(member, y):
                continue
            if _and_msb(dmat + a * W, dmat + _and_lsb(umat + x * W, umat + y * W, W) * W, W) != v:
                return ("meet", a, x, y)
    raise AssertionError("fiber join escaped but every pair agrees")


def transitive_reduction(Py_ssize_t n, list up, list down):
    cdef Py_ssize_t W = (n + 63) >> 6
    cdef uint64_t* umat = _matrix(up, n, W)
    cdef uint64_t* dmat
    try:
        dmat = _matrix(down, n, W)
    except BaseException:
        PyMem_Free(umat)
        raise
    cdef list pairs = []
    cdef Py_ssize_t upper, lower, w, count
    cdef uint64_t word
    try:
        for upper in range(n):
            for lower in range(n):
                if lower == upper or not _bit(dmat + upper * W, lower):
                    continue
                # cover iff the closed interval [lower, upper] has exactly 2 elements
                count = 0
                for w in range(W):
                    word = umat[lower * W + w] & dmat[upper * W + w]
                    count += __builtin_popcountll(word)
                    if count > 2:
                        break
                if count == 2:
                    pairs.append((upper, lower))
        return pairs
    finally:
        PyMem_Free(umat)
        PyMem_Free(dmat)


def interval_images(Py_ssize_t n, list up, list down, list belowj, list kge,
                    list cover_ups, str kind):
    cdef Py_ssize_t W = (n + 63) >> 6
    cdef uint64_t* umat = _matrix(up, n, W)
    cdef uint64_t* dmat = NULL
    cdef uint64_t* bj = NULL
    cdef uint64_t* kg = NULL
    cdef Py_ssize_t* cu_off = NULL
    cdef Py_ssize_t* cu_dat = NULL
    cdef Py_ssize_t total, i, k, a, b, c, w, bound, wjoin
    cdef int kcode = 0 if kind == "all" else (1 if kind == "wide" else 2)
    cdef uint64_t kga, jl
    cdef const uint64_t* ua
    cdef dict images = {}
    cdef object key
    try:
        dmat = _matrix(down, n, W)
        bj = <uint64_t*> PyMem_Malloc(n * sizeof(uint64_t))
        kg = <uint64_t*> PyMem_Malloc(n * sizeof(uint64_t))
        if bj == NULL or kg == NULL:
            raise MemoryError()
        for i in range(n):
            bj[i] = <uint64_t> belowj[i]
            kg[i] = <uint64_t> kge[i]
        total = 0
        for i in range(n):
            total += len(cover_ups[i])
        cu_off = <Py_ssize_t*> PyMem_Malloc((n + 1) * sizeof(Py_ssize_t))
        cu_dat = <Py_ssize_t*> PyMem_Malloc((total if total else 1) * sizeof(Py_ssize_t))
        if cu_off == NULL or cu_dat == NULL:
            raise MemoryError()
        k = 0
        for i in range(n):
            cu_off[i] = k
            for c in cover_ups[i]:
                cu_dat[k] = c
                k += 1
        cu_off[n] = k

        for a in range(n):
            kga = kg[a]
            ua = umat + a * W
            bound = a
            if kcode == 2:
                for k in range(cu_off[a], cu_off[a + 1]):
                    bound = _and_lsb(umat + bound * W, umat + cu_dat[k] * W, W)
            for b in range(a, n):
                if not _bit(ua, b):
                    continue
                if kcode == 1:
                    wjoin = a
                    for k in range(cu_off[a], cu_off[a + 1]):
                        c = cu_dat[k]
                        if _bit(dmat + b * W, c):
                            wjoin = _and_lsb(umat + wjoin * W, umat + c * W, W)
                    if wjoin != b:
                        continue
                elif kcode == 2:
                    if not _bit(dmat + bound * W, b):
                        continue
                jl = bj[b] & kga
                key = jl
                if key not in images:
                    images[key] = (a, b)
        return images
    finally:
        PyMem_Free(umat)
        if dmat != NULL:
            PyMem_Free(dmat)
        if bj != NULL:
            PyMem_Free(bj)
        if kg != NULL:
            PyMem_Free(kg)
        if cu_off != NULL:
            PyMem_Free(cu_off)
        if cu_dat != NULL:
            PyMem_Free(cu_dat)
