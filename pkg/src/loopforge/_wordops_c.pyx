# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of ``_wordops_py``: identical semantics, C-speed loops.

Parity with the pure kernel is enforced by tests/test_kernel_parity.py.
"""

from libc.stdlib cimport free, malloc
from libc.string cimport memcmp, memcpy

IMPL = "c"


cdef inline Py_ssize_t _reduce_into(const unsigned char *src, Py_ssize_t n,
                                    unsigned char *dst) noexcept nogil:
    cdef Py_ssize_t top = 0, i
    for i in range(n):
        if top > 0 and (dst[top - 1] ^ 1) == src[i]:
            top -= 1
        else:
            dst[top] = src[i]
            top += 1
    return top


def free_reduce(w):
    cdef bytes wb = bytes(w)
    cdef Py_ssize_t n = len(wb)
    if n == 0:
        return b""
    cdef unsigned char *buf = <unsigned char *> malloc(n)
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t m = _reduce_into(<const unsigned char *> wb, n, buf)
    try:
        return (<char *> buf)[:m]
    finally:
        free(buf)


def inverse_word(w):
    cdef bytes wb = bytes(w)
    cdef Py_ssize_t n = len(wb)
    if n == 0:
        return b""
    cdef const unsigned char *src = <const unsigned char *> wb
    cdef unsigned char *buf = <unsigned char *> malloc(n)
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(n):
        buf[i] = src[n - 1 - i] ^ 1
    try:
        return (<char *> buf)[:n]
    finally:
        free(buf)


def mul(u, v):
    cdef bytes ub = bytes(u), vb = bytes(v)
    cdef Py_ssize_t i = len(ub), j = 0, nv = len(vb)
    cdef const unsigned char *up = <const unsigned char *> ub
    cdef const unsigned char *vp = <const unsigned char *> vb
    while i > 0 and j < nv and (up[i - 1] ^ 1) == vp[j]:
        i -= 1
        j += 1
    return ub[:i] + vb[j:]


def min_rotation(w):
    cdef bytes wb = bytes(w)
    cdef Py_ssize_t n = len(wb)
    if n <= 1:
        return wb
    cdef bytes ww = wb + wb
    cdef const unsigned char *p = <const unsigned char *> ww
    cdef Py_ssize_t best = 0, i
    for i in range(1, n):
        if memcmp(p + i, p + best, n) < 0:
            best = i
    return ww[best : best + n]


def cyclic_free_reduce(w):
    cdef bytes wb = free_reduce(w)
    cdef Py_ssize_t a = 0, b = len(wb)
    cdef const unsigned char *p = <const unsigned char *> wb
    while b - a >= 2 and (p[a] ^ 1) == p[b - 1]:
        a += 1
        b -= 1
    return wb[a:b]


# --- relator table packing ----------------------------------------------------

cdef class _Pack:
    cdef public int R, h, nrot
    cdef bytes rot_blob
    cdef bytes repl_blob
    cdef const unsigned char *rot_ptr
    cdef const unsigned char *repl_ptr
    cdef int *repl_off
    cdef short *gram

    def __cinit__(self):
        self.repl_off = NULL
        self.gram = NULL

    def __dealloc__(self):
        if self.repl_off != NULL:
            free(self.repl_off)
        if self.gram != NULL:
            free(self.gram)

    cdef const unsigned char *rot(self, int j) noexcept nogil:
        return self.rot_ptr + j * self.R

    cdef const unsigned char *repl(self, int j, int ell, int *length) noexcept nogil:
        cdef int k = j * (self.R + 1) + ell
        length[0] = self.repl_off[k + 1] - self.repl_off[k]
        return self.repl_ptr + self.repl_off[k]


_packs = {}


def _get_pack(T):
    key = T.relator
    pk = _packs.get(key)
    if pk is not None:
        return pk
    cdef _Pack p = _Pack()
    p.R = T.length
    p.h = T.half
    p.nrot = len(T.rotations)
    p.rot_blob = b"".join(T.rotations)
    p.rot_ptr = <const unsigned char *> p.rot_blob
    offs = [0]
    total = 0
    chunks = []
    for j in range(p.nrot):
        for ell in range(p.R + 1):
            rep = T.replacement(j, ell)
            chunks.append(rep)
            total += len(rep)
            offs.append(total)
    p.repl_blob = b"".join(chunks)
    p.repl_ptr = <const unsigned char *> p.repl_blob
    p.repl_off = <int *> malloc(len(offs) * sizeof(int))
    if p.repl_off == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(len(offs)):
        p.repl_off[i] = offs[i]
    p.gram = <short *> malloc(65536 * sizeof(short))
    if p.gram == NULL:
        raise MemoryError()
    for i in range(65536):
        p.gram[i] = -1
    for key2, j in T.gram2.items():
        p.gram[(<unsigned char> key2[0]) * 256 + (<unsigned char> key2[1])] = <short> j
    _packs[key] = p
    return p


cdef inline int _match_at(_Pack P, const unsigned char *w, Py_ssize_t n,
                          Py_ssize_t p, int *ell_out) noexcept nogil:
    if p + 2 > n:
        ell_out[0] = 0
        return -1
    cdef int j = P.gram[w[p] * 256 + w[p + 1]]
    if j < 0:
        ell_out[0] = 0
        return -1
    cdef const unsigned char *rho = P.rot(j)
    cdef Py_ssize_t limit = P.R
    if n - p < limit:
        limit = n - p
    cdef int ell = 2
    while ell < limit and w[p + ell] == rho[ell]:
        ell += 1
    ell_out[0] = ell
    return j


cdef bytes _dehn_shorten_b(_Pack P, bytes w):
    cdef bytes cur = free_reduce(w)
    cdef Py_ssize_t n, p
    cdef int j, ell, rl
    cdef const unsigned char *cp
    cdef const unsigned char *rep
    cdef bint hit
    while True:
        n = len(cur)
        cp = <const unsigned char *> cur
        p = 0
        hit = False
        while p <= n - 2:
            j = _match_at(P, cp, n, p, &ell)
            if j >= 0 and ell > P.h:
                rep = P.repl(j, ell, &rl)
                cur = free_reduce(cur[:p] + (<char *> rep)[:rl] + cur[p + ell :])
                hit = True
                break
            p += 1
        if not hit:
            return cur


def dehn_shorten(w, T):
    return _dehn_shorten_b(_get_pack(T), bytes(w))


def element_nf(w, T):
    cdef bytes cur = free_reduce(w)
    if T is None:
        return cur
    cdef _Pack P = _get_pack(T)
    cur = _dehn_shorten_b(P, cur)
    cdef int h = P.h
    cdef long guard = 16 * (len(cur) + 4) * (P.R + 1)
    cdef Py_ssize_t n, p
    cdef int j, ell, rl
    cdef const unsigned char *cp
    cdef const unsigned char *rep
    cdef bytes nxt
    cdef bint improved
    while guard > 0:
        guard -= 1
        n = len(cur)
        cp = <const unsigned char *> cur
        p = 0
        improved = False
        while p <= n - h:
            j = _match_at(P, cp, n, p, &ell)
            if j >= 0 and ell > h:
                cur = _dehn_shorten_b(P, cur)
                improved = True
                break
            if j >= 0 and ell == h:
                rep = P.repl(j, h, &rl)
                if memcmp(rep, cp + p, h) < 0:
                    nxt = free_reduce(cur[:p] + (<char *> rep)[:rl] + cur[p + h :])
                    cur = nxt if len(nxt) == n else _dehn_shorten_b(P, nxt)
                    improved = True
                    break
            p += 1
        if not improved:
            return cur
    raise RuntimeError("element_nf descent failed to stabilize")


def conj_canonical_bytes(w, T):
    cdef bytes cur = cyclic_free_reduce(free_reduce(w))
    if T is None or len(cur) == 0:
        return min_rotation(cur)
    cdef _Pack P = _get_pack(T)
    cdef int h = P.h
    cdef long guard = 16 * (len(cur) + 4) * (P.R + 1)
    cdef Py_ssize_t n, p
    cdef int j, ell, rl
    cdef bytes ww, lin
    cdef const unsigned char *wp
    cdef const unsigned char *rep
    cdef bint improved
    while guard > 0:
        guard -= 1
        n = len(cur)
        if n == 0:
            return b""
        ww = cur + cur
        wp = <const unsigned char *> ww
        p = 0
        improved = False
        while p < n:
            j = _match_at(P, wp, 2 * n, p, &ell)
            if j >= 0:
                if ell > n:
                    ell = <int> n
                if ell > h:
                    lin = ww[p : p + n]
                    rep = P.repl(j, ell, &rl)
                    cur = cyclic_free_reduce((<char *> rep)[:rl] + lin[ell:])
                    improved = True
                    break
                if ell == h and n >= h:
                    rep = P.repl(j, h, &rl)
                    if memcmp(rep, wp + p, h) < 0:
                        lin = ww[p : p + n]
                        cur = cyclic_free_reduce((<char *> rep)[:rl] + lin[h:])
                        improved = True
                        break
            p += 1
        if not improved:
            return min_rotation(cur)
    raise RuntimeError("conjugacy descent failed to stabilize")
