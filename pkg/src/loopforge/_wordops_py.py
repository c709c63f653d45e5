"""Pure-Python word operations on byte-encoded group words.

This module is the reference implementation of the hot kernel; a compiled
twin (``_wordops_c``) provides the same functions.  Which one is active is
decided in :mod:`loopforge.wordops` at import time.

Words are ``bytes``; letter encoding and relator tables are described in
:mod:`loopforge._relator_tables`.  All functions return freely reduced words.
"""

from __future__ import annotations

IMPL = "python"


def free_reduce(w) -> bytes:
    out = bytearray()
    for x in w:
        if out and (out[-1] ^ 1) == x:
            out.pop()
        else:
            out.append(x)
    return bytes(out)


def inverse_word(w: bytes) -> bytes:
    return bytes(x ^ 1 for x in reversed(w))


def mul(u: bytes, v: bytes) -> bytes:
    """Product of two freely reduced words, reduced (seam cancellation only)."""
    i = len(u)
    j = 0
    nv = len(v)
    while i > 0 and j < nv and (u[i - 1] ^ 1) == v[j]:
        i -= 1
        j += 1
    return u[:i] + v[j:]


def min_rotation(w: bytes) -> bytes:
    if len(w) <= 1:
        return w
    n = len(w)
    ww = w + w
    best = 0
    for i in range(1, n):
        if ww[i : i + n] < ww[best : best + n]:
            best = i
    return ww[best : best + n]


def cyclic_free_reduce(w: bytes) -> bytes:
    w = free_reduce(w)
    a, b = 0, len(w)
    while b - a >= 2 and (w[a] ^ 1) == w[b - 1]:
        a += 1
        b -= 1
    return w[a:b]


def dehn_shorten(w: bytes, T) -> bytes:
    """Replace relator runs longer than half by their shorter complement.

    Repeats until no such run remains; the result is empty iff ``w`` is the
    identity (Dehn's algorithm for the word problem).
    """
    h = T.half
    w = free_reduce(w)
    while True:
        n = len(w)
        p = 0
        hit = False
        while p <= n - 2:
            j, ell = T.match_at(w, p)
            if ell > h:
                w = free_reduce(w[:p] + T.replacement(j, ell) + w[p + ell :])
                hit = True
                break
            p += 1
        if not hit:
            return w


def element_nf(w: bytes, T) -> bytes:
    """Canonical representative of a group element.

    Free presentations (``T is None``): free reduction.  Surface
    presentations: Dehn-shorten, then greedily replace exactly-half relator
    runs whose complement is lexicographically smaller.  Relator pieces have
    length 1, so half-runs overlap in at most one letter and the greedy
    fixpoint is the shortlex-least geodesic (cross-checked against closure
    oracles in the tests).
    """
    if T is None:
        return free_reduce(w)
    w = dehn_shorten(w, T)
    h = T.half
    guard = 16 * (len(w) + 4) * (T.length + 1)
    while guard > 0:
        guard -= 1
        n = len(w)
        p = 0
        improved = False
        while p <= n - h:
            j, ell = T.match_at(w, p)
            if ell > h:
                w = dehn_shorten(w, T)
                improved = True
                break
            if ell == h:
                q = T.replacement(j, h)
                if q < w[p : p + h]:
                    w2 = free_reduce(w[:p] + q + w[p + h :])
                    w = w2 if len(w2) == n else dehn_shorten(w2, T)
                    improved = True
                    break
            p += 1
        if not improved:
            return w
    raise RuntimeError("element_nf descent failed to stabilize")


def conj_canonical_bytes(w: bytes, T) -> bytes:
    """Canonical cyclic word of the conjugacy class of ``w``.

    Free case: lexicographically least rotation of the cyclic reduction.
    Surface case: cyclic Dehn shortening plus the greedy half-run descent of
    :func:`element_nf` applied cyclically, then the least rotation.
    """
    w = cyclic_free_reduce(free_reduce(w))
    if T is None or not w:
        return min_rotation(w)
    h = T.half
    guard = 16 * (len(w) + 4) * (T.length + 1)
    while guard > 0:
        guard -= 1
        n = len(w)
        if n == 0:
            return b""
        ww = w + w
        p = 0
        improved = False
        while p < n:
            j, ell = T.match_at(ww, p)
            if ell > n:
                ell = n
            if ell > h:
                lin = ww[p : p + n]
                w = cyclic_free_reduce(
                    T.replacement(j, ell) + lin[ell:]
                )
                improved = True
                break
            if ell == h and n >= h:
                q = T.replacement(j, h)
                if q < ww[p : p + h]:
                    lin = ww[p : p + n]
                    w = cyclic_free_reduce(q + lin[h:])
                    improved = True
                    break
            p += 1
        if not improved:
            return min_rotation(w)
    raise RuntimeError("conjugacy descent failed to stabilize")
