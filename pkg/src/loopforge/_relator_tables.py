"""Lookup tables for Dehn-style rewriting in one-relator surface presentations.

Letters are encoded as single bytes: generator ``i`` is ``2*i``, its inverse
is ``2*i + 1``, and inversion is ``byte ^ 1``.  Byte order therefore realizes
the fixed lexicographic order  g1 < g1^-1 < g2 < g2^-1 < ...

Because every piece of the surface relator has length 1, any 2-gram occurring
in some cyclic rotation of the relator or its inverse pins down that rotation
uniquely.  Matching a relator run at a position is then a single dict lookup
plus a greedy extension.
"""

from __future__ import annotations


def inverse_word(w: bytes) -> bytes:
    return bytes(x ^ 1 for x in reversed(w))


class RelatorTables:
    """Precomputed match/replacement data for one cyclically reduced relator."""

    __slots__ = ("relator", "length", "half", "rotations", "gram2", "_repl")

    def __init__(self, relator: bytes):
        n = len(relator)
        if n < 4 or n % 2:
            raise ValueError("relator length must be even and >= 4")
        self.relator = relator
        self.length = n
        self.half = n // 2
        rots = []
        for base in (relator, inverse_word(relator)):
            for k in range(n):
                rots.append(base[k:] + base[:k])
        self.rotations = rots
        gram2: dict[bytes, int] = {}
        for j, rho in enumerate(rots):
            key = rho[:2]
            if key in gram2 and rots[gram2[key]] != rho:
                raise ValueError("relator pieces longer than 1; tables unusable")
            gram2.setdefault(key, j)
        self.gram2 = gram2
        # replacement for a match of length ell against rotation j is the
        # inverse of the unmatched remainder of that rotation
        self._repl = [
            [inverse_word(rho[ell:]) for ell in range(n + 1)] for rho in rots
        ]

    def match_at(self, w: bytes, p: int) -> tuple[int, int]:
        """Longest relator-rotation run starting at ``w[p]``.

        Returns ``(rotation_index, length)`` with length >= 2, or ``(-1, 0)``.
        """
        j = self.gram2.get(w[p : p + 2], -1)
        if j < 0:
            return -1, 0
        rho = self.rotations[j]
        n = self.length
        ell = 2
        limit = min(n, len(w) - p)
        while ell < limit and w[p + ell] == rho[ell]:
            ell += 1
        return j, ell

    def replacement(self, j: int, ell: int) -> bytes:
        return self._repl[j][ell]
