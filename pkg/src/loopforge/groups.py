"""Exact word arithmetic and decision procedures in free and surface groups.

Presentations covered: free groups F_r and closed orientable surface groups
pi_1(Sigma_g) = < g_1..g_2g | [g_1,g_2]...[g_2g-1,g_2g] > for g >= 2.  The
surface relator is a Dehn presentation (every piece has length 1), so Dehn's
algorithm decides the word problem and cyclic Dehn reduction plus half-run
descent canonicalizes conjugacy classes.

Letter encoding: generator i is byte 2*i, its inverse 2*i + 1.  Byte order is
the fixed lexicographic order a < a^-1 < b < b^-1 < ... used everywhere for
tie-breaking.
"""

from __future__ import annotations

import string
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from . import wordops as W
from ._relator_tables import RelatorTables
from .errors import (
    MalformedInputError,
    ResourceLimitError,
    TrivialElementError,
    UnsupportedPresentationError,
)

_FREE_NAMES = string.ascii_lowercase


def _surface_relator(genus: int) -> bytes:
    # [x, y] = x^-1 y x y^-1; this marking makes the genus-2 embedding's
    # conjugacy identifications ([c^j] ~ [(a c^-1 b)^j]) hold, which pins the
    # convention.
    out = bytearray()
    for i in range(genus):
        x, y = 4 * i, 4 * i + 2
        out += bytes([x ^ 1, y, x, y ^ 1])
    return bytes(out)


@dataclass(frozen=True)
class Presentation:
    """A fixed group presentation (free of rank r, or surface of genus g)."""

    kind: str
    rank: int
    genus: int = 0
    generators: tuple[str, ...] = field(default=(), compare=False)
    relator: bytes = field(default=b"", compare=False)

    @staticmethod
    def free(rank: int) -> "Presentation":
        if not 1 <= rank <= 26:
            raise MalformedInputError(f"free rank must be in 1..26, got {rank}")
        return Presentation("free", rank, 0, tuple(_FREE_NAMES[:rank]), b"")

    @staticmethod
    def surface(genus: int) -> "Presentation":
        if genus < 2:
            raise MalformedInputError(f"surface genus must be >= 2, got {genus}")
        gens = tuple(f"g{i+1}" for i in range(2 * genus))
        return Presentation("surface", 2 * genus, genus, gens, _surface_relator(genus))

    @staticmethod
    def from_spec(spec: str) -> "Presentation":
        s = spec.strip().lower().replace("free:", "f").replace("surface:", "s")
        if s.startswith("f") and s[1:].isdigit():
            return Presentation.free(int(s[1:]))
        if s.startswith("s") and s[1:].isdigit():
            return Presentation.surface(int(s[1:]))
        raise MalformedInputError(f"unknown presentation spec {spec!r}")

    @property
    def spec_name(self) -> str:
        return f"F{self.rank}" if self.kind == "free" else f"S{self.genus}"

    @property
    def tables(self) -> RelatorTables | None:
        if self.kind == "free":
            return None
        key = self.genus
        t = _TABLE_CACHE.get(key)
        if t is None:
            t = _TABLE_CACHE[key] = RelatorTables(self.relator)
        return t

    def max_piece_length(self) -> int:
        """Longest piece of the relator: a common prefix of two distinct
        words in the symmetrized set (all rotations of r and r^-1).  Equals 1
        for surface relators, which is the small-cancellation property Dehn's
        algorithm needs."""
        if self.kind == "free":
            return 0
        rots = self.tables.rotations
        best = 0
        for i, u in enumerate(rots):
            for v in rots[i + 1 :]:
                if u == v:
                    continue
                k = 0
                while k < len(u) and u[k] == v[k]:
                    k += 1
                best = max(best, k)
        return best

    # token <-> byte translation -------------------------------------------
    def token_of(self, letter: int) -> str:
        name = self.generators[letter >> 1]
        if letter & 1:
            return name.upper() if self.kind == "free" else "G" + name[1:]
        return name

    def letter_of(self, token: str) -> int:
        if self.kind == "free":
            low = token.lower()
            if low in self.generators and len(token) == 1:
                i = self.generators.index(low)
                return 2 * i + (1 if token.isupper() else 0)
        else:
            if len(token) >= 2 and token[0] in "gG" and token[1:].isdigit():
                i = int(token[1:]) - 1
                if 0 <= i < self.rank:
                    return 2 * i + (1 if token[0] == "G" else 0)
        raise MalformedInputError(
            f"unknown generator token {token!r} for {self.spec_name}"
        )


_TABLE_CACHE: dict[int, RelatorTables] = {}


class Word:
    """A freely reduced word in a fixed presentation (immutable value)."""

    __slots__ = ("pres", "data")

    def __init__(self, pres: Presentation, data: bytes, *, _reduced: bool = False):
        self.pres = pres
        self.data = data if _reduced else W.free_reduce(data)
        maxb = 2 * pres.rank
        if any(x >= maxb for x in self.data):
            raise MalformedInputError("letter index out of range for presentation")

    # constructors -----------------------------------------------------------
    @staticmethod
    def parse(pres: Presentation, text: str) -> "Word":
        toks = text.split()
        return Word(pres, bytes(pres.letter_of(t) for t in toks))

    @staticmethod
    def from_letters(pres: Presentation, letters: Iterable) -> "Word":
        """Accepts (index, sign) pairs or nonzero signed integers +-(i+1)."""
        out = bytearray()
        for item in letters:
            if isinstance(item, tuple):
                i, s = item
                if s not in (1, -1) or not 0 <= i < pres.rank:
                    raise MalformedInputError(f"bad letter {item!r}")
                out.append(2 * i + (0 if s == 1 else 1))
            else:
                n = int(item)
                if n == 0 or abs(n) > pres.rank:
                    raise MalformedInputError(f"bad letter {item!r}")
                out.append(2 * (abs(n) - 1) + (0 if n > 0 else 1))
        return Word(pres, bytes(out))

    @staticmethod
    def identity(pres: Presentation) -> "Word":
        return Word(pres, b"", _reduced=True)

    # value semantics ---------------------------------------------------------
    def __eq__(self, other):
        return (
            isinstance(other, Word)
            and self.pres == other.pres
            and self.data == other.data
        )

    def __hash__(self):
        return hash((self.pres.kind, self.pres.rank, self.data))

    def __len__(self):
        return len(self.data)

    def __mul__(self, other: "Word") -> "Word":
        if self.pres != other.pres:
            raise MalformedInputError("mixed presentations")
        return Word(self.pres, W.mul(self.data, other.data), _reduced=True)

    def inverse(self) -> "Word":
        return Word(self.pres, W.inverse_word(self.data), _reduced=True)

    def __pow__(self, n: int) -> "Word":
        base = self if n >= 0 else self.inverse()
        out = Word.identity(self.pres)
        for _ in range(abs(n)):
            out = out * base
        return out

    def conjugated_by(self, h: "Word") -> "Word":
        """h * self * h^-1."""
        return h * self * h.inverse()

    def tokens(self) -> str:
        return " ".join(self.pres.token_of(x) for x in self.data)

    def __repr__(self):
        return f"Word({self.pres.spec_name}: {self.tokens() or 'e'})"


# --- core operations ----------------------------------------------------------


def free_reduce(letters, pres: Presentation) -> Word:
    """Unique freely reduced form of a letter sequence (idempotent)."""
    if isinstance(letters, Word):
        return Word(pres, letters.data)
    if isinstance(letters, str):
        return Word.parse(pres, letters)
    if isinstance(letters, (bytes, bytearray)):
        return Word(pres, bytes(letters))
    return Word.from_letters(pres, letters)


def dehn_reduce(w: Word, pres: Presentation | None = None) -> Word:
    """Dehn's algorithm: replace relator runs longer than half the relator by
    their shorter complement until none remain.  Empty iff w = 1."""
    pres = pres or w.pres
    if pres.kind != "surface":
        raise UnsupportedPresentationError("dehn_reduce needs a surface presentation")
    return Word(pres, W.dehn_shorten(w.data, pres.tables), _reduced=True)


def is_identity(w: Word) -> bool:
    if w.pres.kind == "free":
        return not w.data
    return not W.dehn_shorten(w.data, w.pres.tables)


def element_nf(w: Word) -> Word:
    """Canonical (shortlex-least geodesic) representative of the element."""
    return Word(w.pres, W.element_nf(w.data, w.pres.tables), _reduced=True)


def same_element(u: Word, v: Word) -> bool:
    if u.pres != v.pres:
        raise MalformedInputError("mixed presentations")
    return is_identity(u * v.inverse())


def element_length(w: Word) -> int:
    """Geodesic length of the element represented by w."""
    return len(element_nf(w))


class ConjClass:
    """Canonical conjugacy-class representative (cyclic normal form)."""

    __slots__ = ("pres", "canonical")

    def __init__(self, pres: Presentation, canonical: bytes):
        self.pres = pres
        self.canonical = canonical

    def word(self) -> Word:
        return Word(self.pres, self.canonical, _reduced=True)

    def is_trivial(self) -> bool:
        return not self.canonical

    def __eq__(self, other):
        return (
            isinstance(other, ConjClass)
            and self.pres == other.pres
            and self.canonical == other.canonical
        )

    def __lt__(self, other):
        return (len(self.canonical), self.canonical) < (
            len(other.canonical),
            other.canonical,
        )

    def __hash__(self):
        return hash((self.pres.kind, self.pres.rank, self.canonical))

    def __repr__(self):
        return f"ConjClass[{self.word().tokens() or 'e'}]"


def conj_canonical(w: Word, pres: Presentation | None = None) -> ConjClass:
    """Canonical form of the conjugacy class of ``w``.

    Cyclic reduction, then (surface case) closure under length-non-increasing
    relator replacements on the cyclic word, returning the lexicographically
    least rotation of the resulting minimal words.
    """
    pres = pres or w.pres
    try:
        canon = W.conj_canonical_bytes(w.data, pres.tables)
    except RuntimeError:
        canon = _closure_conj_canonical(w.data, pres.tables)
    return ConjClass(pres, canon)


def are_conjugate(u: Word, v: Word) -> bool:
    if u.pres != v.pres:
        raise MalformedInputError("mixed presentations")
    return conj_canonical(u) == conj_canonical(v)


def _closure_conj_canonical(w: bytes, T, cap: int = 200_000) -> bytes:
    """Exhaustive closure fallback: all cyclic words reachable by
    length-non-increasing relator replacements; least rotation of the minimal
    length stratum.  Only used if the greedy descent fails to stabilize."""
    cur = W.cyclic_free_reduce(w)
    if T is None:
        return W.min_rotation(cur)
    h = T.half
    while True:
        seen = {W.min_rotation(cur)}
        frontier = [cur]
        shorter = None
        while frontier and shorter is None:
            nxt = []
            for u in frontier:
                n = len(u)
                uu = u + u
                for p in range(n):
                    j, ell = T.match_at(uu, p)
                    if ell < h:
                        continue
                    ell = min(ell, n)
                    for length in range(h, ell + 1):
                        lin = uu[p : p + n]
                        v = W.cyclic_free_reduce(
                            T.replacement(j, length) + lin[length:]
                        )
                        if len(v) < n:
                            shorter = v
                            break
                        key = W.min_rotation(v)
                        if key not in seen:
                            seen.add(key)
                            nxt.append(v)
                    if shorter is not None:
                        break
                if shorter is not None or len(seen) > cap:
                    break
            if len(seen) > cap:
                raise ResourceLimitError("conjugacy closure exceeded state cap")
            frontier = nxt
        if shorter is None:
            return min(seen)
        cur = shorter


class GEquivClass:
    """Canonical representative of the orbit {g^k x g^-k}."""

    __slots__ = ("pres", "base_g", "canonical_rep")

    def __init__(self, pres: Presentation, base_g: Word, canonical_rep: Word):
        self.pres = pres
        self.base_g = base_g
        self.canonical_rep = canonical_rep

    def __eq__(self, other):
        return (
            isinstance(other, GEquivClass)
            and self.pres == other.pres
            and self.base_g == other.base_g
            and self.canonical_rep == other.canonical_rep
        )

    def __lt__(self, other):
        a, b = self.canonical_rep.data, other.canonical_rep.data
        return (len(a), a) < (len(b), b)

    def __hash__(self):
        return hash((self.base_g.data, self.canonical_rep.data))

    def __repr__(self):
        return f"[{self.canonical_rep.tokens()}]_({self.base_g.tokens()})"


def g_equiv_canonical(
    g: Word, x: Word, pres: Presentation | None = None, stall_window: int | None = None
) -> GEquivClass:
    """Minimal-length, lexicographically least element of {g^k x g^-k}.

    Walks k = 0, +-1, +-2, ... and stops a direction once the reduced length
    has strictly increased for ``stall_window`` consecutive steps (default
    2|g| + |x|): conjugation by powers of a nontrivial element eventually
    increases geodesic length monotonically once the overlap is exhausted.
    """
    pres = pres or g.pres
    if g.pres != x.pres:
        raise MalformedInputError("mixed presentations")
    if is_identity(x):
        raise TrivialElementError("the class [1]_g is reserved (encoded as 0)")
    x0 = element_nf(x)
    if is_identity(g):
        return GEquivClass(pres, element_nf(g), x0)
    window = stall_window if stall_window is not None else 2 * len(g) + len(x0)
    window = max(window, 1)
    g_nf = element_nf(g)
    ginv = g_nf.inverse()
    best = x0
    for step_l, step_r in ((g_nf, ginv), (ginv, g_nf)):
        cur = x0
        prev_len = len(cur)
        grow = 0
        visited = {cur.data}
        while grow < window:
            cur = element_nf(step_l * cur * step_r)
            if cur.data in visited:
                break  # periodic orbit (x commutes with a power of g)
            visited.add(cur.data)
            if len(cur) > prev_len:
                grow += 1
            else:
                grow = 0
            prev_len = len(cur)
            if (len(cur), cur.data) < (len(best), best.data):
                best = cur
    return GEquivClass(pres, g_nf, best)


def commutator(u: Word, v: Word) -> Word:
    return u * v * u.inverse() * v.inverse()


def parse_word_json(obj: dict) -> Word:
    """JSON wrapper {"presentation": "...", "word": "..."} -> Word."""
    try:
        pres = Presentation.from_spec(obj["presentation"])
        return Word.parse(pres, obj["word"])
    except KeyError as e:
        raise MalformedInputError(f"missing key {e} in word JSON") from e


def word_json(w: Word) -> dict:
    return {"presentation": w.pres.spec_name, "word": w.tokens()}
