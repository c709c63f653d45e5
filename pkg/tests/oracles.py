"""Brute-force BFS oracles, independent of the package's decision procedures.

The only group theory used here: inserting a cyclic rotation of the relator
(or its inverse) anywhere does not change the element (resp. the conjugacy
class, when inserting into a cyclic word), and free cancellation does not
change the element.  Everything else is exhaustive search with a length cap.
"""

from __future__ import annotations

from collections import deque


def free_reduce(w: bytes) -> bytes:
    out = bytearray()
    for x in w:
        if out and (out[-1] ^ 1) == x:
            out.pop()
        else:
            out.append(x)
    return bytes(out)


def inverse(w: bytes) -> bytes:
    return bytes(x ^ 1 for x in reversed(w))


def cyclic_reduce(w: bytes) -> bytes:
    w = free_reduce(w)
    a, b = 0, len(w)
    while b - a >= 2 and (w[a] ^ 1) == w[b - 1]:
        a += 1
        b -= 1
    return w[a:b]


def min_rotation(w: bytes) -> bytes:
    if len(w) <= 1:
        return w
    ww = w + w
    n = len(w)
    return min(ww[i : i + n] for i in range(n))


def relator_rotations(relator: bytes) -> list[bytes]:
    rots = []
    for base in (relator, inverse(relator)):
        for k in range(len(base)):
            rots.append(base[k:] + base[:k])
    return rots


def insert_reduced(u: bytes, pos: int, rho: bytes) -> bytes:
    """free_reduce(u[:pos] + rho + u[pos:]) for reduced u, rho (seam scans)."""
    le = pos
    k = 0
    lr = len(rho)
    while k < lr and le > 0 and (u[le - 1] ^ 1) == rho[k]:
        le -= 1
        k += 1
    core = u[:le] + rho[k:]
    ce = len(core)
    j = pos
    n = len(u)
    while ce > 0 and j < n and (core[ce - 1] ^ 1) == u[j]:
        ce -= 1
        j += 1
    return core[:ce] + u[j:]


def is_identity_bfs(w: bytes, relator: bytes | None, slack: int = 8) -> bool:
    """True iff the empty word is reachable by relator insertions and free
    cancellation while never exceeding len(w) + slack letters."""
    w = free_reduce(w)
    if relator is None or not w:
        return not w
    cap = len(w) + slack
    rots = relator_rotations(relator)
    seen = {w}
    queue = deque([w])
    while queue:
        u = queue.popleft()
        for rho in rots:
            for pos in range(len(u) + 1):
                v = insert_reduced(u, pos, rho)
                if not v:
                    return True
                if len(v) <= cap and v not in seen:
                    seen.add(v)
                    queue.append(v)
    return False


def identity_words_upto(relator: bytes, maxlen: int, slack: int = 6) -> set[bytes]:
    """All freely reduced identity words of length <= maxlen, computed by one
    BFS from the empty word over relator insertions with states capped at
    maxlen + slack.  (Dehn descent paths are monotone, so the cap is safe;
    the tests cross-check stability under a larger slack.)"""
    cap = maxlen + slack
    rots = relator_rotations(relator)
    seen = {b""}
    queue = deque([b""])
    while queue:
        u = queue.popleft()
        for rho in rots:
            for pos in range(len(u) + 1):
                v = insert_reduced(u, pos, rho)
                if len(v) <= cap and v not in seen:
                    seen.add(v)
                    queue.append(v)
    return {w for w in seen if len(w) <= maxlen}


def _cyclic_neighbors(u: bytes, rots, cap: int):
    """Distinct cyclic words (least-rotation keys) reachable from the cyclic
    word u by one relator insertion; inserting at the n cyclic seams of one
    linearization covers every insertion site."""
    n = len(u)
    out = set()
    for rho in rots:
        if n == 0:
            v = cyclic_reduce(rho)
            if len(v) <= cap:
                out.add(min_rotation(v))
            continue
        for pos in range(n):
            v = cyclic_reduce(u[:pos] + rho + u[pos:])
            if len(v) <= cap:
                out.add(min_rotation(v))
    return out


def conj_closure(w: bytes, relator: bytes | None, slack: int = 8, cap_states: int = 500_000):
    """All cyclic words reachable from w by relator insertions and cyclic
    cancellation within the length cap; keys are least rotations."""
    w = cyclic_reduce(w)
    if relator is None:
        return {min_rotation(w)}
    cap = len(w) + slack
    rots = relator_rotations(relator)
    start = min_rotation(w)
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for v in _cyclic_neighbors(u, rots, cap):
            if v not in seen:
                seen.add(v)
                queue.append(v)
                if len(seen) > cap_states:
                    raise RuntimeError("oracle closure exploded")
    return seen


def conj_canonical_bfs(w: bytes, relator: bytes | None, slack: int = 8) -> bytes:
    """Least rotation of the shortest cyclic words in the closure."""
    cl = conj_closure(w, relator, slack)
    m = min(len(u) for u in cl)
    return min(u for u in cl if len(u) == m)


def are_conjugate_bfs(u: bytes, v: bytes, relator: bytes | None, slack: int = 8) -> bool:
    if relator is None:
        return min_rotation(cyclic_reduce(u)) == min_rotation(cyclic_reduce(v))
    cl_u = conj_closure(u, relator, slack)
    if min_rotation(cyclic_reduce(v)) in cl_u:
        return True
    cl_v = conj_closure(v, relator, slack)
    return bool(cl_u & cl_v)


class _UnionFind:
    def __init__(self):
        self.parent = {}

    def find(self, x):
        p = self.parent
        root = x
        while p[root] != root:
            root = p[root]
        while p[x] != root:
            p[x], x = root, p[x]
        return root

    def add(self, x):
        self.parent.setdefault(x, x)

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


def conj_components(seeds, relator: bytes, slack: int = 8):
    """Group the given cyclic words into conjugacy classes via one shared BFS.

    Returns a dict seed_key -> component representative (the least rotation of
    the shortest cyclic word the component reaches).  Far cheaper than one
    closure per seed because overlapping closures are explored once.
    """
    rots = relator_rotations(relator)
    uf = _UnionFind()
    keys = []
    maxlen = 0
    for s in seeds:
        k = min_rotation(cyclic_reduce(s))
        keys.append(k)
        maxlen = max(maxlen, len(k))
        uf.add(k)
    cap = maxlen + slack
    queue = deque(set(keys))
    seen = set(queue)
    while queue:
        u = queue.popleft()
        for v in _cyclic_neighbors(u, rots, cap):
            uf.add(v)
            uf.union(u, v)
            if v not in seen:
                seen.add(v)
                queue.append(v)
    best = {}
    for state in uf.parent:
        r = uf.find(state)
        cur = best.get(r)
        if cur is None or (len(state), state) < (len(cur), cur):
            best[r] = state
    return {k: best[uf.find(k)] for k in keys}
