"""Exact planar-chart model of the two-annulus surface and its curves.

The surface core is two cylinders [-1,1] x R/LZ (charts V and H) glued over
two squares:

    S0:  V(x, y) ~ H(-y, x)            for |x| <= 1, |y| <= 1   (y mod L)
    S1:  V(x, y) ~ H(y - L/2, L/2 - x) for y - L/2 in [-1, 1]

Both gluings are orientation preserving (determinant +1) and exact on
rational points.  Curves are closed polylines with Fraction coordinates;
vertices carry an unwrapped y (the lift), so winding is explicit and every
geometric predicate is decided in exact arithmetic.  No floating point enters
this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    DomainError,
    GeneralPositionError,
    MalformedInputError,
    TransversalityError,
)
from .groups import Presentation, Word

F = Fraction

CHART_V = "V"
CHART_H = "H"


@dataclass(frozen=True)
class ChartAtlas:
    """Two cylinder charts of length L glued over the squares S0 and S1."""

    L: Fraction = F(8)

    def __post_init__(self):
        if not isinstance(self.L, Fraction):
            object.__setattr__(self, "L", F(self.L))
        if self.L < 4:
            raise DomainError("cylinder length L must be >= 4")

    def vh0(self, x: Fraction, y: Fraction) -> tuple[Fraction, Fraction]:
        """S0 gluing V -> H on representatives: (x, y) -> (-y, x)."""
        return (-y, x)

    def vh1(self, x: Fraction, y: Fraction) -> tuple[Fraction, Fraction]:
        """S1 gluing V -> H: (x, y) -> (y - L/2, L/2 - x)."""
        return (y - self.L / 2, self.L / 2 - x)

    def wrap(self, y: Fraction) -> Fraction:
        return y % self.L

    def square_offset(self, y: Fraction, square: int) -> Fraction | None:
        """Centered offset of wrapped y inside square 0 or 1, else None."""
        center = 0 if square == 0 else self.L / 2
        d = (y - center + self.L / 2) % self.L - self.L / 2
        return d if -1 <= d <= 1 else None

    def identify(self, chart: str, x: Fraction, y: Fraction):
        """Other-chart representative of a point lying in a gluing square.

        A point is in a square when the *other* coordinate of its image is a
        legal chart coordinate too; since |x| <= 1 always holds for curve
        points, membership is decided by the wrapped y offset alone.
        """
        for square in (0, 1):
            d = self.square_offset(y, square)
            if d is None:
                continue
            if chart == CHART_V:
                if square == 0:
                    return (CHART_H, -d, x)          # (x,y) -> (-y, x)
                return (CHART_H, d, self.L / 2 - x)  # (x,y) -> (y-L/2, L/2-x)
            if square == 0:
                return (CHART_V, d, -x)              # inverse of S0 gluing
            return (CHART_V, -d, self.L / 2 + x)     # inverse of S1 gluing
        return None


def _same_surface_point(atlas, ca, xa, ya, cb, xb, yb) -> bool:
    if ca == cb:
        return xa == xb and atlas.wrap(ya) == atlas.wrap(yb)
    other = atlas.identify(ca, xa, ya)
    if other is None:
        return False
    _, x2, y2 = other
    return x2 == xb and atlas.wrap(y2) == atlas.wrap(yb)


@dataclass(frozen=True)
class _Seg:
    chart: str
    x1: Fraction
    y1: Fraction
    x2: Fraction
    y2: Fraction
    index: int  # position in the segment list

    @property
    def dx(self):
        return self.x2 - self.x1

    @property
    def dy(self):
        return self.y2 - self.y1

    def point(self, t: Fraction) -> tuple[Fraction, Fraction]:
        return (self.x1 + t * self.dx, self.y1 + t * self.dy)


@dataclass(frozen=True)
class IntersectionPoint:
    """A transverse double point: parameters t < t2 along the curve, the
    location in a chart (wrapped y), and the orientation of the ordered
    tangent pair (tangent at t, tangent at t2): +1 if positively oriented."""

    t: Fraction
    t2: Fraction
    chart: str
    x: Fraction
    y: Fraction
    sign: int


class CurveDiagram:
    """Closed polyline on the atlas with exact rational coordinates.

    ``vertices`` is a cyclic list of (chart, x, y_unwrapped); consecutive
    vertices in the same chart span a straight segment, consecutive vertices
    in different charts must name the same surface point (a chart switch).
    The basepoint is vertex 0 by convention (``basepoint`` stores its index).
    """

    def __init__(self, atlas: ChartAtlas, vertices: Sequence[tuple], basepoint: int = 0):
        self.atlas = atlas
        vs = []
        for chart, x, y in vertices:
            if chart not in (CHART_V, CHART_H):
                raise MalformedInputError(f"unknown chart {chart!r}")
            vs.append((chart, F(x), F(y)))
        if len(vs) < 2:
            raise MalformedInputError("curve needs at least 2 vertices")
        self.vertices = tuple(vs)
        if not 0 <= basepoint < len(vs):
            raise MalformedInputError("basepoint index out of range")
        if basepoint != 0:
            self.vertices = self.vertices[basepoint:] + self.vertices[:basepoint]
        self.basepoint = 0
        self._validate()
        self._segs = self._build_segments()
        self._inter_cache = None

    # --- construction helpers -------------------------------------------------
    # Consecutive-pair semantics: a same-chart pair with distinct coordinates
    # is a straight segment (same x with y differing by a period = honest
    # winding); an exactly duplicated vertex is a joint; a cross-chart pair
    # must name one glued point.  The final pair (last -> first) closes the
    # curve and must be a joint, where same-chart closure may differ by a
    # multiple of the period (the lift resets).

    def _pair_kinds(self):
        at = self.atlas
        n = len(self.vertices)
        kinds = []
        for i in range(n):
            ca, xa, ya = self.vertices[i]
            cb, xb, yb = self.vertices[(i + 1) % n]
            closing = i == n - 1
            if ca != cb:
                if not _same_surface_point(at, ca, xa, ya, cb, xb, yb):
                    raise MalformedInputError(
                        f"chart switch between vertices {i} and {(i+1)%n} does not glue"
                    )
                kinds.append("joint")
            elif (xa, ya) == (xb, yb):
                kinds.append("joint")
            elif closing:
                if xa != xb or at.wrap(ya) != at.wrap(yb):
                    raise MalformedInputError("curve is not closed (last vertex != first)")
                kinds.append("joint")
            else:
                kinds.append("seg")
        return kinds

    def _validate(self):
        at = self.atlas
        for i, (chart, x, y) in enumerate(self.vertices):
            if abs(x) > 1:
                raise MalformedInputError(f"vertex {i}: |x| > 1 leaves the cylinder")
            if abs(x) == 1:
                in_square = any(at.square_offset(y, s) is not None for s in (0, 1))
                if not in_square:
                    raise MalformedInputError(
                        f"vertex {i}: on the cylinder boundary outside the gluing squares"
                    )
        self._kinds = self._pair_kinds()

    def _build_segments(self):
        segs = []
        n = len(self.vertices)
        for i in range(n):
            if self._kinds[i] != "seg":
                continue
            ca, xa, ya = self.vertices[i]
            cb, xb, yb = self.vertices[(i + 1) % n]
            segs.append(_Seg(ca, xa, ya, xb, yb, len(segs)))
        if not segs:
            raise MalformedInputError("curve has no segments")
        return segs

    def segments(self):
        return self._segs

    def n_segments(self) -> int:
        return len(self._segs)

    def param(self, seg_index: int, t: Fraction) -> Fraction:
        return (F(seg_index) + t) / len(self._segs)

    def point_at(self, param: Fraction):
        n = len(self._segs)
        p = (param % 1) * n
        i = int(p)
        if i == n:
            i = 0
        seg = self._segs[i]
        x, y = seg.point(p - i)
        return (seg.chart, x, y)

    def direction_at(self, param: Fraction):
        n = len(self._segs)
        p = (param % 1) * n
        i = int(p)
        if i == n:
            i = 0
        seg = self._segs[i]
        if p - i == 0:
            prev = self._segs[(i - 1) % n]
            if prev.chart == seg.chart and _cross(prev.dx, prev.dy, seg.dx, seg.dy) != 0:
                raise GeneralPositionError("direction requested at a corner")
        return (seg.chart, seg.dx, seg.dy)

    # --- serialization ----------------------------------------------------------
    def to_json(self) -> dict:
        return {
            "L": str(self.atlas.L),
            "vertices": [
                {"chart": c, "x": str(x), "y": str(y)} for c, x, y in self.vertices
            ],
            "basepoint": self.basepoint,
        }

    @staticmethod
    def from_json(obj: dict) -> "CurveDiagram":
        try:
            atlas = ChartAtlas(F(obj["L"]))
            verts = [(v["chart"], F(v["x"]), F(v["y"])) for v in obj["vertices"]]
            return CurveDiagram(atlas, verts, int(obj.get("basepoint", 0)))
        except (KeyError, ValueError, TypeError) as e:
            raise MalformedInputError(f"bad curve JSON: {e}") from e

    # --- reparameterization helpers ----------------------------------------------
    def _segment_vertex_map(self):
        """vertex index that starts each segment, in segment order."""
        return [i for i in range(len(self.vertices)) if self._kinds[i] == "seg"]

    def insert_collinear_vertex(self, seg_index: int, t: Fraction) -> "CurveDiagram":
        """Insert a vertex at fraction t of the given segment (0 < t < 1)."""
        if not 0 < t < 1:
            raise DomainError("t must be strictly inside the segment")
        seg = self._segs[seg_index]
        x, y = seg.point(F(t))
        vi = self._segment_vertex_map()[seg_index]
        new = list(self.vertices)
        new.insert(vi + 1, (seg.chart, x, y))
        return CurveDiagram(self.atlas, new, 0)

    def slide_basepoint(self, steps: int) -> "CurveDiagram":
        """Re-root the cyclic vertex list ``steps`` vertices forward, rebuilding
        the unwrapped lifts so winding stays explicit."""
        at = self.atlas
        n = len(self.vertices)
        s = steps % n
        if s == 0:
            return self
        cs, xs, ys = self.vertices[s]
        new = [(cs, xs, at.wrap(ys))]
        for k in range(n):
            i = (s + k) % n
            ca, xa, ya = self.vertices[i]
            cb, xb, yb = self.vertices[(i + 1) % n]
            kind = self._kinds[i]
            _, xcur, ycur = new[-1]
            if kind == "seg":
                new.append((cb, xb, ycur + (yb - ya)))
            elif cb == new[-1][0] and xb == xcur and at.wrap(yb) == at.wrap(ycur):
                new.append((cb, xb, ycur))
            else:
                new.append((cb, xb, at.wrap(yb)))
        return CurveDiagram(self.atlas, new, 0)


def _cross(ax, ay, bx, by):
    return ax * by - ay * bx


# --- intersection enumeration ------------------------------------------------------


def _seg_pair_hits(c: CurveDiagram, s1: _Seg, s2: _Seg):
    """Exact intersections of two same-chart segments, modulo the y-period."""
    at = c.atlas
    L = at.L
    hits = []
    ymin1, ymax1 = min(s1.y1, s1.y2), max(s1.y1, s1.y2)
    ymin2, ymax2 = min(s2.y1, s2.y2), max(s2.y1, s2.y2)
    kmin = -((ymax2 - ymin1) // L)
    kmax = (ymax1 - ymin2) // L
    k = kmin
    while k <= kmax:
        shift = k * L
        d1x, d1y = s1.dx, s1.dy
        d2x, d2y = s2.dx, s2.dy
        det = _cross(d1x, d1y, d2x, d2y)
        rx = s2.x1 - s1.x1
        ry = s2.y1 + shift - s1.y1
        if det == 0:
            if _cross(rx, ry, d1x, d1y) == 0:
                t0 = _project(s1, s2.x1, s2.y1 + shift)
                t1 = _project(s1, s2.x2, s2.y2 + shift)
                if t0 is not None and t1 is not None and max(min(t0, t1), 0) < min(max(t0, t1), 1):
                    raise GeneralPositionError(
                        f"segments {s1.index} and {s2.index} overlap collinearly"
                    )
            k += 1
            continue
        t = _cross(rx, ry, d2x, d2y) / det
        u = _cross(rx, ry, d1x, d1y) / det
        if 0 <= t < 1 and 0 <= u < 1:
            hits.append((t, u, s1.chart, s1.x1 + t * d1x, at.wrap(s1.y1 + t * d1y)))
        k += 1
    return hits


def _project(seg: _Seg, x, y):
    if seg.dx != 0:
        return (x - seg.x1) / seg.dx
    if seg.dy != 0:
        return (y - seg.y1) / seg.dy
    return None


def _cross_chart_hits(c: CurveDiagram, sv: _Seg, sh: _Seg):
    """Intersections of a V-segment with an H-segment inside the squares."""
    at = c.atlas
    L = at.L
    hits = []
    for square in (0, 1):
        center = F(0) if square == 0 else L / 2
        # V side: wrapped yv in [center-1, center+1]:  yv = center + dv + kv*L
        # H side: wrapped yh likewise
        kv_lo = -((center + 1 - min(sv.y1, sv.y2)) // L) - 1
        kv_hi = (max(sv.y1, sv.y2) - (center - 1)) // L + 1
        kh_lo = -((center + 1 - min(sh.y1, sh.y2)) // L) - 1
        kh_hi = (max(sh.y1, sh.y2) - (center - 1)) // L + 1
        kv = kv_lo
        while kv <= kv_hi:
            kh = kh_lo
            while kh <= kh_hi:
                hit = _solve_glued(c, sv, sh, square, kv, kh)
                if hit is not None:
                    hits.append(hit)
                kh += 1
            kv += 1
    return hits


def _solve_glued(c: CurveDiagram, sv: _Seg, sh: _Seg, square: int, kv, kh):
    """Solve sv(t) = glued(sh(u)) with the chosen lifts; returns (t, u, loc)."""
    at = c.atlas
    L = at.L
    center = F(0) if square == 0 else L / 2
    # dv(t) = yv(t) - kv*L - center in [-1,1], dh(u) likewise.
    # S0:  xh = -dv  and  dh = xv
    # S1:  xh = dv   and  dh = -xv        (xh = yv - L/2, yh = L/2 - xv)
    sgn = -1 if square == 0 else 1
    # equations:
    #   sh.x1 + u*sh.dx = sgn * (sv.y1 + t*sv.dy - kv*L - center)
    #   sh.y1 + u*sh.dy - kh*L - center = -sgn * (sv.x1 + t*sv.dx)
    a1, b1 = -sgn * sv.dy, sh.dx
    c1 = sgn * (sv.y1 - kv * L - center) - sh.x1
    a2, b2 = sgn * sv.dx, sh.dy
    c2 = -sgn * sv.x1 - (sh.y1 - kh * L - center)
    det = a1 * b2 - a2 * b1
    if det == 0:
        # parallel in the glued picture; genuine overlap would require the
        # images to coincide along an interval, which the square bounds make
        # a measure-zero coincidence: treated as general position violation
        # only if the endpoints actually coincide.
        return None
    t = (c1 * b2 - c2 * b1) / det
    u = (a1 * c2 - a2 * c1) / det
    if not (0 <= t < 1 and 0 <= u < 1):
        return None
    yv = sv.y1 + t * sv.dy
    dv = yv - kv * L - center
    xv = sv.x1 + t * sv.dx
    yh = sh.y1 + u * sh.dy
    dh = yh - kh * L - center
    xh = sh.x1 + u * sh.dx
    if not (-1 <= dv <= 1 and -1 <= dh <= 1 and abs(xv) <= 1 and abs(xh) <= 1):
        return None
    return (t, u, CHART_V, xv, at.wrap(yv))


def _h_dir_in_v(square: int, dx, dy):
    """An H-chart direction expressed in V-chart coordinates of the square."""
    if square == 0:
        return (dy, -dx)  # inverse of (x,y) -> (-y, x)
    return (-dy, dx)      # inverse of (x,y) -> (y - L/2, L/2 - x)


def self_intersections(c: CurveDiagram) -> list[IntersectionPoint]:
    """All transverse double points, each reported once with t < t2 and the
    orientation sign of the ordered tangent pair.  Exact rational arithmetic;
    tangencies, triple points and crossings at the basepoint raise."""
    if c._inter_cache is not None:
        return c._inter_cache
    segs = c.segments()
    n = len(segs)
    at = c.atlas
    raw = []  # (param1, param2, chart, x, ywrapped, d1, d2)
    for i in range(n):
        # a single vertical segment spanning more than one period overlaps
        # its own translate
        si = segs[i]
        if si.dx == 0 and abs(si.dy) > at.L:
            raise GeneralPositionError(f"segment {i} overlaps itself around the cylinder")
        for j in range(i + 1, n):
            s1, s2 = segs[i], segs[j]
            if s1.chart == s2.chart:
                for t, u, chart, x, y in _seg_pair_hits(c, s1, s2):
                    p1, p2 = c.param(i, t), c.param(j, u)
                    if p1 == p2:
                        continue
                    raw.append((p1, p2, chart, x, y, (s1.dx, s1.dy), (s2.dx, s2.dy)))
            else:
                sv, sh = (s1, s2) if s1.chart == CHART_V else (s2, s1)
                for t, u, chart, x, y in _cross_chart_hits(c, sv, sh):
                    sq = 0 if at.square_offset(y, 0) is not None else 1
                    dh = _h_dir_in_v(sq, sh.dx, sh.dy)
                    pv = c.param(sv.index, t)
                    ph = c.param(sh.index, u)
                    raw.append((pv, ph, chart, x, y, (sv.dx, sv.dy), dh))
    # vertex-hit policy: a crossing at a segment start (t == 0) is fine only
    # if the previous segment continues collinearly (reparameterization
    # vertex); otherwise the curve has a corner at a crossing.
    events = []
    for p1, p2, chart, x, y, d1, d2 in raw:
        for p, d in ((p1, d1), (p2, d2)):
            num = (p * n) % 1
            if num == 0:
                idx = int((p * n) % n)
                prev = segs[(idx - 1) % n]
                cur = segs[idx]
                if prev.chart != cur.chart or _cross(prev.dx, prev.dy, cur.dx, cur.dy) != 0:
                    if p == 0:
                        raise GeneralPositionError("basepoint lies on a crossing")
                    raise GeneralPositionError("crossing at a polyline corner")
        if p1 > p2:
            p1, p2 = p2, p1
            d1, d2 = d2, d1
        s = _cross(d1[0], d1[1], d2[0], d2[1])
        if s == 0:
            raise GeneralPositionError("tangential self-intersection")
        events.append(IntersectionPoint(p1, p2, chart, x, y, 1 if s > 0 else -1))
    # triple-point / duplicate detection by location
    byloc = {}
    for e in events:
        key = _canon_loc(at, e.chart, e.x, e.y)
        byloc.setdefault(key, []).append(e)
    out = []
    for key, es in byloc.items():
        params = set()
        for e in es:
            params.add(e.t)
            params.add(e.t2)
        if len(es) > 1 or len(params) != 2:
            raise GeneralPositionError(f"multiple point at {key} (not a double point)")
        out.append(es[0])
    base_chart, bx, by = c.vertices[0]
    base_key = _canon_loc(at, base_chart, bx, at.wrap(by))
    for e in out:
        if _canon_loc(at, e.chart, e.x, e.y) == base_key:
            raise GeneralPositionError("basepoint is a self-intersection")
    out.sort(key=lambda e: (e.t, e.t2))
    c._inter_cache = out
    return out


def _canon_loc(at: ChartAtlas, chart, x, y):
    """Chart-independent key for a surface point (V-representative where glued)."""
    y = at.wrap(y)
    if chart == CHART_V:
        return (CHART_V, x, y)
    other = at.identify(CHART_H, x, y)
    if other is not None:
        _, xv, yv = other
        return (CHART_V, xv, at.wrap(yv))
    return (CHART_H, x, y)


# --- gates and word reading ---------------------------------------------------------


@dataclass(frozen=True)
class Gate:
    chart: str
    height: Fraction  # y mod L
    symbol: str


class GateSystem:
    """Labeled transversal arcs across the free bands of the two cylinders.

    Crossing a gate positively (increasing chart y) appends its symbol,
    negatively its inverse.  The symbols generate pi_1 of the surface core
    relative to a spanning band; ``substitution`` rewrites them into the
    fixed free basis a, b, c.
    """

    def __init__(self, gates: Sequence[Gate], substitution: dict, pres: Presentation):
        self.gates = tuple(gates)
        self.substitution = dict(substitution)
        self.pres = pres
        for g in self.gates:
            if g.symbol not in self.substitution:
                raise MalformedInputError(f"gate {g.symbol} lacks a substitution")

    @staticmethod
    def standard(atlas: ChartAtlas) -> "GateSystem":
        """Gates on the V-upper, H-lower and H-upper bands.

        Reading rule consequence: a full positive V-loop reads a, a full
        positive H-loop reads (c a^-1)(a c^-1 b) = b, and the mixed loop
        through the lower H band and upper V band reads c.
        """
        L = atlas.L
        if L <= 4:
            raise DomainError("gates need L > 4 so the free bands are nonempty")
        F3 = Presentation.free(3)
        gates = [
            Gate(CHART_V, atlas.wrap(3 * L / 4), "v2"),
            Gate(CHART_H, atlas.wrap(L / 4), "h1"),
            Gate(CHART_H, atlas.wrap(3 * L / 4), "h2"),
        ]
        sub = {
            "v2": Word.parse(F3, "a"),
            "h1": Word.parse(F3, "c A"),
            "h2": Word.parse(F3, "a C b"),
        }
        return GateSystem(gates, sub, F3)


def _gate_events(c: CurveDiagram, gates: GateSystem):
    """Sorted (param, symbol, sign) gate crossings along the curve.

    A segment crosses lift H of a gate iff H lies in [y1, y2) (ascending) or
    [y2, y1) (descending); the half-open convention counts a vertex exactly
    once and a mere touch not at all.  Running along a gate is a
    transversality error, as is a tangential vertex touch.
    """
    at = c.atlas
    L = at.L
    events = []
    for seg in c.segments():
        for gate in gates.gates:
            if gate.chart != seg.chart:
                continue
            if seg.dy == 0:
                if at.wrap(seg.y1) == gate.height:
                    raise TransversalityError("curve runs along a gate")
                continue
            lo, hi = (seg.y1, seg.y2) if seg.dy > 0 else (seg.y2, seg.y1)
            k = -((-(lo - gate.height)) // L)  # smallest k with gate.height + kL >= lo
            H = gate.height + k * L
            while H < hi:
                t = (H - seg.y1) / seg.dy
                if 0 <= t < 1 or (t == 1 and False):
                    pass
                # half-open on the segment interval [y1, y2): ascending hits
                # with H == y1 belong to this segment; H == y2 to the next.
                if (seg.dy > 0 and seg.y1 <= H < seg.y2) or (
                    seg.dy < 0 and seg.y2 < H <= seg.y1
                ):
                    tt = (H - seg.y1) / seg.dy
                    if 0 <= tt < 1:
                        events.append(
                            (c.param(seg.index, tt), gate.symbol, 1 if seg.dy > 0 else -1)
                        )
                H += L
    # tangential vertex touches: vertex exactly on a gate height with the
    # adjacent same-chart segments on the same side
    n = len(c.vertices)
    for i, (chart, x, y) in enumerate(c.vertices):
        for gate in gates.gates:
            if gate.chart == chart and at.wrap(y) == gate.height:
                prev = c.vertices[(i - 1) % n]
                nxt = c.vertices[(i + 1) % n]
                if prev[0] == chart == nxt[0]:
                    if (prev[2] - y) * (nxt[2] - y) > 0:
                        raise TransversalityError("curve touches a gate tangentially")
    events.sort()
    return events


def _word_between(c: CurveDiagram, events, gates: GateSystem, p0: Fraction, p1: Fraction) -> Word:
    """Substituted word read over the half-open parameter arc [p0, p1)."""
    pres = gates.pres
    out = Word.identity(pres)
    if p0 <= p1:
        window = [e for e in events if p0 <= e[0] < p1]
    else:
        window = [e for e in events if e[0] >= p0] + [e for e in events if e[0] < p1]
    for _, sym, sign in window:
        w = gates.substitution[sym]
        out = out * (w if sign > 0 else w.inverse())
    return out


def read_word(c: CurveDiagram, gates: GateSystem | None = None) -> Word:
    """Free-group word of the curve read from the basepoint."""
    gates = gates or GateSystem.standard(c.atlas)
    events = _gate_events(c, gates)
    return _word_between(c, events, gates, F(0), F(1))


def split_at(
    c: CurveDiagram, y: IntersectionPoint, gates: GateSystem | None = None
) -> tuple[Word, Word]:
    """Based classes (a1, a2) of the two split loops at the double point y.

    With x, u, v the words of the arcs [0,t), [t,t2), [t2,1): when the
    ordered tangent pair at (t, t2) is positively oriented the first split
    loop runs along u, giving a1 = x u x^-1 and a2 = x v; otherwise the
    labels swap.  Then a2 = a1^-1 g up to g-equivalence.
    """
    gates = gates or GateSystem.standard(c.atlas)
    events = _gate_events(c, gates)
    x = _word_between(c, events, gates, F(0), y.t)
    u = _word_between(c, events, gates, y.t, y.t2)
    v = _word_between(c, events, gates, y.t2, F(1))
    loop_u = x * u * x.inverse()
    loop_v = x * v
    if y.sign > 0:
        return loop_u, loop_v
    return loop_v, loop_u


# --- the eggbeater curve family ------------------------------------------------------


def make_eggbeater_curve(m: int, n: int, atlas: ChartAtlas | None = None) -> CurveDiagram:
    """The spiral representative of the class a^m b^n.

    m winds of the V cylinder (x offsets u_1 < ... < u_m), a transition bend
    through S0, n winds of the H cylinder, and a closing passage into the
    basepoint.  All crossings land in the interiors of S0 and S1: m*n in S1
    and (m-1)(n-1) in S0.
    """
    if m < 1 or n < 1:
        raise DomainError("m and n must be >= 1")
    atlas = atlas or ChartAtlas()
    L = atlas.L
    if L <= 4:
        raise DomainError("the spiral construction needs L > 4")
    u = [F(-1) + F(2 * i, m + 2) for i in range(1, m + 2)]  # u[0..m-1], u[m] = u_trans
    y_s = F(1, 2)
    y_bend = F(-3, 4)
    v = [F(1) - F(2 * j, n + 1) for j in range(1, n + 1)]
    p = [F(1, 2) - F(j, n + 1) for j in range(1, n)] + [-y_s]
    verts: list[tuple] = [(CHART_V, u[0], y_s)]
    for i in range(1, m + 1):
        yb = (i - 1) * L
        verts.append((CHART_V, u[i - 1], yb + L / 2 + 1))
        verts.append((CHART_V, u[i], i * L - 1))
    verts.append((CHART_V, u[m], m * L + y_bend))
    verts.append((CHART_V, F(1), m * L + y_bend))
    verts.append((CHART_H, -y_bend, F(1)))
    for j in range(1, n + 1):
        yb = (j - 1) * L
        verts.append((CHART_H, v[j - 1], yb + L / 2 - 1))
        verts.append((CHART_H, v[j - 1], yb + L / 2 + 1))
        verts.append((CHART_H, p[j - 1], j * L - 1))
        if j < n:
            verts.append((CHART_H, p[j - 1], j * L + 1))
    verts.append((CHART_H, p[n - 1], n * L + u[0]))
    return CurveDiagram(atlas, verts, 0)


# --- bigon / monogon certification ----------------------------------------------------


@dataclass(frozen=True)
class DiscCertificate:
    """A face of the curve's arrangement bounded by one or two arcs whose
    boundary circle is null-homotopic (hence bounds an embedded disc)."""

    kind: str  # "monogon" | "bigon"
    arcs: tuple  # (start_param, end_param) forward arcs bounding the face


def _angle_key(dx: Fraction, dy: Fraction):
    """Total CCW order on nonzero direction vectors (exact)."""
    if dy > 0 or (dy == 0 and dx > 0):
        half = 0
    else:
        half = 1
    return half, dx, dy


def _ccw_sort(darts):
    """Sort darts (vector, payload) counterclockwise starting from +x."""

    def cmp_in_half(a, b):
        return a[0][0] * b[0][1] - a[0][1] * b[0][0]  # cross(a, b)

    halves = ([], [])
    for d in darts:
        dx, dy = d[0]
        halves[0 if (dy > 0 or (dy == 0 and dx > 0)) else 1].append(d)
    out = []
    for group in halves:
        # insertion sort by cross product (at most 4 darts total)
        ordered: list = []
        for d in group:
            i = 0
            while i < len(ordered) and cmp_in_half(ordered[i], d) > 0:
                i += 1
            ordered.insert(i, d)
        out.extend(ordered)
    return out


def detect_bigons_monogons(
    c: CurveDiagram, gates: GateSystem | None = None
) -> list[DiscCertificate]:
    """Monogon/bigon faces of the arrangement; empty output certifies minimal
    position via the bigon/monogon criterion.

    The curve is cut at its double points into arcs; the faces of this
    4-valent graph are traced from the exact tangent rotation system at each
    crossing.  A face bounded by one or two arcs whose boundary circle is
    null-homotopic (decided exactly in the free group read off the gates)
    bounds an embedded disc, i.e. is a monogon or bigon.  The complete
    embedded-circle search `_all_disc_circles` cross-checks emptiness in the
    tests.
    """
    gates = gates or GateSystem.standard(c.atlas)
    inters = self_intersections(c)
    if not inters:
        return []
    events = _gate_events(c, gates)
    params = []  # (param, crossing_id)
    for cid, e in enumerate(inters):
        params.append((e.t, cid))
        params.append((e.t2, cid))
    params.sort()
    N = len(params)
    # arcs[k]: from params[k] to params[(k+1) % N]
    # directed arc ids: +(k+1) forward, -(k+1) backward
    # darts at each crossing: (vector, directed_arc_departing)
    darts_at: dict[int, list] = {cid: [] for cid in range(len(inters))}
    for k in range(N):
        p_start, cid_s = params[k]
        p_end, cid_e = params[(k + 1) % N]
        d_out = _dart_vector(c, inters[cid_s], p_start, out=True)
        d_in = _dart_vector(c, inters[cid_e], p_end, out=False)
        darts_at[cid_s].append((d_out, k + 1))
        darts_at[cid_e].append(((-d_in[0], -d_in[1]), -(k + 1)))
    nxt = {}
    for cid, ds in darts_at.items():
        ordered = _ccw_sort(ds)
        for i, (_, dart) in enumerate(ordered):
            nxt[dart] = ordered[(i - 1) % len(ordered)][1]  # clockwise successor

    def face_from(start):
        face = []
        d = start
        while True:
            face.append(d)
            d = nxt[-d]
            if d == start:
                return face

    seen = set()
    faces = []
    for d in list(nxt):
        if d in seen:
            continue
        f = face_from(d)
        seen.update(f)
        faces.append(f)

    def end_crossing(d):
        k = abs(d) - 1
        return params[(k + 1) % N][1] if d > 0 else params[k][1]

    certs = []
    for f in faces:
        if len(f) > 2:
            continue
        if len(f) == 2 and end_crossing(f[0]) == end_crossing(f[1]):
            continue  # pinched wedge, boundary circle not embedded
        w = Word.identity(gates.pres)
        arcs = []
        for d in f:
            k = abs(d) - 1
            aw = _word_between(c, events, gates, params[k][0], params[(k + 1) % N][0])
            w = w * (aw if d > 0 else aw.inverse())
            arcs.append((params[k][0], params[(k + 1) % N][0]))
        from .groups import conj_canonical

        if conj_canonical(w).is_trivial():
            kind = "monogon" if len(f) == 1 else "bigon"
            certs.append(DiscCertificate(kind, tuple(arcs)))
    return certs


def _tangent_at(c: CurveDiagram, param: Fraction, out: bool):
    """Exact tangent direction at a parameter (chart-local vector); for a
    crossing on a reparameterization vertex the collinear side is used."""
    n = len(c._segs)
    p = (param % 1) * n
    i = int(p)
    if i == n:
        i = 0
    if p - i == 0 and not out:
        seg = c._segs[(i - 1) % n]
    else:
        seg = c._segs[i]
    return seg.chart, (seg.dx, seg.dy)


def _dart_vector(c: CurveDiagram, crossing: IntersectionPoint, param: Fraction, out: bool):
    """Tangent at ``param`` expressed in the chart the crossing is stored in."""
    chart, (dx, dy) = _tangent_at(c, param, out)
    if chart == crossing.chart:
        return (dx, dy)
    # crossing stored in V, branch lives in H (glued inside a square)
    sq = 0 if c.atlas.square_offset(crossing.y, 0) is not None else 1
    return _h_dir_in_v(sq, dx, dy)


def _all_disc_circles(c: CurveDiagram, gates: GateSystem | None = None):
    """Complete enumeration of embedded null-homotopic circles made of one or
    two arcs of the curve (test oracle; superset of the face certificates)."""
    gates = gates or GateSystem.standard(c.atlas)
    inters = self_intersections(c)
    if not inters:
        return []
    events = _gate_events(c, gates)
    from .groups import conj_canonical

    params = []
    for cid, e in enumerate(inters):
        params.append((e.t, cid))
        params.append((e.t2, cid))
    params.sort()
    N = len(params)

    def interior(i, j):
        k = (i + 1) % N
        out = []
        while k != j:
            out.append(k)
            k = (k + 1) % N
        return out

    def indices_of(cid):
        return [i for i, (_, cc) in enumerate(params) if cc == cid]

    def arc_embedded(i, j):
        inside = set(interior(i, j))
        for k in inside:
            cid = params[k][1]
            other = next(o for o in indices_of(cid) if o != k)
            if other in inside:
                return False
        return True

    def word_of(i, j):
        return _word_between(c, events, gates, params[i][0], params[j][0])

    found = []
    for cid in range(len(inters)):
        i1, i2 = indices_of(cid)
        for (s, e) in ((i1, i2), (i2, i1)):
            if arc_embedded(s, e) and conj_canonical(word_of(s, e)).is_trivial():
                found.append(("monogon", ((params[s][0], params[e][0]),)))
    for ca in range(len(inters)):
        for cb in range(ca + 1, len(inters)):
            arcs = []
            for s in indices_of(ca):
                for e in indices_of(cb):
                    for (a, b) in ((s, e), (e, s)):
                        if arc_embedded(a, b):
                            arcs.append((a, b))
            for x in range(len(arcs)):
                for z in range(x + 1, len(arcs)):
                    (s1, e1), (s2, e2) = arcs[x], arcs[z]
                    in1, in2 = set(interior(s1, e1)), set(interior(s2, e2))
                    crossing = False
                    for k in in1:
                        cid = params[k][1]
                        other = next(o for o in indices_of(cid) if o != k)
                        if other in in2:
                            crossing = True
                            break
                    if crossing:
                        continue
                    w1 = word_of(s1, e1) if params[s1][1] == ca else word_of(s1, e1).inverse()
                    w2 = word_of(s2, e2) if params[s2][1] == ca else word_of(s2, e2).inverse()
                    if conj_canonical(w1 * w2.inverse()).is_trivial():
                        found.append(
                            ("bigon", ((params[s1][0], params[e1][0]),
                                       (params[s2][0], params[e2][0])))
                        )
    dedup = []
    seen = set()
    for kind, arcs in found:
        key = (kind, frozenset(arcs))
        if key not in seen:
            seen.add(key)
            dedup.append((kind, arcs))
    return dedup
