"""Polygon-dissection models of the generalized cluster complexes of types A, B, D.

A face is a :class:`Dissection`: the polygon size ``N`` plus a frozenset of
segments on vertices ``1..N`` (counterclockwise). A segment is ``(i, j)`` with
``i < j``; in type D a diameter additionally carries a colour, ``(i, j, c)``
with ``c`` in ``{"red", "blue"}``. Type B and D faces store both halves of each
centrally symmetric pair, so rotating a face is rotating its segments.

The generator of the cyclic action is the clockwise rotation carrying vertex
2 to vertex 1 (plus the colour switching in type D).
"""
from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterable, Iterator

from ..cliques import adjacency_bitsets, iter_cliques
from ..qpoly import ComplexType

RED, BLUE = "red", "blue"
Segment = tuple


@dataclass(frozen=True)
class Dissection:
    N: int
    segments: frozenset

    def sorted_segments(self) -> list[Segment]:
        return sorted(self.segments)

    def __len__(self) -> int:
        return len(self.segments)

    def __lt__(self, other: Dissection) -> bool:
        return (self.N, self.sorted_segments()) < (other.N, other.sorted_segments())


def crosses(a: Segment, b: Segment) -> bool:
    """Whether two chords of a convex polygon cross in their interiors."""
    i, j = a[0], a[1]
    k, l = b[0], b[1]
    return (i < k < j < l) or (k < i < l < j)


def is_s_divisible(i: int, j: int, N: int, s: int) -> bool:
    """Diagonal (i, j) of an N-gon cuts off two (sm+2)-gons."""
    ell = j - i
    return 2 <= ell <= N - 2 and ell % s == 1 % s and (N - ell) % s == 1 % s


def rotate_vertex(v: int, t: int, N: int) -> int:
    return (v - 1 - t) % N + 1


def _rot_segment(seg: Segment, t: int, N: int) -> Segment:
    a, b = rotate_vertex(seg[0], t, N), rotate_vertex(seg[1], t, N)
    return (a, b) if a < b else (b, a)


def rotate_plain(x: Dissection, t: int) -> Dissection:
    """Rotate clockwise by t steps: every label decremented by t modulo N."""
    N = x.N
    return Dissection(N, frozenset(_rot_segment(seg, t, N) for seg in x.segments))


class PolygonModel:
    """Vertices (``units``) of a complex, their compatibility, faces and the action."""

    family = ""

    def __init__(self, s: int, n: int):
        self.ctype = ComplexType(self.family, n, s)
        self.s, self.n = s, n
        self.units: list[tuple[Segment, ...]] = self._build_units()
        self.index = {u: i for i, u in enumerate(self.units)}
        self.adj = adjacency_bitsets(len(self.units), lambda i, j: self.units_compatible(self.units[i], self.units[j]))

    @property
    def N(self) -> int:
        raise NotImplementedError

    @property
    def group_order(self) -> int:
        return self.ctype.group_order

    def _build_units(self) -> list[tuple[Segment, ...]]:
        raise NotImplementedError

    def units_compatible(self, u: tuple[Segment, ...], v: tuple[Segment, ...]) -> bool:
        return not any(crosses(a, b) for a in u for b in v)

    def faces(self, k: int) -> list[Dissection]:
        self.ctype.check_k(k)
        out = []
        for clique in iter_cliques(self.adj, k):
            segs = frozenset(seg for i in clique for seg in self.units[i])
            out.append(Dissection(self.N, segs))
        return out

    def act(self, x: Dissection, t: int) -> Dissection:
        return rotate_plain(x, t % self.group_order)

    def fixed(self, k: int, d: int, faces: Iterable[Dissection] | None = None) -> list[Dissection]:
        """Faces invariant under the order-d subgroup of the cyclic group."""
        if d < 1 or self.group_order % d:
            raise ValueError(f"d={d} does not divide the group order {self.group_order}")
        step = self.group_order // d
        pool = self.faces(k) if faces is None else faces
        return [x for x in pool if self.act(x, step) == x]

    def k_of(self, x: Dissection) -> int:
        """Number of complex vertices (diagonals, B- or D-diagonals) in a face."""
        return len(x.segments)

    def is_face(self, x: Dissection) -> bool:
        us = self.split_units(x)
        if us is None:
            return False
        idx = [self.index[u] for u in us]
        return all(self.adj[i] >> j & 1 for a, i in enumerate(idx) for j in idx[a + 1:])

    def split_units(self, x: Dissection) -> list[tuple[Segment, ...]] | None:
        """Group the segments of a face into complex vertices, or None if impossible."""
        out = []
        for seg in x.segments:
            u = self._unit_of(seg)
            if u is None or not set(u) <= x.segments:
                return None
            out.append(u)
        return sorted(set(out))

    def _unit_of(self, seg: Segment) -> tuple[Segment, ...] | None:
        u = (seg,)
        return u if u in self.index else None

    # text serialization ----------------------------------------------------

    def vertex_label(self, v: int) -> str:
        return str(v)

    def unit_label(self, u: tuple[Segment, ...]) -> str:
        a = u[0]
        text = f"{self.vertex_label(a[0])}-{self.vertex_label(a[1])}"
        return text + (f":{a[2]}" if len(a) == 3 else "")

    def serialize(self, x: Dissection) -> str:
        labels = [self.unit_label(u) for u in self.split_units(x) or []]
        return ",".join([str(x.N)] + labels)

    def parse_vertex(self, text: str) -> int:
        return int(text)

    def parse(self, text: str) -> Dissection:
        """Inverse of :meth:`serialize`; symmetric partners are added automatically."""
        fields = [f.strip() for f in text.split(",") if f.strip()]
        if not fields or int(fields[0]) != self.N:
            raise ValueError(f"face must start with the polygon size {self.N}")
        segs = set()
        for f in fields[1:]:
            body, _, color = f.partition(":")
            u, _, v = body.partition("-")
            i, j = sorted((self.parse_vertex(u), self.parse_vertex(v)))
            seg = (i, j, color) if color else (i, j)
            unit = self._unit_of(seg)
            if unit is None:
                raise ValueError(f"{f!r} is not a vertex of this complex")
            segs.update(unit)
        x = Dissection(self.N, frozenset(segs))
        if not self.is_face(x):
            raise ValueError(f"{text!r} is not a face")
        return x


class TypeA(PolygonModel):
    """s-divisible dissections of the (sn+2)-gon: the complex of type A_{n-1}."""

    family = "A"

    @property
    def N(self) -> int:
        return self.s * self.n + 2

    def _build_units(self):
        N, s = self.N, self.s
        return [((i, j),) for i in range(1, N + 1) for j in range(i + 2, N + 1) if is_s_divisible(i, j, N, s)]


class _Symmetric(PolygonModel):
    """Shared machinery for the centrally symmetric (B and D) models."""

    @property
    def half(self) -> int:
        return self.N // 2

    def bar(self, v: int) -> int:
        return (v - 1 + self.half) % self.N + 1

    def is_diameter(self, seg: Segment) -> bool:
        return seg[1] - seg[0] == self.half

    def vertex_label(self, v: int) -> str:
        return str(v) if v <= self.half else f"~{v - self.half}"

    def parse_vertex(self, text: str) -> int:
        return int(text[1:]) + self.half if text.startswith("~") else int(text)

    def _pairs(self) -> list[tuple[Segment, ...]]:
        N, s, h = self.N, self.s, self.half
        out = []
        for i in range(1, N + 1):
            for j in range(i + 2, N + 1):
                if j - i == h or not is_s_divisible(i, j, N, s):
                    continue
                a, b = self.bar(i), self.bar(j)
                mate = (min(a, b), max(a, b))
                if (i, j) < mate:
                    out.append(((i, j), mate))
        return out

    def _unit_of(self, seg):
        if self.is_diameter(seg):
            u = (seg,)
        else:
            a, b = self.bar(seg[0]), self.bar(seg[1])
            u = tuple(sorted([seg[:2], (min(a, b), max(a, b))]))
        return u if u in self.index else None

    def k_of(self, x: Dissection) -> int:
        dia = sum(1 for seg in x.segments if self.is_diameter(seg))
        return dia + (len(x.segments) - dia) // 2


class TypeB(_Symmetric):
    """Centrally symmetric s-divisible dissections of the (2sn+2)-gon by B-diagonals."""

    family = "B"

    @property
    def N(self) -> int:
        return 2 * self.s * self.n + 2

    def _build_units(self):
        h = self.N // 2
        return [((i, i + h),) for i in range(1, h + 1)] + self._pairs()


class TypeD(_Symmetric):
    """Type D model on the (2s(n-1)+2)-gon with red and blue copies of every diameter."""

    family = "D"

    @property
    def N(self) -> int:
        return 2 * self.s * (self.n - 1) + 2

    def _build_units(self):
        h = self.N // 2
        dia = [((i, i + h, c),) for i in range(1, h + 1) for c in (RED, BLUE)]
        return dia + self._pairs()

    # colour transport --------------------------------------------------------

    def switches(self, i: int) -> bool:
        """Whether one generator step from L_i to L_{i-1} changes the colour."""
        return i == 1 or (i - 2) % self.s == 0

    @functools.cached_property
    def _transport(self) -> list[list[tuple[int, int]]]:
        """table[i][t] = (lower endpoint after t steps, number of colour switches mod 2)."""
        h = self.half
        table: list[list[tuple[int, int]]] = [[]]
        for i in range(1, h + 1):
            row = []
            pos, par = i, 0
            for _ in range(self.group_order):
                row.append((pos, par))
                par ^= self.switches(pos)
                pos = h if pos == 1 else pos - 1
            table.append(row)
        return table

    def step_diameter(self, i: int, color: str, t: int) -> tuple[int, str]:
        """Image of the coloured diameter L_i under t generator steps."""
        pos, par = self._transport[i][t % self.group_order]
        return pos, (color if not par else (BLUE if color == RED else RED))

    def units_compatible(self, u, v):
        a, b = u[0], v[0]
        if len(u) == 1 and len(v) == 1 and len(a) == 3 and len(b) == 3:
            if a[0] == b[0]:
                return a[2] != b[2]
            # carry both by the generator until one of them reaches L_1
            steps = min(a[0], b[0]) - 1
            return self.step_diameter(a[0], a[2], steps)[1] == self.step_diameter(b[0], b[2], steps)[1]
        return super().units_compatible(u, v)

    def _rot_seg_d(self, seg: Segment, t: int) -> Segment:
        if len(seg) == 3:
            i, c = self.step_diameter(seg[0], seg[2], t)
            return (i, i + self.half, c)
        return _rot_segment(seg, t, self.N)

    def act(self, x: Dissection, t: int) -> Dissection:
        t %= self.group_order
        return Dissection(self.N, frozenset(self._rot_seg_d(seg, t) for seg in x.segments))

    def diameters(self, x: Dissection) -> list[Segment]:
        """Diameters by position; red before blue when both copies are present."""
        return sorted((seg for seg in x.segments if len(seg) == 3), key=lambda seg: (seg[0], seg[2] != RED))

    def switch_colors(self, x: Dissection) -> Dissection:
        flip = {RED: BLUE, BLUE: RED}
        return Dissection(self.N, frozenset((seg[0], seg[1], flip[seg[2]]) if len(seg) == 3 else seg for seg in x.segments))


_MODELS = {"A": TypeA, "B": TypeB, "D": TypeD}


@functools.lru_cache(maxsize=64)
def polygon_model(family: str, s: int, n: int) -> PolygonModel:
    return _MODELS[family](s, n)


def enumerate_a(s: int, n: int, k: int) -> list[Dissection]:
    return polygon_model("A", s, n).faces(k)


def enumerate_b(s: int, n: int, k: int) -> list[Dissection]:
    return polygon_model("B", s, n).faces(k)


def enumerate_d(s: int, n: int, k: int) -> list[Dissection]:
    return polygon_model("D", s, n).faces(k)


def rotate_a(x: Dissection, t: int) -> Dissection:
    return rotate_plain(x, t)


rotate_b = rotate_a


def gamma_d(x: Dissection, t: int, s: int) -> Dissection:
    """t steps of the type-D generator (rotation with colour switching)."""
    n = (x.N - 2) // (2 * s) + 1
    return polygon_model("D", s, n).act(x, t)


def fixed_a(s: int, n: int, k: int, d: int) -> list[Dissection]:
    """U(s,n,k,d): dissections invariant under the rotation of order d."""
    return polygon_model("A", s, n).fixed(k, d)


def fixed_b(s: int, n: int, k: int, d: int) -> list[Dissection]:
    return polygon_model("B", s, n).fixed(k, d)


def fixed_d(s: int, n: int, k: int, d: int) -> list[Dissection]:
    return polygon_model("D", s, n).fixed(k, d)


def split_t(model: TypeD, faces: Iterable[Dissection]) -> tuple[list, list, list]:
    """Partition type-D faces into no diameter / first diameter red / first diameter blue."""
    t0, t1, t2 = [], [], []
    for x in faces:
        dia = model.diameters(x)
        (t0 if not dia else t1 if dia[0][2] == RED else t2).append(x)
    return t0, t1, t2


def face_regions(x: Dissection) -> list[list[int]]:
    """Vertex cycles of the regions of a plain (uncoloured) dissection."""
    N = x.N
    chords = sorted({seg[:2] for seg in x.segments}, key=lambda c: c[1] - c[0])
    regions = []
    alive = list(range(1, N + 1))
    removed: set[int] = set()
    for i, j in chords:
        inner = [v for v in range(i, j + 1) if v not in removed]
        regions.append(inner)
        removed.update(v for v in range(i + 1, j))
    regions.append([v for v in alive if v not in removed])
    return regions


def iter_all_noncrossing(N: int, k: int) -> Iterator[frozenset]:
    """Every set of k pairwise noncrossing diagonals of an N-gon (no divisibility filter)."""
    chords = [(i, j) for i in range(1, N + 1) for j in range(i + 2, N + 1) if (i, j) != (1, N)]
    adj = adjacency_bitsets(len(chords), lambda a, b: not crosses(chords[a], chords[b]))
    for c in iter_cliques(adj, k):
        yield frozenset(chords[i] for i in c)
