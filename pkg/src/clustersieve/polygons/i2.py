"""The generalized cluster complex of the dihedral type I2(a) as a circle graph."""
from __future__ import annotations

from dataclasses import dataclass

from ..qpoly import ComplexType


@dataclass(frozen=True)
class I2Graph:
    s: int
    a: int
    edges: frozenset

    @property
    def order(self) -> int:
        return self.s * self.a + 2

    @property
    def odd(self) -> bool:
        return self.a % 2 == 1

    @property
    def step(self) -> int:
        """Vertex shift produced by the generator of the cyclic group."""
        return 1 if self.odd else 2

    def neighbours(self, v: int) -> list[int]:
        return sorted(w for e in self.edges if v in e for w in e if w != v)

    def faces(self, k: int) -> list[frozenset]:
        ComplexType("I2", self.a, self.s).check_k(k)
        if k == 0:
            return [frozenset()]
        if k == 1:
            return [frozenset((v,)) for v in range(self.order)]
        return sorted(self.edges, key=sorted)

    def act(self, face: frozenset, t: int) -> frozenset:
        shift = t * self.step
        return frozenset((v + shift) % self.order for v in face)

    def fixed(self, k: int, d: int) -> list[frozenset]:
        if d < 1 or self.order % d:
            raise ValueError(f"d={d} does not divide the group order {self.order}")
        g = self.order // d
        return [f for f in self.faces(k) if self.act(f, g) == f]

    def serialize(self, face: frozenset) -> str:
        return "-".join(str(v) for v in sorted(face)) or "{}"


def build_i2(s: int, a: int, offset: int = 1) -> I2Graph:
    """Circle graph on sa+2 points; ``offset`` is the odd seed used when a is even."""
    if a < 3 or s < 1:
        raise ValueError("need a >= 3 and s >= 1")
    N = s * a + 2
    edges = set()
    if a % 2:
        c = s * (a - 1) // 2
        for v in range(N):
            for j in range(1, s + 2):
                edges.add(frozenset((v, (v + c + j) % N)))
    else:
        if offset % 2 == 0:
            raise ValueError("the seed offset must be odd")
        for v in range(0, N, 2):
            for j in range(s + 1):
                edges.add(frozenset((v, (v + offset + 2 * j) % N)))
    return I2Graph(s, a, frozenset(edges))


def fixed_i2(s: int, a: int, d: int) -> list[frozenset]:
    """Edges fixed by the order-d element of Z_{sa+2}."""
    return build_i2(s, a).fixed(2, d)


def fixed_i2_vertices(s: int, a: int, d: int) -> list[frozenset]:
    return build_i2(s, a).fixed(1, d)


def is_regular(g: I2Graph) -> bool:
    return all(len(g.neighbours(v)) == g.s + 1 for v in range(g.order))

