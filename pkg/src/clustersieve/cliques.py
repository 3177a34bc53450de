"""Clique enumeration over adjacency bitsets."""
from __future__ import annotations

from typing import Iterator, Sequence


def adjacency_bitsets(n: int, compatible) -> list[int]:
    """Bitset adjacency for vertices 0..n-1 under a symmetric predicate."""
    adj = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if compatible(i, j):
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return adj


def iter_cliques(adj: Sequence[int], k: int) -> Iterator[tuple[int, ...]]:
    """All k-cliques as increasing index tuples, in lexicographic order."""
    n = len(adj)
    if k == 0:
        yield ()
        return
    # forward[v] = neighbours of v with larger index
    forward = [a & ~((1 << (v + 1)) - 1) for v, a in enumerate(adj)]
    stack: list[int] = []

    def grow(cand: int, need: int) -> Iterator[tuple[int, ...]]:
        while cand:
            if cand.bit_count() < need:
                return
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            if need == 1:
                yield (*stack, v)
                continue
            nxt = cand & forward[v]
            stack.append(v)
            yield from grow(nxt, need - 1)
            stack.pop()

    yield from grow((1 << n) - 1, k)


def count_cliques_by_size(adj: Sequence[int], max_k: int) -> list[int]:
    """Number of cliques of each size 0..max_k."""
    counts = [0] * (max_k + 1)
    counts[0] = 1
    forward = [a & ~((1 << (v + 1)) - 1) for v, a in enumerate(adj)]

    def walk(cand: int, size: int) -> None:
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            counts[size + 1] += 1
            if size + 1 < max_k:
                walk(cand & forward[v], size + 1)

    walk((1 << len(adj)) - 1, 0)
    return counts
