"""Noncrossing trees and quadrangulations of the (2n+2)-gon.

A noncrossing tree on points ``1..n+1`` becomes a set of lines between odd
vertices of the (2n+2)-gon (point p sits at vertex 2p-1). Those lines are the
odd-odd diagonals of the quadrilaterals of a unique quadrangulation.
"""
from __future__ import annotations

from itertools import combinations

from ..cliques import adjacency_bitsets, iter_cliques
from .dissections import Dissection, crosses, face_regions, rotate_plain

Tree = frozenset  # of edges (j, k), j < k, on points 1..n+1


class NotANoncrossingTree(ValueError):
    pass


def _connected(points: int, edges) -> bool:
    seen, todo = {1}, [1]
    nbrs: dict[int, list[int]] = {p: [] for p in range(1, points + 1)}
    for j, k in edges:
        nbrs[j].append(k)
        nbrs[k].append(j)
    while todo:
        for w in nbrs[todo.pop()]:
            if w not in seen:
                seen.add(w)
                todo.append(w)
    return len(seen) == points


def check_tree(tree: Tree, n: int) -> None:
    pts = n + 1
    if len(tree) != n:
        raise NotANoncrossingTree(f"a tree on {pts} points has {n} edges, got {len(tree)}")
    for j, k in tree:
        if not 1 <= j < k <= pts:
            raise NotANoncrossingTree(f"bad edge {(j, k)}")
    if any(crosses(e, f) for e, f in combinations(sorted(tree), 2)):
        raise NotANoncrossingTree("edges cross")
    if not _connected(pts, tree):
        raise NotANoncrossingTree("not connected")


def enumerate_trees(n: int) -> list[Tree]:
    """All noncrossing trees on n+1 points around a circle."""
    pts = n + 1
    chords = [(j, k) for j in range(1, pts + 1) for k in range(j + 1, pts + 1)]
    adj = adjacency_bitsets(len(chords), lambda a, b: not crosses(chords[a], chords[b]))
    out = []
    for c in iter_cliques(adj, n):
        edges = [chords[i] for i in c]
        if _connected(pts, edges):
            out.append(frozenset(edges))
    return out


def rotate_tree(tree: Tree, t: int, n: int) -> Tree:
    """Clockwise rotation by t points (point p goes to p - t)."""
    pts = n + 1
    out = set()
    for j, k in tree:
        a, b = (j - 1 - t) % pts + 1, (k - 1 - t) % pts + 1
        out.add((min(a, b), max(a, b)))
    return frozenset(out)


def _path(tree: Tree, n: int, u: int, v: int) -> list[int]:
    nbrs: dict[int, list[int]] = {p: [] for p in range(1, n + 2)}
    for j, k in tree:
        nbrs[j].append(k)
        nbrs[k].append(j)
    parent = {u: u}
    todo = [u]
    while todo:
        x = todo.pop()
        for w in nbrs[x]:
            if w not in parent:
                parent[w] = x
                todo.append(w)
    path = [v]
    while path[-1] != u:
        path.append(parent[path[-1]])
    return path[::-1]


def nc_tree_to_quadrangulation(tree: Tree, n: int) -> Dissection:
    """The map Lambda: tree on n+1 points to a quadrangulation of the (2n+2)-gon."""
    check_tree(tree, n)
    N = 2 * n + 2
    diagonals = set()
    for j in range(1, n + 2):
        nxt = j % (n + 1) + 1
        even = 2 * j
        # the even vertex between points j and j+1 sees every interior point of their path
        for p in _path(tree, n, j, nxt)[1:-1]:
            odd = 2 * p - 1
            diagonals.add((min(even, odd), max(even, odd)))
    return Dissection(N, frozenset(diagonals))


def quadrangulation_to_nc_tree(x: Dissection) -> Tree:
    """The inverse map: read off the odd-odd diagonal of every quadrilateral."""
    edges = set()
    for region in face_regions(x):
        if len(region) != 4:
            raise ValueError(f"region {region} is not a quadrilateral")
        odd = [v for v in region if v % 2 == 1]
        j, k = sorted((v + 1) // 2 for v in odd)
        edges.add((j, k))
    return frozenset(edges)


def rotate_quadrangulation(x: Dissection, t: int) -> Dissection:
    return rotate_plain(x, t)
