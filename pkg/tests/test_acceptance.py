"""End-to-end acceptance suite: one recorded verdict line per criterion."""
from __future__ import annotations

import functools
from math import comb

import pytest

from clustersieve.cspcheck import polygon_instance, tree_instance, verify, verify_facets_catalan
from clustersieve.orbits import OrbitStructure, orbit_sizes
from clustersieve.polygons import (
    BijectionImage,
    bijection_a,
    bijection_a_inverse,
    bijection_b,
    bijection_b_inverse,
    bijection_d_t1,
    bijection_d_t1_inverse,
    enumerate_trees,
    nc_tree_to_quadrangulation,
    polygon_model,
    quadrangulation_to_nc_tree,
    rotate_quadrangulation,
    rotate_tree,
    split_t,
    t1_shapes,
)
from clustersieve.polygons.bijections import check_bijection
from clustersieve.qpoly import ComplexType, coxeter_datum, divisors, face_count, format_residues, q_catalan
from clustersieve.rootsys import EXCEPTIONAL_ORBITS, SUSPECT_CELLS, cluster_complex, cross_validate_classical

GRID = (
    [("A", s, n) for s in range(1, 4) for n in range(1, 7)]
    + [("B", s, n) for s in range(1, 4) for n in range(2, 6)]
    + [("D", s, n) for s in range(1, 4) for n in range(2, 6)]
    + [("I2", s, a) for s in range(1, 5) for a in range(3, 9)]
)


def grid_points():
    for family, s, n in GRID:
        for k in range(ComplexType(family, n, s).max_k + 1):
            yield family, s, n, k


@functools.lru_cache(maxsize=None)
def grid_report(family: str, s: int, n: int, k: int):
    return verify(polygon_instance(family, s, n, k))


def test_criterion_1_counting(criterion):
    failures = []
    points = 0
    for family, s, n, k in grid_points():
        t = ComplexType(family, n, s)
        model = polygon_model(family, s, n) if family != "I2" else None
        got = len(model.faces(k)) if model else grid_report(family, s, n, k).checks[0].rhs
        points += 1
        if got != face_count(t, k):
            failures.append(f"{family} s={s} n={n} k={k}: {got} vs {face_count(t, k)}")
    criterion(1, "enumerated face counts equal the closed forms", failures, f"{points} grid points")
    assert not failures


def test_criterion_2_csp(criterion):
    failures = []
    checks = 0
    for point in grid_points():
        rep = grid_report(*point)
        for c in rep.checks:
            checks += 1
            if c.lhs != c.rhs:
                failures.append(f"{point} d={c.d}: X(w)={c.lhs}, fixed={c.rhs}")
        if not rep.residues_match_orbits:
            failures.append(f"{point}: residues do not match the orbit stabilizers")
    criterion(2, "polynomial values at roots of unity equal fixed-point counts", failures, f"{checks} divisor checks")
    assert not failures


def test_criterion_3_worked_examples(criterion):
    failures = []
    notes = []

    rep = verify(polygon_instance("A", 2, 3, 2))
    if (rep.checks[0].rhs, rep.residues, sorted(rep.orbits.as_dict())) != (12, (2, 1) * 4, [4, 8]):
        failures.append(f"octagon A s=2 k=2: {rep.checks[0].rhs} faces, {rep.residues}, {rep.orbits}")

    rep = verify(polygon_instance("B", 1, 3, 1))
    if (rep.checks[0].rhs, rep.residues, rep.orbits) != (12, (3, 0) * 4, OrbitStructure.parse("4(3)")):
        failures.append(f"octagon B s=1 k=1: {rep.checks[0].rhs} faces, {rep.residues}, {rep.orbits}")

    rep = verify(polygon_instance("D", 3, 2, 2))
    if (rep.checks[0].rhs, rep.residues) != (16, (4, 0) * 4) or not rep.passed:
        failures.append(f"octagon D s=3 k=2: {rep.checks[0].rhs} faces, {rep.residues}")
    # the accompanying text calls all four orbits free; 16 faces in four orbits of Z_8 have size 4
    notes.append(f"D s=3 n=2 k=2 orbits {rep.orbits} (text says free)")

    img = BijectionImage((3, 8), (0, 1, 1))
    x = bijection_a_inverse(img, 2, 11, 3)
    m = polygon_model("A", 2, 11)
    if not (m.k_of(x) == 6 and m.act(x, 8) == x and bijection_a(x, 2, 11, 3) == img):
        failures.append("24-gon image ((3,8),(0,1,1))")

    img = BijectionImage((2, 5), (0, 1, 1, 0))
    x = bijection_b_inverse(img, 1, 9, 2)
    m = polygon_model("B", 1, 9)
    if not (m.k_of(x) == 4 and m.act(x, 5) == x and bijection_b(x, 1, 9, 2) == img):
        failures.append("20-gon image ((2,5),(0,1,1,0))")

    img = BijectionImage((2, 2, 7), (1, 1, 1))
    x = bijection_d_t1_inverse(img, 3, 6, 2)
    m = polygon_model("D", 3, 6)
    if not (m.k_of(x) == 6 and m.is_face(x) and bijection_d_t1(x, 3, 6, 2) == img):
        failures.append("32-gon image ((2,2,7),(1,1,1))")
    fixed_by_order_4 = m.act(x, m.group_order // 4) == x
    notes.append(f"32-gon face fixed by the order-4 group element: {fixed_by_order_4}")

    criterion(3, "worked examples reproduced", failures, "; ".join(notes))
    assert not failures


def bijection_cases():
    for s in range(1, 4):
        for n in range(1, 7):
            for d in divisors(s * n + 2):
                if d >= 2:
                    for k in range(0, n, d):
                        yield "A", s, n, k, d
        for n in range(2, 6):
            for family, kinds in (("B", ("B",)), ("D", ("D0", "D1"))):
                half = polygon_model(family, s, n).N // 2
                for t in divisors(half):
                    if t < 2:
                        continue
                    for k in range(0, n + 1, t):
                        for kind in kinds:
                            if kind != "D1" or n % t == 0:
                                yield kind, s, n, k, t


def test_criterion_4_bijections(criterion):
    failures = []
    cases = 0
    for kind, s, n, k, param in bijection_cases():
        cases += 1
        c = check_bijection(kind, s, n, k, param)
        if not c.passed:
            failures.append(f"{kind} s={s} n={n} k={k} param={param}: {c}")
        if kind == "D1":
            # faces fixed by the group element of order 2t with a red first diameter
            m = polygon_model("D", s, n)
            fixed_t1 = split_t(m, m.fixed(k, 2 * param))[1]
            expected = set(t1_shapes(s, n, k, param)) if n % (2 * param) == 0 else set()
            if set(fixed_t1) != expected:
                failures.append(f"D1 s={s} n={n} k={k} t={param}: fixed red-first faces differ")
    criterion(4, "bijections round-trip and fill their product sets", failures, f"{cases} fixed-point sets")
    assert not failures


TABLE_CELLS = [(name, k) for name in ("E6", "E7", "E8", "F4", "H3", "H4") for k in sorted(EXCEPTIONAL_ORBITS[name])]


@functools.lru_cache(maxsize=None)
def computed_orbits(name: str, k: int) -> OrbitStructure:
    cx = cluster_complex(name)
    return OrbitStructure.from_counts(orbit_sizes(cx.faces(k), cx.act, cx.order))


def test_criterion_5_exceptional_table(criterion):
    failures = []
    for name, k in TABLE_CELLS:
        got, want = computed_orbits(name, k), OrbitStructure.from_counts(EXCEPTIONAL_ORBITS[name][k])
        if got != want:
            failures.append(f"{name} k={k} computed {got}, tabulated {want}")
    facets = computed_orbits("E8", 8).total
    if facets != 25080:
        failures.append(f"E8 facets {facets}")
    matched = len(TABLE_CELLS) - len(failures)
    criterion(5, f"exceptional orbit table ({matched} of {len(TABLE_CELLS)} cells match)", failures)
    # only the two cells whose tabulated totals contradict the sphere's Euler characteristic may differ
    assert {f.split(" computed")[0] for f in failures} == {f"{name} k={k}" for name, k in SUSPECT_CELLS}


@pytest.mark.parametrize("name,k", sorted(SUSPECT_CELLS))
@pytest.mark.xfail(strict=True, reason="tabulated cell contradicts enumeration and the Euler characteristic")
def test_suspect_table_cell_as_printed(name, k):
    assert computed_orbits(name, k) == OrbitStructure.from_counts(EXCEPTIONAL_ORBITS[name][k])


PRINTED_RESIDUES = {
    "E6": ("67+52q+67q^2+52q^3+\\cdots+67q^{12}+52q^{13}", 4, 2),
    "E7": ("416+416q^2+416q^4+\\cdots+416q^{18}", 3, 1),
    "E8": ("1574+1562q^2+1572q^4+1562q^6+\\cdots+1574q^{24}+1562q^{26}+1572q^{28}+1562q^{30}", 4, 4),
    "F4": ("15+15q^2+15q^4+\\cdots+15q^{12}", 3, 1),
    "H3": ("6+5q^2+5q^4+6q^6+5q^8+5q^{10}", None, 0),
    "H4": ("18+17q^2+18q^4+17q^6+\\cdots+18q^{28}+17q^{30}", 4, 2),
}

CLASSICAL_FACETS = [("A", n, s) for n in range(2, 6) for s in (1, 2)] + \
                   [("B", n, s) for n in range(2, 5) for s in (1, 2)] + \
                   [("D", n, s) for n in range(4, 6) for s in (1, 2)] + \
                   [("A", 2, 3), ("A", 3, 3), ("B", 2, 3), ("B", 3, 3), ("D", 4, 3)]


def test_criterion_6_catalan_residues(criterion):
    failures = []
    for name, (printed, head, tail) in PRINTED_RESIDUES.items():
        datum = coxeter_datum(name)
        res = q_catalan(datum).residues(datum.h + 2)
        got = format_residues(res, head, tail)
        if got != printed:
            failures.append(f"{name}: {got}")
        if not verify_facets_catalan(name).passed:
            failures.append(f"{name}: facet CSP fails")
    for name, n, s in CLASSICAL_FACETS:
        if not verify_facets_catalan(name, n, s).passed:
            failures.append(f"{name}{n} s={s}: facet CSP fails")
    criterion(6, "Catalan residues match and facet CSP holds", failures,
              f"6 exceptional and {len(CLASSICAL_FACETS)} classical instances")
    assert not failures


def test_criterion_7_triple_agreement(criterion):
    failures = []
    for point in grid_points():
        for c in grid_report(*point).checks:
            if not (c.closed_form == c.lhs == c.rhs):
                failures.append(f"{point} d={c.d}: closed {c.closed_form}, cyclotomic {c.lhs}, fixed {c.rhs}")
    criterion(7, "closed form, cyclotomic reduction and enumeration agree", failures)
    assert not failures


def test_criterion_8_noncrossing_trees(criterion):
    failures = []
    for n in range(1, 8):
        trees = enumerate_trees(n)
        if len(trees) != comb(3 * n, n) // (2 * n + 1):
            failures.append(f"n={n}: {len(trees)} trees")
        quads = set()
        for t in trees:
            q = nc_tree_to_quadrangulation(t, n)
            quads.add(q)
            if quadrangulation_to_nc_tree(q) != t:
                failures.append(f"n={n}: inverse fails")
                break
            if nc_tree_to_quadrangulation(rotate_tree(t, 1, n), n) != rotate_quadrangulation(q, 2):
                failures.append(f"n={n}: rotations not intertwined")
                break
        if quads != set(polygon_model("A", 2, n).faces(n - 1)):
            failures.append(f"n={n}: image is not the set of quadrangulations")
        if not verify(tree_instance(n)).passed:
            failures.append(f"n={n}: CSP fails")
    criterion(8, "noncrossing trees", failures, "n = 1..7")
    assert not failures


CROSS = [(1, "A", 2), (1, "A", 3), (1, "B", 2), (1, "B", 3), (1, "D", 4), (2, "A", 2), (2, "B", 2)]


def test_criterion_9_cross_validation(criterion):
    failures = []
    for s, name, n in CROSS:
        for k in range(n + 1):
            res = cross_validate_classical(s, name, n, k)
            if not res.ok:
                failures.append(f"{name}{n} s={s} k={k}: {res.detail}")
    criterion(9, "root-system and polygon models agree", failures, f"{len(CROSS)} types, all k")
    assert not failures
