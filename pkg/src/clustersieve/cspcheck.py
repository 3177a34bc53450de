"""Cyclic sieving verification: polynomial values at roots of unity against fixed points.

A :class:`CSPInstance` bundles a finite face set, a cyclic action of
Z_N given by ``act(face, t)``, and a candidate polynomial X(q). ``verify``
evaluates X at a primitive d-th root of unity for every d | N (by cyclotomic
reduction and, when available, a closed form), counts faces fixed by the
order-d element explicitly, partitions the faces into orbits and checks the
residues of X(q) mod q^N - 1 against the stabilizer orders.
"""
from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Hashable, Sequence

from .orbits import OrbitStructure, orbit_sizes
from .qpoly import (
    ComplexType,
    NonConstantRemainder,
    QPolynomial,
    closed_form_eval,
    coxeter_datum,
    divisors,
    eval_at_primitive_root,
    face_poly,
    gauss_binomial,
    q_catalan,
    q_int,
)


@dataclass
class CSPInstance:
    family: str
    s: int
    n_or_a: int | None
    k: int | None
    group_order: int
    faces: Sequence[Hashable]
    act: Callable[[Hashable, int], Hashable]
    poly: QPolynomial
    closed_form: Callable[[int], int] | None = None

    def __post_init__(self):
        if self.poly.at_one() != len(self.faces):
            raise ValueError(f"X(1) = {self.poly.at_one()} but there are {len(self.faces)} faces")


@dataclass(frozen=True)
class DivisorCheck:
    d: int
    lhs: int | None
    rhs: int
    closed_form: int | None = None
    note: str = ""

    @property
    def passed(self) -> bool:
        return self.lhs is not None and self.lhs == self.rhs and self.closed_form in (None, self.lhs)


@dataclass(frozen=True)
class CSPReport:
    family: str
    s: int
    n_or_a: int | None
    k: int | None
    group_order: int
    checks: tuple[DivisorCheck, ...]
    residues: tuple[int, ...]
    orbits: OrbitStructure
    residues_match_orbits: bool = True
    fixed_sets_nested: bool = True
    notes: tuple[str, ...] = field(default=())

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks) and self.residues_match_orbits and self.fixed_sets_nested

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "s": self.s,
            "n_or_a": self.n_or_a,
            "k": self.k,
            "group_order": self.group_order,
            "checks": [
                {"d": c.d, "lhs": c.lhs, "closed_form": c.closed_form, "rhs": c.rhs, "pass": c.passed, "note": c.note}
                for c in self.checks
            ],
            "residues": list(self.residues),
            "orbits": [{"size": size, "count": count} for size, count in self.orbits.counts],
            "residues_match_orbits": self.residues_match_orbits,
            "fixed_sets_nested": self.fixed_sets_nested,
            "notes": list(self.notes),
            "pass": self.passed,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict) -> CSPReport:
        checks = tuple(DivisorCheck(c["d"], c["lhs"], c["rhs"], c.get("closed_form"), c.get("note", "")) for c in data["checks"])
        orbits = OrbitStructure.from_counts({o["size"]: o["count"] for o in data["orbits"]})
        return cls(
            data["family"], data["s"], data["n_or_a"], data["k"], data["group_order"], checks,
            tuple(data["residues"]), orbits, data.get("residues_match_orbits", True),
            data.get("fixed_sets_nested", True), tuple(data.get("notes", ())),
        )

    @classmethod
    def from_json(cls, text: str) -> CSPReport:
        return cls.from_dict(json.loads(text))

    def to_text(self) -> str:
        head = f"family {self.family}  s={self.s}  n={self.n_or_a}  k={self.k}  group order {self.group_order}"
        rows = [("d", "X(w_d)", "closed", "fixed", "ok")]
        for c in self.checks:
            rows.append((str(c.d), _cell(c.lhs), _cell(c.closed_form), str(c.rhs), "yes" if c.passed else "NO"))
        widths = [max(len(r[i]) for r in rows) for i in range(5)]
        lines = [head]
        lines += ["  ".join(v.rjust(w) for v, w in zip(r, widths)) for r in rows]
        lines.append(f"residues mod q^{self.group_order}-1: " + " ".join(str(a) for a in self.residues))
        lines.append(f"orbits: {self.orbits}")
        lines.append(f"residues vs stabilizers: {'ok' if self.residues_match_orbits else 'MISMATCH'}")
        lines.append(f"fixed sets nested: {'ok' if self.fixed_sets_nested else 'NO'}")
        lines += [f"note: {n}" for n in self.notes]
        lines.append(f"verdict: {'pass' if self.passed else 'FAIL'}")
        return "\n".join(lines)


def _cell(v) -> str:
    return "-" if v is None else str(v)


def _fixed_indices(instance: CSPInstance, d: int) -> frozenset[int]:
    step = instance.group_order // d
    return frozenset(i for i, f in enumerate(instance.faces) if instance.act(f, step) == f)


def verify(instance: CSPInstance, threads: int = 1) -> CSPReport:
    N = instance.group_order
    divs = divisors(N)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            fixed = dict(zip(divs, pool.map(lambda d: _fixed_indices(instance, d), divs)))
    else:
        fixed = {d: _fixed_indices(instance, d) for d in divs}

    checks = []
    for d in divs:
        note = ""
        try:
            lhs = eval_at_primitive_root(instance.poly, d)
        except NonConstantRemainder as exc:
            lhs, note = None, f"remainder mod Phi_{d} is {exc.remainder}"
        closed = instance.closed_form(d) if instance.closed_form else None
        checks.append(DivisorCheck(d, lhs, len(fixed[d]), closed, note))

    orbits = OrbitStructure.from_counts(orbit_sizes(instance.faces, instance.act, N))
    residues = instance.poly.residues(N)
    notes = []
    # a_j counts orbits whose stabilizer order divides j
    residue_ok = all(residues[j] == orbits.orbits_with_stabilizer_dividing(N, j) for j in range(N))
    residue_ok = residue_ok and orbits.total == len(instance.faces)
    if any(N % size for size, _ in orbits.counts):
        residue_ok = False
        notes.append("an orbit size does not divide the group order")
    # the order-d element is a power of the order-d' element when d | d'
    nested = all(fixed[e] <= fixed[d] for d in divs for e in divs if e % d == 0)
    return CSPReport(instance.family, instance.s, instance.n_or_a, instance.k, N, tuple(checks), residues,
                     orbits, residue_ok, nested, tuple(notes))


# instance builders -----------------------------------------------------------

def polygon_instance(family: str, s: int, n: int, k: int) -> CSPInstance:
    """Faces of the type A, B, D or I2 realization with the matching face polynomial."""
    t = ComplexType(family, n, s)
    t.check_k(k)
    if family == "I2":
        from .polygons.i2 import build_i2

        model = build_i2(s, n)
    else:
        from .polygons.dissections import polygon_model

        model = polygon_model(family, s, n)
    return CSPInstance(family, s, n, k, t.group_order, model.faces(k), model.act, face_poly(t, k),
                       lambda d: closed_form_eval(t, k, d))


def tree_instance(n: int) -> CSPInstance:
    """Noncrossing trees on n+1 points under rotation by one point."""
    from .polygons.trees import enumerate_trees, rotate_tree

    poly = gauss_binomial(3 * n, n).exact_div(q_int(2 * n + 1))
    return CSPInstance("trees", 2, n, n, n + 1, enumerate_trees(n), lambda x, t: rotate_tree(x, t, n), poly)


def root_instance(name: str, n: int | None, s: int, k: int, poly: QPolynomial) -> CSPInstance:
    from .rootsys import cluster_complex

    cx = cluster_complex(name, n, s)
    return CSPInstance(cx.rs.label, s, cx.rs.n, k, cx.order, cx.faces(k), cx.act, poly)


def verify_facets_catalan(name: str, n: int | None = None, s: int = 1, threads: int = 1) -> CSPReport:
    """Facets of the root-system complex against Cat^(s)(Phi, q)."""
    from .rootsys import build_root_system

    rs = build_root_system(name, n)
    datum = coxeter_datum(rs.label)
    if datum.h != rs.coxeter_number:
        raise AssertionError(f"Coxeter number {datum.h} disagrees with root count ({rs.coxeter_number})")
    return verify(root_instance(name, n, s, rs.n, q_catalan(datum, s)), threads)
