"""Bijections between rotation-invariant dissections and pairs of sequences.

A dissection invariant under rotation by ``b`` vertices (``N = b * sectors``)
is a union of segment orbits. Each orbit is labelled by the initial point of
its unique member starting in the first sector ``1..b``. The encoding peels
orbits off one at a time: find the first label ``a_j`` followed by at least
``s`` unlabelled vertices, record whether the chord ``a_j -> a_j + s + 1`` is
present, delete the vertex orbit of ``a_j + 1 .. a_j + s`` and recurse on the
smaller polygon. Decoding runs the same walk driven by the bits instead.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement
from typing import Callable, Iterator

from .dissections import RED, BLUE, Dissection, PolygonModel, TypeD, polygon_model, rotate_plain


@dataclass(frozen=True)
class BijectionImage:
    mu: tuple[int, ...]
    nu: tuple[int, ...]

    def __post_init__(self):
        if any(a > b for a, b in zip(self.mu, self.mu[1:])):
            raise ValueError(f"mu must be weakly increasing: {self.mu}")
        if set(self.nu) - {0, 1}:
            raise ValueError(f"nu must be binary: {self.nu}")
        if sum(self.nu) != len(self.mu):
            raise ValueError(f"nu must contain exactly {len(self.mu)} ones: {self.nu}")


class BijectionError(ValueError):
    pass


@dataclass(frozen=True)
class _Setup:
    model: PolygonModel
    s: int
    N: int
    b: int        # sector size, also the rotation step generating the subgroup
    per_orbit: int  # complex vertices per orbit: d for A, t for B and D
    m: int        # length of nu
    with_diameters: bool = False


def _initial_point(seg, N: int) -> int:
    i, j = seg[0], seg[1]
    if 2 * (j - i) == N:
        return i
    # travel with the centre on the left: from the endpoint whose ccw arc is short
    return i if 2 * (j - i) < N else j


def _chord_key(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


def _rotate_label(v: int, shift: int, N: int) -> int:
    return (v - 1 + shift) % N + 1


def _current_vertices(residues: list[int], sectors: int, b: int) -> list[int]:
    return [r + b * u for u in range(sectors) for r in residues]


def _first_gap(positions: list[int], size: int, s: int) -> int | None:
    """Index j of the first label followed by a run of at least s free vertices."""
    k = len(positions)
    for j in range(k):
        nxt = positions[j + 1] if j + 1 < k else positions[0] + size
        if positions[j] + s + 1 <= nxt:
            return j
    return None


def _walk(setup: _Setup, labels: list[int], decide: Callable[[int, tuple[int, int]], int]) -> list[tuple[int, tuple[int, int] | None]]:
    """Shared peel loop.

    ``decide(step, chord)`` returns the bit for this step given the chord
    ``(a_j, a_j + s + 1)`` in original labels. Returns, per step, the bit and
    the chord it referred to (None for terminal diameter steps).
    """
    s, b, N = setup.s, setup.b, setup.N
    sectors = N // b
    residues = list(range(1, b + 1))
    labels = sorted(labels)
    trace = []
    for step in range(setup.m):
        remaining = setup.m - step
        if not labels:
            trace.append((decide(step, None), None))
            continue
        pos = [residues.index(a) for a in labels]
        j = _first_gap(pos, len(residues), s)
        if setup.with_diameters and (remaining == 1 or j is None):
            # only diameter orbits remain: one step per orbit
            if len(labels) != remaining:
                raise BijectionError("diameter orbits do not fill the remaining steps")
            for _ in range(remaining):
                trace.append((decide(step, None), None))
            return trace
        if j is None:
            raise BijectionError("no label is followed by s free vertices")
        verts = _current_vertices(residues, sectors, b)
        start = pos[j]
        chord = (verts[start], verts[(start + s + 1) % len(verts)])
        bit = decide(step, chord)
        trace.append((bit, chord))
        if bit:
            del labels[j]
        gone = {verts[(start + i) % len(verts)] for i in range(1, s + 1)}
        gone = {(v - 1) % b + 1 for v in gone}
        residues = [r for r in residues if r not in gone]
    if labels:
        raise BijectionError("orbits left over after all steps")
    return trace


def _orbit_of(seg, b: int, N: int) -> frozenset:
    out = set()
    for u in range(N // b):
        a, c = _rotate_label(seg[0], b * u, N), _rotate_label(seg[1], b * u, N)
        out.add(_chord_key(a, c))
    return frozenset(out)


def _shape(x: Dissection) -> Dissection:
    """The dissection with diameter colours forgotten."""
    return Dissection(x.N, frozenset(seg[:2] for seg in x.segments))


def _symmetric(x: Dissection, b: int) -> bool:
    shape = _shape(x)
    return rotate_plain(shape, b) == shape


def _encode(setup: _Setup, x: Dissection) -> BijectionImage:
    N, b = setup.N, setup.b
    if not _symmetric(x, b):
        raise BijectionError("dissection is not invariant under the subgroup")
    k = setup.model.k_of(x)
    if k % setup.per_orbit:
        raise BijectionError(f"k={k} is not divisible by {setup.per_orbit}")
    plain = {seg[:2] for seg in x.segments}
    reps: dict[tuple[int, int], int] = {}
    diam_labels = []
    for seg in plain:
        a = _initial_point(seg, N)
        if a > b:
            continue
        if 2 * (seg[1] - seg[0]) == N:
            diam_labels.append(a)
        else:
            reps[_chord_key(a, seg[0] + seg[1] - a)] = a
    if diam_labels and not setup.with_diameters:
        raise BijectionError("unexpected diameter")
    labels = sorted(list(reps.values()) + diam_labels)
    if len(labels) != k // setup.per_orbit:
        raise BijectionError("orbit labels do not match the face size")

    def decide(step, chord):
        if chord is None:
            return 1 if diam_labels else 0
        return int(_chord_key(*chord) in reps)

    trace = _walk(setup, labels, decide)
    return BijectionImage(tuple(labels), tuple(bit for bit, _ in trace))


def _decode(setup: _Setup, image: BijectionImage) -> Dissection:
    N, b = setup.N, setup.b
    if len(image.nu) != setup.m:
        raise BijectionError(f"nu must have length {setup.m}")
    if any(not 1 <= a <= b for a in image.mu):
        raise BijectionError(f"labels must lie in 1..{b}")
    if setup.with_diameters and image.nu[-1] != 1:
        raise BijectionError("the last entry of nu must be 1")
    trace = _walk(setup, list(image.mu), lambda step, chord: image.nu[step])
    segs: set = set()
    used = []
    for bit, chord in trace:
        if bit and chord is not None:
            segs |= _orbit_of(chord, b, N)
            used.append(chord[0])
    diam = sorted(image.mu)
    for a in used:
        diam.remove(a)
    if diam:
        segs |= _color_diameters(setup.model, sorted({a + b * u for a in diam for u in range(N // (2 * b))}))
    x = Dissection(N, frozenset(segs))
    if not setup.model.is_face(x) or not _symmetric(x, b):
        raise BijectionError(f"{image} does not decode to an invariant face")
    return x


def _color_diameters(model: PolygonModel, lower: list[int]) -> set:
    if not isinstance(model, TypeD):
        raise BijectionError("diameters only occur in the type D encoding")
    h = model.half
    first = (lower[0], lower[0] + h, RED)
    out = {first}
    for i in lower[1:]:
        red = (i, i + h, RED)
        out.add(red if model.units_compatible((first,), (red,)) else (i, i + h, BLUE))
    return out


# public wrappers -------------------------------------------------------------

def _setup_a(s: int, n: int, d: int) -> _Setup:
    model = polygon_model("A", s, n)
    if d < 2 or model.N % d:
        raise BijectionError(f"d={d} must be at least 2 and divide {model.N}")
    return _Setup(model, s, model.N, model.N // d, d, (n - 1) // d)


def _setup_sym(family: str, s: int, n: int, t: int, m: int, with_diameters: bool = False) -> _Setup:
    model = polygon_model(family, s, n)
    if t < 2 or (model.N // 2) % t:
        raise BijectionError(f"t={t} must be at least 2 and divide {model.N // 2}")
    return _Setup(model, s, model.N, model.N // (2 * t), t, m, with_diameters)


def _setup_b(s, n, t):
    return _setup_sym("B", s, n, t, (n - 1) // t)


def _setup_d0(s, n, t):
    return _setup_sym("D", s, n, t, (n - 2) // t)


def _setup_d1(s, n, t):
    if n % t:
        raise BijectionError(f"t={t} must divide n={n}")
    return _setup_sym("D", s, n, t, n // t, with_diameters=True)


def bijection_a(x: Dissection, s: int, n: int, d: int) -> BijectionImage:
    """Encode a d-fold rotation invariant dissection of the (sn+2)-gon."""
    return _encode(_setup_a(s, n, d), x)


def bijection_a_inverse(image: BijectionImage, s: int, n: int, d: int) -> Dissection:
    return _decode(_setup_a(s, n, d), image)


def bijection_b(x: Dissection, s: int, n: int, t: int) -> BijectionImage:
    """Encode a type-B dissection invariant under the subgroup of order 2t."""
    return _encode(_setup_b(s, n, t), x)


def bijection_b_inverse(image: BijectionImage, s: int, n: int, t: int) -> Dissection:
    return _decode(_setup_b(s, n, t), image)


def bijection_d_t0(x: Dissection, s: int, n: int, t: int) -> BijectionImage:
    """Encode a diameter-free type-D dissection invariant under the subgroup of order 2t."""
    if any(len(seg) == 3 for seg in x.segments):
        raise BijectionError("dissection contains a diameter")
    return _encode(_setup_d0(s, n, t), x)


def bijection_d_t0_inverse(image: BijectionImage, s: int, n: int, t: int) -> Dissection:
    return _decode(_setup_d0(s, n, t), image)


def bijection_d_t1(x: Dissection, s: int, n: int, t: int) -> BijectionImage:
    """Encode a type-D face with a red first diameter whose shape has 2t-fold symmetry.

    Symmetry is of the uncoloured dissection. When 2t divides n these faces
    are exactly the ones fixed by the order-2t element of the group; when t
    divides n but 2t does not, no face with a diameter is fixed by that
    element, and the bijection is onto the symmetric shapes only.
    """
    setup = _setup_d1(s, n, t)
    dia = setup.model.diameters(x)
    if not dia or dia[0][2] != RED:
        raise BijectionError("first diameter must be red")
    return _encode(setup, x)


def bijection_d_t1_inverse(image: BijectionImage, s: int, n: int, t: int) -> Dissection:
    return _decode(_setup_d1(s, n, t), image)


def iter_images(b: int, m: int, ones: int, last_one: bool = False) -> Iterator[BijectionImage]:
    """Every (mu, nu) in the product set: mu a multiset from 1..b, nu with `ones` ones."""
    for mu in combinations_with_replacement(range(1, b + 1), ones):
        if last_one:
            if ones == 0:
                return
            for rest in combinations(range(m - 1), ones - 1):
                nu = [0] * m
                nu[m - 1] = 1
                for i in rest:
                    nu[i] = 1
                yield BijectionImage(mu, tuple(nu))
        else:
            for pos in combinations(range(m), ones):
                nu = [0] * m
                for i in pos:
                    nu[i] = 1
                yield BijectionImage(mu, tuple(nu))


def t1_shapes(s: int, n: int, k: int, t: int) -> list[Dissection]:
    """Type-D faces with a red first diameter whose uncoloured shape has 2t-fold symmetry.

    Equal to T1(s,n,k,2t) when 2t divides n; strictly larger (T1 is then empty)
    when only t divides n.
    """
    model = polygon_model("D", s, n)
    b = model.N // (2 * t)
    out = []
    for x in model.faces(k):
        dia = model.diameters(x)
        if dia and dia[0][2] == RED and _symmetric(x, b):
            out.append(x)
    return out


@dataclass(frozen=True)
class BijectionCheck:
    kind: str
    s: int
    n: int
    k: int
    param: int
    domain: int
    product: int
    round_trip: bool
    fills: bool

    @property
    def passed(self) -> bool:
        return self.round_trip and self.fills


_KINDS = {
    "A": ("A", bijection_a, bijection_a_inverse, _setup_a),
    "B": ("B", bijection_b, bijection_b_inverse, _setup_b),
    "D0": ("D", bijection_d_t0, bijection_d_t0_inverse, _setup_d0),
    "D1": ("D", bijection_d_t1, bijection_d_t1_inverse, _setup_d1),
}


def bijection_domain(kind: str, s: int, n: int, k: int, param: int) -> list[Dissection]:
    """The fixed-point set a bijection is defined on; ``param`` is d for A and t otherwise."""
    from .dissections import split_t

    family = _KINDS[kind][0]
    model = polygon_model(family, s, n)
    if kind == "A":
        return model.fixed(k, param)
    if kind == "D1":
        return t1_shapes(s, n, k, param)
    faces = model.fixed(k, 2 * param)
    return split_t(model, faces)[0] if kind == "D0" else faces


def check_bijection(kind: str, s: int, n: int, k: int, param: int) -> BijectionCheck:
    """Exhaustive round trips and surjectivity onto the product set."""
    family, forward, inverse, make = _KINDS[kind]
    setup = make(s, n, param)
    ones, rest = divmod(k, setup.per_orbit)
    if rest:
        raise BijectionError(f"k={k} is not divisible by {setup.per_orbit}")
    domain = bijection_domain(kind, s, n, k, param)
    product = set(iter_images(setup.b, setup.m, ones, last_one=kind == "D1"))
    images = [forward(x, s, n, param) for x in domain]
    round_trip = all(inverse(img, s, n, param) == x for x, img in zip(domain, images))
    round_trip = round_trip and all(forward(inverse(img, s, n, param), s, n, param) == img for img in product)
    fills = len(set(images)) == len(domain) and set(images) == product
    return BijectionCheck(kind, s, n, k, param, len(domain), len(product), round_trip, fills)
