"""Exact q-analogue arithmetic.

Polynomials in ``q`` with arbitrary-precision integer coefficients, the usual
q-integers, Gaussian binomials and cyclotomic polynomials, exact evaluation at
primitive roots of unity by cyclotomic reduction, and the face polynomials of
the generalized cluster complexes in types A, B, D and I2(a).

No floating point is used anywhere in this module.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass
from math import comb
from typing import Iterable, Sequence


class NonConstantRemainder(ArithmeticError):
    """The value of a polynomial at a primitive root of unity is not a rational integer."""

    def __init__(self, d: int, remainder: QPolynomial):
        self.d = d
        self.remainder = remainder
        super().__init__(f"remainder modulo Phi_{d} is not constant: {remainder}")


class InexactDivision(ArithmeticError):
    pass


@dataclass(frozen=True, init=False)
class QPolynomial:
    """A polynomial in q, stored as its coefficient tuple (index = exponent).

    The tuple never ends in a zero; the zero polynomial is the empty tuple.

    >>> QPolynomial([1, 1, 1]) * QPolynomial([1, -1])
    QPolynomial('1 - q^3')
    """

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(int(c) for c in cs))

    @classmethod
    def constant(cls, c: int) -> QPolynomial:
        return cls([c])

    @classmethod
    def monomial(cls, e: int, c: int = 1) -> QPolynomial:
        return cls([0] * e + [c])

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, e: int) -> int:
        return self.coeffs[e] if 0 <= e < len(self.coeffs) else 0

    def __iter__(self):
        return iter(self.coeffs)

    def _lift(self, other) -> QPolynomial:
        if isinstance(other, QPolynomial):
            return other
        if isinstance(other, int):
            return QPolynomial([other])
        return NotImplemented

    def __add__(self, other) -> QPolynomial:
        other = self._lift(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPolynomial(out)

    __radd__ = __add__

    def __neg__(self) -> QPolynomial:
        return QPolynomial(-c for c in self.coeffs)

    def __sub__(self, other) -> QPolynomial:
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> QPolynomial:
        return (-self) + other

    def __mul__(self, other) -> QPolynomial:
        other = self._lift(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return QPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return QPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> QPolynomial:
        out = QPolynomial([1])
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def shift(self, e: int) -> QPolynomial:
        """Multiply by q^e."""
        if not self.coeffs:
            return self
        return QPolynomial([0] * e + list(self.coeffs))

    def divmod(self, divisor: QPolynomial) -> tuple[QPolynomial, QPolynomial]:
        """Long division by a divisor whose leading coefficient is +1 or -1,
        or more generally divides every intermediate leading coefficient."""
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        dv = divisor.coeffs
        lead = dv[-1]
        dd = len(dv) - 1
        if len(rem) - 1 < dd:
            return QPolynomial(), self
        quot = [0] * (len(rem) - dd)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            f, r = divmod(c, lead)
            if r:
                raise InexactDivision(f"leading coefficient {c} not divisible by {lead}")
            quot[i - dd] = f
            for j in range(dd + 1):
                rem[i - dd + j] -= f * dv[j]
        return QPolynomial(quot), QPolynomial(rem)

    def __mod__(self, divisor: QPolynomial) -> QPolynomial:
        return self.divmod(divisor)[1]

    def exact_div(self, divisor: QPolynomial) -> QPolynomial:
        q, r = self.divmod(divisor)
        if r:
            raise InexactDivision(f"{self} is not divisible by {divisor}")
        return q

    def __floordiv__(self, divisor: QPolynomial) -> QPolynomial:
        return self.exact_div(divisor)

    def __call__(self, x):
        """Horner evaluation at any value supporting + and *."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def at_one(self) -> int:
        return sum(self.coeffs)

    def substitute_power(self, k: int) -> QPolynomial:
        """Return p(q^k)."""
        if k == 1 or not self.coeffs:
            return self
        out = [0] * ((len(self.coeffs) - 1) * k + 1)
        for i, c in enumerate(self.coeffs):
            out[i * k] = c
        return QPolynomial(out)

    def residues(self, n: int) -> tuple[int, ...]:
        """Coefficients a_0..a_{n-1} of p mod (q^n - 1)."""
        out = [0] * n
        for i, c in enumerate(self.coeffs):
            out[i % n] += c
        return tuple(out)

    def is_palindromic(self) -> bool:
        if not self.coeffs:
            return True
        lo = next(i for i, c in enumerate(self.coeffs) if c)
        body = self.coeffs[lo:]
        return body == body[::-1]

    def __repr__(self) -> str:
        return f"QPolynomial('{self}')"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for e, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if e == 0:
                term = str(mag)
            else:
                base = "q" if e == 1 else f"q^{e}"
                term = base if mag == 1 else f"{mag}*{base}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(("+ " if c > 0 else "- ") + term)
        return " ".join(parts)


ZERO = QPolynomial()
ONE = QPolynomial([1])


def binom(a: int, b: int) -> int:
    """Binomial coefficient that vanishes outside 0 <= b <= a."""
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)


def q_int(n: int) -> QPolynomial:
    """[n]_q = 1 + q + ... + q^(n-1); [0]_q is zero."""
    if n < 0:
        raise ValueError(f"q_int needs n >= 0, got {n}")
    return QPolynomial([1] * n)


def q_factorial(n: int) -> QPolynomial:
    out = ONE
    for i in range(1, n + 1):
        out = out * q_int(i)
    return out


@functools.lru_cache(maxsize=None)
def _gauss(m: int, k: int) -> QPolynomial:
    if k < 0 or k > m:
        return ZERO
    if k == 0 or k == m:
        return ONE
    # [m k] = [m-1 k-1] + q^k [m-1 k]
    return _gauss(m - 1, k - 1) + _gauss(m - 1, k).shift(k)


def gauss_binomial(m: int, k: int, base: int = 1) -> QPolynomial:
    """Gaussian binomial [m k]_q, or [m k]_{q^2} when ``base`` is 2.

    Lower index outside 0..m gives the zero polynomial.
    """
    if base not in (1, 2):
        raise ValueError(f"base must be 1 or 2, got {base}")
    if m < 0:
        return ZERO
    if m > 1 and k > 1:
        # fill the cache bottom-up so deep recursions never happen
        for mm in range(2, m):
            _gauss(mm, min(k, mm))
    return _gauss(m, k).substitute_power(base)


def gauss_binomial_by_division(m: int, k: int) -> QPolynomial:
    """Gaussian binomial from [m]!/([k]![m-k]!), used as an independent check."""
    if k < 0 or k > m:
        return ZERO
    num = ONE
    for i in range(m - k + 1, m + 1):
        num = num * q_int(i)
    return num.exact_div(q_factorial(k))


@functools.lru_cache(maxsize=None)
def cyclotomic(d: int) -> QPolynomial:
    """The d-th cyclotomic polynomial, by exact division of q^d - 1."""
    if d < 1:
        raise ValueError(f"cyclotomic needs d >= 1, got {d}")
    p = QPolynomial.monomial(d) - 1
    for e in range(1, d):
        if d % e == 0:
            p = p.exact_div(cyclotomic(e))
    return p


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


@dataclass(frozen=True)
class RootOfUnitySpec:
    """A primitive d-th root of unity, identified only by its order."""

    d: int

    def __post_init__(self):
        if self.d < 1:
            raise ValueError(f"root of unity order must be >= 1, got {self.d}")


def _order(spec: RootOfUnitySpec | int) -> int:
    return RootOfUnitySpec(spec).d if isinstance(spec, int) else spec.d


def eval_at_primitive_root(p: QPolynomial, spec: RootOfUnitySpec | int) -> int:
    """Value of p at a primitive d-th root of unity.

    Computed as the remainder of p modulo the d-th cyclotomic polynomial;
    raises NonConstantRemainder if that remainder is not a constant, i.e. the
    value depends on which primitive root is chosen.
    """
    d = _order(spec)
    if d == 1:
        return p.at_one()
    r = p % cyclotomic(d)
    if r.degree > 0:
        raise NonConstantRemainder(d, r)
    return r[0]


def q_lucas(m: int, k: int, spec: RootOfUnitySpec | int) -> int:
    """[m k]_q at a primitive d-th root via the q-Lucas theorem (d >= 2)."""
    d = _order(spec)
    if d < 2:
        raise ValueError("q_lucas needs d >= 2")
    if k < 0 or k > m:
        return 0
    a, b = divmod(m, d)
    r, t = divmod(k, d)
    return comb(a, r) * eval_at_primitive_root(gauss_binomial(b, t), d)


# --------------------------------------------------------------------------
# Complex types, Coxeter data, face numbers


FAMILIES = ("A", "B", "D", "I2")


@dataclass(frozen=True)
class ComplexType:
    """Which generalized cluster complex: family, rank parameter and Fuss parameter.

    For family A the parameter ``n`` is the polygon convention of the
    (sn+2)-gon, i.e. the complex of type A_{n-1}. For I2 it is ``a``.
    """

    family: str
    n: int
    s: int = 1

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.s < 1:
            raise ValueError(f"s must be positive, got {self.s}")
        lo = {"A": 1, "B": 2, "D": 2, "I2": 3}[self.family]
        if self.n < lo:
            raise ValueError(f"family {self.family} needs parameter >= {lo}, got {self.n}")

    @property
    def group_order(self) -> int:
        s, n = self.s, self.n
        return {
            "A": s * n + 2,
            "B": 2 * s * n + 2,
            "D": 2 * s * (n - 1) + 2,
            "I2": s * n + 2,
        }[self.family]

    @property
    def max_k(self) -> int:
        return {"A": self.n - 1, "B": self.n, "D": self.n, "I2": 2}[self.family]

    def check_k(self, k: int) -> None:
        if not 0 <= k <= self.max_k:
            raise ValueError(f"k={k} out of range 0..{self.max_k} for {self}")

    def __str__(self) -> str:
        par = "a" if self.family == "I2" else "n"
        return f"{self.family}(s={self.s}, {par}={self.n})"


def face_count(t: ComplexType, k: int) -> int:
    """Closed-form number of k-faces."""
    t.check_k(k)
    s, n = t.s, t.n
    if t.family == "A":
        # complex of type A_{n-1}
        return comb(s * n + k + 1, k) * binom(n - 1, k) // (k + 1)
    if t.family == "B":
        return comb(s * n + k, k) * comb(n, k)
    if t.family == "D":
        return binom(s * (n - 1) + k, k) * binom(n, k) + binom(s * (n - 1) + k - 1, k) * binom(n - 2, k - 2)
    a = n
    return [1, s * a + 2, (s * a + 2) * (s + 1) // 2][k]


def _g_poly(s: int, n: int, k: int) -> QPolynomial:
    num = gauss_binomial(s * n + k + 1, k) * gauss_binomial(n - 1, k)
    return num.exact_div(q_int(k + 1))


def _h_poly(s: int, n: int, k: int) -> QPolynomial:
    return gauss_binomial(s * n + k, k, 2) * gauss_binomial(n, k, 2)


def _gb2(m: int, k: int) -> QPolynomial:
    return gauss_binomial(m, k, 2) if k >= 0 else ZERO


def _f_poly(s: int, n: int, k: int) -> QPolynomial:
    top = s * (n - 1) + k
    return (
        _gb2(top, k) * _gb2(n - 1, k)
        + (_gb2(top, k) * _gb2(n - 2, k - 1)).shift(n)
        + _gb2(top, k) * _gb2(n - 2, k - 2)
        + (_gb2(top - 1, k) * _gb2(n - 2, k - 2)).shift(n)
    )


def _i2_poly(s: int, a: int, k: int) -> QPolynomial:
    if k == 0:
        return ONE
    if k == 1:
        return q_int(s * a + 2).substitute_power(1 if a % 2 else 2)
    return (q_int(s * a + 2) * q_int(s * a + a)).exact_div(q_int(2) * q_int(a))


def face_poly(t: ComplexType, k: int) -> QPolynomial:
    """The q-analogue of the k-face number used as the sieving polynomial.

    A: G(s,n,k;q); B: H(s,n,k;q); D: the four-term F(s,n,k;q); I2: [sa+2]
    (base q^2 for even a) on vertices and the Catalan-type quotient on edges.
    """
    t.check_k(k)
    return {"A": _g_poly, "B": _h_poly, "D": _f_poly, "I2": _i2_poly}[t.family](t.s, t.n, k)


def face_poly_d_alternate(s: int, n: int, k: int) -> QPolynomial:
    """Alternative type-D sieving polynomial, matching the q-Catalan number at k = n."""
    ComplexType("D", n, s).check_k(k)
    top = s * (n - 1) + k
    return (
        _gb2(top, k) * _gb2(n - 2, k)
        + _gb2(top, k) * _gb2(n - 2, k - 1) * (ONE + QPolynomial.monomial(n))
        + _gb2(top, k) * _gb2(n - 2, k - 2)
        + (_gb2(top - 1, k) * _gb2(n - 2, k - 2)).shift(n)
    )


@dataclass(frozen=True)
class CoxeterDatum:
    name: str
    h: int
    exponents: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.exponents)


_EXCEPTIONAL = {
    "E6": (12, (1, 4, 5, 7, 8, 11)),
    "E7": (18, (1, 5, 7, 9, 11, 13, 17)),
    # h(E8) = 30; the exponents and the modulus q^32 - 1 both require it
    "E8": (30, (1, 7, 11, 13, 17, 19, 23, 29)),
    "F4": (12, (1, 5, 7, 11)),
    "H3": (10, (1, 5, 9)),
    "H4": (30, (1, 11, 19, 29)),
}


def coxeter_datum(name: str, n: int | None = None) -> CoxeterDatum:
    """Coxeter number and exponents.

    ``name`` is one of A, B, D, I2 (with ``n`` the rank, or ``a`` for I2), or an
    exceptional name such as "E6"; names like "B3" are also accepted.
    """
    if name in _EXCEPTIONAL:
        h, ex = _EXCEPTIONAL[name]
        return CoxeterDatum(name, h, ex)
    if n is None:
        fam = name.rstrip("0123456789")
        if fam == name:
            raise ValueError(f"rank missing for {name!r}")
        name, n = fam, int(name[len(fam):])
    if name == "A" and n >= 1:
        return CoxeterDatum(f"A{n}", n + 1, tuple(range(1, n + 1)))
    if name == "B" and n >= 2:
        return CoxeterDatum(f"B{n}", 2 * n, tuple(range(1, 2 * n, 2)))
    if name == "D" and n >= 2:
        return CoxeterDatum(f"D{n}", 2 * (n - 1), tuple(range(1, 2 * n - 2, 2)) + (n - 1,))
    if name == "I2" and n >= 3:
        return CoxeterDatum(f"I2({n})", n, (1, n - 1))
    raise ValueError(f"no Coxeter datum for {name!r} with n={n}")


def q_catalan(datum: CoxeterDatum, s: int = 1) -> QPolynomial:
    """Cat^(s)(Phi, q) = prod [s h + e_i + 1]_q / [e_i + 1]_q."""
    num = ONE
    den = ONE
    for e in datum.exponents:
        num = num * q_int(s * datum.h + e + 1)
        den = den * q_int(e + 1)
    return num.exact_div(den)


def catalan(datum: CoxeterDatum, s: int = 1) -> int:
    num = den = 1
    for e in datum.exponents:
        num *= s * datum.h + e + 1
        den *= e + 1
    return num // den


# --------------------------------------------------------------------------
# Closed-form evaluations at roots of unity


def _closed_a(s: int, n: int, k: int, d: int) -> int:
    if d == 2 and k % 2 == 1 and n % 2 == 0:
        return comb((s * n + k + 1) // 2, (k + 1) // 2) * comb((n - 2) // 2, (k - 1) // 2)
    if k % d == 0:
        return binom((s * n + 2 + k) // d - 1, k // d) * binom((n - 1) // d, k // d)
    return 0


def _closed_b(s: int, n: int, k: int, d: int) -> int:
    if d == 2:
        return comb(s * n + k, k) * comb(n, k)
    if d % 2 == 1 and k % d == 0:
        return binom((s * n + 1 + k) // d - 1, k // d) * binom((n - 1) // d, k // d)
    if d % 2 == 0 and (2 * k) % d == 0:
        return binom((2 * s * n + 2 + 2 * k) // d - 1, 2 * k // d) * binom(2 * (n - 1) // d, 2 * k // d)
    return 0


def _closed_d(s: int, n: int, k: int, d: int) -> int:
    r = s * (n - 1)
    if d == 2:
        if n % 2 == 0:
            return binom(r + k, k) * binom(n, k) + binom(r + k - 1, k) * binom(n - 2, k - 2)
        return binom(r + k, k) * binom(n - 2, k) + binom(r + k - 1, k - 1) * binom(n - 2, k - 2)
    # t = d for odd d and d/2 for even d; the diameter case needs d | n either way
    t = d if d % 2 else d // 2
    if k % t:
        return 0
    head = binom((r + 1 + k) // t - 1, k // t)
    if n % d == 0:
        return head * (binom(n // t, k // t) + binom(n // t - 1, k // t - 1))
    return head * binom((n - 2) // t, k // t)


def _closed_i2(s: int, a: int, k: int, d: int) -> int:
    if k == 0:
        return 1
    if d >= 3:
        return 0
    if k == 1:
        return s * a + 2 if a % 2 == 0 else 0
    if a % 2 == 0:
        return (s * a + 2) * (s + 1) // 2
    return (s * a + 2) // 2 if s % 2 == 0 else 0


def closed_form_eval(t: ComplexType, k: int, spec: RootOfUnitySpec | int) -> int:
    """Value of face_poly(t, k) at a primitive d-th root from the case-split closed forms."""
    d = _order(spec)
    t.check_k(k)
    if t.group_order % d:
        raise ValueError(f"d={d} does not divide the group order {t.group_order}")
    if d == 1:
        return face_count(t, k)
    fn = {"A": _closed_a, "B": _closed_b, "D": _closed_d, "I2": _closed_i2}[t.family]
    return fn(t.s, t.n, k, d)


def _term(c: int, e: int) -> str:
    if e == 0:
        return str(c)
    power = "q" if e == 1 else f"q^{e}" if e < 10 else f"q^{{{e}}}"
    return f"{c}{power}"


def format_residues(residues: Sequence[int], head: int | None = None, tail: int = 0) -> str:
    """Write sum a_j q^j (nonzero terms) in TeX style, optionally abbreviated.

    With ``head`` given, only the first ``head`` and last ``tail`` nonzero
    terms are written, joined by ``\\cdots``.
    """
    terms = [_term(c, e) for e, c in enumerate(residues) if c]
    if not terms:
        return "0"
    if head is None or head + tail >= len(terms):
        return "+".join(terms)
    return "+".join(terms[:head] + ["\\cdots"] + (terms[-tail:] if tail else []))
