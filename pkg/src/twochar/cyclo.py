"""Exact arithmetic in cyclotomic fields.

Three value types, all exact:

* :class:`RootOfUnity` — the point exp(2πi·k/L), stored as (level, exponent);
* :class:`CycloInt` — an element of Z[ζ_L], stored as integer coordinates in
  the power basis 1, ζ, …, ζ^(φ(L)−1) modulo the L-th cyclotomic polynomial;
* :class:`CycloRat` — a CycloInt divided by a positive integer, kept reduced.

Equality on every type means equality of the complex numbers denoted, so
values at different levels compare correctly (ζ₄² == −1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .errors import NotAMultiple


def euler_phi(n: int) -> int:
    out, m, p = 1, n, 2
    while p * p <= m:
        if m % p == 0:
            q = 1
            m //= p
            while m % p == 0:
                q *= p
                m //= p
            out *= q * (p - 1)
        p += 1
    if m > 1:
        out *= m - 1
    return out


def _poly_mul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return tuple(out)


def _poly_divmod(num: tuple[int, ...], den: tuple[int, ...]):
    """Division with remainder by a monic integer polynomial."""
    assert den[-1] == 1, "divisor must be monic"
    rem = list(num)
    d = len(den) - 1
    quo = [0] * max(len(rem) - d, 0)
    for i in range(len(rem) - 1, d - 1, -1):
        c = rem[i]
        if c:
            quo[i - d] = c
            for j, dj in enumerate(den):
                rem[i - d + j] -= c * dj
    while rem and rem[-1] == 0:
        rem.pop()
    return tuple(quo), tuple(rem)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(L: int) -> tuple[int, ...]:
    """Coefficients (constant first, monic last) of the L-th cyclotomic
    polynomial, computed by exact division of x^L − 1.

    >>> cyclotomic_polynomial(4)
    (1, 0, 1)
    >>> cyclotomic_polynomial(6)
    (1, -1, 1)
    """
    if L < 1:
        raise ValueError("level must be positive")
    if L == 1:
        return (-1, 1)
    num = tuple([-1] + [0] * (L - 1) + [1])           # x^L − 1
    den = (1,)
    for d in range(1, L):
        if L % d == 0:
            den = _poly_mul(den, cyclotomic_polynomial(d))
    quo, rem = _poly_divmod(num, den)
    assert rem == (), "cyclotomic division must be exact"
    return quo


def _reduce_mod_cyclotomic(coeffs, L: int) -> tuple[int, ...]:
    phi = euler_phi(L)
    _, rem = _poly_divmod(tuple(coeffs), cyclotomic_polynomial(L))
    return tuple(rem) + (0,) * (phi - len(rem))


@dataclass(frozen=True)
class RootOfUnity:
    """The complex number exp(2πi·exponent/level)."""

    level: int
    exponent: int

    def __post_init__(self):
        if self.level < 1:
            raise ValueError("level must be positive")
        object.__setattr__(self, "exponent", self.exponent % self.level)

    def _frac(self) -> Fraction:
        return Fraction(self.exponent, self.level) % 1

    def __eq__(self, other) -> bool:
        if isinstance(other, RootOfUnity):
            return self._frac() == other._frac()
        if isinstance(other, (int, CycloInt, CycloRat)):
            return root_to_cyclo(self) == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._frac())

    def __mul__(self, other: "RootOfUnity") -> "RootOfUnity":
        if not isinstance(other, RootOfUnity):
            return NotImplemented
        L = self.level * other.level // gcd(self.level, other.level)
        return RootOfUnity(L, self.exponent * (L // self.level) + other.exponent * (L // other.level))

    def inverse(self) -> "RootOfUnity":
        return RootOfUnity(self.level, -self.exponent)

    def __pow__(self, k: int) -> "RootOfUnity":
        return RootOfUnity(self.level, self.exponent * k)

    def to_complex(self) -> complex:
        from cmath import exp, pi

        return exp(2j * pi * self.exponent / self.level)


def raise_root_level(r: RootOfUnity, L: int) -> RootOfUnity:
    """Rewrite at a coarser level; raises :class:`NotAMultiple` unless
    ``r.level`` divides ``L``."""
    if L % r.level:
        raise NotAMultiple(f"{L} is not a multiple of level {r.level}")
    return RootOfUnity(L, r.exponent * (L // r.level))


class CycloInt:
    """Element of Z[ζ_L] in power-basis coordinates modulo Φ_L."""

    __slots__ = ("level", "coeffs")

    def __init__(self, level: int, coeffs):
        if level < 1:
            raise ValueError("level must be positive")
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) != euler_phi(level):
            coeffs = _reduce_mod_cyclotomic(coeffs, level)
        self.level = level
        self.coeffs = coeffs

    @staticmethod
    def from_int(n: int, level: int = 1) -> "CycloInt":
        return CycloInt(level, (n,) + (0,) * (euler_phi(level) - 1))

    @staticmethod
    def zero(level: int = 1) -> "CycloInt":
        return CycloInt.from_int(0, level)

    @staticmethod
    def one(level: int = 1) -> "CycloInt":
        return CycloInt.from_int(1, level)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __repr__(self) -> str:
        return f"CycloInt({self.level}, {self.coeffs})"

    def __str__(self) -> str:
        return pretty_cyclo(self)

    def _unify(self, other: "CycloInt"):
        if self.level == other.level:
            return self, other
        L = self.level * other.level // gcd(self.level, other.level)
        return raise_cyclo_level(self, L), raise_cyclo_level(other, L)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = CycloInt.from_int(other)
        elif isinstance(other, RootOfUnity):
            other = root_to_cyclo(other)
        elif isinstance(other, CycloRat):
            return CycloRat.from_cyclo(self) == other
        if not isinstance(other, CycloInt):
            return NotImplemented
        a, b = self._unify(other)
        return a.coeffs == b.coeffs

    __hash__ = None  # cross-level equality makes a stable hash impractical

    def __add__(self, other):
        if isinstance(other, int):
            other = CycloInt.from_int(other)
        if not isinstance(other, CycloInt):
            return NotImplemented
        a, b = self._unify(other)
        return CycloInt(a.level, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycloInt(self.level, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if not isinstance(other, (CycloInt, int, RootOfUnity)):
            return NotImplemented
        if isinstance(other, RootOfUnity):
            other = root_to_cyclo(other)
        return self + (-other if isinstance(other, CycloInt) else -other)

    def __rsub__(self, other):
        if not isinstance(other, int):
            return NotImplemented
        return CycloInt.from_int(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            return CycloInt(self.level, tuple(c * other for c in self.coeffs))
        if isinstance(other, RootOfUnity):
            other = root_to_cyclo(other)
        if not isinstance(other, CycloInt):
            return NotImplemented
        a, b = self._unify(other)
        return CycloInt(a.level, _reduce_mod_cyclotomic(_poly_mul(a.coeffs, b.coeffs), a.level))

    __rmul__ = __mul__

    def to_complex(self) -> complex:
        z = RootOfUnity(self.level, 1).to_complex()
        return sum(c * z**k for k, c in enumerate(self.coeffs))


def raise_cyclo_level(x: CycloInt, L: int) -> CycloInt:
    """Embed Z[ζ_l] into Z[ζ_L] via ζ_l ↦ ζ_L^(L/l)."""
    if L % x.level:
        raise NotAMultiple(f"{L} is not a multiple of level {x.level}")
    step = L // x.level
    out = [0] * (euler_phi(x.level) * step)
    for k, c in enumerate(x.coeffs):
        if c:
            out[k * step] = c
    return CycloInt(L, _reduce_mod_cyclotomic(tuple(out), L))


def root_to_cyclo(r: RootOfUnity) -> CycloInt:
    """Exact power-basis coordinates of a root of unity.

    >>> root_to_cyclo(RootOfUnity(4, 2)) == -1
    True
    """
    mono = [0] * (r.exponent + 1)
    mono[r.exponent] = 1
    return CycloInt(r.level, _reduce_mod_cyclotomic(tuple(mono), r.level))


def _content(coeffs: tuple[int, ...]) -> int:
    g = 0
    for c in coeffs:
        g = gcd(g, c)
    return g


class CycloRat:
    """CycloInt numerator over a positive integer denominator, kept reduced."""

    __slots__ = ("num", "den")

    def __init__(self, num: CycloInt, den: int = 1):
        if den == 0:
            raise ZeroDivisionError("denominator must be nonzero")
        if den < 0:
            num, den = -num, -den
        g = gcd(_content(num.coeffs), den)
        if g > 1:
            num = CycloInt(num.level, tuple(c // g for c in num.coeffs))
            den //= g
        self.num = num
        self.den = den

    @staticmethod
    def from_int(n: int, den: int = 1) -> "CycloRat":
        return CycloRat(CycloInt.from_int(n), den)

    @staticmethod
    def from_cyclo(x: CycloInt) -> "CycloRat":
        return CycloRat(x, 1)

    @staticmethod
    def zero() -> "CycloRat":
        return CycloRat.from_int(0)

    @staticmethod
    def one() -> "CycloRat":
        return CycloRat.from_int(1)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    @property
    def level(self) -> int:
        return self.num.level

    def __repr__(self) -> str:
        return f"CycloRat({self.num!r}, {self.den})"

    def __str__(self) -> str:
        return pretty_cyclo(self)

    def _coerce(self, other):
        if isinstance(other, int):
            return CycloRat.from_int(other)
        if isinstance(other, RootOfUnity):
            return CycloRat.from_cyclo(root_to_cyclo(other))
        if isinstance(other, CycloInt):
            return CycloRat.from_cyclo(other)
        if isinstance(other, CycloRat):
            return other
        return None

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self.num * o.den - o.num * self.den).is_zero()

    __hash__ = None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycloRat(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return CycloRat(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycloRat(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "CycloRat":
        """Exact field inverse via the extended Euclidean algorithm on
        (numerator, Φ_L) over the rationals."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        L = self.num.level
        a = [Fraction(c) for c in self.num.coeffs]
        while a and a[-1] == 0:
            a.pop()
        b = [Fraction(c) for c in cyclotomic_polynomial(L)]
        # invariant: r0 = s0·num (mod Φ_L), r1 = s1·num (mod Φ_L)
        r0, s0 = a, [Fraction(1)]
        r1, s1 = b, [Fraction(0)]
        while len(r1) > 1 or (r1 and r1[0] != 0):
            q, rem = _frac_divmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, _frac_sub(s0, _frac_mul(q, s1))
        # Φ_L is irreducible over Q, so the gcd is a nonzero constant
        assert len(r0) == 1 and r0[0] != 0
        c = r0[0]
        inv_coeffs = [x / c for x in s0]
        den_lcm = 1
        for f in inv_coeffs:
            den_lcm = den_lcm * f.denominator // gcd(den_lcm, f.denominator)
        ints = tuple(int(f * den_lcm) for f in inv_coeffs)
        return CycloRat(CycloInt(L, _reduce_mod_cyclotomic(ints, L)) * self.den, den_lcm)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def to_complex(self) -> complex:
        return self.num.to_complex() / self.den


def _frac_divmod(num: list[Fraction], den: list[Fraction]):
    num = list(num)
    d = len(den) - 1
    lead = den[-1]
    quo = [Fraction(0)] * max(len(num) - d, 0)
    for i in range(len(num) - 1, d - 1, -1):
        c = num[i] / lead
        if c:
            quo[i - d] = c
            for j, dj in enumerate(den):
                num[i - d + j] -= c * dj
    while num and num[-1] == 0:
        num.pop()
    return quo, num


def _frac_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1 if a and b else 0)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _frac_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    a = a + [Fraction(0)] * (n - len(a))
    b = b + [Fraction(0)] * (n - len(b))
    out = [x - y for x, y in zip(a, b)]
    while out and out[-1] == 0:
        out.pop()
    return out


# ---------------------------------------------------------------------------
# Pretty-printing and serialization


def _pretty_int_combo(level: int, coeffs: tuple[int, ...]) -> str:
    sym = f"ζ{level}"
    terms = []
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        if k == 0:
            body = str(abs(c))
        else:
            power = sym if k == 1 else f"{sym}^{k}"
            body = power if abs(c) == 1 else f"{abs(c)}·{power}"
        terms.append((c < 0, body))
    if not terms:
        return "0"
    out = ("-" if terms[0][0] else "") + terms[0][1]
    for neg, body in terms[1:]:
        out += (" - " if neg else " + ") + body
    return out


def pretty_cyclo(x) -> str:
    """Human-readable ζ-combination, e.g. ``1 - 2·ζ8^3`` or ``(1 + ζ3)/2``."""
    if isinstance(x, RootOfUnity):
        x = root_to_cyclo(x)
    if isinstance(x, CycloInt):
        return _pretty_int_combo(x.level, x.coeffs)
    if isinstance(x, CycloRat):
        body = _pretty_int_combo(x.num.level, x.num.coeffs)
        if x.den == 1:
            return body
        wrapped = f"({body})" if (" " in body or body.lstrip("-").count("·")) else body
        return f"{wrapped}/{x.den}"
    raise TypeError(f"cannot pretty-print {type(x).__name__}")


def root_to_json(r: RootOfUnity) -> dict:
    return {"level": r.level, "exp": r.exponent}


def root_from_json(doc: dict) -> RootOfUnity:
    return RootOfUnity(int(doc["level"]), int(doc["exp"]))


def cyclo_to_json(x: CycloInt) -> dict:
    return {"level": x.level, "coeffs": list(x.coeffs)}


def cyclo_from_json(doc: dict) -> CycloInt:
    return CycloInt(int(doc["level"]), doc["coeffs"])


def rat_to_json(x: CycloRat) -> dict:
    return {"level": x.num.level, "coeffs": list(x.num.coeffs), "den": x.den}


def rat_from_json(doc: dict) -> CycloRat:
    return CycloRat(CycloInt(int(doc["level"]), doc["coeffs"]), int(doc.get("den", 1)))
