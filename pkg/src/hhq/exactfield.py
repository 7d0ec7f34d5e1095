"""Exact scalars over Q, prime fields F_p and cyclotomic fields Q(zeta_r).

A :class:`FieldContext` describes the field; :class:`FieldScalar` values carry
their context and a canonical raw representation:

* ``Q``          -- :class:`fractions.Fraction` in lowest terms
* ``F_p``        -- ``int`` residue in ``[0, p)``
* ``Q(zeta_r)``  -- tuple of ``deg(Phi_r)`` Fractions, coefficients of the
                    reduced polynomial in ``t`` (``t`` is the chosen root)
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Union

__all__ = [
    "FieldContext",
    "FieldScalar",
    "FieldError",
    "INFINITE",
    "make_field",
    "rationals",
    "prime_field",
    "cyclotomic",
    "cyclotomic_polynomial",
    "is_prime",
    "mult_order",
    "parse_scalar",
]

INFINITE = math.inf

Number = Union[int, Fraction]


class FieldError(ValueError):
    """Invalid field description or illegal field operation."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


# integer / rational polynomials: coefficient lists, lowest degree first


def _trim(a: list) -> list:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_divmod(a: list, b: list) -> tuple[list, list]:
    a = _trim(list(a))
    b = _trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    quot = [0] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    while len(a) >= len(b):
        c = a[-1] if lead == 1 else Fraction(a[-1]) / lead
        shift = len(a) - len(b)
        quot[shift] = c
        for i, bi in enumerate(b):
            a[shift + i] -= c * bi
        _trim(a)
    return quot, a


@lru_cache(maxsize=None)
def cyclotomic_polynomial(r: int) -> tuple[int, ...]:
    """Phi_r as integer coefficients (lowest degree first).

    Obtained by dividing t^r - 1 by Phi_d for every proper divisor d of r.
    """
    if r < 1:
        raise FieldError(f"cyclotomic index must be >= 1, got {r}")
    num = [-1] + [0] * (r - 1) + [1]
    for d in _divisors(r)[:-1]:
        num, rem = _poly_divmod(num, list(cyclotomic_polynomial(d)))
        assert not rem
    return tuple(int(c) for c in num)


@dataclass(frozen=True)
class FieldContext:
    """A base field: ``kind`` is ``"Q"``, ``"Fp"`` or ``"cyclotomic"``."""

    kind: str
    p: int = 0
    r: int = 0
    phi: tuple[int, ...] = field(default=(), repr=False)

    def __post_init__(self):
        if self.kind == "Fp":
            if not is_prime(self.p):
                raise FieldError(f"F_p needs a prime p, got {self.p}")
        elif self.kind == "cyclotomic":
            if self.r < 1:
                raise FieldError(f"cyclotomic index must be >= 1, got {self.r}")
            if not self.phi:
                object.__setattr__(self, "phi", cyclotomic_polynomial(self.r))
        elif self.kind != "Q":
            raise FieldError(f"unknown field kind {self.kind!r}")

    @property
    def characteristic(self) -> int:
        return self.p if self.kind == "Fp" else 0

    @property
    def degree(self) -> int:
        """Dimension over the prime field (1 except for cyclotomic fields)."""
        return len(self.phi) - 1 if self.kind == "cyclotomic" else 1

    def __str__(self):
        if self.kind == "Q":
            return "Q"
        if self.kind == "Fp":
            return f"F_{self.p}"
        return f"Q(zeta_{self.r})"

    @property
    def descriptor(self) -> str:
        """Round-trippable short form accepted by :func:`make_field`."""
        if self.kind == "Q":
            return "Q"
        if self.kind == "Fp":
            return f"Fp:{self.p}"
        return f"cyclo:{self.r}"

    # -- raw arithmetic ------------------------------------------------

    def raw(self, value) -> Union[Fraction, int, tuple]:
        """Canonical raw representation of an int, Fraction or scalar."""
        if isinstance(value, FieldScalar):
            if value.ctx != self:
                raise FieldError(f"context mismatch: {value.ctx} vs {self}")
            return value.value
        if isinstance(value, bool):
            value = int(value)
        if isinstance(value, (int, Fraction)):
            if self.kind == "Q":
                return Fraction(value)
            if self.kind == "Fp":
                if isinstance(value, Fraction):
                    return value.numerator * pow(value.denominator, -1, self.p) % self.p
                return value % self.p
            return (Fraction(value),) + (Fraction(0),) * (self.degree - 1)
        if isinstance(value, (tuple, list)) and self.kind == "cyclotomic":
            return self._reduce([Fraction(c) for c in value])
        raise TypeError(f"cannot coerce {value!r} into {self}")

    def _reduce(self, coeffs: list) -> tuple:
        d = self.degree
        phi = self.phi
        c = list(coeffs)
        for k in range(len(c) - 1, d - 1, -1):
            top = c[k]
            if top:
                for i in range(d):
                    c[k - d + i] -= top * phi[i]
            c[k] = 0
        c = c[:d] + [Fraction(0)] * (d - len(c))
        return tuple(Fraction(v) for v in c)

    def __call__(self, value) -> "FieldScalar":
        return FieldScalar(self, self.raw(value))

    def wrap(self, raw) -> "FieldScalar":
        return FieldScalar(self, raw)

    @property
    def zero(self) -> "FieldScalar":
        return self(0)

    @property
    def one(self) -> "FieldScalar":
        return self(1)

    def generator(self) -> "FieldScalar":
        """Canonical primitive root: the class of t in Q(zeta_r), the least
        primitive root mod p in F_p, and -1 over Q."""
        if self.kind == "cyclotomic":
            if self.degree == 1:
                return self(-self.phi[0])
            return self.wrap(self._reduce([Fraction(0), Fraction(1)]))
        if self.kind == "Fp":
            if self.p == 2:
                return self(1)
            order = self.p - 1
            primes = [d for d in _divisors(order) if d > 1 and is_prime(d)]
            for g in range(2, self.p):
                if all(pow(g, order // f, self.p) != 1 for f in primes):
                    return self(g)
        return self(-1)

    def _add(self, a, b):
        if self.kind == "Fp":
            return (a + b) % self.p
        if self.kind == "Q":
            return a + b
        return tuple(x + y for x, y in zip(a, b))

    def _neg(self, a):
        if self.kind == "Fp":
            return -a % self.p
        if self.kind == "Q":
            return -a
        return tuple(-x for x in a)

    def _mul(self, a, b):
        if self.kind == "Fp":
            return a * b % self.p
        if self.kind == "Q":
            return a * b
        prod = [Fraction(0)] * (2 * len(a) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return self._reduce(prod)

    def _is_zero(self, a) -> bool:
        if self.kind == "cyclotomic":
            return not any(a)
        return a == 0

    def _inv(self, a):
        if self._is_zero(a):
            raise ZeroDivisionError(f"division by zero in {self}")
        if self.kind == "Fp":
            return pow(a, -1, self.p)
        if self.kind == "Q":
            return 1 / a
        # extended Euclid in Q[t]: s*a + k*phi = g with g a nonzero constant
        r0, r1 = [Fraction(c) for c in self.phi], _trim(list(a))
        s0, s1 = [], [Fraction(1)]
        while len(r1) > 1:
            quo, rem = _poly_divmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, _poly_sub(s0, _poly_mul(quo, s1))
        g = r1[0]
        return self._reduce([c / g for c in s1])


def _poly_mul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _trim(out)


def _poly_sub(a: list, b: list) -> list:
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _trim([x - y for x, y in zip(a, b)])


class FieldScalar:
    """Immutable exact field element."""

    __slots__ = ("ctx", "value")

    def __init__(self, ctx: FieldContext, value):
        self.ctx = ctx
        self.value = value

    def _other(self, other):
        if isinstance(other, FieldScalar):
            if other.ctx != self.ctx:
                raise FieldError(f"context mismatch: {self.ctx} vs {other.ctx}")
            return other.value
        if isinstance(other, (int, Fraction)):
            return self.ctx.raw(other)
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldScalar(self.ctx, self.ctx._add(self.value, o))

    __radd__ = __add__

    def __neg__(self):
        return FieldScalar(self.ctx, self.ctx._neg(self.value))

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldScalar(self.ctx, self.ctx._add(self.value, self.ctx._neg(o)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldScalar(self.ctx, self.ctx._mul(self.value, o))

    __rmul__ = __mul__

    def inverse(self) -> "FieldScalar":
        return FieldScalar(self.ctx, self.ctx._inv(self.value))

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldScalar(self.ctx, self.ctx._mul(self.value, self.ctx._inv(o)))

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        base = self if n >= 0 else self.inverse()
        n = abs(n)
        result = self.ctx.raw(1)
        b = base.value
        while n:
            if n & 1:
                result = self.ctx._mul(result, b)
            b = self.ctx._mul(b, b)
            n >>= 1
        return FieldScalar(self.ctx, result)

    def __eq__(self, other):
        o = self._other(other) if isinstance(other, (FieldScalar, int, Fraction)) else NotImplemented
        if o is NotImplemented:
            return NotImplemented
        return self.value == o

    def __hash__(self):
        return hash((self.ctx, self.value))

    def __bool__(self):
        return not self.ctx._is_zero(self.value)

    def is_zero(self) -> bool:
        return self.ctx._is_zero(self.value)

    def __repr__(self):
        return f"FieldScalar({self.ctx}, {self})"

    def __str__(self):
        if self.ctx.kind != "cyclotomic":
            return str(self.value)
        terms = []
        for k, c in enumerate(self.value):
            if not c:
                continue
            mono = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}*{mono}")
        return "+".join(terms).replace("+-", "-") if terms else "0"


def rationals() -> FieldContext:
    return FieldContext("Q")


def prime_field(p: int) -> FieldContext:
    return FieldContext("Fp", p=p)


def cyclotomic(r: int) -> FieldContext:
    return FieldContext("cyclotomic", r=r)


def make_field(spec) -> FieldContext:
    """Build a context from a descriptor.

    Accepts a :class:`FieldContext`, or strings such as ``"Q"``, ``"Fp:7"``,
    ``"F7"``, ``"GF(7)"``, ``"cyclo:3"`` and ``"Q(zeta3)"``.
    """
    if isinstance(spec, FieldContext):
        return spec
    s = str(spec).strip().replace(" ", "")
    low = s.lower()
    if low in ("q", "qq", "rationals"):
        return rationals()
    for prefix in ("fp:", "gf:", "f_", "gf(", "gf", "f"):
        if low.startswith(prefix):
            digits = low[len(prefix):].rstrip(")")
            if digits.isdigit():
                return prime_field(int(digits))
    for prefix in ("cyclo:", "cyclotomic:", "q(zeta_", "q(zeta", "q(z"):
        if low.startswith(prefix):
            digits = low[len(prefix):].rstrip(")")
            if digits.isdigit():
                return cyclotomic(int(digits))
    raise FieldError(f"unrecognised field descriptor {spec!r}")


def mult_order(q: FieldScalar) -> Union[int, float]:
    """Multiplicative order of ``q``: 0 for q = 0, INFINITE if q is not a root
    of unity, else the least m >= 1 with q^m = 1."""
    ctx = q.ctx
    if q.is_zero():
        return 0
    if ctx.kind == "Q":
        if q == 1:
            return 1
        return 2 if q == -1 else INFINITE
    if ctx.kind == "Fp":
        candidates = _divisors(ctx.p - 1)
    else:
        # every root of unity in Q(zeta_r) has order dividing lcm(2, r)
        candidates = _divisors(math.lcm(2, ctx.r))
    for m in candidates:
        if q ** m == 1:
            return m
    return INFINITE


def parse_scalar(ctx: FieldContext, text) -> FieldScalar:
    """Parse ``"2"``, ``"-1"``, ``"3/4"``, ``"zeta"``, ``"zeta^k"`` or ``"-zeta"``.

    ``zeta`` is :meth:`FieldContext.generator`.
    """
    if isinstance(text, (int, Fraction, FieldScalar)):
        return ctx(text)
    s = str(text).strip().replace(" ", "").lower()
    sign = 1
    if s.startswith("-") and "zeta" in s:
        sign, s = -1, s[1:]
    if s.startswith("zeta"):
        rest = s[4:]
        power = 1
        if rest:
            if not rest.startswith(("^", "**")):
                raise FieldError(f"cannot parse {text!r}")
            try:
                power = int(rest.lstrip("^*"))
            except ValueError:
                raise FieldError(f"cannot parse {text!r}") from None
        return ctx.generator() ** power * sign
    try:
        value = Fraction(s)
    except (ValueError, ZeroDivisionError):
        raise FieldError(f"cannot parse scalar {text!r}") from None
    if ctx.kind == "Fp" and value.denominator % ctx.p == 0:
        raise FieldError(f"{text!r} has no value in {ctx}")
    return ctx(value)
