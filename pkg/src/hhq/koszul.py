"""The Koszul dual E(Lambda_q) = k<x,y>/(yx - q xy) and its graded centre.

Monomials are kept in the normal form x^a y^b.  A homogeneous element z is
graded-central when z g = (-1)^(deg z deg g) g z for all homogeneous g; since
x and y generate E, testing g in {x, y} is enough.  For z = x^a y^b this
reads q^b = (-1)^(a+b) and q^a = (-1)^(a+b).
"""

from __future__ import annotations

from dataclasses import dataclass

from .exactfield import INFINITE, FieldContext, FieldScalar, mult_order
from .report import Report

__all__ = [
    "QuantumMonomial",
    "quantum_multiply",
    "e_dimension",
    "graded_commutes",
    "graded_centre_monomials",
    "expected_centre_monomials",
    "verify_centre_proposition",
]


@dataclass(frozen=True)
class QuantumMonomial:
    a: int
    b: int
    coeff: FieldScalar

    @property
    def degree(self) -> int:
        return self.a + self.b

    def __str__(self):
        parts = [f"x^{self.a}" if self.a > 1 else "x" * self.a,
                 f"y^{self.b}" if self.b > 1 else "y" * self.b]
        mono = "".join(parts) or "1"
        return mono if self.coeff == 1 else f"{self.coeff}*{mono}"


def quantum_multiply(m1: QuantumMonomial, m2: QuantumMonomial, q) -> QuantumMonomial:
    """x^a y^b * x^c y^d = q^(b c) x^(a+c) y^(b+d)."""
    q = m1.coeff.ctx(q)
    return QuantumMonomial(m1.a + m2.a, m1.b + m2.b, m1.coeff * m2.coeff * q ** (m1.b * m2.a))


def e_dimension(n: int) -> int:
    """dim E_n: the monomials x^a y^b with a + b = n."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return n + 1


def graded_commutes(m: QuantumMonomial, g: QuantumMonomial, q) -> bool:
    sign = -1 if (m.degree * g.degree) % 2 else 1
    lhs = quantum_multiply(m, g, q)
    rhs = quantum_multiply(g, m, q)
    return lhs.a == rhs.a and lhs.b == rhs.b and lhs.coeff == rhs.coeff * sign


def graded_centre_monomials(ctx: FieldContext, q, max_total_degree: int) -> list[tuple[int, int]]:
    """Exponent pairs (a, b), a + b <= max, with x^a y^b graded-central."""
    q = ctx(q)
    one = ctx.one
    x = QuantumMonomial(1, 0, one)
    y = QuantumMonomial(0, 1, one)
    out = []
    for d in range(max_total_degree + 1):
        for a in range(d, -1, -1):
            m = QuantumMonomial(a, d - a, one)
            if graded_commutes(m, x, q) and graded_commutes(m, y, q):
                out.append((a, d - a))
    return out


def _power(var: str, k: int) -> str:
    return var if k == 1 else f"{var}^{k}"


def _semigroup(gens: list[tuple[int, int]], max_total_degree: int) -> set[tuple[int, int]]:
    found = {(0, 0)}
    frontier = [(0, 0)]
    while frontier:
        nxt = []
        for a, b in frontier:
            for ga, gb in gens:
                m = (a + ga, b + gb)
                if sum(m) <= max_total_degree and m not in found:
                    found.add(m)
                    nxt.append(m)
        frontier = nxt
    return found


def expected_centre_monomials(ctx: FieldContext, q, max_total_degree: int) -> tuple[str, set]:
    """The monomial exponents of the subalgebra k, k[x^r, y^r] or
    k[x^2r, x^r y^r, y^2r] that the graded centre should be."""
    order = mult_order(ctx(q))
    if order == INFINITE or order == 0:
        return "k", {(0, 0)}
    r = int(order)
    if r % 2 == 0 or ctx.characteristic == 2:
        return f"k[{_power('x', r)},{_power('y', r)}]", _semigroup([(r, 0), (0, r)], max_total_degree)
    return (f"k[{_power('x', 2 * r)},{_power('x', r)}{_power('y', r)},{_power('y', 2 * r)}]",
            _semigroup([(2 * r, 0), (r, r), (0, 2 * r)], max_total_degree))


def verify_centre_proposition(ctx: FieldContext, q, max_total_degree: int) -> Report:
    q = ctx(q)
    found = set(graded_centre_monomials(ctx, q, max_total_degree))
    name, expected = expected_centre_monomials(ctx, q, max_total_degree)
    report = Report()
    ok = found == expected
    note = f"matches {name} up to degree {max_total_degree}"
    if not ok:
        note = (f"expected {name}; extra {sorted(found - expected)}, "
                f"missing {sorted(expected - found)}")
    report.add(f"graded centre of E(Lambda_q), q = {q} in {ctx}", ok, note,
               subalgebra=name, monomials=sorted(found))
    return report
