"""Cup products on HH*(Lambda_q) and verification of the ring presentations."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .algebra import CaseDescriptor
from .exactfield import FieldContext, FieldScalar
from .linalg import ExactMatrix, independent_columns
from .report import Report
from .resolution import Cochain, CohomologySpace, Resolution, get_resolution

__all__ = [
    "cup",
    "reduce_to_basis",
    "Generator",
    "RingPresentation",
    "presentation_for",
    "evaluate_monomial",
    "verify_presentation",
    "product_table",
]


def cup(eta: Cochain, theta: Cochain, check: bool = True) -> Cochain:
    """Product of cocycles on the minimal resolution.

    With eta = (l_0..l_m) and theta = (l'_0..l'_n) the result has entries
    sum_j q^(j(n-i+j)) l_j l'_(i-j), j from max(0, i-n) to min(m, i).
    """
    alg = eta.alg
    if theta.alg != alg:
        raise ValueError("cochains over different algebras")
    if check:
        res = get_resolution(alg.ctx, alg.q)
        for c in (eta, theta):
            if not res.is_cocycle(c):
                raise ValueError(f"{c} is not a cocycle")
    q = alg.q
    m, n = eta.degree, theta.degree
    lam, lam2 = eta.entries, theta.entries
    out = []
    for i in range(m + n + 1):
        acc = alg.zero
        for j in range(max(0, i - n), min(m, i) + 1):
            prod = lam[j] * lam2[i - j]
            if prod:
                acc = acc + prod.scale(q ** (j * (n - i + j)))
        out.append(acc)
    return Cochain(m + n, tuple(out))


def reduce_to_basis(c: Cochain, space: CohomologySpace) -> list[FieldScalar]:
    return space.reduce(c)


@dataclass
class Generator:
    name: str
    degree: int
    cochain: Cochain


@dataclass
class RingPresentation:
    """Generators with representative cocycles and relations that must vanish.

    Relations are strings such as ``"w0*w2 - w1^2"``; ``identities`` pairs a
    monomial with a cochain whose class it should equal.
    """

    case: CaseDescriptor
    generators: list[Generator]
    relations: list[str]
    identities: list[tuple[str, Cochain]] = field(default_factory=list)
    # presentations with one generator per basis class (q = 0)
    basis_generated: bool = False

    def generator(self, name: str) -> Generator:
        for g in self.generators:
            if g.name == name:
                return g
        raise KeyError(name)


_TERM = re.compile(r"([+-]?)\s*(\d*)\s*\*?\s*([A-Za-z][\w^*]*)")


def parse_relation(text: str) -> list[tuple[int, list[str]]]:
    """``"u0*u1 + z*w0"`` -> ``[(1, ["u0", "u1"]), (1, ["z", "w0"])]``; ``^k`` repeats a factor."""
    terms = []
    for sign, coef, mono in _TERM.findall(text.replace(" ", "")):
        c = int(coef) if coef else 1
        if sign == "-":
            c = -c
        factors = []
        for f in mono.split("*"):
            if not f:
                continue
            name, _, power = f.partition("^")
            factors.extend([name] * (int(power) if power else 1))
        terms.append((c, factors))
    return terms


def evaluate_monomial(pres: RingPresentation, factors: Sequence[str]) -> Cochain:
    """Cup product of the generator representatives, left to right."""
    gens = [pres.generator(f) for f in factors]
    out = gens[0].cochain
    for g in gens[1:]:
        out = cup(out, g.cochain, check=False)
    return out


def _evaluate(pres: RingPresentation, text: str) -> Cochain:
    total = None
    for coef, factors in parse_relation(text):
        c = evaluate_monomial(pres, factors).scale(coef)
        if total is not None and c.degree != total.degree:
            raise ValueError(f"relation {text!r} is not homogeneous")
        total = c if total is None else total + c
    return total


def presentation_for(ctx: FieldContext, q, degree_cap: int = 0) -> RingPresentation:
    """Generators and relations of HH*(Lambda_q) for the regime of (ctx, q).

    ``degree_cap`` only matters for q = 0, where one generator is taken for
    each basis class in degrees 1..degree_cap.
    """
    res = get_resolution(ctx, ctx(q))
    alg = res.alg
    case = res.case
    tag, r = case.tag, case.r

    def co(*entries):
        return Cochain.of(alg, *entries)

    def at(n, j, b="1"):
        return Cochain.standard(alg, n, j, b)

    z = Generator("z", 0, co("yx"))
    u0 = Generator("u0", 1, co("x", 0))
    u1 = Generator("u1", 1, co(0, "y"))
    fibre = ["z^2", "z*u0", "u0*z", "z*u1", "u1*z"]
    exterior = ["u0^2", "u1^2", "u0*u1 + u1*u0"]

    if tag == "Generic":
        b = co(0, "yx", 0)
        return RingPresentation(
            case, [z, u0, u1], fibre + ["u0^2", "u1^2"],
            identities=[("u0*u1", b.scale(-res.q)), ("u1*u0", b.scale(res.q))],
        )
    if tag == "OddRoot":
        ws = [Generator(f"w{i}", 2 * r, at(2 * r, i * r)) for i in range(3)]
        rels = fibre + [f"z*w{i}" for i in range(3)] + [f"w{i}*z" for i in range(3)] + exterior
        rels += [f"u{a}*w{i} - w{i}*u{a}" for a in range(2) for i in range(3)]
        rels += ["w0*w1 - w1*w0", "w0*w2 - w2*w0", "w1*w2 - w2*w1", "w0*w2 - w1^2"]
        return RingPresentation(case, [z, u0, u1] + ws, rels)
    if tag == "EvenRootOrChar2":
        ws = [Generator(f"w{i}", r, at(r, i * r)) for i in range(2)]
        rels = fibre + ["z*w0", "z*w1", "w0*z", "w1*z"] + exterior
        rels += [f"u{a}*w{i} - w{i}*u{a}" for a in range(2) for i in range(2)]
        rels += ["w0*w1 - w1*w0"]
        return RingPresentation(case, [z, u0, u1] + ws, rels)
    if tag == "Char2Q1":
        gens = [
            Generator("x", 0, co("x")),
            Generator("y", 0, co("y")),
            Generator("w0", 1, co(1, 0)),
            Generator("w1", 1, co(0, 1)),
        ]
        rels = ["x^2", "y^2", "x*y - y*x", "x*w0 - w0*x", "x*w1 - w1*x",
                "y*w0 - w0*y", "y*w1 - w1*y", "w0*w1 - w1*w0"]
        return RingPresentation(case, gens, rels)
    if tag == "QMinusOne":
        gens = [
            Generator("x", 0, co("x")),
            Generator("y", 0, co("y")),
            u0,
            u1,
            Generator("w0", 2, co(1, 0, 0)),
            Generator("w1", 2, co(0, 0, 1)),
        ]
        rels = ["x*u0", "y*u1", "x*w0", "y*w1",
                "x^2", "y^2", "x*y - y*x"] + exterior
        rels += ["x*u1 - u1*x", "y*u0 - u0*y", "x*w1 - w1*x", "y*w0 - w0*y"]
        rels += [f"u{a}*w{i} - w{i}*u{a}" for a in range(2) for i in range(2)]
        rels += ["w0*w1 - w1*w0"]
        return RingPresentation(case, gens, rels)
    if tag == "QOne":
        us = [
            Generator("u0", 1, co("x", 0)),
            Generator("u1", 1, co("y", 0)),
            Generator("u2", 1, co(0, "x")),
            Generator("u3", 1, co(0, "y")),
        ]
        ws = [Generator(f"w{i}", 2, at(2, i)) for i in range(3)]
        rels = ["z^2"] + [f"z*u{a}" for a in range(4)] + [f"u{a}*z" for a in range(4)]
        rels += [f"u{a}^2" for a in range(4)]
        rels += [f"u{a}*u{b} + u{b}*u{a}" for a in range(4) for b in range(a + 1, 4)]
        rels += ["w0*w1 - w1*w0", "w0*w2 - w2*w0", "w1*w2 - w2*w1"]
        # the ideal I
        rels += [
            "u0*u2", "u1*u3", "u0*u1 + z*w0", "u0*u3 + z*w1", "u2*u3 + z*w2",
            "u1*u2 - z*w1", "u0*w1 - u2*w0", "u1*w1 - u3*w0", "u0*w2 - u2*w1",
            "u1*w2 - u3*w1", "w0*w2 - w1^2",
        ]
        return RingPresentation(case, [z] + us + ws, rels)
    if tag == "QZero":
        gens = [z]
        for n in range(1, max(degree_cap, 1) + 1):
            for k, rep in enumerate(res.hh_basis(n).representatives):
                gens.append(Generator(f"v{n}_{k}", n, rep))
        names = [(g.name, g.degree) for g in gens]
        rels = [
            f"{a}*{b}"
            for a, da in names
            for b, db in names
            if da + db <= max(degree_cap, 1) and (da > 0 and db > 0 or a == "z" or b == "z")
        ]
        return RingPresentation(case, gens, rels, basis_generated=True)
    raise ValueError(f"unknown case {case}")


def _independent(vectors: list[list[FieldScalar]], ctx: FieldContext, dim: int) -> list[list[FieldScalar]]:
    if not vectors or dim == 0:
        return []
    idx = independent_columns(ExactMatrix.from_columns(ctx, vectors, dim))
    return [vectors[k] for k in idx]


def generated_dimensions(res: Resolution, pres: RingPresentation, degree_cap: int) -> list[int]:
    """dim of the degree-n part of the subalgebra generated by the generators, n = 0..cap."""
    ctx = res.ctx
    spans: list[list[list[FieldScalar]]] = []
    for n in range(degree_cap + 1):
        space = res.hh_basis(n)
        dim = space.dimension
        vecs: list[list[FieldScalar]] = []
        if n == 0:
            vecs.append(space.reduce(Cochain.of(res.alg, 1), check=False))
        for g in pres.generators:
            if g.degree == n:
                vecs.append(space.reduce(g.cochain, check=False))
        for g in pres.generators:
            d = g.degree
            if 0 < d <= n:
                lower = res.hh_basis(n - d)
                for v in spans[n - d]:
                    vecs.append(space.reduce(cup(g.cochain, lower.lift(v), check=False), check=False))
        basis = _independent(vecs, ctx, dim)
        # close under the degree-0 generators
        zero_gens = [g for g in pres.generators if g.degree == 0]
        while zero_gens and basis:
            new = list(basis)
            for g in zero_gens:
                for v in basis:
                    new.append(space.reduce(cup(g.cochain, space.lift(v), check=False), check=False))
            grown = _independent(new, ctx, dim)
            if len(grown) == len(basis):
                break
            basis = grown
        spans.append(basis)
    return [len(b) for b in spans]


def verify_presentation(ctx: FieldContext, q, degree_cap: int,
                        pres: Optional[RingPresentation] = None) -> Report:
    """Check generators are cocycles, every relation vanishes in cohomology and
    the generators span HH^n for n <= degree_cap.

    A relation that fails is reported with its reduced coordinates rather than
    raising.
    """
    q = ctx(q)
    res = get_resolution(ctx, q)
    pres = pres or presentation_for(ctx, q, degree_cap)
    report = Report()
    tag = str(pres.case)

    bad_gens = [g.name for g in pres.generators if not res.is_cocycle(g.cochain)]
    report.add(f"ring[{tag}]: generators are cocycles", not bad_gens, ", ".join(bad_gens))

    skipped = []
    for text in pres.relations:
        degree = sum(pres.generator(f).degree for f in parse_relation(text)[0][1])
        if degree > degree_cap:
            skipped.append(text)
            continue
        value = _evaluate(pres, text)
        coords = res.hh_basis(value.degree).reduce(value)
        ok = not any(coords)
        report.add(
            f"ring[{tag}]: {text} = 0",
            ok,
            "" if ok else f"nonzero class in HH^{value.degree}: coordinates {[str(c) for c in coords]}",
            degree=value.degree,
        )
    for text, expected in pres.identities:
        value = _evaluate(pres, text)
        space = res.hh_basis(value.degree)
        got, want = space.reduce(value), space.reduce(expected)
        ok = got == want
        report.add(
            f"ring[{tag}]: {text} = {expected}",
            ok,
            "" if ok else f"got {[str(c) for c in got]}, expected {[str(c) for c in want]}",
        )
    if skipped:
        report.add(
            f"ring[{tag}]: relations above degree cap",
            True,
            f"{len(skipped)} relation(s) beyond degree {degree_cap} not evaluated",
        )

    gen = generated_dimensions(res, pres, degree_cap)
    dims = [res.hh_dimension(n) for n in range(degree_cap + 1)]
    missing = [n for n in range(degree_cap + 1) if gen[n] != dims[n]]
    report.add(
        f"ring[{tag}]: generators span HH^n for n <= {degree_cap}",
        not missing,
        "" if not missing else f"degrees {missing} not generated",
        generated=gen,
        dims=dims,
    )
    return report


def product_table(ctx: FieldContext, q, degree_cap: int) -> list[dict]:
    """Products of basis classes b_m[a] * b_n[b] (m + n <= cap), reduced to coordinates."""
    res = get_resolution(ctx, ctx(q))
    rows = []
    for m in range(degree_cap + 1):
        left = res.hh_basis(m)
        for n in range(degree_cap + 1 - m):
            right = res.hh_basis(n)
            target = res.hh_basis(m + n)
            for a, ra in enumerate(left.representatives):
                for b, rb in enumerate(right.representatives):
                    coords = target.reduce(cup(ra, rb, check=False), check=False)
                    rows.append({
                        "left": [m, a],
                        "right": [n, b],
                        "degree": m + n,
                        "coords": [str(c) for c in coords],
                    })
    return rows
