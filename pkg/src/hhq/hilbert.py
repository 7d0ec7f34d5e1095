"""Closed-form Hilbert series of HH*(Lambda_q) and comparison with computed dimensions."""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import CaseDescriptor, classify
from .exactfield import FieldContext
from .report import NOTE, Check, Report
from .resolution import hh_dimension

__all__ = ["SeriesSpec", "series_for", "series_coefficients", "compare_dims"]


def _mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _monomial(k: int, c: int = 1) -> list[int]:
    return [0] * k + [c]


def _add(a: list[int], b: list[int]) -> list[int]:
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]


@dataclass(frozen=True)
class SeriesSpec:
    """constant + numerator(t) / denominator(t), integer coefficients, lowest degree first."""

    tag: str
    numerator: tuple[int, ...]
    denominator: tuple[int, ...]
    constant: int = 0
    text: str = ""

    def __post_init__(self):
        if not self.denominator or self.denominator[0] == 0:
            raise ValueError("denominator needs a nonzero constant term")


def series_for(case: CaseDescriptor) -> SeriesSpec:
    tag, r = case.tag, case.r
    one_minus_t_sq = (1, -2, 1)
    if tag == "Generic":
        return SeriesSpec(tag, (2, 2, 1), (1,), text="2+2t+t^2")
    if tag == "OddRoot":
        num = _mul([1, 2, 1], _add([1], _monomial(2 * r)))
        den = _mul(_add([1], _monomial(2 * r, -1)), _add([1], _monomial(2 * r, -1)))
        return SeriesSpec(tag, tuple(num), tuple(den), 1,
                          f"1+(1+t)^2(1+t^{2 * r})/(1-t^{2 * r})^2")
    if tag == "EvenRootOrChar2":
        den = _mul(_add([1], _monomial(r, -1)), _add([1], _monomial(r, -1)))
        return SeriesSpec(tag, (1, 2, 1), tuple(den), 1, f"1+(1+t)^2/(1-t^{r})^2")
    if tag == "Char2Q1":
        return SeriesSpec(tag, (4,), one_minus_t_sq, text="4/(1-t)^2")
    if tag == "QMinusOne":
        return SeriesSpec(tag, (4, -4, 1), one_minus_t_sq, text="(4-4t+t^2)/(1-t)^2")
    if tag == "QOne":
        return SeriesSpec(tag, (2,), one_minus_t_sq, text="2/(1-t)^2")
    if tag == "QZero":
        return SeriesSpec(tag, (1, 0, 0, 1), one_minus_t_sq, text="(1+t^3)/(1-t)^2")
    raise ValueError(f"unknown case {case}")


def series_coefficients(spec: SeriesSpec, N: int) -> list[int]:
    """Coefficients of t^0..t^N in the power-series expansion of ``spec``."""
    if N < 0:
        raise ValueError("N must be >= 0")
    num, den = spec.numerator, spec.denominator
    d0 = den[0]
    coeffs: list[int] = []
    for n in range(N + 1):
        acc = num[n] if n < len(num) else 0
        for k in range(1, min(n, len(den) - 1) + 1):
            acc -= den[k] * coeffs[n - k]
        if acc % d0:
            raise ValueError(f"non-integral coefficient at t^{n}")
        coeffs.append(acc // d0)
    if N >= 0:
        coeffs[0] += spec.constant
    if any(c < 0 for c in coeffs):
        raise ValueError(f"negative coefficient in expansion of {spec.text}: {coeffs}")
    return coeffs


def compare_dims(ctx: FieldContext, q, N: int) -> Report:
    """Computed dim HH^n against the closed-form series of the case, n = 0..N.

    For q = 0 the series has constant term 1 while HH^0 is the 2-dimensional
    centre span{1, yx}; degree 0 is then exempt and annotated.
    """
    q = ctx(q)
    case = classify(ctx, q)
    spec = series_for(case)
    predicted = series_coefficients(spec, N)
    computed = [hh_dimension(n, ctx, q) for n in range(N + 1)]
    exempt = {0} if case.tag == "QZero" else set()
    mismatches = [
        {"degree": n, "computed": computed[n], "series": predicted[n]}
        for n in range(N + 1)
        if computed[n] != predicted[n] and n not in exempt
    ]
    report = Report()
    name = f"hilbert[{case}]: {spec.text} vs computed, n <= {N}"
    if mismatches:
        report.add(name, False, f"{len(mismatches)} mismatch(es)",
                   mismatches=mismatches, computed=computed, series=predicted)
    elif exempt and computed[0] != predicted[0]:
        report.checks.append(Check(
            name, NOTE,
            f"degree 0: computed {computed[0]} (centre span{{1,yx}}), series constant "
            f"term {predicted[0]}; series constant term disagrees with HH^0, degree 0 exempt",
            {"computed": computed, "series": predicted},
        ))
    else:
        report.add(name, True, "", computed=computed, series=predicted)
    return report
