"""Elimination algorithms: Sylvester resultants (fraction-free Bareiss
and evaluation-interpolation paths) and subresultant-PRS gcd.

Sign convention: the Sylvester determinant with the rows of the first
argument on top.  Rational content of the inputs is cleared before the
determinant and reapplied as leading-coefficient-power bookkeeping, so
the returned value is exactly the textbook resultant of the inputs.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from . import kernels
from .poly import MultiPoly, _content_in, _prs_gcd
from .ratio import RAT_ONE, Rat


class ZeroInput(ValueError):
    """Resultant/gcd of a zero polynomial is rejected, not silently 0."""


class BothConstant(ValueError):
    """Sylvester matrix of two polynomials free of the variable."""


class InsufficientSamples(RuntimeError):
    """Interpolation could not collect enough admissible sample points."""


class ComputationTimeout(RuntimeError):
    """A cooperative deadline expired mid-computation."""


@dataclass
class SylvesterMatrix:
    """Square matrix of the shifted coefficient rows of (A, B) in v."""

    rows: list[list[MultiPoly]]
    a: MultiPoly
    b: MultiPoly
    var: str

    @property
    def dimension(self) -> int:
        return len(self.rows)


@dataclass
class GcdResult:
    """Primitive gcd w.r.t. one variable plus the cofactor v-degrees."""

    gcd: MultiPoly
    cofactor_degrees: tuple[int, int]


def sylvester(a: MultiPoly, b: MultiPoly, var: str) -> SylvesterMatrix:
    if a.is_zero() or b.is_zero():
        raise ZeroInput("Sylvester matrix of a zero polynomial")
    da, db = a.degree(var), b.degree(var)
    if da == 0 and db == 0:
        raise BothConstant(f"neither input involves {var!r}")
    ac = a.coefficients_in(var)
    bc = b.coefficients_in(var)
    dim = da + db
    zero = MultiPoly.zero()
    rows = []
    for i in range(db):
        row = [zero] * dim
        for j, coeff in enumerate(reversed(ac)):
            row[i + j] = coeff
        rows.append(row)
    for i in range(da):
        row = [zero] * dim
        for j, coeff in enumerate(reversed(bc)):
            row[i + j] = coeff
        rows.append(row)
    return SylvesterMatrix(rows, a, b, var)


def bareiss_det(rows: list[list[MultiPoly]]) -> MultiPoly:
    """Exact determinant of a square MultiPoly matrix, fraction-free."""
    n = len(rows)
    if n == 0:
        return MultiPoly.const(1)
    if any(len(row) != n for row in rows):
        raise ValueError("matrix is not square")
    m = [list(row) for row in rows]
    sign = 1
    prev = MultiPoly.const(1)
    for k in range(n - 1):
        if m[k][k].is_zero():
            for i in range(k + 1, n):
                if not m[i][k].is_zero():
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return MultiPoly.zero()
        pivot = m[k][k]
        for i in range(k + 1, n):
            row_i = m[i]
            head = row_i[k]
            row_k = m[k]
            for j in range(k + 1, n):
                num = pivot * row_i[j] - head * row_k[j]
                row_i[j] = num.exact_div(prev)
            row_i[k] = MultiPoly.zero()
        prev = pivot
    det = m[n - 1][n - 1]
    return det if sign > 0 else -det


def resultant(a: MultiPoly, b: MultiPoly, var: str) -> MultiPoly:
    """Textbook resultant of a and b w.r.t. var (Bareiss determinant)."""
    if a.is_zero() or b.is_zero():
        raise ZeroInput("resultant of a zero polynomial")
    da, db = a.degree(var), b.degree(var)
    if da == 0 and db == 0:
        return MultiPoly.const(1)
    if da == 0:
        return a ** db
    if db == 0:
        return b ** da
    cont_a, prim_a = a.primitive()
    cont_b, prim_b = b.primitive()
    factor = cont_a ** db * cont_b ** da
    matrix = sylvester(prim_a, prim_b, var)
    if all(e.is_constant() for row in matrix.rows for e in row):
        det_val = kernels.bareiss_det_int(
            [[e.constant_value().numerator for e in row] for row in matrix.rows])
        return MultiPoly.const(Rat(det_val) * factor)
    return bareiss_det(matrix.rows) * factor


def _horner(coeffs: list, x: int):
    acc = coeffs[-1]
    for co in reversed(coeffs[:-1]):
        acc = acc * x + co
    return acc


def _newton_interpolate(xs: list[int], ys: list) -> list:
    """Exact coefficients (ascending) of the interpolating polynomial."""
    n = len(xs)
    dd = [Rat(y) for y in ys]
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level])
    coeffs = [dd[n - 1]]
    for i in range(n - 2, -1, -1):
        # coeffs <- coeffs*(x - xs[i]) + dd[i]
        coeffs.append(coeffs[-1])
        for j in range(len(coeffs) - 2, 0, -1):
            coeffs[j] = coeffs[j - 1] - coeffs[j] * xs[i]
        coeffs[0] = dd[i] - coeffs[0] * xs[i]
    return coeffs


def resultant_interp(a: MultiPoly, b: MultiPoly, var: str, spectator: str,
                     deadline: float | None = None) -> MultiPoly:
    """resultant(a, b, var) for bivariate inputs, by evaluating the
    spectator at integers, taking univariate Sylvester determinants and
    interpolating.  One extra sample is checked as a consistency guard.

    deadline is an optional time.monotonic() timestamp; crossing it
    between samples raises ComputationTimeout."""
    if a.is_zero() or b.is_zero():
        raise ZeroInput("resultant of a zero polynomial")
    extra = (a.vars_used() | b.vars_used()) - {var, spectator}
    if extra:
        raise ValueError(f"inputs must be polynomials in {{{var}, {spectator}}}; "
                         f"also saw {sorted(extra)}")
    da, db = a.degree(var), b.degree(var)
    if da == 0 or db == 0:
        return resultant(a, b, var)
    cont_a, prim_a = a.primitive()
    cont_b, prim_b = b.primitive()
    factor = cont_a ** db * cont_b ** da
    bound = a.degree(spectator) * db + b.degree(spectator) * da

    def dense_columns(p: MultiPoly) -> list[list]:
        cols = []
        for ce in p.coefficients_in(var):
            dense = [0] * (ce.degree(spectator) + 1 if not ce.is_zero() else 1)
            for exps, coeff in ce.terms():
                dense[sum(exps)] = coeff.numerator
            cols.append(dense)
        return cols

    acols = dense_columns(prim_a)
    bcols = dense_columns(prim_b)
    lead_a, lead_b = acols[-1], bcols[-1]

    needed = bound + 2  # +1 point for degree, +1 consistency guard
    xs: list[int] = []
    ys: list = []
    t = 0
    limit = needed + len(lead_a) + len(lead_b) + 16
    dim = da + db
    while len(xs) < needed:
        t += 1
        if t > limit:
            raise InsufficientSamples(
                f"could not find {needed} admissible sample points")
        if deadline is not None and time.monotonic() > deadline:
            raise ComputationTimeout("per-case deadline expired")
        if not _horner(lead_a, t) or not _horner(lead_b, t):
            continue
        avals = [_horner(col, t) for col in acols]
        bvals = [_horner(col, t) for col in bcols]
        rows = []
        for i in range(db):
            row = [0] * dim
            for j in range(da + 1):
                row[i + j] = avals[da - j]
            rows.append(row)
        for i in range(da):
            row = [0] * dim
            for j in range(db + 1):
                row[i + j] = bvals[db - j]
            rows.append(row)
        xs.append(t)
        ys.append(kernels.bareiss_det_int(rows))

    coeffs = _newton_interpolate(xs[:-1], ys[:-1])
    guard = sum(Rat(co) * xs[-1] ** i for i, co in enumerate(coeffs))
    if guard != ys[-1]:
        raise ArithmeticError("interpolation guard sample mismatch")
    out = MultiPoly.zero()
    for i, co in enumerate(coeffs):
        if co:
            out = out + MultiPoly.var(spectator, i) * co
    return out * factor


def gcd_subresultant(a: MultiPoly, b: MultiPoly, var: str) -> GcdResult:
    """Primitive gcd w.r.t. var; content over the remaining variables is
    handled recursively and stripped from the result."""
    if a.is_zero() or b.is_zero():
        raise ZeroInput("gcd of a zero polynomial")
    da, db = a.degree(var), b.degree(var)
    if da == 0 or db == 0:
        return GcdResult(MultiPoly.const(1), (da, db))
    pp_a = a.exact_div(_content_in(a, var))
    pp_b = b.exact_div(_content_in(b, var))
    g = _prs_gcd(pp_a, pp_b, var)
    dg = g.degree(var)
    return GcdResult(g, (da - dg, db - dg))
