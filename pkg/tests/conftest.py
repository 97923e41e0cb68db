"""Shared helpers: random polynomial generation and independent oracles.

The reference implementations here (tuple-keyed dict polynomials,
cofactor-expansion determinants) deliberately share no code with the
package so the tests cross two independent paths.
"""

import random
from fractions import Fraction

import pytest

from resverify.poly import VAR_NAMES, MultiPoly


def rand_poly(rng: random.Random, names=("f", "k"), max_terms=5, max_deg=3,
              coeff_lo=-9, coeff_hi=9, allow_zero=True) -> MultiPoly:
    acc = MultiPoly.zero()
    for _ in range(rng.randint(0 if allow_zero else 1, max_terms)):
        term = MultiPoly.const(rng.randint(coeff_lo, coeff_hi))
        for name in names:
            term = term * MultiPoly.var(name, rng.randint(0, max_deg))
        acc = acc + term
    return acc


def rand_nonzero(rng, **kw) -> MultiPoly:
    while True:
        p = rand_poly(rng, allow_zero=False, **kw)
        if not p.is_zero():
            return p


# -- reference polynomial arithmetic (tuple-keyed, Fraction coefficients)

def ref_from_multipoly(p: MultiPoly) -> dict:
    return {exps: Fraction(int(co.numerator), int(co.denominator))
            for exps, co in p.terms()}


def ref_to_multipoly(d: dict) -> MultiPoly:
    return MultiPoly(d)


def ref_add(a: dict, b: dict) -> dict:
    out = dict(a)
    for key, co in b.items():
        cc = out.get(key, 0) + co
        if cc:
            out[key] = cc
        else:
            out.pop(key, None)
    return out


def ref_mul(a: dict, b: dict) -> dict:
    out = {}
    for ka, ca in a.items():
        for kb, cb in b.items():
            key = tuple(x + y for x, y in zip(ka, kb))
            cc = out.get(key, 0) + ca * cb
            if cc:
                out[key] = cc
            else:
                out.pop(key, None)
    return out


def ref_scale(a: dict, q) -> dict:
    return {key: co * q for key, co in a.items() if co * q}


def ref_diff(a: dict, name: str) -> dict:
    i = VAR_NAMES.index(name)
    out = {}
    for key, co in a.items():
        if key[i]:
            nk = key[:i] + (key[i] - 1,) + key[i + 1:]
            out[nk] = out.get(nk, 0) + co * key[i]
    return {k: v for k, v in out.items() if v}


def ref_eval(a: dict, assignment: dict) -> Fraction:
    total = Fraction(0)
    for key, co in a.items():
        term = Fraction(co)
        for i, e in enumerate(key):
            if e:
                term *= Fraction(assignment[VAR_NAMES[i]]) ** e
        total += term
    return total


def cofactor_det(rows):
    """Determinant by cofactor expansion; entries are MultiPoly."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    acc = MultiPoly.zero()
    for j in range(n):
        if rows[0][j].is_zero():
            continue
        minor = [row[:j] + row[j + 1:] for row in rows[1:]]
        term = rows[0][j] * cofactor_det(minor)
        acc = acc + term if j % 2 == 0 else acc - term
    return acc


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240811)
