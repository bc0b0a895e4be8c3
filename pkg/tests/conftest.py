"""Shared fixtures and independent oracles.

The oracles here deliberately avoid the library's reduction pipeline:
exhaustive enumeration for least coset values and linear solving,
schoolbook factor search for irreducibility, direct expansion for value
products.  Derived expectations in the tests are computed through these.
"""

import itertools

import pytest

from tensornorm import (Magnitude, ScenarioConfig, TowerConfig, parse_field_setup)


@pytest.fixture(scope="session")
def cfg2():
    return TowerConfig(2, 4)


@pytest.fixture(scope="session")
def cfg3():
    return TowerConfig(3, 4)


@pytest.fixture(scope="session")
def setup2():
    """Default closed-base setup: p=2, one transcendental per side."""
    return parse_field_setup("p 2\nlevels 4\nbase closure\nK t:-1\nL u:-1\n")


@pytest.fixture(scope="session")
def setup2_base1():
    """Same extensions, base restricted to the prime field."""
    return parse_field_setup("p 2\nlevels 4\nbase 1\nK t:-1\nL u:-1\n")


@pytest.fixture(scope="session")
def setup3():
    return parse_field_setup("p 3\nlevels 4\nbase closure\nK t:-1\nL u:-1\n")


def enumerate_level(config, level):
    """Every element of the field at the given lattice level."""
    return [config.from_code(level, code) for code in range(config.p**level)]


def brute_min_coset(x, span, coeff_elems):
    """Least value of x + combinations of span, coefficients enumerated
    exhaustively from coeff_elems.  Independent of min_coset_value."""
    best = x.value()
    for combo in itertools.product(coeff_elems, repeat=len(span)):
        cand = x
        for c, s in zip(combo, span):
            if not c.is_zero:
                cand = cand + s.scaled(c)
        v = cand.value()
        if v < best:
            best = v
    return best


def brute_solutions(matrix, rhs, candidates):
    """All solution vectors of M x = rhs among the given field elements."""
    if not matrix:
        return []
    ncols = len(matrix[0])
    out = []
    for vec in itertools.product(candidates, repeat=ncols):
        ok = True
        for row, b in zip(matrix, rhs):
            acc = None
            for a, v in zip(row, vec):
                term = a * v
                acc = term if acc is None else acc + term
            if acc is None:
                acc = b.config.zero() if hasattr(b, "config") else b
            if acc != b:
                ok = False
                break
        if ok:
            out.append(vec)
    return out


def poly_is_irreducible_brute(coeffs, p):
    """Monic polynomial irreducibility by exhaustive factor search.

    coeffs is the little-endian tuple over GF(p) including the leading 1.
    """
    n = len(coeffs) - 1
    if n <= 0:
        return False

    def polymul(a, b):
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
        return tuple(out)

    def monics(deg):
        for tail in itertools.product(range(p), repeat=deg):
            yield tail + (1,)

    for d in range(1, n // 2 + 1):
        for f in monics(d):
            for g in monics(n - d):
                if polymul(f, g) == tuple(coeffs):
                    return False
    return True


def scenario(p=2, **kw):
    defaults = dict(p=p, trials=50, seed=9)
    defaults.update(kw)
    return ScenarioConfig(**defaults)


def mag(q):
    return Magnitude.pos(q)
