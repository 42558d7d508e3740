#
# File: conftest.py
# Version: 1.0.0
#
# Description: Shared pytest fixtures and hypothesis profiles for the frobkit
#              test modules. The 'ci' profile is selected with
#              HYPOTHESIS_PROFILE=ci.
#
import os
import random

import pytest
from hypothesis import HealthCheck, settings

import groebner
import fcriteria
from poly_ring import PolyRing
from polynomial import Polynomial

settings.register_profile("default", deadline=None, max_examples=40,
                          suppress_health_check=[HealthCheck.too_slow, HealthCheck.function_scoped_fixture])
settings.register_profile("ci", deadline=None, max_examples=150,
                          suppress_health_check=[HealthCheck.too_slow, HealthCheck.function_scoped_fixture])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture(autouse=True)
def engine_defaults():
    """Every test starts from the built-in engine limits."""
    groebner.set_engine_limits(degree_guard=groebner.DEFAULT_DEGREE_GUARD, workers=groebner.DEFAULT_WORKERS)
    fcriteria.set_term_cap(fcriteria.DEFAULT_TERM_CAP)
    yield
    groebner.set_engine_limits(degree_guard=groebner.DEFAULT_DEGREE_GUARD, workers=groebner.DEFAULT_WORKERS)
    fcriteria.set_term_cap(fcriteria.DEFAULT_TERM_CAP)


@pytest.fixture
def ring_xy2():
    return PolyRing(2, ["x", "y"], "lex")


@pytest.fixture
def ring_xyz3():
    return PolyRing(3, ["x", "y", "z"])


@pytest.fixture
def rng():
    return random.Random(20240611)


def random_polynomial(rng, ring, max_degree=2, max_terms=4, homogeneous_degree=None):
    """A random polynomial of `ring` (homogeneous of the given degree when set)."""
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        if homogeneous_degree is None:
            degree = rng.randint(0, max_degree)
        else:
            degree = homogeneous_degree
        exps = [0] * ring.nvars
        for _ in range(degree):
            exps[rng.randrange(ring.nvars)] += 1
        terms[tuple(exps)] = rng.randrange(1, ring.p)
    return Polynomial(ring, terms)


def to_sympy_terms(poly, p):
    """{exponent tuple: residue} of a sympy Poly over GF(p)."""
    out = {}
    for m, c in poly.as_dict().items():
        v = int(c) % p
        if v:
            out[tuple(m)] = v
    return out
