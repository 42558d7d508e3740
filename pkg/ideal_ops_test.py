import random

import pytest
from hypothesis import given, settings, strategies as st

from errors import UsageError
from groebner import ideal_equal
from ideal_ops import (Ideal, bracket_power, colon, intersect, ideal_sum, ideal_product, dimension, height,
                       is_regular_sequence, radical_membership, not_in_bracket_max, frobenius_exponent)
from poly_ring import PolyRing
from polynomial import Polynomial

R2 = PolyRing(2, ["x", "y", "z"])
R3 = PolyRing(3, ["x", "y", "z"])


def ideal(ring, *texts):
    return Ideal(ring, [ring.parse(t) for t in texts])


# --- Ideal objects ---

def test_ideal_basics():
    I = ideal(R3, "x*y", "0", "x^2")
    assert len(I) == 2
    assert I.contains(R3.parse("x^2*y + x*y*z"))
    assert R3.parse("x*y") in I
    assert 0 in I
    assert not I.contains(R3.parse("y"))
    assert I.is_homogeneous()
    assert not ideal(R3, "x + 1").is_homogeneous()
    assert I.is_proper() and not I.is_unit() and not I.is_zero()
    assert Ideal.zero(R3).is_zero()
    assert Ideal.unit(R3).is_unit()
    assert ideal(R3, "x + 1", "x").is_unit()
    assert str(ideal(R3, "x", "y")) == "(x, y)"
    with pytest.raises(UsageError):
        Ideal(R3, [R2.var("x")])


def test_subset_equality_lift_and_map():
    I = ideal(R3, "x", "y")
    J = ideal(R3, "x + y", "x - y")
    assert I.is_subset_of(J) and J.is_subset_of(I)
    assert I.equals(J)
    big = R3.extend(["w"])
    assert I.lift(big).contains(big.parse("x*w"))
    assert I.map(lambda g: g * g).equals(ideal(R3, "x^2", "y^2"))
    assert Ideal.maximal(R3).equals(ideal(R3, "x", "y", "z"))
    assert Ideal.maximal(R3, ["x"]).equals(ideal(R3, "x"))


def test_groebner_bases_are_cached_per_order():
    I = ideal(R3, "x*y - z", "y^2")
    assert I.groebner() is I.groebner()
    assert I.groebner(R3.lex()) is not I.groebner()


# --- Bracket powers ---

def test_bracket_power():
    I = ideal(R2, "x + y", "x*y")
    assert bracket_power(I, 2).generators == ideal(R2, "x^2 + y^2", "x^2*y^2").generators
    assert bracket_power(I, 4).generators[0] == R2.parse("x^4 + y^4")
    assert bracket_power(I, 1) is I
    assert frobenius_exponent(R3, 9) == 2
    for q in (3, 6, 0, -2):
        with pytest.raises(UsageError):
            bracket_power(I, q)


# --- Sums, products, intersections, colons ---

def test_sum_and_product():
    I, J = ideal(R3, "x"), ideal(R3, "y")
    assert ideal_sum(I, J).equals(ideal(R3, "x", "y"))
    assert ideal_product(I, J).equals(ideal(R3, "x*y"))
    with pytest.raises(UsageError):
        ideal_sum(I, ideal(R2, "x"))


def test_intersect_examples():
    assert ideal_equal(intersect(ideal(R3, "x"), ideal(R3, "y")), ideal(R3, "x*y"))
    assert ideal_equal(intersect(ideal(R3, "x^2", "y"), ideal(R3, "x", "y^2")), ideal(R3, "x^2", "x*y", "y^2"))
    assert intersect(ideal(R3, "x"), Ideal.zero(R3)).is_zero()
    assert intersect(Ideal.unit(R3), ideal(R3, "y")).equals(ideal(R3, "y"))


def test_colon_examples():
    assert ideal_equal(colon(ideal(R3, "x^2", "x*y"), ideal(R3, "x")), ideal(R3, "x", "y"))
    assert colon(ideal(R3, "x", "y"), ideal(R3, "x*y")).is_unit()
    # (x*y) : (x + y) over a principal ideal
    assert ideal_equal(colon(ideal(R3, "x*y*(x + y)"), ideal(R3, "x + y")), ideal(R3, "x*y"))
    with pytest.raises(UsageError):
        colon(ideal(R3, "x"), Ideal.zero(R3))


# --- Monomial-ideal oracle ---

def monomial_ideal(ring, exps):
    return Ideal(ring, [ring.monomial(e) for e in exps])


def lcm_formula(first, second):
    return [tuple(max(a, b) for a, b in zip(m, n)) for m in first for n in second]


def colon_formula(first, second):
    result = None
    for b in second:
        part = [tuple(max(a - c, 0) for a, c in zip(m, b)) for m in first]
        result = part if result is None else lcm_formula(result, part)
    return result


def random_monomials(rng, nvars):
    out = []
    for _ in range(rng.randint(1, 3)):
        e = tuple(rng.randint(0, 4) for _ in range(nvars))
        out.append(e if any(e) else (1,) + e[1:])
    return out


@pytest.mark.parametrize("block", range(4))
def test_monomial_colon_and_intersection_match_formulas(block):
    rng = random.Random(104729 + block)
    for _ in range(50):
        ring = rng.choice([PolyRing(2, ["x", "y"]), PolyRing(3, ["x", "y", "z"]),
                           PolyRing(2, ["x", "y", "z", "w"])])
        a, b = random_monomials(rng, ring.nvars), random_monomials(rng, ring.nvars)
        I, J = monomial_ideal(ring, a), monomial_ideal(ring, b)
        assert ideal_equal(intersect(I, J), monomial_ideal(ring, lcm_formula(a, b)))
        assert ideal_equal(colon(I, J), monomial_ideal(ring, colon_formula(a, b)))


# --- Ideal laws ---

def small_ideals(ring):
    monomial = st.tuples(*[st.integers(min_value=0, max_value=1)] * ring.nvars)
    poly = st.dictionaries(monomial, st.integers(min_value=1, max_value=ring.p - 1), min_size=1,
                           max_size=2).map(lambda t: Polynomial(ring, t))
    return st.lists(poly, min_size=1, max_size=2).map(lambda gens: Ideal(ring, gens))


@settings(max_examples=30)
@given(st.data())
def test_intersection_and_colon_laws(data):
    ring = data.draw(st.sampled_from([PolyRing(2, ["x", "y"]), PolyRing(3, ["x", "y"])]))
    I, J = data.draw(small_ideals(ring)), data.draw(small_ideals(ring))
    meet = intersect(I, J)
    assert meet.is_subset_of(I) and meet.is_subset_of(J)
    assert ideal_product(I, J).is_subset_of(meet)
    quotient = colon(I, J)
    assert I.is_subset_of(quotient)
    assert ideal_product(quotient, J).is_subset_of(I)


# --- Dimension and height ---

def test_dimension_and_height():
    assert height(ideal(R3, "x", "y")) == 2
    assert height(ideal(R3, "x*y", "x*z")) == 1
    assert height(ideal(R3, "x^2 + y^2 + z^2")) == 1
    assert dimension(ideal(R3, "x - y^2", "z")) == 1
    assert dimension(Ideal.zero(R3)) == 3
    assert dimension(Ideal.unit(R3)) == -1
    for bad in (Ideal.zero(R3), Ideal.unit(R3)):
        with pytest.raises(UsageError):
            height(bad)


def test_regular_sequences():
    x, y, z = R3.gens()
    assert is_regular_sequence([x, y])
    assert is_regular_sequence([x * y - z ** 2, x + y])
    assert not is_regular_sequence([x * y, x * z])
    assert not is_regular_sequence([x, x + 1])
    assert is_regular_sequence([])
    with pytest.raises(UsageError):
        is_regular_sequence([x, R3.zero()])
    with pytest.raises(UsageError):
        is_regular_sequence([R3.constant(2)])


def test_radical_membership():
    I = ideal(R3, "x^2", "y^3")
    assert radical_membership(R3.parse("x + y"), I)
    assert radical_membership(R3.zero(), I)
    assert not radical_membership(R3.parse("z"), I)


# --- m^[q] membership ---

def test_not_in_bracket_max():
    assert not_in_bracket_max(R2.parse("x*y + x^2")) == (True, (1, 1, 0))
    assert not_in_bracket_max(R2.parse("x^2 + y^2")) == (False, None)
    assert not_in_bracket_max(R2.zero()) == (False, None)
    assert not_in_bracket_max(R2.parse("y^2"), variables=["x"]) == (True, (0, 2, 0))
    assert not_in_bracket_max(R2.parse("x^3"), q=4) == (True, (3, 0, 0))
    f = R2.parse("x*y + x*z")
    assert not_in_bracket_max(f, prefer=(1, 0, 1)) == (True, (1, 0, 1))
    assert not_in_bracket_max(f, order=R2.lex(["z", "y", "x"])) == (True, (1, 0, 1))
    with pytest.raises(UsageError):
        not_in_bracket_max(f, q=3)


# --- Bracket powers and m^[q] against Groebner membership ---

@settings(max_examples=30)
@given(st.data())
def test_bracket_power_does_not_depend_on_the_generators(data):
    ring = data.draw(st.sampled_from([R2, R3]))
    I = data.draw(small_ideals(ring))
    gens = list(I.generators)
    x = ring.var("x")
    redundant = gens + [gens[0] * x, sum(gens, ring.zero())]
    J = Ideal(ring, data.draw(st.permutations(redundant)))
    assert ideal_equal(I, J)
    assert ideal_equal(bracket_power(I, ring.p), bracket_power(J, ring.p))


def polynomials_in(ring, max_exp):
    monomial = st.tuples(*[st.integers(min_value=0, max_value=max_exp)] * ring.nvars)
    return st.dictionaries(monomial, st.integers(min_value=1, max_value=ring.p - 1), max_size=4).map(
        lambda terms: Polynomial(ring, terms))


@given(st.data())
def test_not_in_bracket_max_agrees_with_membership(data):
    ring = data.draw(st.sampled_from([R2, R3]))
    f = data.draw(polynomials_in(ring, 4))
    variables = data.draw(st.sampled_from([None, ["x", "y"], ["z"]]))
    q = ring.p if data.draw(st.booleans()) else ring.p ** 2
    m_q = bracket_power(Ideal.maximal(ring, variables), q)
    outside, witness = not_in_bracket_max(f, variables=variables, q=q)
    assert outside == (not m_q.contains(f))
    if outside:
        assert f.coefficient(witness) != 0
        assert not m_q.contains(ring.monomial(witness))
    else:
        assert witness is None
