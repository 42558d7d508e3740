import pytest

from errors import UsageError
from groebner import ideal_equal
from ideal_ops import Ideal, height, ideal_product, is_regular_sequence
from poly_ring import PolyRing
from determinantal import determinantal_generic_link
from linkage import (LinkPresentation, GENERIC_LINK, RESIDUAL_INTERSECTION, UNCHECKED_HYPOTHESES,
                     generic_link, generic_residual_intersection, maximal_ideal_link, maximal_ideal_ring,
                     residual_presentation_maximal, beta_sequence, link_regular_sequence_a)

RING = PolyRing(2, ["x", "y"])


@pytest.mark.parametrize("n, s", [(1, 1), (1, 2), (2, 2), (2, 3)])
def test_closed_form_matches_the_colon(n, s):
    link = maximal_ideal_link(n, s, 2)
    J = link.link_ideal(cross_check=True)
    assert link.cross_checked is True
    assert J is link.link_ideal()
    assert height(J) == s
    assert ideal_equal(residual_presentation_maximal(n, s, 2), J)


def test_presentation_shape():
    link = maximal_ideal_link(2, 3, 2)
    assert link.kind == RESIDUAL_INTERSECTION
    assert link.shape() == {"kind": RESIDUAL_INTERSECTION, "base_variables": 2, "variables": 8,
                            "u_rows": 3, "u_cols": 2, "a_generators": 3}
    assert [str(v) for v in link.ring.variables[:3]] == ["x[1]", "x[2]", "u[1,1]"]
    assert link.assertions == UNCHECKED_HYPOTHESES
    assert link.is_maximal_ideal_link()


def test_row_forms_of_a():
    link = maximal_ideal_link(2, 2, 3)
    x, u = link.ring.var, link.U.entry
    assert link.a_generators[0] == u(1, 1) * x("x[1]") + u(1, 2) * x("x[2]")
    assert link.a_generators[1] == u(2, 1) * x("x[1]") + u(2, 2) * x("x[2]")


def test_membership_without_forming_the_link():
    link = maximal_ideal_link(2, 2, 2)
    det = link.U.entry(1, 1) * link.U.entry(2, 2) - link.U.entry(1, 2) * link.U.entry(2, 1)
    assert link.contains(det)
    assert not link.contains(link.ring.var("x[1]"))
    assert link.contains(link.base_ring.var("x[1]") * 0)


def test_double_colon_returns_the_extended_ideal():
    link = maximal_ideal_link(2, 2, 2)
    assert ideal_equal(link.double_colon(), link.extended_ideal)


def test_link_of_a_principal_ideal():
    link = generic_link(Ideal(RING, [RING.parse("x*y")]))
    assert link.kind == GENERIC_LINK
    assert link.rows == 1
    assert not link.is_maximal_ideal_link()
    assert ideal_equal(link.link_ideal(), Ideal(link.ring, [link.U.entry(1, 1)]))
    assert link.cross_checked is None
    with pytest.raises(UsageError):
        link.closed_form()


def test_residual_intersection_of_a_non_maximal_ideal():
    I = Ideal(RING, [RING.parse("x^2"), RING.parse("x*y")])
    link = generic_residual_intersection(I, 1)
    J = link.link_ideal()
    x, y = link.ring.var("x"), link.ring.var("y")
    assert ideal_equal(J, Ideal(link.ring, [link.U.entry(1, 1) * x + link.U.entry(1, 2) * y]))
    assert not link.is_maximal_ideal_link()


def test_bad_inputs():
    with pytest.raises(UsageError):
        generic_link(Ideal.unit(RING))
    with pytest.raises(UsageError):
        generic_link(Ideal.zero(RING))
    with pytest.raises(UsageError):
        generic_residual_intersection(Ideal.maximal(RING), 1)
    with pytest.raises(UsageError):
        maximal_ideal_link(2, 1, 2)
    with pytest.raises(UsageError):
        maximal_ideal_ring(0, 2)
    with pytest.raises(UsageError):
        LinkPresentation(Ideal.maximal(RING), 0)
    with pytest.raises(UsageError):
        beta_sequence(1, 1)


@pytest.mark.parametrize("n, s", [(2, 2), (2, 3)])
def test_beta_sequence_is_regular(n, s):
    link = maximal_ideal_link(n, s, 2)
    beta = beta_sequence(n, s, presentation=link)
    assert len(beta) == s
    assert beta[: n - 1] == list(link.a_generators[: n - 1])
    assert is_regular_sequence(beta, link.ring)
    assert Ideal(link.ring, beta).is_subset_of(link.link_ideal())


def test_a_is_a_complete_intersection():
    assert link_regular_sequence_a(maximal_ideal_link(2, 2, 2))
    assert link_regular_sequence_a(maximal_ideal_link(2, 3, 3))


@pytest.mark.parametrize("build", [
    lambda: maximal_ideal_link(2, 2, 2),
    lambda: maximal_ideal_link(2, 3, 2),
    lambda: generic_link(Ideal(RING, [RING.parse("x*y")])),
    lambda: generic_residual_intersection(Ideal(RING, [RING.parse("x^2"), RING.parse("x*y")]), 1),
    lambda: determinantal_generic_link(1, 2, 2),
], ids=["link-m2", "residual-m2-s3", "principal", "residual-s1", "det-t1-n2"])
def test_link_times_the_ideal_lies_in_a(build):
    link = build()
    J = link.link_ideal()
    assert link.a_ideal.is_subset_of(J)
    assert ideal_product(J, link.extended_ideal).is_subset_of(link.a_ideal)
