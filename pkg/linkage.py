#
# File: linkage.py
# Version: 1.1.0
#
# Description: Generic links and generic residual intersections. For an ideal
#              I = (f_1, ..., f_n) of R, adjoin a matrix U of new variables,
#              let a be generated by the entries of U*[f_1 ... f_n]^T in
#              S = R[U], and form J = a : I*S. J is computed lazily; membership
#              in J can be decided through a without forming J.
#
# Changelog:
# - v1.1.0: Closed-form presentation for the maximal ideal, with an optional
#           cross-check against the colon computation.
# - v1.0.0: Initial version.
#
import logging
import threading

from errors import UsageError
from poly_ring import PolyRing, VariableId
from ideal_ops import Ideal, colon, height, ideal_sum, is_regular_sequence, ideal_equal
from determinantal import GenericMatrix, matrix_variables, det_ideal, staircase_minors

__version__ = "1.1.0"

GENERIC_LINK = "generic-link"
RESIDUAL_INTERSECTION = "residual-intersection"

UNCHECKED_HYPOTHESES = (
    "equidimensional (caller assertion, not checked)",
    "generically a complete intersection / local generation bound (caller assertion, not checked)",
)


class LinkPresentation:
    """
    The data of a generic link or generic residual intersection.

    Args:
        ideal (Ideal): I in the base ring R.
        rows (int): Row count of U (height(I) for a link, s for a residual
            intersection).
        kind (str): GENERIC_LINK or RESIDUAL_INTERSECTION.
        assertions (iterable of str, optional): Hypotheses the caller vouches
            for; recorded, never decided.
    """
    def __init__(self, ideal, rows, kind=GENERIC_LINK, assertions=None):
        base = ideal.ring
        n = len(ideal.generators)
        if n == 0:
            raise UsageError("A link needs a nonzero ideal.")
        if rows < 1:
            raise UsageError(f"U needs at least one row, got {rows}.")
        self.kind = kind
        self.base_ring = base
        self.base_ideal = ideal
        self.ring = base.extend(matrix_variables("u", rows, n))
        self.U = GenericMatrix(self.ring, rows, n, symbol="u")
        self.i_generators = tuple(self.ring.lift(f) for f in ideal.generators)
        self.a_generators = tuple(self._row_form(i) for i in range(1, rows + 1))
        self.a_ideal = Ideal(self.ring, self.a_generators)
        self.extended_ideal = Ideal(self.ring, self.i_generators)
        self.assertions = tuple(assertions) if assertions else UNCHECKED_HYPOTHESES
        self.source_matrix = None
        self.cross_checked = None
        self._link = None
        self.lock = threading.Lock()
        logging.debug(f"LinkPresentation: {kind}, U {rows}x{n}, {self.ring.nvars} variables.")

    def _row_form(self, i):
        total = self.ring.zero()
        for j, f in enumerate(self.i_generators, start=1):
            total = total + self.U.entry(i, j) * f
        return total

    @property
    def rows(self):
        return self.U.rows

    @property
    def generator_count(self):
        return self.U.cols

    def is_maximal_ideal_link(self):
        """True when I is generated by all variables of R, each once."""
        gens = self.base_ideal.generators
        try:
            vars_used = [g.as_variable() for g in gens]
        except UsageError:
            return False
        return len(set(vars_used)) == len(vars_used) == self.base_ring.nvars

    def closed_form(self):
        """a + I_n(U), valid when I is the maximal ideal and rows >= n."""
        if not self.is_maximal_ideal_link() or self.rows < self.generator_count:
            raise UsageError("The closed-form presentation needs I = m and at least n rows.")
        return ideal_sum(self.a_ideal, det_ideal(self.U, self.generator_count))

    def link_ideal(self, cross_check=False):
        """
        J = a : I*S, computed once.

        Args:
            cross_check (bool): For I = m, also compute the colon and compare it
                with the closed form; the outcome is kept in `cross_checked`.
        """
        fast = self.is_maximal_ideal_link() and self.rows >= self.generator_count
        with self.lock:
            if self._link is None:
                if fast:
                    self._link = self.closed_form()
                else:
                    self._link = colon(self.a_ideal, self.extended_ideal)
            if cross_check and fast and self.cross_checked is None:
                computed = colon(self.a_ideal, self.extended_ideal)
                self.cross_checked = ideal_equal(self._link, computed)
                if not self.cross_checked:
                    logging.warning("LinkPresentation: closed form disagrees with the colon ideal.")
        return self._link

    def contains(self, f):
        """f ∈ a : I*S, decided as f*f_j ∈ a for every generator f_j of I."""
        if f.ring != self.ring:
            f = self.ring.lift(f)
        if self._link is not None:
            return self._link.contains(f)
        return all(self.a_ideal.contains(f * g) for g in self.i_generators)

    def double_colon(self):
        """a : (a : I*S)."""
        return colon(self.a_ideal, self.link_ideal())

    def shape(self):
        return {
            "kind": self.kind,
            "base_variables": self.base_ring.nvars,
            "variables": self.ring.nvars,
            "u_rows": self.rows,
            "u_cols": self.generator_count,
            "a_generators": len(self.a_generators),
        }

    def __repr__(self):
        return f"LinkPresentation({self.kind}, U {self.rows}x{self.generator_count}, p={self.ring.p})"


def _require_proper(ideal):
    if ideal.is_zero():
        raise UsageError("Links are built for nonzero ideals.")
    if ideal.is_unit():
        raise UsageError("Links are built for proper ideals.")


def generic_link(ideal, height_hint=None, matrix=None, assertions=None):
    """
    The generic link of I: U has height(I) rows and one column per generator.

    Args:
        ideal (Ideal): Proper nonzero ideal.
        height_hint (int, optional): Known height of I, skipping its computation.
        matrix (GenericMatrix, optional): The generic matrix I comes from, kept
            on the presentation for callers that need its minors.
    """
    _require_proper(ideal)
    g = height_hint if height_hint is not None else height(ideal)
    link = LinkPresentation(ideal, g, GENERIC_LINK, assertions)
    link.source_matrix = matrix
    return link


def generic_residual_intersection(ideal, s, height_hint=None, assertions=None):
    """
    The generic s-residual intersection of I: U has s rows.

    Raises:
        UsageError: if s < height(I).
    """
    _require_proper(ideal)
    g = height_hint if height_hint is not None else height(ideal)
    if s < g:
        raise UsageError(f"A residual intersection needs s >= height(I) = {g}, got s={s}.")
    return LinkPresentation(ideal, s, RESIDUAL_INTERSECTION, assertions)


def maximal_ideal_ring(n, p):
    """F_p[x[1], ..., x[n]]."""
    if n < 1:
        raise UsageError(f"Need at least one variable, got n={n}.")
    return PolyRing(p, [VariableId("x", (k,)) for k in range(1, n + 1)])


def maximal_ideal_link(n, s, p):
    """The generic s-residual intersection of m = (x[1], ..., x[n])."""
    if s < n:
        raise UsageError(f"Need s >= n, got n={n}, s={s}.")
    ring = maximal_ideal_ring(n, p)
    return generic_residual_intersection(Ideal.maximal(ring), s, height_hint=n)


def residual_presentation_maximal(n, s, p):
    """
    a + I_n(U) in F_p[x_1..x_n][U] for U generic s x n, without any colon.

    Raises:
        UsageError: if s < n or n < 1.
    """
    return maximal_ideal_link(n, s, p).closed_form()


def beta_sequence(n, s, p=2, presentation=None):
    """
    The first n-1 bilinear forms u[i,1]x[1] + ... + u[i,n]x[n] followed by the
    s-n+1 adjacent-row n x n minors of U; length s.

    Raises:
        UsageError: if n < 2 or s < n.
    """
    if n < 2:
        raise UsageError(f"The beta sequence needs n >= 2, got n={n}.")
    link = presentation or maximal_ideal_link(n, s, p)
    return list(link.a_generators[: n - 1]) + staircase_minors(link.U)


def link_regular_sequence_a(link):
    """True iff the generators of a form a regular sequence."""
    return is_regular_sequence(link.a_generators, link.ring)
