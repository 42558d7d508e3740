#
# File: ideal_ops.py
# Version: 1.2.0
#
# Description: Ideals of a PolyRing and the ideal-level algebra built on the
#              Groebner engine: sums, products, intersections, colon ideals,
#              Frobenius bracket powers, Krull dimension and height, regular
#              sequences, radical membership, and non-membership in the
#              bracket power of a homogeneous maximal ideal.
#
# Changelog:
# - v1.2.0: Height from a minimum transversal of the leading-monomial supports.
# - v1.1.0: Thread-safe Groebner cache per monomial order.
# - v1.0.0: Initial version.
#
import logging
import threading

from errors import UsageError
from groebner import buchberger, ideal_equal, ideal_membership

__version__ = "1.2.0"


class Ideal:
    """
    An ideal given by generators, with a cache of reduced Groebner bases.

    Args:
        ring (PolyRing): The ambient ring.
        generators (iterable of Polynomial): Zero generators are dropped.
    """
    def __init__(self, ring, generators=()):
        gens = []
        for g in generators:
            if isinstance(g, int):
                g = ring.constant(g)
            if g.ring != ring:
                raise UsageError("Ideal generators must live in the ideal's ring.")
            if not g.is_zero():
                gens.append(g)
        self.ring = ring
        self.generators = tuple(gens)
        self._bases = {}
        self.lock = threading.Lock()

    @classmethod
    def zero(cls, ring):
        return cls(ring, [])

    @classmethod
    def unit(cls, ring):
        return cls(ring, [ring.one()])

    @classmethod
    def maximal(cls, ring, variables=None):
        """The homogeneous maximal ideal of `variables` (all ring variables by default)."""
        if variables is None:
            variables = ring.variables
        return cls(ring, [ring.var(v) for v in variables])

    # --- Groebner data ---
    def groebner(self, order=None):
        """Reduced Groebner basis under `order` (ring working order by default), cached."""
        order = order or self.ring.work_order
        with self.lock:
            basis = self._bases.get(order)
            if basis is None:
                basis = buchberger(self.generators, order, ring=self.ring)
                self._bases[order] = basis
        return basis

    def contains(self, f):
        if isinstance(f, int):
            f = self.ring.constant(f)
        if f.ring != self.ring:
            raise UsageError("Polynomial and ideal live in different rings.")
        if f.is_zero():
            return True
        if f in self.generators:
            return True
        return self.groebner().contains(f)

    __contains__ = contains

    def reduce(self, f):
        return self.groebner().reduce(f)

    def is_subset_of(self, other):
        if other.ring != self.ring:
            raise UsageError("Ideals live in different rings.")
        return all(other.contains(g) for g in self.generators)

    def equals(self, other):
        return ideal_equal(self, other)

    def is_zero(self):
        return not self.generators

    def is_unit(self):
        if any(g.is_constant() for g in self.generators):
            return True
        return self.groebner().is_unit_ideal()

    def is_proper(self):
        return not self.is_unit()

    def is_homogeneous(self):
        return all(g.is_homogeneous() for g in self.generators)

    # --- Ring maps ---
    def lift(self, ring):
        """The extension of this ideal to a ring containing all of its variables."""
        return Ideal(ring, [ring.lift(g) for g in self.generators])

    def map(self, fn):
        return Ideal(self.ring, [fn(g) for g in self.generators])

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __str__(self):
        return "(" + ", ".join(str(g) for g in self.generators) + ")"

    def __repr__(self):
        return f"Ideal{self}"


def _check_same_ring(first, second):
    if first.ring != second.ring:
        raise UsageError("Ideals live in different rings.")


def frobenius_exponent(ring, q):
    """e with q = p^e, or UsageError."""
    if not isinstance(q, int) or q < 1:
        raise UsageError(f"Bracket exponent must be a positive power of {ring.p}, got {q!r}.")
    e = 0
    while q % ring.p == 0:
        q //= ring.p
        e += 1
    if q != 1:
        raise UsageError(f"Bracket exponent is not a power of the characteristic {ring.p}.")
    return e


def bracket_power(ideal, q):
    """I^[q]: the ideal of q-th powers of the generators, q = p^e."""
    e = frobenius_exponent(ideal.ring, q)
    if e == 0:
        return ideal
    return Ideal(ideal.ring, [g.frobenius(e) for g in ideal.generators])


def ideal_sum(first, second):
    _check_same_ring(first, second)
    return Ideal(first.ring, first.generators + second.generators)


def ideal_product(first, second):
    _check_same_ring(first, second)
    return Ideal(first.ring, [f * g for f in first.generators for g in second.generators])


def intersect(first, second):
    """
    I ∩ J, by eliminating an auxiliary variable w from w*I + (1-w)*J.
    """
    _check_same_ring(first, second)
    ring = first.ring
    if first.is_zero() or second.is_zero():
        return Ideal.zero(ring)
    if any(g.is_constant() for g in first.generators):
        return second
    if any(g.is_constant() for g in second.generators):
        return first

    aux = ring.fresh_auxiliary()
    big = ring.extend([aux])
    w = big.var(aux)
    one_minus_w = big.one() - w
    gens = [w * big.lift(f) for f in first.generators]
    gens += [one_minus_w * big.lift(g) for g in second.generators]
    basis = buchberger(gens, big.elimination([aux]))
    slot = big.index_of(aux)
    kept = [ring.restrict(g) for g in basis if all(m[slot] == 0 for m in g.term_dict())]
    logging.debug(f"intersect: {len(first)} and {len(second)} generators -> {len(kept)}.")
    return Ideal(ring, kept)


def colon(first, second):
    """
    I : J = {f : f*J ⊆ I}, computed generator by generator of J as
    (I ∩ (g)) / g and intersected.

    Raises:
        UsageError: if J is the zero ideal.
    """
    _check_same_ring(first, second)
    if second.is_zero():
        raise UsageError("Colon by the zero ideal is not defined here.")
    ring = first.ring
    if second.is_subset_of(first):
        return Ideal.unit(ring)

    result = None
    for g in second.generators:
        if first.contains(g):
            continue
        if g.is_constant():
            part = first
        else:
            meet = intersect(first, Ideal(ring, [g]))
            part = Ideal(ring, [h.exact_divide(g) for h in meet.groebner().generators])
        result = part if result is None else intersect(result, part)
    return result


def dimension(ideal):
    """
    Krull dimension of ring/I: the number of variables minus the smallest set
    of variables meeting the support of every leading monomial. The unit ideal
    returns -1 and logs a warning.
    """
    ring = ideal.ring
    if ideal.is_zero():
        return ring.nvars
    basis = ideal.groebner()
    if basis.is_unit_ideal():
        logging.warning("dimension: the unit ideal has no dimension, reporting -1.")
        return -1
    masks = [_support(lm) for lm in basis.leading_monomials()]
    return ring.nvars - _min_transversal(masks, ring.nvars)


def _support(monomial):
    mask = 0
    for i, e in enumerate(monomial):
        if e:
            mask |= 1 << i
    return mask


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low
        mask ^= low


def _min_transversal(masks, nvars):
    """Size of a smallest variable set meeting every mask (branch and bound)."""
    masks = sorted(set(masks), key=lambda m: bin(m).count("1"))
    minimal = []
    for m in masks:
        if not any(other & m == other for other in minimal):
            minimal.append(m)
    best = [nvars]

    def packing_bound(unhit):
        used, count = 0, 0
        for m in unhit:
            if not m & used:
                used |= m
                count += 1
        return count

    def search(chosen, count, pending):
        unhit = [m for m in pending if not m & chosen]
        if not unhit:
            best[0] = min(best[0], count)
            return
        if count + packing_bound(unhit) >= best[0]:
            return
        pivot = unhit[0]
        for bit in _bits(pivot):
            search(chosen | bit, count + 1, unhit)

    search(0, 0, minimal)
    return best[0]


def height(ideal):
    """
    height(I) = number of variables - dim(ring/I).

    Raises:
        UsageError: for the zero or the unit ideal.
    """
    if ideal.is_zero():
        raise UsageError("height is only computed for nonzero ideals.")
    dim = dimension(ideal)
    if dim < 0:
        raise UsageError("height is only computed for proper ideals.")
    return ideal.ring.nvars - dim


def is_regular_sequence(polys, ring=None):
    """
    True iff height((polys)) equals their number; in a polynomial ring this
    decides whether they form a regular sequence.

    Raises:
        UsageError: if an element is zero or a unit.
    """
    polys = list(polys)
    if not polys:
        return True
    ring = ring or polys[0].ring
    for f in polys:
        if f.is_zero():
            raise UsageError("A regular sequence cannot contain zero.")
        if f.is_constant():
            raise UsageError(f"A regular sequence cannot contain the unit {f}.")
    ideal = Ideal(ring, polys)
    if ideal.is_unit():
        return False
    return height(ideal) == len(polys)


def radical_membership(f, ideal):
    """f ∈ √I, decided by 1 ∈ I + (1 - w*f) with a new variable w."""
    ring = ideal.ring
    if f.ring != ring:
        raise UsageError("Polynomial and ideal live in different rings.")
    if f.is_zero():
        return True
    aux = ring.fresh_auxiliary()
    big = ring.extend([aux])
    gens = [big.lift(g) for g in ideal.generators]
    gens.append(big.one() - big.var(aux) * big.lift(f))
    return buchberger(gens, big.work_order).is_unit_ideal()


def not_in_bracket_max(f, variables=None, q=None, order=None, prefer=None):
    """
    Decides f ∉ m^[q] for m the ideal of `variables`: m^[q] is a monomial
    ideal, so f avoids it iff some term has every exponent in `variables`
    at most q-1.

    Args:
        f (Polynomial): The polynomial under test.
        variables (iterable, optional): Variables of m (all by default).
        q (int, optional): A power of p (p by default).
        order (MonomialOrder, optional): Picks the witness among qualifying
            monomials (ring default order otherwise).
        prefer (tuple, optional): Monomial returned as witness when it qualifies.

    Returns:
        tuple: (bool, witness monomial or None)
    """
    ring = f.ring
    q = ring.p if q is None else q
    frobenius_exponent(ring, q)
    if f.is_zero():
        return False, None
    slots = range(ring.nvars) if variables is None else [ring.index_of(v) for v in variables]
    slots = list(slots)
    limit = q - 1

    def qualifies(m):
        return all(m[i] <= limit for i in slots)

    if prefer is not None:
        prefer = tuple(prefer)
        if f.coefficient(prefer) and qualifies(prefer):
            return True, prefer
    candidates = [m for m in f.term_dict() if qualifies(m)]
    if not candidates:
        return False, None
    order = order or ring.default_order
    return True, max(candidates, key=order.key)


__all__ = [
    "Ideal", "bracket_power", "colon", "intersect", "ideal_sum", "ideal_product",
    "dimension", "height", "is_regular_sequence", "radical_membership",
    "not_in_bracket_max", "ideal_membership", "ideal_equal", "frobenius_exponent",
]
