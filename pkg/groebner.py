#
# File: groebner.py
# Version: 1.3.0
#
# Description: Multivariate division and Buchberger's algorithm over F_p.
#              Produces the reduced Groebner basis, which is unique for a
#              given ideal and monomial order, so every caller (colon ideals,
#              heights, ideal equality) can compare bases termwise.
#
# Changelog:
# - v1.3.0: Optional batched S-pair reduction on a thread pool. The reduced
#           basis does not depend on the batching.
# - v1.2.0: Degree guard; CapExceededError instead of unbounded runs.
# - v1.1.0: Gebauer-Moeller pair update (coprime and chain criteria).
# - v1.0.0: Initial version.
#
import heapq
import logging
from concurrent.futures import ThreadPoolExecutor

from errors import UsageError, CapExceededError
from monomial_order import monomial_lcm, monomial_divides, monomial_mul, monomial_quotient

__version__ = "1.3.0"

DEFAULT_DEGREE_GUARD = 60
DEFAULT_WORKERS = 1

_engine_limits = {"degree_guard": DEFAULT_DEGREE_GUARD, "workers": DEFAULT_WORKERS}


def set_engine_limits(degree_guard=None, workers=None):
    """
    Sets process-wide limits for Buchberger runs.

    Args:
        degree_guard (int, optional): Largest total degree a new basis
            element may have before the run is aborted.
        workers (int, optional): Threads used for S-pair reduction; 1 runs
            sequentially.
    """
    if degree_guard is not None:
        if int(degree_guard) < 1:
            raise UsageError(f"Degree guard must be positive, got {degree_guard}.")
        _engine_limits["degree_guard"] = int(degree_guard)
    if workers is not None:
        if int(workers) < 1:
            raise UsageError(f"Worker count must be positive, got {workers}.")
        _engine_limits["workers"] = int(workers)
    logging.debug(f"Groebner engine limits: {_engine_limits}")


def get_engine_limits():
    return dict(_engine_limits)


# --- Raw dict-level kernels ---

def _neg_key(key, m):
    return tuple([-k for k in key(m)])


def _reduce_terms(terms, reducers, key, p, quotients=None):
    """
    Fully reduces a term dict by reducers [(lm, lc_inverse, terms), ...].
    When several reducers divide a monomial, the lowest index is used.
    If `quotients` is a list of dicts, cofactors are accumulated into it.
    """
    rest = dict(terms)
    heap = [(_neg_key(key, m), m) for m in rest]
    heapq.heapify(heap)
    remainder = {}
    while heap:
        _, m = heapq.heappop(heap)
        c = rest.pop(m, 0)
        if not c:
            continue
        for idx, (lm, inv, g) in enumerate(reducers):
            if monomial_divides(lm, m):
                q = monomial_quotient(m, lm)
                factor = c * inv % p
                if quotients is not None:
                    qd = quotients[idx]
                    qd[q] = (qd.get(q, 0) + factor) % p
                for gm, gc in g.items():
                    if gm == lm:
                        continue
                    t = monomial_mul(gm, q)
                    old = rest.get(t)
                    val = ((old or 0) - factor * gc) % p
                    if val:
                        rest[t] = val
                        if old is None:
                            heapq.heappush(heap, (_neg_key(key, t), t))
                    elif old is not None:
                        del rest[t]
                break
        else:
            remainder[m] = c
    return remainder


def _leading(terms, key):
    return max(terms, key=key)


def _make_reducer(terms, key, p):
    lm = _leading(terms, key)
    return lm, pow(terms[lm], -1, p), terms


def _monic_terms(terms, key, p):
    lm = _leading(terms, key)
    inv = pow(terms[lm], -1, p)
    return {m: c * inv % p for m, c in terms.items()}


def _spoly_terms(gi, gj, lmi, lmj, p):
    lcm = monomial_lcm(lmi, lmj)
    qi = monomial_quotient(lcm, lmi)
    qj = monomial_quotient(lcm, lmj)
    out = {}
    for m, c in gi.items():
        if m != lmi:
            out[monomial_mul(m, qi)] = c
    for m, c in gj.items():
        if m == lmj:
            continue
        t = monomial_mul(m, qj)
        v = (out.get(t, 0) - c) % p
        if v:
            out[t] = v
        else:
            out.pop(t, None)
    return out


def _update_pairs(lms, pairs, new_lm, key):
    """
    Gebauer-Moeller update for adding the element with leading monomial new_lm
    at index len(lms). `pairs` maps (i, j) -> lcm.
    """
    new_index = len(lms)
    kept = {}
    for (i, j), lcm in pairs.items():
        if (not monomial_divides(new_lm, lcm)
                or lcm == monomial_lcm(lms[i], new_lm)
                or lcm == monomial_lcm(lms[j], new_lm)):
            kept[(i, j)] = lcm

    by_lcm = {}
    for i, lm in enumerate(lms):
        by_lcm.setdefault(monomial_lcm(lm, new_lm), []).append(i)
    minimal = []
    for lcm in sorted(by_lcm, key=key):
        if all(not monomial_divides(other, lcm) for other in minimal):
            minimal.append(lcm)
    for lcm in minimal:
        owners = by_lcm[lcm]
        if not any(lcm == monomial_mul(lms[i], new_lm) for i in owners):
            kept[(min(owners), new_index)] = lcm
    return kept


# --- Public API ---

class GroebnerBasis:
    """
    A reduced Groebner basis: monic, interreduced, sorted by leading
    monomial (largest first).

    Args:
        ring (PolyRing): The ambient ring.
        generators (list of Polynomial): Basis elements.
        order (MonomialOrder): The order the basis is reduced for.
    """
    def __init__(self, ring, generators, order):
        self.ring = ring
        self.order = order
        self.generators = tuple(generators)
        self._reducers = [_make_reducer(g.term_dict(), order.key, ring.p) for g in self.generators]

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __getitem__(self, i):
        return self.generators[i]

    def leading_monomials(self):
        return [r[0] for r in self._reducers]

    def is_zero_ideal(self):
        return not self.generators

    def is_unit_ideal(self):
        return any(not any(lm) for lm in self.leading_monomials())

    def reduce(self, f):
        """Normal form of f modulo this basis."""
        from polynomial import Polynomial
        if f.ring != self.ring:
            raise UsageError("Polynomial and basis live in different rings.")
        if not self._reducers:
            return f
        rem = _reduce_terms(f.term_dict(), self._reducers, self.order.key, self.ring.p)
        return Polynomial._raw(self.ring, rem)

    def contains(self, f):
        return self.reduce(f).is_zero()

    def __eq__(self, other):
        return (isinstance(other, GroebnerBasis) and self.ring == other.ring
                and self.order == other.order and self.generators == other.generators)

    def __hash__(self):
        return hash((self.ring, self.order, self.generators))

    def __repr__(self):
        return f"GroebnerBasis({[str(g) for g in self.generators]}, order={self.order.kind})"


def _check_basis(basis, ring):
    for g in basis:
        if g.ring != ring:
            raise UsageError("Basis elements live in different rings.")
        if g.is_zero():
            raise UsageError("Division by a basis containing the zero polynomial.")


def normal_form(f, basis, order=None):
    """
    Remainder of f on full multivariate division by `basis`.

    Args:
        f (Polynomial): Dividend.
        basis (list of Polynomial): Nonzero divisors in f's ring.
        order (MonomialOrder, optional): Defaults to the ring's working order.

    Returns:
        Polynomial: no monomial of it is divisible by a leading monomial of basis.
    """
    return divide(f, basis, order)[1]


def divide(f, basis, order=None):
    """
    Multivariate division of f by basis.

    Returns:
        tuple: (list of quotient Polynomials, remainder Polynomial) with
            f = sum(q_i * b_i) + remainder.
    """
    from polynomial import Polynomial
    ring = f.ring
    basis = list(basis)
    _check_basis(basis, ring)
    order = order or ring.work_order
    reducers = [_make_reducer(g.term_dict(), order.key, ring.p) for g in basis]
    quotients = [{} for _ in basis]
    rem = _reduce_terms(f.term_dict(), reducers, order.key, ring.p, quotients)
    return ([Polynomial(ring, q) for q in quotients], Polynomial._raw(ring, rem))


def s_polynomial(f, g, order=None):
    """S-polynomial of two nonzero polynomials (computed from their monic forms)."""
    from polynomial import Polynomial
    order = order or f.ring.work_order
    key, p = order.key, f.ring.p
    fi = _monic_terms(f.term_dict(), key, p)
    gj = _monic_terms(g.term_dict(), key, p)
    return Polynomial._raw(f.ring, _spoly_terms(fi, gj, _leading(fi, key), _leading(gj, key), p))


def _minimalize(elements, key):
    chosen = []
    for lm, terms in sorted(elements, key=lambda e: key(e[0])):
        if all(not monomial_divides(other, lm) for other, _ in chosen):
            chosen.append((lm, terms))
    return chosen


def _interreduce(elements, key, p):
    reduced = []
    for idx, (lm, terms) in enumerate(elements):
        others = [(olm, pow(ot[olm], -1, p), ot) for k, (olm, ot) in enumerate(elements) if k != idx]
        tail = {m: c for m, c in terms.items() if m != lm}
        rest = _reduce_terms(tail, others, key, p) if others else tail
        rest[lm] = terms[lm]
        reduced.append((lm, rest))
    return reduced


def buchberger(gens, order=None, ring=None):
    """
    Reduced Groebner basis of the ideal generated by gens.

    Pairs are chosen by smallest lcm degree, ties broken by index; pairs are
    skipped by the coprime and chain criteria.

    Args:
        gens (iterable of Polynomial): Generators in one ring; zeros are dropped.
        order (MonomialOrder, optional): Defaults to the ring's working order.
        ring (PolyRing, optional): Needed only when gens is empty.

    Returns:
        GroebnerBasis: empty for the zero ideal.

    Raises:
        CapExceededError: if a new basis element exceeds the degree guard.
    """
    from polynomial import Polynomial
    gens = list(gens)
    if ring is None:
        if not gens:
            raise UsageError("An empty generator list needs an explicit ring.")
        ring = gens[0].ring
    for g in gens:
        if g.ring != ring:
            raise UsageError("Generators live in different rings.")
    order = order or ring.work_order
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return GroebnerBasis(ring, [], order)
    key, p = order.key, ring.p
    guard = _engine_limits["degree_guard"]
    workers = _engine_limits["workers"]

    unit = (0,) * ring.nvars
    lms, elems, pairs = [], [], {}

    def add(terms):
        nonlocal pairs
        terms = _monic_terms(terms, key, p)
        lm = _leading(terms, key)
        degree = max(sum(m) for m in terms)
        if degree > guard:
            logging.warning(f"Buchberger: basis element of degree {degree} exceeds guard {guard}.")
            raise CapExceededError(f"Groebner basis element degree {degree} exceeds the degree guard {guard}.",
                                   limit=guard, observed=degree)
        pairs = _update_pairs(lms, pairs, lm, key)
        lms.append(lm)
        elems.append(terms)
        return lm

    for g in gens:
        if add(g.term_dict()) == unit:
            return GroebnerBasis(ring, [ring.one()], order)

    def pair_key(pair):
        return (sum(pairs[pair]), pair[0], pair[1])

    def reduce_pair(pair, reducers):
        i, j = pair
        s = _spoly_terms(elems[i], elems[j], lms[i], lms[j], p)
        return _reduce_terms(s, reducers, key, p) if s else s

    reduced_pairs = 0
    executor = ThreadPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        while pairs:
            if executor is None:
                batch = [min(pairs, key=pair_key)]
            else:
                low = min(sum(lcm) for lcm in pairs.values())
                batch = sorted((pr for pr, lcm in pairs.items() if sum(lcm) == low), key=pair_key)
            for pr in batch:
                del pairs[pr]
            reducers = [(lm, 1, t) for lm, t in zip(lms, elems)]
            if executor is None:
                results = [reduce_pair(pr, reducers) for pr in batch]
            else:
                results = list(executor.map(lambda pr: reduce_pair(pr, reducers), batch))
            reduced_pairs += len(batch)
            for r in results:
                if r and executor is not None:
                    r = _reduce_terms(r, [(lm, 1, t) for lm, t in zip(lms, elems)], key, p)
                if r:
                    if add(r) == unit:
                        logging.debug("Buchberger: reached the unit ideal.")
                        return GroebnerBasis(ring, [ring.one()], order)
    finally:
        if executor is not None:
            executor.shutdown(wait=True)

    basis = _interreduce(_minimalize(list(zip(lms, elems)), key), key, p)
    basis.sort(key=lambda e: key(e[0]), reverse=True)
    logging.debug(f"Buchberger: {len(gens)} generators, {reduced_pairs} pairs reduced, "
                  f"{len(elems)} intermediate elements, {len(basis)} in the reduced basis.")
    return GroebnerBasis(ring, [Polynomial._raw(ring, t) for _, t in basis], order)


def is_groebner(basis, order=None):
    """True when every S-polynomial of the basis reduces to zero."""
    basis = [g for g in basis if not g.is_zero()]
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            if not normal_form(s_polynomial(basis[i], basis[j], order), basis, order).is_zero():
                return False
    return True


def ideal_membership(f, ideal):
    """True iff f reduces to zero modulo the reduced Groebner basis of `ideal`."""
    return ideal.groebner().contains(f)


def ideal_equal(first, second, order=None):
    """True iff both ideals have the same reduced Groebner basis under `order`."""
    if first.ring != second.ring:
        raise UsageError("Ideals live in different rings.")
    order = order or first.ring.work_order
    return first.groebner(order).generators == second.groebner(order).generators
