#
# File: fcriteria.py
# Version: 1.4.0
#
# Description: F-singularity certificates in characteristic p. Fedder ideals
#              (I^[q] : I), F-purity verdicts, the Glassbrenner witness
#              condition s*(I^[q] : I) ⊄ m^[q], the containment shortcut
#              a^[p] : a ⊆ I^[p] : I for complete intersections a inside I,
#              and the three initial-monomial checks for determinantal rings,
#              residual intersections of the maximal ideal and generic links
#              of determinantal rings.
#
#              Certificates never claim a negative from a bounded search:
#              a missing witness at a fixed e is 'inconclusive', except for
#              complete intersections where e = 1 decides F-purity.
#
# Changelog:
# - v1.4.0: glassbrenner_witness scans the full Fedder ideal when the shortcut
#           finds nothing. The implicit a shortcut is certified unless the
#           presentation is a generic link.
# - v1.3.0: Explicit shortcuts on link presentations (beta sequences) are
#           certified through containment_shortcut; closed-form witnesses
#           are public helpers.
# - v1.2.0: Witness conditions for link presentations decide s ∉ J through
#           a, and use a as the containment shortcut.
# - v1.1.0: Term cap on explicit expansions; cap exhaustion is inconclusive.
# - v1.0.0: Initial version.
#
import logging

from errors import UsageError, CapExceededError
from monomial_order import LEX
from poly_text import format_monomial, format_polynomial
from polynomial import product
from ideal_ops import Ideal, bracket_power, colon, height, is_regular_sequence, not_in_bracket_max
from determinantal import GenericMatrix, staircase_minors, determinantal_generic_link
from linkage import LinkPresentation, GENERIC_LINK, maximal_ideal_link, beta_sequence

__version__ = "1.4.0"

# Certificate kinds
FEDDER_FPURE = "fedder-fpure"
GLASSBRENNER_WITNESS = "glassbrenner-witness"
CONTAINMENT = "containment"
LEMMA_CHECK = "lemma-check"

# Verdicts
ESTABLISHED = "established"
WITNESS_FOUND = "witness-found"
INCONCLUSIVE = "inconclusive"
REFUTED = "refuted"
POSITIVE_VERDICTS = (ESTABLISHED, WITNESS_FOUND)

DEFAULT_TERM_CAP = 5_000_000
WITNESS_TEXT_LIMIT = 64

CONDITION_ONE_NOTE = ("Only the witness condition is checked; regularity of the localization at s "
                      "(the other half of the strong F-regularity criterion) is not.")
FINITE_FIELD_NOTE = ("Coefficients are in the finite field F_p; reading the verdict as strong "
                     "F-regularity formally assumes an infinite F-finite residue field.")

_term_cap = {"value": DEFAULT_TERM_CAP}


def set_term_cap(cap):
    if int(cap) < 1:
        raise UsageError(f"Term cap must be positive, got {cap}.")
    _term_cap["value"] = int(cap)


def get_term_cap():
    return _term_cap["value"]


class Certificate:
    """
    A machine-checkable verdict.

    Args:
        kind (str): One of the certificate kinds.
        verdict (str): established, witness-found, inconclusive or refuted.
        ring (PolyRing): Ring of the witness polynomial.
        q (int): Bracket exponent p^e the witness is measured against.
        parameters (dict): Inputs echoed into reports.
        witness_polynomial (Polynomial, optional): Polynomial the witness
            monomial is a term of.
        witness_monomial (tuple, optional): Exponent vector.
        m_slots (list of int, optional): Variables of the maximal ideal m
            (all ring variables by default).
        notes (list of str, optional): Caveats and route information.
        stats (dict, optional): Term counts and similar figures.
        rebuild (callable, optional): Recomputes the witness polynomial from
            scratch for revalidate().
        recheck (callable, optional): Recomputes a witness-free verdict.
    """
    def __init__(self, kind, verdict, ring, q, parameters, witness_polynomial=None,
                 witness_monomial=None, m_slots=None, notes=None, stats=None,
                 rebuild=None, recheck=None, closed_form=None):
        self.kind = kind
        self.verdict = verdict
        self.ring = ring
        self.q = q
        self.parameters = dict(parameters)
        self.witness_polynomial = witness_polynomial
        self.witness_monomial = tuple(witness_monomial) if witness_monomial is not None else None
        self.m_slots = list(range(ring.nvars)) if m_slots is None else list(m_slots)
        self.notes = list(notes or [])
        self.stats = dict(stats or {})
        self.closed_form = tuple(closed_form) if closed_form is not None else None
        self._rebuild = rebuild
        self._recheck = recheck

    @property
    def is_positive(self):
        return self.verdict in POSITIVE_VERDICTS

    def witness_text(self):
        if self.witness_monomial is None:
            return None
        return format_monomial(self.ring, self.witness_monomial)

    def revalidate(self):
        """
        Re-checks a positive verdict from scratch: the witness monomial has
        every m-exponent at most q-1 and is a term of the (recomputed)
        polynomial. Witness-free certificates rerun their membership checks.
        """
        if not self.is_positive:
            return False
        if self.witness_monomial is None:
            return bool(self._recheck and self._recheck())
        poly = self._rebuild() if self._rebuild else self.witness_polynomial
        if poly is None:
            return False
        if any(self.witness_monomial[i] > self.q - 1 for i in self.m_slots):
            return False
        return poly.coefficient(self.witness_monomial) != 0

    def to_dict(self):
        data = {
            "kind": self.kind,
            "verdict": self.verdict,
            "parameters": self.parameters,
            "witness": None,
            "notes": self.notes,
            "stats": self.stats,
        }
        if self.witness_monomial is not None:
            poly = self.witness_polynomial
            witness = {
                "monomial": self.witness_text(),
                "exponent_bound": self.q - 1,
                "polynomial_terms": len(poly) if poly is not None else None,
                "polynomial": (format_polynomial(poly)
                               if poly is not None and len(poly) <= WITNESS_TEXT_LIMIT else None),
            }
            if self.closed_form is not None:
                witness["closed_form"] = format_monomial(self.ring, self.closed_form)
                witness["matches_closed_form"] = self.witness_monomial == self.closed_form
            data["witness"] = witness
        return data

    def __repr__(self):
        return f"Certificate({self.kind}, {self.verdict}, witness={self.witness_text()})"


# --- Helpers ---

def _m_slots(ring, m):
    """Variable positions of a monomial maximal ideal m (all variables when None)."""
    if m is None:
        return list(range(ring.nvars))
    if isinstance(m, Ideal):
        if m.ring != ring:
            raise UsageError("m must live in the same ring as the ideal.")
        try:
            return sorted({ring.index_of(g.as_variable()) for g in m.generators})
        except UsageError:
            raise UsageError("m must be generated by variables.") from None
    return sorted({ring.index_of(v) for v in m})


def _q_for(ring, e):
    if not isinstance(e, int) or e < 1:
        raise UsageError(f"Frobenius exponent e must be a positive integer, got {e!r}.")
    return ring.p ** e


def expand_product(factors, ring, cap=None):
    """
    Multiplies factors left to right, aborting once an intermediate product
    has more than `cap` terms.

    Raises:
        CapExceededError
    """
    cap = cap or get_term_cap()
    result = ring.one()
    for f in factors:
        result = result * f
        if len(result) > cap:
            raise CapExceededError(f"Expansion exceeded the term cap ({len(result)} > {cap}).",
                                   limit=cap, observed=len(result))
    return result


def _lemma_product(multiplier, factors, k, cap):
    # multiplier * (prod factors)^k, expanding factor by factor
    ring = multiplier.ring
    base = expand_product(factors, ring, cap)
    return expand_product([base] * k + [multiplier], ring, cap)


def _scan_generators(gens, multiplier, slots, q, order):
    """First (polynomial, monomial) with multiplier*g ∉ m^[q], or (None, None)."""
    for g in gens:
        candidate = g if multiplier is None else multiplier * g
        found, mono = not_in_bracket_max(candidate, [candidate.ring.variables[i] for i in slots], q, order)
        if found:
            return candidate, mono
    return None, None


# --- Fedder ideals and F-purity ---

def fedder_ideal(ideal, e=1):
    """I^[q] : I with q = p^e."""
    if isinstance(ideal, LinkPresentation):
        ideal = ideal.link_ideal()
    q = _q_for(ideal.ring, e)
    if not ideal.is_homogeneous():
        logging.warning("fedder_ideal: the ideal is not homogeneous; the criterion assumes it is.")
    return colon(bracket_power(ideal, q), ideal)


def fedder_fpure(ideal, m=None, e=1, subideal=None):
    """
    Fedder's criterion at a fixed e: R/I is F-pure when (I^[q] : I) ⊄ m^[q].

    Args:
        ideal (Ideal or LinkPresentation): I (or the link J of a presentation).
        m (Ideal or variables, optional): Homogeneous maximal ideal.
        e (int): Frobenius exponent.
        subideal (Ideal or list, optional): A complete intersection a ⊆ I of
            length height(I). Then (prod a)^(q-1) ∈ a^[q] : a ⊆ I^[q] : I is
            tried first. Link presentations use their own a by default.

    Returns:
        Certificate: established with a witness, or inconclusive.
    """
    link = ideal if isinstance(ideal, LinkPresentation) else None
    ring = ideal.ring
    q = _q_for(ring, e)
    slots = _m_slots(ring, m)
    params = {"p": ring.p, "e": e, "variables": ring.nvars}
    notes = []

    if link is not None and subideal is None:
        subideal = link.a_ideal
    if subideal is not None:
        a = subideal if isinstance(subideal, Ideal) else Ideal(ring, subideal)
        a_gens = list(a.generators)
        if link is not None:
            if a.generators != link.a_ideal.generators and not all(link.contains(g) for g in a_gens):
                raise UsageError("The subideal is not contained in the link ideal.")
            target_height = link.rows
        else:
            if not a.is_subset_of(ideal):
                raise UsageError("The subideal is not contained in the ideal.")
            target_height = height(ideal)
        params["route"] = "complete-intersection subideal"
        params["subideal_generators"] = len(a_gens)
        if len(a_gens) == target_height and is_regular_sequence(a_gens, ring):
            candidate = product(a_gens, ring) ** (q - 1)
            found, mono = not_in_bracket_max(candidate, [ring.variables[i] for i in slots], q)
            if found:
                logging.info(f"fedder_fpure: established through a subideal of {len(a_gens)} generators.")
                return Certificate(FEDDER_FPURE, ESTABLISHED, ring, q, params, candidate, mono, slots,
                                   notes + ["(prod a)^(q-1) lies in a^[q]:a, which is contained in I^[q]:I."],
                                   {"terms": len(candidate)},
                                   rebuild=lambda: product(a_gens, ring) ** (q - 1))
            notes.append("The subideal candidate lies in m^[q]; falling back to the full Fedder ideal.")
        else:
            notes.append("The subideal is not a regular sequence of length height(I); "
                         "falling back to the full Fedder ideal.")

    params["route"] = "fedder ideal"
    fedder = fedder_ideal(ideal, e)
    gens = list(fedder.generators)
    poly, mono = _scan_generators(gens, None, slots, q, None)
    stats = {"fedder_generators": len(gens)}
    if poly is not None:
        return Certificate(FEDDER_FPURE, ESTABLISHED, ring, q, params, poly, mono, slots, notes, stats)
    notes.append(f"No generator of I^[q]:I avoids m^[q] at e={e}; this alone does not refute F-purity.")
    return Certificate(FEDDER_FPURE, INCONCLUSIVE, ring, q, params, notes=notes, stats=stats, m_slots=slots)


def fedder_ci_fast(polys, p=None, m=None, assume_regular=False):
    """
    F-purity of a complete intersection R/(f_1..f_c): decided exactly by
    (f_1...f_c)^(p-1) ∉ m^[p].

    Raises:
        UsageError: if the polynomials are not a regular sequence (unless
            assume_regular is set).
    """
    polys = list(polys)
    if not polys:
        raise UsageError("fedder_ci_fast needs at least one polynomial.")
    ring = polys[0].ring
    if p is not None and p != ring.p:
        raise UsageError(f"p={p} does not match the ring characteristic {ring.p}.")
    if not assume_regular and not is_regular_sequence(polys, ring):
        raise UsageError("The polynomials do not form a regular sequence.")
    slots = _m_slots(ring, m)
    q = ring.p
    candidate = product(polys, ring) ** (q - 1)
    found, mono = not_in_bracket_max(candidate, [ring.variables[i] for i in slots], q)
    params = {"p": ring.p, "e": 1, "variables": ring.nvars, "route": "complete intersection",
              "generators": len(polys)}
    if found:
        return Certificate(FEDDER_FPURE, ESTABLISHED, ring, q, params, candidate, mono, slots,
                           stats={"terms": len(candidate)},
                           rebuild=lambda: product(polys, ring) ** (q - 1))
    return Certificate(FEDDER_FPURE, REFUTED, ring, q, params, m_slots=slots,
                       notes=["(prod f)^(p-1) lies in m^[p]; for a complete intersection this decides "
                              "that the quotient is not F-pure."],
                       stats={"terms": len(candidate)})


def _containment_memberships(a_gens, target, q):
    """Checks (prod a)^(q-1) ∈ T^[q] : T and a^[q] ⊆ T^[q] via products with T's generators."""
    ring = target.ring
    t_bracket = bracket_power(target, q)
    f = product(a_gens, ring) ** (q - 1)
    main = all(t_bracket.contains(f * g) for g in target.generators)
    powers = all(t_bracket.contains(g ** q) for g in a_gens)
    return main, powers


def containment_shortcut(a, ideal, p=None, e=1):
    """
    Certifies a^[q] : a ⊆ I^[q] : I generator by generator, using
    a^[q] : a = (prod a)^(q-1) + a^[q] for a complete intersection a.

    Args:
        a (Ideal or list): Regular sequence inside I of length height(I).
        ideal (Ideal or LinkPresentation): I (or the link J).

    Raises:
        UsageError: if a ⊄ I, or a is not a regular sequence of length height(I).
    """
    link = ideal if isinstance(ideal, LinkPresentation) else None
    target = link.link_ideal() if link is not None else ideal
    ring = target.ring
    if p is not None and p != ring.p:
        raise UsageError(f"p={p} does not match the ring characteristic {ring.p}.")
    a = a if isinstance(a, Ideal) else Ideal(ring, a)
    a_gens = list(a.generators)
    q = _q_for(ring, e)
    params = {"p": ring.p, "e": e, "variables": ring.nvars, "a_generators": len(a_gens),
              "ideal_generators": len(target.generators)}

    if not a.is_subset_of(target):
        raise UsageError("containment_shortcut needs a ⊆ I.")
    if a_gens == list(target.generators):
        return Certificate(CONTAINMENT, ESTABLISHED, ring, q, params, notes=["a = I: the containment is reflexive."],
                           recheck=lambda: True)
    h = link.rows if link is not None else height(target)
    if len(a_gens) != h or not is_regular_sequence(a_gens, ring):
        raise UsageError(f"a must be a regular sequence of length height(I) = {h}.")

    main, powers = _containment_memberships(a_gens, target, q)
    params["height"] = h
    stats = {"product_in_fedder_ideal": main, "bracket_power_contained": powers}
    verdict = ESTABLISHED if main and powers else REFUTED

    def recheck():
        again = _containment_memberships(a_gens, target, q)
        return again[0] and again[1]

    return Certificate(CONTAINMENT, verdict, ring, q, params, stats=stats, recheck=recheck)


# --- Glassbrenner witness condition ---

def glassbrenner_witness(ideal, s, m=None, e=1, shortcut=None, fallback=True, order=None, prefer=None):
    """
    Searches a witness for s*(I^[q] : I) ⊄ m^[q].

    Args:
        ideal (Ideal or LinkPresentation): I, or a link whose J is used.
        s (Polynomial): Homogeneous element outside I.
        m (Ideal or variables, optional): Homogeneous maximal ideal.
        e (int): Frobenius exponent.
        shortcut (Ideal or list, optional): Complete intersection a ⊆ I of
            length height(I); s*(prod a)^(q-1) is tried first. Links use a.
        fallback (bool): Scan the generators of the full Fedder ideal when the
            shortcut finds nothing. With False the search stops at the shortcut.
        order (MonomialOrder, optional): Selects among qualifying monomials.
        prefer (tuple, optional): Monomial reported when it qualifies.

    Raises:
        UsageError: if s ∈ I, s is not homogeneous, or an explicit shortcut
            fails a^[q]:a ⊆ I^[q]:I.
    """
    link = ideal if isinstance(ideal, LinkPresentation) else None
    ring = ideal.ring
    if s.ring != ring:
        s = ring.lift(s)
    q = _q_for(ring, e)
    slots = _m_slots(ring, m)
    names = [ring.variables[i] for i in slots]
    if not s.is_homogeneous() or s.is_zero():
        raise UsageError("s must be a nonzero homogeneous polynomial.")
    if (link.contains(s) if link is not None else ideal.contains(s)):
        raise UsageError(f"s = {s} lies in the ideal.")

    params = {"p": ring.p, "e": e, "variables": ring.nvars, "s": format_polynomial(s)}
    notes = [CONDITION_ONE_NOTE, FINITE_FIELD_NOTE]

    implicit = link is not None and shortcut is None
    if implicit:
        shortcut = link.a_ideal
    if shortcut is not None:
        a = shortcut if isinstance(shortcut, Ideal) else Ideal(ring, shortcut)
        if implicit and link.kind == GENERIC_LINK:
            notes.append("J = a : I is linked to I by a, so a^[q]:a ⊆ J^[q]:J.")
        else:
            try:
                contained = containment_shortcut(a, ideal, e=e)
            except UsageError as err:
                if not implicit:
                    raise
                logging.info(f"glassbrenner_witness: a is not usable as a shortcut ({err}).")
                contained = None
            if contained is not None and contained.verdict == ESTABLISHED:
                notes.append("a^[q]:a ⊆ I^[q]:I was certified generator by generator.")
            elif not implicit:
                raise UsageError("The shortcut ideal does not satisfy a^[q]:a ⊆ I^[q]:I.")
            else:
                notes.append("a^[q]:a ⊆ J^[q]:J could not be certified; a was not used.")
                a = None
        if a is not None:
            params["route"] = "shortcut"
            a_gens = list(a.generators)

            def rebuild():
                return s * product(a_gens, ring) ** (q - 1)

            candidate = rebuild()
            found, mono = not_in_bracket_max(candidate, names, q, order, prefer)
            if found:
                return Certificate(GLASSBRENNER_WITNESS, WITNESS_FOUND, ring, q, params, candidate, mono, slots,
                                   notes, {"terms": len(candidate)}, rebuild=rebuild, closed_form=prefer)
            if not fallback:
                notes.append("s*(prod a)^(q-1) lies in m^[q]; the full Fedder ideal was not scanned.")
                return Certificate(GLASSBRENNER_WITNESS, INCONCLUSIVE, ring, q, params, m_slots=slots, notes=notes)
            notes.append("The shortcut candidate lies in m^[q]; scanning the full Fedder ideal.")

    params["route"] = "fedder ideal"
    gens = list(fedder_ideal(ideal, e).generators)
    stats = {"fedder_generators": len(gens)}
    for g in gens:
        candidate = s * g
        found, mono = not_in_bracket_max(candidate, names, q, order, prefer)
        if found:
            return Certificate(GLASSBRENNER_WITNESS, WITNESS_FOUND, ring, q, params, candidate, mono, slots,
                               notes, stats, closed_form=prefer)
    notes.append(f"No generator g of I^[q]:I gives s*g ∉ m^[q] at e={e}.")
    return Certificate(GLASSBRENNER_WITNESS, INCONCLUSIVE, ring, q, params, m_slots=slots, notes=notes, stats=stats)


# --- Lemma checks ---

def _lemma_certificate(lemma, params, ring, q, build, order, closed_form, notes=None):
    """Expands the lemma polynomial and certifies it avoids m^[q] (all variables)."""
    params = dict(params, lemma=lemma, variables=ring.nvars)
    notes = list(notes or [])
    try:
        poly = build()
    except CapExceededError as e:
        logging.warning(f"lemma check {lemma}: {e.message}")
        notes.append(f"Expansion stopped: {e.message}")
        return Certificate(LEMMA_CHECK, INCONCLUSIVE, ring, q, params, notes=notes,
                           stats={"term_cap": e.limit, "terms_at_abort": e.observed},
                           closed_form=closed_form)
    found, mono = not_in_bracket_max(poly, None, q, order, closed_form)
    stats = {"terms": len(poly)}
    if not found:
        notes.append("Every term of the expanded product lies in m^[p].")
        return Certificate(LEMMA_CHECK, REFUTED, ring, q, params, notes=notes, stats=stats, closed_form=closed_form)
    leading = poly.leading_monomial(order)
    stats["initial_monomial_is_closed_form"] = leading == closed_form
    if mono != closed_form:
        notes.append("The closed-form monomial does not occur; reporting the largest qualifying monomial.")
    return Certificate(LEMMA_CHECK, ESTABLISHED, ring, q, params, poly, mono, None, notes, stats,
                       rebuild=build, closed_form=closed_form)


def _check_prime(p):
    from prime_field import PrimeField
    PrimeField(p)


def determinantal_closed_form(ring, t, n, p, base=None):
    """
    Exponent vector of x[1,n] * prod_{0<=j-i<=n-t} x[i,j]^(p-1), optionally
    on top of `base`.
    """
    closed = list(base) if base is not None else [0] * ring.nvars
    closed[ring.index_of(f"x[1,{n}]")] += 1
    for i in range(1, t + 1):
        for j in range(1, n + 1):
            if 0 <= j - i <= n - t:
                closed[ring.index_of(f"x[{i},{j}]")] += p - 1
    return tuple(closed)


def residual_closed_form(ring, n, s, p, x_of=None):
    """Exponent vector of x_1 (x_2...x_n)^(p-1) prod_{-1<=i-j<=s-n} u[i,j]^(p-1)."""
    x_of = x_of or (lambda k: f"x[{k}]")
    closed = [0] * ring.nvars
    closed[ring.index_of(x_of(1))] += 1
    for k in range(2, n + 1):
        closed[ring.index_of(x_of(k))] += p - 1
    for i in range(1, s + 1):
        for j in range(1, n + 1):
            if -1 <= i - j <= s - n:
                closed[ring.index_of(f"u[{i},{j}]")] += p - 1
    return tuple(closed)


def lemma_check_det(t, n, p, term_cap=None):
    """
    x[1,n]*([1,t][2,t+1]...[n-t+1,n])^(p-1) ∉ m^[p] for the generic t x n
    matrix, with witness x[1,n] * prod_{0<=j-i<=n-t} x[i,j]^(p-1).

    Raises:
        UsageError: if t = 1 or n < t.
    """
    _check_prime(p)
    if t <= 1:
        raise UsageError("lemma_check_det needs t > 1.")
    if n < t:
        raise UsageError(f"lemma_check_det needs n >= t, got t={t}, n={n}.")
    matrix = GenericMatrix.generic(p, t, n, order=LEX)
    ring = matrix.ring
    stairs = staircase_minors(matrix)
    corner = matrix.entry(1, n)

    def build():
        return _lemma_product(corner, stairs, p - 1, term_cap)

    return _lemma_certificate("determinantal", {"t": t, "n": n, "p": p}, ring, p, build, ring.lex(),
                              determinantal_closed_form(ring, t, n, p))


def residual_priority(ring, n, s, x_of=None, u_symbol="u"):
    """
    Variable priority, highest first: u[i,j] by rows s down to 1, within a row
    u[i,i+1] first and then the other columns from n down to 1; then
    x_1 > ... > x_n.
    """
    x_of = x_of or (lambda k: f"x[{k}]")
    priority = []
    for i in range(s, 0, -1):
        row = []
        if i + 1 <= n:
            row.append(i + 1)
        row += [j for j in range(n, 0, -1) if j != i + 1]
        priority += [f"{u_symbol}[{i},{j}]" for j in row]
    priority += [x_of(k) for k in range(1, n + 1)]
    listed = set(ring.index_of(v) for v in priority)
    priority += [v for v in ring.variables if ring.index_of(v) not in listed]
    return priority


def lemma_check_residual(n, s, p, term_cap=None):
    """
    x_1*(beta_1...beta_s)^(p-1) ∉ n^[p] for the beta sequence of the generic
    s-residual intersection of (x_1..x_n), with witness
    x_1(x_2...x_n)^(p-1) prod_{-1<=i-j<=s-n} u[i,j]^(p-1).

    Raises:
        UsageError: if n = 1 or s < n.
    """
    _check_prime(p)
    if n <= 1:
        raise UsageError("lemma_check_residual needs n > 1.")
    if s < n:
        raise UsageError(f"lemma_check_residual needs s >= n, got n={n}, s={s}.")
    link = maximal_ideal_link(n, s, p)
    ring = link.ring
    order = ring.lex(residual_priority(ring, n, s))
    beta = beta_sequence(n, s, p, presentation=link)
    x1 = ring.var("x[1]")

    def build():
        return _lemma_product(x1, beta, p - 1, term_cap)

    return _lemma_certificate("residual", {"n": n, "s": s, "p": p}, ring, p, build, order,
                              residual_closed_form(ring, n, s, p))


def lemma_check_genlink(t, n, p, term_cap=None):
    """
    x[1,n]*(a_1...a_{n-t+1})^(p-1) ∉ m^[p] for the generic link of I_t(X),
    a_i = sum_j u[i,j]*Delta_j over the maximal minors in colex order, with
    witness x[1,n] prod u[i,k_i]^(p-1) prod_{0<=j-i<=n-t} x[i,j]^(p-1).

    For t = 1 that product lies in m^[p] by degree, and the certificate comes
    from the beta sequence of the same presentation (U is n x n there).
    Cap exhaustion returns an inconclusive certificate.
    """
    _check_prime(p)
    if not 1 <= t <= n:
        raise UsageError(f"lemma_check_genlink needs 1 <= t <= n, got t={t}, n={n}.")
    link = determinantal_generic_link(t, n, p)
    matrix = link.source_matrix
    ring = link.ring
    stair_idx = matrix.staircase_indices()
    rows = n - t + 1

    leading_u = [f"u[{i},{k}]" for i, k in enumerate(stair_idx, start=1)]
    other_u = [str(v) for v in link.U.variables() if str(v) not in leading_u]
    x_vars = [str(v) for v in matrix.variables()]
    order = ring.lex(leading_u + other_u + x_vars)

    closed = genlink_closed_form(link, t, n, p)

    corner = ring.lift(matrix.entry(1, n))
    a_gens = list(link.a_generators)
    params = {"t": t, "n": n, "p": p, "staircase_indices": stair_idx, "u_rows": rows}

    def build():
        return _lemma_product(corner, a_gens, p - 1, term_cap)

    cert = _lemma_certificate("generic-link", params, ring, p, build, order, closed)
    if t > 1 or cert.verdict != REFUTED:
        return cert

    # t = 1: I_1(X) is the maximal ideal of K[x[1,1..n]]
    x_of = lambda k: f"x[1,{k}]"
    beta = genlink_beta_shortcut(link, n, p)
    multiplier = ring.var(x_of(1))
    order = ring.lex(residual_priority(ring, n, n, x_of))
    notes = ["For t = 1 the product x[1,n]*(a_1...a_n)^(p-1) lies in m^[p] for degree reasons; "
             "certified instead through x[1,1]*(beta)^(p-1), beta the bilinear forms and det U "
             "(the link J = a + (det U) of the maximal ideal)."]

    def build_beta():
        return _lemma_product(multiplier, beta, p - 1, term_cap)

    params["route"] = "beta sequence"
    return _lemma_certificate("generic-link", params, ring, p, build_beta, order,
                              residual_closed_form(ring, n, n, p, x_of), notes)


def genlink_closed_form(link, t, n, p):
    """x[1,n] prod u[i,k_i]^(p-1) prod_{0<=j-i<=n-t} x[i,j]^(p-1), k_i the staircase positions."""
    ring = link.ring
    u_part = [0] * ring.nvars
    for i, k in enumerate(link.source_matrix.staircase_indices(), start=1):
        u_part[ring.index_of(f"u[{i},{k}]")] += p - 1
    return determinantal_closed_form(ring, t, n, p, base=u_part)


def genlink_beta_shortcut(link, n, p):
    """Beta sequence of the generic link of I_1(X) = (x[1,1], ..., x[1,n])."""
    if n == 1:
        return [link.U.entry(1, 1)]
    return beta_sequence(n, n, p, presentation=link)
