#
# File: polynomial.py
# Version: 1.2.0
#
# Description: Exact multivariate polynomials over F_p. A Polynomial is an
#              immutable map from exponent tuples to nonzero residues; the
#              ring's default order gives the canonical (printed) term order.
#
# Changelog:
# - v1.2.0: power() splits off the largest p-power of the exponent and applies
#           Frobenius termwise, which is exact in characteristic p.
# - v1.1.0: exact_divide() and substitute().
# - v1.0.0: Initial version.
#
from errors import UsageError, DomainError
from monomial_order import monomial_mul, monomial_divides, monomial_quotient, monomial_power

__version__ = "1.2.0"


class Polynomial:
    """
    An element of a PolyRing.

    Args:
        ring (PolyRing): The ambient ring.
        terms (dict or iterable of pairs): monomial -> integer coefficient.
            Coefficients are reduced mod p and zeros are dropped.
    """
    __slots__ = ("ring", "_terms", "_sorted")

    def __init__(self, ring, terms):
        p = ring.p
        n = ring.nvars
        items = terms.items() if isinstance(terms, dict) else terms
        clean = {}
        for m, c in items:
            m = tuple(m)
            if len(m) != n:
                raise UsageError(f"Monomial {m} does not have {n} exponents.")
            c = (clean.get(m, 0) + int(c)) % p
            if c:
                clean[m] = c
            else:
                clean.pop(m, None)
        self.ring = ring
        self._terms = clean
        self._sorted = None

    @classmethod
    def _raw(cls, ring, terms):
        # terms must already be reduced and free of zeros
        f = cls.__new__(cls)
        f.ring = ring
        f._terms = terms
        f._sorted = None
        return f

    # --- Introspection ---
    def term_dict(self):
        return dict(self._terms)

    def terms(self):
        """(monomial, coefficient) pairs, descending in the ring's default order."""
        if self._sorted is None:
            key = self.ring.default_order.key
            self._sorted = tuple(sorted(self._terms.items(), key=lambda t: key(t[0]), reverse=True))
        return self._sorted

    def monomials(self):
        return [m for m, _ in self.terms()]

    def coefficient(self, monomial):
        return self._terms.get(tuple(monomial), 0)

    def __len__(self):
        return len(self._terms)

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def is_constant(self):
        return not self._terms or (len(self._terms) == 1 and not any(next(iter(self._terms))))

    def total_degree(self):
        if not self._terms:
            return -1
        return max(sum(m) for m in self._terms)

    def is_homogeneous(self):
        degrees = {sum(m) for m in self._terms}
        return len(degrees) <= 1

    def variables_used(self):
        used = set()
        for m in self._terms:
            used.update(i for i, e in enumerate(m) if e)
        return [self.ring.variables[i] for i in sorted(used)]

    def as_variable(self):
        """The VariableId of a polynomial that is exactly one variable."""
        if len(self._terms) == 1:
            (m, c), = self._terms.items()
            if c == 1 and sum(m) == 1:
                return self.ring.variables[m.index(1)]
        raise UsageError(f"{self} is not a single variable.")

    # --- Arithmetic ---
    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring is not self.ring and other.ring != self.ring:
                raise UsageError("Polynomials live in different rings.")
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return self.ring.constant(other)
        if hasattr(other, "value") and hasattr(other, "p") and other.p == self.ring.p:
            return self.ring.constant(other.value)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        p = self.ring.p
        out = dict(self._terms)
        for m, c in other._terms.items():
            v = (out.get(m, 0) + c) % p
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Polynomial._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.p
        return Polynomial._raw(self.ring, {m: p - c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def scale(self, c):
        c = int(c) % self.ring.p
        if c == 0:
            return self.ring.zero()
        p = self.ring.p
        return Polynomial._raw(self.ring, {m: v * c % p for m, v in self._terms.items()})

    def mul_term(self, monomial, coeff=1):
        coeff %= self.ring.p
        if coeff == 0:
            return self.ring.zero()
        p = self.ring.p
        return Polynomial._raw(self.ring, {monomial_mul(m, monomial): c * coeff % p
                                           for m, c in self._terms.items()})

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not self._terms or not other._terms:
            return self.ring.zero()
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        p = self.ring.p
        out = {}
        get = out.get
        for mb, cb in b.items():
            for ma, ca in a.items():
                m = tuple([x + y for x, y in zip(ma, mb)])
                out[m] = get(m, 0) + ca * cb
        result = {}
        for m, c in out.items():
            c %= p
            if c:
                result[m] = c
        return Polynomial._raw(self.ring, result)

    __rmul__ = __mul__

    def frobenius(self, e=1):
        """f^(p^e), computed termwise since c^p = c in F_p."""
        q = self.ring.p ** e
        return Polynomial._raw(self.ring, {monomial_power(m, q): c for m, c in self._terms.items()})

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise UsageError(f"Exponent must be a nonnegative integer, got {k!r}.")
        if k == 0:
            return self.ring.one()
        p = self.ring.p
        v = 0
        while k % p == 0:
            k //= p
            v += 1
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result.frobenius(v) if v else result

    # --- Orders ---
    def leading_term(self, order=None):
        """
        The order-maximal monomial with its coefficient.

        Returns:
            tuple: (monomial tuple, FieldElement)
        """
        if not self._terms:
            raise DomainError("The zero polynomial has no leading term.")
        order = order or self.ring.default_order
        if order.nvars != self.ring.nvars:
            raise UsageError("Order belongs to a ring of a different size.")
        m = max(self._terms, key=order.key)
        return m, self.ring.field(self._terms[m])

    def leading_monomial(self, order=None):
        return self.leading_term(order)[0]

    def leading_coefficient(self, order=None):
        return self.leading_term(order)[1]

    def monic(self, order=None):
        if not self._terms:
            return self
        lc = self.leading_term(order)[1]
        return self.scale(lc.inverse().value)

    def exact_divide(self, divisor):
        """
        The quotient q with self = q * divisor.

        Raises:
            DomainError: if divisor is zero or does not divide self.
        """
        divisor = self._coerce(divisor)
        if divisor is None or not divisor:
            raise DomainError("Division by the zero polynomial.")
        order = self.ring.work_order
        lm, lc = divisor.leading_term(order)
        inv = lc.inverse().value
        p = self.ring.p
        rest = dict(self._terms)
        quotient = {}
        while rest:
            m = max(rest, key=order.key)
            if not monomial_divides(lm, m):
                raise DomainError(f"{divisor} does not divide {self}.")
            q = monomial_quotient(m, lm)
            factor = rest[m] * inv % p
            quotient[q] = factor
            for dm, dc in divisor._terms.items():
                t = monomial_mul(dm, q)
                val = (rest.get(t, 0) - factor * dc) % p
                if val:
                    rest[t] = val
                else:
                    rest.pop(t, None)
        return Polynomial._raw(self.ring, quotient)

    # --- Ring maps ---
    def substitute(self, mapping, target=None):
        """
        Applies the ring homomorphism sending each variable to a polynomial.

        Args:
            mapping (dict): VariableId (or name) -> Polynomial (or int).
                Variables that do not occur in self may be left out.
            target (PolyRing, optional): Codomain; defaults to the ring of the
                first image polynomial, or self.ring.

        Raises:
            UsageError: if a variable of self is unmapped or images disagree on
                their ring.
        """
        images = {}
        for var, img in mapping.items():
            images[self.ring.index_of(var)] = img
        if target is None:
            target = next((img.ring for img in images.values() if isinstance(img, Polynomial)), self.ring)
        for i, img in list(images.items()):
            if isinstance(img, Polynomial):
                if img.ring != target:
                    raise UsageError("Substitution images live in different rings.")
            else:
                images[i] = target.constant(int(img))

        used = {i for m in self._terms for i, e in enumerate(m) if e}
        missing = [str(self.ring.variables[i]) for i in sorted(used - set(images))]
        if missing:
            raise UsageError(f"Substitution leaves variables unmapped: {', '.join(missing)}.")

        powers = {}
        result = target.zero()
        for m, c in self._terms.items():
            term = target.constant(c)
            for i, e in enumerate(m):
                if e:
                    key = (i, e)
                    if key not in powers:
                        powers[key] = images[i] ** e
                    term = term * powers[key]
            result = result + term
        return result

    # --- Identity ---
    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self._terms == other._terms
        if isinstance(other, int) and not isinstance(other, bool):
            return self._terms == self.ring.constant(other)._terms
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, frozenset(self._terms.items())))

    def __str__(self):
        from poly_text import format_polynomial
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({self})"


# --- Functional forms ---

def add(f, g):
    return f + g


def mul(f, g):
    return f * g


def scale(c, f):
    return f.scale(c)


def power(f, k):
    return f ** k


def leading_term(f, order=None):
    return f.leading_term(order)


def substitute(f, mapping, target=None):
    return f.substitute(mapping, target)


def product(polys, ring=None):
    """Product of a sequence of polynomials (the empty product is 1 in `ring`)."""
    polys = list(polys)
    if not polys:
        if ring is None:
            raise UsageError("Empty product needs an explicit ring.")
        return ring.one()
    result = polys[0]
    for f in polys[1:]:
        result = result * f
    return result
