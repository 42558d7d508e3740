#
# File: monomial_order.py
# Version: 1.1.0
#
# Description: Monomials as dense exponent tuples and the monomial orders used
#              across the toolkit: lex and graded reverse lex under an
#              arbitrary variable priority, and block elimination orders.
#
# Changelog:
# - v1.1.0: Orders compile to an integer sort key so Groebner reduction can
#           keep monomials in a heap.
# - v1.0.0: Initial version.
#
from errors import UsageError

__version__ = "1.1.0"

LEX = "lex"
GREVLEX = "grevlex"
ELIMINATION = "elimination"
ORDER_KINDS = (LEX, GREVLEX, ELIMINATION)


# --- Monomial helpers (a monomial is a tuple of nonnegative ints) ---

def monomial_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def monomial_divides(a, b):
    """True when a divides b."""
    return all(x <= y for x, y in zip(a, b))


def monomial_quotient(b, a):
    """b / a, assuming a divides b."""
    return tuple(y - x for x, y in zip(a, b))


def monomial_lcm(a, b):
    return tuple(x if x >= y else y for x, y in zip(a, b))


def monomial_degree(a):
    return sum(a)


def monomial_power(a, k):
    return tuple(x * k for x in a)


def monomials_coprime(a, b):
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def support_mask(a):
    """Bitmask of the variables occurring in a."""
    mask = 0
    for i, e in enumerate(a):
        if e:
            mask |= 1 << i
    return mask


class MonomialOrder:
    """
    A monomial order on a ring with `nvars` variables.

    Args:
        kind (str): 'lex', 'grevlex' or 'elimination'.
        nvars (int): Number of ring variables.
        priority (sequence of int, optional): Variable indices, highest first.
            Defaults to the ring's own variable order.
        eliminate (iterable of int, optional): For 'elimination', the block of
            variable indices that is eliminated. Both blocks are compared by
            grevlex under `priority`.
    """
    def __init__(self, kind, nvars, priority=None, eliminate=None):
        if kind not in ORDER_KINDS:
            raise UsageError(f"Unknown monomial order '{kind}'. Choose one of {', '.join(ORDER_KINDS)}.")
        if priority is None:
            priority = range(nvars)
        priority = tuple(priority)
        if sorted(priority) != list(range(nvars)):
            raise UsageError(f"Priority {priority} is not a permutation of {nvars} variables.")
        if kind == ELIMINATION:
            if not eliminate:
                raise UsageError("An elimination order needs a nonempty block of variables.")
            eliminate = frozenset(eliminate)
            if not eliminate <= set(range(nvars)):
                raise UsageError("Elimination block refers to unknown variables.")
        else:
            eliminate = frozenset()

        self.kind = kind
        self.nvars = nvars
        self.priority = priority
        self.eliminate = eliminate
        self.key = self._compile()

    def _compile(self):
        perm = self.priority
        if self.kind == LEX:
            return lambda e: tuple(e[i] for i in perm)

        if self.kind == GREVLEX:
            rev = perm[::-1]
            return lambda e: (sum(e),) + tuple(-e[i] for i in rev)

        head = tuple(i for i in perm if i in self.eliminate)
        tail = tuple(i for i in perm if i not in self.eliminate)
        head_rev, tail_rev = head[::-1], tail[::-1]

        def key(e):
            return ((sum(e[i] for i in head),) + tuple(-e[i] for i in head_rev)
                    + (sum(e[i] for i in tail),) + tuple(-e[i] for i in tail_rev))
        return key

    @property
    def name(self):
        return self.kind

    def _check(self, m):
        if len(m) != self.nvars:
            raise UsageError(f"Monomial has {len(m)} exponents but the order expects {self.nvars}.")

    def compare(self, a, b):
        """Returns -1, 0 or 1 as a is less than, equal to or greater than b."""
        self._check(a)
        self._check(b)
        if a == b:
            return 0
        return 1 if self.key(a) > self.key(b) else -1

    def max(self, monomials):
        return max(monomials, key=self.key)

    def sorted(self, monomials, descending=True):
        return sorted(monomials, key=self.key, reverse=descending)

    def __eq__(self, other):
        return (isinstance(other, MonomialOrder) and self.kind == other.kind
                and self.nvars == other.nvars and self.priority == other.priority
                and self.eliminate == other.eliminate)

    def __hash__(self):
        return hash((self.kind, self.nvars, self.priority, self.eliminate))

    def __repr__(self):
        extra = f", eliminate={sorted(self.eliminate)}" if self.eliminate else ""
        return f"MonomialOrder({self.kind}, priority={list(self.priority)}{extra})"


def monomial_compare(a, b, order):
    """
    Compares two monomials of the same ring under `order`.

    Returns:
        int: -1, 0 or 1.
    """
    if len(a) != len(b):
        raise UsageError("Monomials come from rings of different sizes.")
    return order.compare(a, b)
