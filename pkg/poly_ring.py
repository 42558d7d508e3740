#
# File: poly_ring.py
# Version: 1.1.0
#
# Description: Variable identifiers and polynomial rings F_p[v_1, ..., v_n].
#              A ring owns its variable registry, its prime field and a
#              default monomial order; extending a ring by new variables
#              yields a new ring into which the old one injects by name.
#
# Changelog:
# - v1.1.0: Auxiliary variables (aux[k]) for elimination and Rabinowitsch tricks.
# - v1.0.0: Initial version.
#
import re

from errors import UsageError
from prime_field import PrimeField
from monomial_order import MonomialOrder, LEX, GREVLEX, ELIMINATION

__version__ = "1.1.0"

MATRIX_ENTRY = "matrix-entry"
LINK_ENTRY = "link-entry"
RESIDUAL_ENTRY = "residual-entry"
PLAIN = "plain"
AUXILIARY = "auxiliary"

_ROLE_BY_SYMBOL = {"x": MATRIX_ENTRY, "u": LINK_ENTRY, "w": RESIDUAL_ENTRY}
_VARIABLE_RE = re.compile(r"^([A-Za-z_][A-Za-z0-9_]*)(?:\[\s*(\d+)\s*(?:,\s*(\d+)\s*)?\])?$")


class VariableId:
    """
    A ring variable: a symbol plus zero, one or two integer indices.

    The role is implied by the textual form, so it survives printing and
    parsing: x[i,j] matrix entry, u[i,j] link entry, w[i,j] residual entry,
    aux[k] auxiliary, anything else (x[k], y, t1, ...) plain.
    """
    __slots__ = ("symbol", "indices")

    def __init__(self, symbol, indices=()):
        if isinstance(indices, int):
            indices = (indices,)
        indices = tuple(int(i) for i in indices)
        if len(indices) > 2 or any(i < 0 for i in indices):
            raise UsageError(f"Bad variable indices {indices} for '{symbol}'.")
        if not re.match(r"^[A-Za-z_][A-Za-z0-9_]*$", symbol):
            raise UsageError(f"Bad variable symbol '{symbol}'.")
        object.__setattr__(self, "symbol", symbol)
        object.__setattr__(self, "indices", indices)

    def __setattr__(self, name, value):
        raise AttributeError("VariableId is immutable.")

    @classmethod
    def parse(cls, text):
        m = _VARIABLE_RE.match(text.strip())
        if not m:
            raise UsageError(f"Cannot read a variable name from '{text}'.")
        symbol, i, j = m.groups()
        indices = tuple(int(v) for v in (i, j) if v is not None)
        return cls(symbol, indices)

    @classmethod
    def coerce(cls, value):
        if isinstance(value, VariableId):
            return value
        if isinstance(value, str):
            return cls.parse(value)
        raise UsageError(f"Cannot interpret {value!r} as a variable.")

    @property
    def role(self):
        if len(self.indices) == 2 and self.symbol in _ROLE_BY_SYMBOL:
            return _ROLE_BY_SYMBOL[self.symbol]
        if self.symbol == "aux" and len(self.indices) == 1:
            return AUXILIARY
        return PLAIN

    def __str__(self):
        if not self.indices:
            return self.symbol
        return f"{self.symbol}[{','.join(str(i) for i in self.indices)}]"

    def __repr__(self):
        return f"VariableId({str(self)!r})"

    def __eq__(self, other):
        return isinstance(other, VariableId) and self.symbol == other.symbol and self.indices == other.indices

    def __hash__(self):
        return hash((self.symbol, self.indices))


class PolyRing:
    """
    The polynomial ring F_p[variables].

    Args:
        p (int): Prime characteristic.
        variables (sequence): VariableId objects or their textual names.
        order (str or MonomialOrder, optional): Default order, used for the
            canonical printed form. 'lex' or 'grevlex' under the listed
            variable order. Defaults to 'grevlex'.
    """
    def __init__(self, p, variables, order=GREVLEX):
        self.field = PrimeField(p)
        self.p = p
        self.variables = tuple(VariableId.coerce(v) for v in variables)
        if len(set(self.variables)) != len(self.variables):
            raise UsageError("Ring variables must be distinct.")
        self.nvars = len(self.variables)
        self._index = {v: i for i, v in enumerate(self.variables)}

        if isinstance(order, MonomialOrder):
            if order.nvars != self.nvars:
                raise UsageError("Default order does not match the number of variables.")
            self.default_order = order
        else:
            self.default_order = self.order(order)
        self.work_order = self.grevlex()

    # --- Variables ---
    def index_of(self, var):
        """Position of a variable given as VariableId, name, or degree-one polynomial."""
        if isinstance(var, int) and not isinstance(var, bool):
            if not 0 <= var < self.nvars:
                raise UsageError(f"Variable index {var} out of range.")
            return var
        if hasattr(var, "as_variable"):
            var = var.as_variable()
        var = VariableId.coerce(var)
        try:
            return self._index[var]
        except KeyError:
            raise UsageError(f"Variable {var} is not in this ring.") from None

    def has_variable(self, var):
        try:
            self.index_of(var)
            return True
        except UsageError:
            return False

    def var(self, var):
        """The variable as a polynomial."""
        i = self.index_of(var)
        exps = [0] * self.nvars
        exps[i] = 1
        return self.monomial(tuple(exps))

    def gens(self):
        return [self.var(i) for i in range(self.nvars)]

    # --- Elements ---
    def zero(self):
        from polynomial import Polynomial
        return Polynomial(self, {})

    def one(self):
        return self.constant(1)

    def constant(self, c):
        from polynomial import Polynomial
        return Polynomial(self, {(0,) * self.nvars: c})

    def monomial(self, exps, coeff=1):
        from polynomial import Polynomial
        exps = tuple(exps)
        if len(exps) != self.nvars:
            raise UsageError(f"Monomial needs {self.nvars} exponents, got {len(exps)}.")
        return Polynomial(self, {exps: coeff})

    def parse(self, text):
        """Reads one polynomial in the textual grammar."""
        from poly_text import parse_polynomial
        return parse_polynomial(self, text)

    # --- Orders ---
    def _priority(self, priority):
        if priority is None:
            return None
        return [self.index_of(v) for v in priority]

    def order(self, kind, priority=None, eliminate=None):
        elim = None if eliminate is None else [self.index_of(v) for v in eliminate]
        return MonomialOrder(kind, self.nvars, self._priority(priority), elim)

    def lex(self, priority=None):
        return self.order(LEX, priority)

    def grevlex(self, priority=None):
        return self.order(GREVLEX, priority)

    def elimination(self, eliminate, priority=None):
        return self.order(ELIMINATION, priority, eliminate)

    # --- Ring maps ---
    def extend(self, new_variables, order=None):
        """
        Adjoins variables. The result contains this ring's variables first,
        so `lift` injects this ring into it.
        """
        new_variables = [VariableId.coerce(v) for v in new_variables]
        clash = [str(v) for v in new_variables if v in self._index]
        if clash:
            raise UsageError(f"Variables already present: {', '.join(clash)}.")
        kind = order if order is not None else self.default_order.kind
        if kind == ELIMINATION:
            kind = GREVLEX
        return PolyRing(self.p, self.variables + tuple(new_variables), kind)

    def fresh_auxiliary(self):
        """An aux[k] variable not yet used by this ring."""
        k = 1
        while VariableId("aux", (k,)) in self._index:
            k += 1
        return VariableId("aux", (k,))

    def lift(self, f):
        """Maps a polynomial of a ring whose variables all live here, by variable identity."""
        from polynomial import Polynomial
        if f.ring is self or f.ring == self:
            return Polynomial(self, f.term_dict())
        if f.ring.p != self.p:
            raise UsageError("Cannot lift between rings of different characteristic.")
        positions = [self.index_of(v) for v in f.ring.variables]
        terms = {}
        for m, c in f.term_dict().items():
            e = [0] * self.nvars
            for i, k in enumerate(m):
                if k:
                    e[positions[i]] = k
            terms[tuple(e)] = c
        return Polynomial(self, terms)

    def restrict(self, f):
        """Inverse of lift: maps f into this smaller ring; f must only use this ring's variables."""
        from polynomial import Polynomial
        positions = {}
        for i, v in enumerate(f.ring.variables):
            positions[i] = self._index.get(v)
        terms = {}
        for m, c in f.term_dict().items():
            e = [0] * self.nvars
            for i, k in enumerate(m):
                if k:
                    if positions[i] is None:
                        raise UsageError(f"Variable {f.ring.variables[i]} does not exist in the target ring.")
                    e[positions[i]] = k
            terms[tuple(e)] = c
        return Polynomial(self, terms)

    # --- Identity ---
    def __eq__(self, other):
        return isinstance(other, PolyRing) and self.p == other.p and self.variables == other.variables

    def __hash__(self):
        return hash((self.p, self.variables))

    def __repr__(self):
        names = ",".join(str(v) for v in self.variables)
        return f"PolyRing(p={self.p}, vars=[{names}], order={self.default_order.kind})"
