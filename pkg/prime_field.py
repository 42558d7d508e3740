#
# File: prime_field.py
# Version: 1.0.0
#
# Description: The prime field F_p. Polynomials store their coefficients as
#              plain integers in [0, p) for speed; FieldElement is the value
#              type handed out at the API boundary (leading coefficients,
#              field arithmetic in tests and reports).
#
import logging

from sympy import isprime

from errors import UsageError, DomainError

__version__ = "1.0.0"

# One machine word, so every product of two residues fits in two words.
MAX_CHARACTERISTIC = 2 ** 63 - 1


class PrimeField:
    """
    The field with p elements.

    Args:
        p (int): A prime below 2**63.
    """
    _instances = {}

    def __new__(cls, p):
        if not isinstance(p, int) or isinstance(p, bool):
            raise UsageError(f"Characteristic must be an integer, got {p!r}.")
        if p in cls._instances:
            return cls._instances[p]
        if p < 2 or p > MAX_CHARACTERISTIC:
            raise UsageError(f"Characteristic {p} is outside [2, 2^63).")
        if not isprime(p):
            raise UsageError(f"Characteristic {p} is not prime.")
        field = super().__new__(cls)
        field.p = p
        cls._instances[p] = field
        logging.debug(f"PrimeField: created F_{p}.")
        return field

    def __call__(self, value):
        return FieldElement(value, self.p)

    def __repr__(self):
        return f"PrimeField({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("F", self.p))

    def elements(self):
        """Returns every element of the field, 0 first."""
        return [FieldElement(v, self.p) for v in range(self.p)]

    def inverse(self, value):
        """Multiplicative inverse of an integer residue."""
        value %= self.p
        if value == 0:
            raise DomainError("Zero has no inverse in a field.")
        return pow(value, -1, self.p)


class FieldElement:
    """An element of F_p; immutable, hashable."""
    __slots__ = ("value", "p")

    def __init__(self, value, p):
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "value", int(value) % p)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable.")

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.p != self.p:
                raise UsageError(f"Cannot combine elements of F_{self.p} and F_{other.p}.")
            return other.value
        if isinstance(other, int):
            return other % self.p
        return None

    def __add__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FieldElement(self.value + v, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FieldElement(self.value - v, self.p)

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FieldElement(v - self.value, self.p)

    def __mul__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FieldElement(self.value * v, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElement(-self.value, self.p)

    def inverse(self):
        if self.value == 0:
            raise DomainError("Zero has no inverse in a field.")
        return FieldElement(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        if v == 0:
            raise DomainError("Division by zero in a prime field.")
        return FieldElement(self.value * pow(v, -1, self.p), self.p)

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        return FieldElement(pow(self.value, k, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"{self.value} mod {self.p}"
