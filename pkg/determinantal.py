#
# File: determinantal.py
# Version: 1.1.0
#
# Description: Generic matrices of indeterminates, their minors and
#              determinantal ideals, and the staircase sequence of
#              adjacent maximal minors.
#
# Changelog:
# - v1.1.0: Tall matrices (maximal minors over row subsets), minor reordering
#           and row-operation substitutions.
# - v1.0.0: Initial version.
#
import logging
from itertools import combinations

from errors import UsageError
from monomial_order import GREVLEX
from poly_ring import PolyRing, VariableId
from ideal_ops import Ideal

__version__ = "1.1.0"


def colex_subsets(n, k):
    """k-subsets of {1..n} (1-based) in colexicographic order."""
    return sorted(combinations(range(1, n + 1), k), key=lambda c: c[::-1])


def matrix_variables(symbol, rows, cols):
    """symbol[i,j] for 1 <= i <= rows, 1 <= j <= cols, row-major."""
    return [VariableId(symbol, (i, j)) for i in range(1, rows + 1) for j in range(1, cols + 1)]


class MinorSpec:
    """
    Row and column indices (1-based, strictly increasing, same length).
    """
    __slots__ = ("rows", "cols")

    def __init__(self, rows, cols):
        rows, cols = tuple(int(r) for r in rows), tuple(int(c) for c in cols)
        if not rows or len(rows) != len(cols):
            raise UsageError(f"A minor needs equally many rows and columns, got {rows} and {cols}.")
        if any(a >= b for a, b in zip(rows, rows[1:])) or any(a >= b for a, b in zip(cols, cols[1:])):
            raise UsageError(f"Minor indices must be strictly increasing, got {rows} and {cols}.")
        self.rows = rows
        self.cols = cols

    @property
    def size(self):
        return len(self.rows)

    def validate(self, matrix):
        if self.rows[0] < 1 or self.cols[0] < 1 or self.rows[-1] > matrix.rows or self.cols[-1] > matrix.cols:
            raise UsageError(f"Minor {self} is out of bounds for a {matrix.rows}x{matrix.cols} matrix.")

    def __eq__(self, other):
        return isinstance(other, MinorSpec) and self.rows == other.rows and self.cols == other.cols

    def __hash__(self):
        return hash((self.rows, self.cols))

    def __repr__(self):
        return f"MinorSpec(rows={list(self.rows)}, cols={list(self.cols)})"


class GenericMatrix:
    """
    A rows x cols matrix of distinct ring variables.

    Args:
        ring (PolyRing): Ring containing every entry.
        rows (int): Row count.
        cols (int): Column count.
        symbol (str, optional): Entries are symbol[i,j]. Defaults to 'x'.
    """
    def __init__(self, ring, rows, cols, symbol="x"):
        if rows < 1 or cols < 1:
            raise UsageError(f"Matrix dimensions must be positive, got {rows}x{cols}.")
        self.ring = ring
        self.rows = rows
        self.cols = cols
        self.symbol = symbol
        self.entries = tuple(tuple(VariableId(symbol, (i, j)) for j in range(1, cols + 1))
                             for i in range(1, rows + 1))
        for var in self.variables():
            if not ring.has_variable(var):
                raise UsageError(f"Matrix entry {var} is not a variable of the ring.")
        self._entry_polys = {}
        self._memo = {}

    @classmethod
    def generic(cls, p, rows, cols, symbol="x", order=GREVLEX):
        """A generic matrix together with its own ring F_p[symbol[i,j]]."""
        ring = PolyRing(p, matrix_variables(symbol, rows, cols), order)
        return cls(ring, rows, cols, symbol)

    @property
    def is_wide(self):
        return self.rows <= self.cols

    @property
    def maximal_size(self):
        return min(self.rows, self.cols)

    def variables(self):
        return [v for row in self.entries for v in row]

    def entry(self, i, j):
        """Entry (i, j), 1-based, as a polynomial."""
        if not (1 <= i <= self.rows and 1 <= j <= self.cols):
            raise UsageError(f"Entry ({i},{j}) is out of bounds for a {self.rows}x{self.cols} matrix.")
        key = (i, j)
        if key not in self._entry_polys:
            self._entry_polys[key] = self.ring.var(self.entries[i - 1][j - 1])
        return self._entry_polys[key]

    def _det(self, rows, cols):
        # Laplace along the first selected row, memoized on (rows, cols)
        key = (rows, cols)
        cached = self._memo.get(key)
        if cached is not None:
            return cached
        if len(rows) == 1:
            value = self.entry(rows[0], cols[0])
        else:
            value = self.ring.zero()
            head, tail = rows[0], rows[1:]
            for k, c in enumerate(cols):
                sub = self._det(tail, cols[:k] + cols[k + 1:])
                term = self.entry(head, c) * sub
                value = value - term if k % 2 else value + term
        self._memo[key] = value
        return value

    def minor(self, spec):
        """Determinant of the submatrix selected by a MinorSpec."""
        spec.validate(self)
        return self._det(spec.rows, spec.cols)

    def maximal_minor_specs(self):
        """All maximal minors, colex over column sets (row sets for a tall matrix)."""
        k = self.maximal_size
        if self.is_wide:
            all_rows = tuple(range(1, self.rows + 1))
            return [MinorSpec(all_rows, cols) for cols in colex_subsets(self.cols, k)]
        all_cols = tuple(range(1, self.cols + 1))
        return [MinorSpec(rows, all_cols) for rows in colex_subsets(self.rows, k)]

    def staircase_specs(self):
        """Adjacent-column maximal minors [i, t+i-1] (adjacent rows for a tall matrix)."""
        k = self.maximal_size
        if self.is_wide:
            all_rows = tuple(range(1, self.rows + 1))
            return [MinorSpec(all_rows, range(i, i + k)) for i in range(1, self.cols - k + 2)]
        all_cols = tuple(range(1, self.cols + 1))
        return [MinorSpec(range(i, i + k), all_cols) for i in range(1, self.rows - k + 2)]

    def staircase_indices(self):
        """1-based positions of the staircase minors in maximal_minor_specs()."""
        order = {spec: pos for pos, spec in enumerate(self.maximal_minor_specs(), start=1)}
        return [order[spec] for spec in self.staircase_specs()]

    def __repr__(self):
        return f"GenericMatrix({self.rows}x{self.cols}, symbol={self.symbol!r}, p={self.ring.p})"


def minor(matrix, spec):
    return matrix.minor(spec)


def maximal_minors(matrix):
    return [matrix.minor(spec) for spec in matrix.maximal_minor_specs()]


def staircase_minors(matrix):
    return [matrix.minor(spec) for spec in matrix.staircase_specs()]


def det_ideal(matrix, size):
    """
    I_size(M): the ideal of all size x size minors.

    Raises:
        UsageError: unless 1 <= size <= min(rows, cols).
    """
    if not 1 <= size <= matrix.maximal_size:
        raise UsageError(f"Minor size {size} is outside 1..{matrix.maximal_size}.")
    gens = [matrix.minor(MinorSpec(rows, cols))
            for rows in colex_subsets(matrix.rows, size)
            for cols in colex_subsets(matrix.cols, size)]
    logging.debug(f"det_ideal: {len(gens)} minors of size {size} for {matrix}.")
    return Ideal(matrix.ring, gens)


def last_column_first(specs, last_column=None):
    """Stable reordering that puts the minors using the last column first."""
    specs = list(specs)
    if not specs:
        return specs
    if last_column is None:
        last_column = max(c for spec in specs for c in spec.cols)
    return ([s for s in specs if last_column in s.cols]
            + [s for s in specs if last_column not in s.cols])


def row_operation_map(matrix, target, source, coefficient):
    """
    Substitution map for row[target] <- row[target] + coefficient * row[source];
    every other entry maps to itself.
    """
    if target == source:
        raise UsageError("A row operation needs two different rows.")
    mapping = {}
    for i in range(1, matrix.rows + 1):
        for j in range(1, matrix.cols + 1):
            image = matrix.entry(i, j)
            if i == target:
                image = image + matrix.entry(source, j).scale(coefficient)
            mapping[matrix.entries[i - 1][j - 1]] = image
    return mapping


def determinantal_generic_link(t, n, p):
    """
    The generic link of I_t(X), X generic t x n, with the maximal minors in
    colex order as generators and U of shape (n-t+1) x C(n,t).
    """
    from linkage import generic_link

    if not 1 <= t <= n:
        raise UsageError(f"Need 1 <= t <= n, got t={t}, n={n}.")
    matrix = GenericMatrix.generic(p, t, n)
    ideal = Ideal(matrix.ring, maximal_minors(matrix))
    return generic_link(ideal, height_hint=n - t + 1, matrix=matrix)
