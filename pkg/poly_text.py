#
# File: poly_text.py
# Version: 1.1.0
#
# Description: The textual polynomial grammar and the ideal file format.
#
#              Polynomials: integer coefficients (reduced mod p), variables
#              x[i,j], u[i,j], w[i,j], x[k], aux[k] or plain identifiers,
#              '+', '-', '*' (or juxtaposition), '^' with a nonnegative integer
#              exponent, and parentheses.
#
#              Ideal files: a header line
#                  p=<prime>; vars=<comma list>; order=<lex|grevlex>
#              followed by comma-separated generators over any number of lines.
#              Lines starting with '#' are comments. An empty body is the zero
#              ideal.
#
# Changelog:
# - v1.1.0: Parentheses, comment lines, and line/column positions that account
#           for the header.
# - v1.0.0: Initial version.
#
import re

from errors import ParseError, UsageError
from monomial_order import LEX, GREVLEX

__version__ = "1.1.0"

_TOKEN_RE = re.compile(
    r"(?P<ws>[ \t\r\n]+)"
    r"|(?P<num>\d+)"
    r"|(?P<var>[A-Za-z_][A-Za-z0-9_]*(?:\[\s*\d+\s*(?:,\s*\d+\s*)?\])?)"
    r"|(?P<op>[-+*^(),])"
)

FILE_ORDERS = (LEX, GREVLEX)


class _Token:
    __slots__ = ("kind", "text", "line", "column")

    def __init__(self, kind, text, line, column):
        self.kind = kind
        self.text = text
        self.line = line
        self.column = column


def _tokenize(text, first_line=1):
    tokens = []
    pos = 0
    line, line_start = first_line, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        column = pos - line_start + 1
        if not m:
            raise ParseError(f"Unexpected character '{text[pos]}'", line, column)
        kind = m.lastgroup
        if kind == "ws":
            chunk = m.group()
            newlines = chunk.count("\n")
            if newlines:
                line += newlines
                line_start = pos + chunk.rindex("\n") + 1
        else:
            tokens.append(_Token(kind, m.group(), line, column))
        pos = m.end()
    tokens.append(_Token("end", "", line, pos - line_start + 1))
    return tokens


class _Parser:
    """Recursive-descent parser over a token list."""

    def __init__(self, ring, text, first_line=1):
        self.ring = ring
        self.tokens = _tokenize(text, first_line)
        self.i = 0

    @property
    def tok(self):
        return self.tokens[self.i]

    def _error(self, message, tok=None):
        tok = tok or self.tok
        return ParseError(message, tok.line, tok.column)

    def _accept(self, text):
        if self.tok.kind == "op" and self.tok.text == text:
            self.i += 1
            return True
        return False

    def _expect(self, text):
        if not self._accept(text):
            found = self.tok.text or "end of input"
            raise self._error(f"Expected '{text}' but found '{found}'")

    def _starts_factor(self):
        t = self.tok
        return t.kind in ("num", "var") or (t.kind == "op" and t.text == "(")

    def expression(self):
        negate = False
        if self._accept("-"):
            negate = True
        else:
            self._accept("+")
        result = self.term()
        if negate:
            result = -result
        while True:
            if self._accept("+"):
                result = result + self.term()
            elif self._accept("-"):
                result = result - self.term()
            else:
                return result

    def term(self):
        result = self.factor()
        while True:
            if self._accept("*"):
                result = result * self.factor()
            elif self._starts_factor():
                result = result * self.factor()
            else:
                return result

    def factor(self):
        base = self.atom()
        if self._accept("^"):
            t = self.tok
            if t.kind != "num":
                raise self._error("Exponent must be a nonnegative integer")
            self.i += 1
            base = base ** int(t.text)
        return base

    def atom(self):
        t = self.tok
        if t.kind == "num":
            self.i += 1
            return self.ring.constant(int(t.text))
        if t.kind == "var":
            self.i += 1
            try:
                return self.ring.var(t.text)
            except UsageError:
                raise self._error(f"Unknown variable '{t.text}'", t) from None
        if self._accept("("):
            inner = self.expression()
            self._expect(")")
            return inner
        if self._accept("-"):
            return -self.atom()
        found = t.text or "end of input"
        raise self._error(f"Expected a coefficient, variable or '(' but found '{found}'")

    def polynomial_list(self):
        if self.tok.kind == "end":
            return []
        polys = [self.expression()]
        while self._accept(","):
            polys.append(self.expression())
        if self.tok.kind != "end":
            raise self._error(f"Unexpected '{self.tok.text}'")
        return polys


def parse_polynomial(ring, text, first_line=1):
    """
    Reads one polynomial of `ring` from text.

    Raises:
        ParseError: on malformed input or unknown variables.
    """
    parser = _Parser(ring, text, first_line)
    if parser.tok.kind == "end":
        raise parser._error("Empty polynomial")
    f = parser.expression()
    if parser.tok.kind != "end":
        raise parser._error(f"Unexpected '{parser.tok.text}'")
    return f


def parse_polynomial_list(ring, text, first_line=1):
    """Reads a comma-separated list of polynomials (possibly empty)."""
    return _Parser(ring, text, first_line).polynomial_list()


# --- Printing ---

def format_monomial(ring, monomial):
    factors = []
    for var, e in zip(ring.variables, monomial):
        if e == 1:
            factors.append(str(var))
        elif e > 1:
            factors.append(f"{var}^{e}")
    return "*".join(factors) if factors else "1"


def format_polynomial(f):
    """
    Canonical text of f: terms descending in the ring's default order,
    coefficients printed in the symmetric range (c > p/2 prints as -(p-c)).
    """
    p = f.ring.p
    pieces = []
    for m, c in f.terms():
        negative = 2 * c > p
        mag = p - c if negative else c
        mono = format_monomial(f.ring, m)
        if mono == "1":
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not pieces:
            pieces.append(f"-{body}" if negative else body)
        else:
            pieces.append(f" - {body}" if negative else f" + {body}")
    return "".join(pieces) if pieces else "0"


# --- Ideal files ---

def _split_top_level(text, sep=","):
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch in "[(":
            depth += 1
        elif ch in "])":
            depth -= 1
        elif ch == sep and depth == 0:
            parts.append((start, text[start:i]))
            start = i + 1
    parts.append((start, text[start:]))
    return parts


def parse_header(line, line_number=1):
    """
    Parses `p=<prime>; vars=<list>; order=<name>` into a PolyRing.

    Raises:
        ParseError: on a malformed header, a non-prime p or bad variables.
    """
    from poly_ring import PolyRing

    fields = {}
    for start, item in _split_top_level(line, ";"):
        if not item.strip():
            continue
        column = start + len(item) - len(item.lstrip()) + 1
        if "=" not in item:
            raise ParseError(f"Header item '{item.strip()}' is not key=value", line_number, column)
        key, value = item.split("=", 1)
        fields[key.strip().lower()] = (value.strip(), column)

    if "p" not in fields or "vars" not in fields:
        raise ParseError("Header must declare p=<prime> and vars=<list>", line_number, 1)

    p_text, p_col = fields["p"]
    if not p_text.isdigit():
        raise ParseError(f"p must be an integer, got '{p_text}'", line_number, p_col)

    vars_text, vars_col = fields["vars"]
    names = [name.strip() for _, name in _split_top_level(vars_text)] if vars_text else []
    if any(not name for name in names):
        raise ParseError("Empty entry in the variable list", line_number, vars_col)

    order, order_col = fields.get("order", (GREVLEX, 1))
    if order not in FILE_ORDERS:
        raise ParseError(f"Unknown order '{order}'", line_number, order_col)

    try:
        return PolyRing(int(p_text), names, order)
    except UsageError as e:
        column = p_col if "Characteristic" in e.message else vars_col
        raise ParseError(e.message, line_number, column) from None


def parse_ideal_text(text):
    """
    Parses an ideal file's content.

    Returns:
        tuple: (PolyRing, list of Polynomial generators)
    """
    lines = text.split("\n")
    lines = ["" if ln.lstrip().startswith("#") else ln for ln in lines]
    header_at = next((i for i, ln in enumerate(lines) if ln.strip()), None)
    if header_at is None:
        raise ParseError("Missing header line", 1, 1)
    ring = parse_header(lines[header_at], header_at + 1)
    body = "\n".join(lines[header_at + 1:])
    generators = parse_polynomial_list(ring, body, first_line=header_at + 2)
    return ring, generators


def read_ideal_file(path):
    with open(path, "r", encoding="utf-8") as handle:
        return parse_ideal_text(handle.read())


def format_header(ring):
    order = ring.default_order.kind if ring.default_order.kind in FILE_ORDERS else GREVLEX
    names = ",".join(str(v) for v in ring.variables)
    return f"p={ring.p}; vars={names}; order={order}"


def format_ideal_file(ring, generators):
    """Header plus one generator per line, comma-terminated except the last."""
    body = ",\n".join(format_polynomial(g) for g in generators)
    return f"{format_header(ring)}\n{body}\n" if body else f"{format_header(ring)}\n"
