"""Polynomials in t1..tr with exact rational coefficients.

Terms are stored sparsely as {exponent tuple: Fraction}.  Every Hilbert
polynomial in this package lives here, so all arithmetic is exact; floats
never appear.
"""

import re
from fractions import Fraction

from .errors import ParseError, ZeroPolynomial


class GradedOrder:
    """Graded lexicographic monomial order with a permutation of t1..tr.

    Compares by total degree first, then lexicographically on the
    exponents read in permutation order (default t1 > t2 > ... > tr).
    """

    def __init__(self, nvars, permutation=None):
        if permutation is None:
            permutation = tuple(range(nvars))
        if sorted(permutation) != list(range(nvars)):
            raise ValueError("permutation must reorder 0..nvars-1")
        self.nvars = nvars
        self.permutation = tuple(permutation)

    def key(self, expo):
        return (sum(expo),) + tuple(expo[i] for i in self.permutation)

    def max_monomial(self, exponents):
        return max(exponents, key=self.key)

    def __repr__(self):
        return f"GradedOrder({self.nvars}, {self.permutation})"


class MultiPoly:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        clean = {}
        for expo, coeff in (terms or {}).items():
            coeff = Fraction(coeff)
            if coeff != 0:
                expo = tuple(int(e) for e in expo)
                if len(expo) != nvars or any(e < 0 for e in expo):
                    raise ValueError(f"bad exponent {expo} for {nvars} variables")
                clean[expo] = coeff
        self.terms = clean

    @classmethod
    def zero(cls, nvars):
        return cls(nvars, {})

    @classmethod
    def constant(cls, nvars, value):
        return cls(nvars, {(0,) * nvars: Fraction(value)})

    @classmethod
    def variable(cls, nvars, i):
        expo = [0] * nvars
        expo[i] = 1
        return cls(nvars, {tuple(expo): Fraction(1)})

    def is_zero(self):
        return not self.terms

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def __add__(self, other):
        other = self._coerce(other)
        terms = dict(self.terms)
        for expo, coeff in other.terms.items():
            terms[expo] = terms.get(expo, Fraction(0)) + coeff
        return MultiPoly(self.nvars, terms)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __neg__(self):
        return MultiPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return MultiPoly(self.nvars, {e: c * other for e, c in self.terms.items()})
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, Fraction(0)) + c1 * c2
        return MultiPoly(self.nvars, terms)

    __rmul__ = __mul__

    def __pow__(self, k):
        out = MultiPoly.constant(self.nvars, 1)
        for _ in range(int(k)):
            out = out * self
        return out

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            return other
        return MultiPoly.constant(self.nvars, other)

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def evaluate(self, point):
        total = Fraction(0)
        for expo, coeff in self.terms.items():
            val = coeff
            for p, e in zip(point, expo):
                if e:
                    val *= Fraction(p) ** e
            total += val
        return total

    def shift(self, v):
        """Return P(t - v) for an integer vector v."""
        out = MultiPoly.zero(self.nvars)
        for expo, coeff in self.terms.items():
            term = MultiPoly.constant(self.nvars, coeff)
            for i, e in enumerate(expo):
                if e:
                    lin = MultiPoly.variable(self.nvars, i) - MultiPoly.constant(self.nvars, v[i])
                    term = term * lin ** e
            out = out + term
        return out

    def compose_linear(self, matrix):
        """Return P(M t): substitute t_i <- sum_j M[i][j] * t_j."""
        forms = []
        for i in range(self.nvars):
            f = MultiPoly.zero(self.nvars)
            for j in range(self.nvars):
                f = f + MultiPoly.variable(self.nvars, j) * int(matrix[i][j])
            forms.append(f)
        out = MultiPoly.zero(self.nvars)
        for expo, coeff in self.terms.items():
            term = MultiPoly.constant(self.nvars, coeff)
            for i, e in enumerate(expo):
                if e:
                    term = term * forms[i] ** e
            out = out + term
        return out

    def leading_term(self, order=None):
        """The order-largest (exponent, coefficient); raises on the zero polynomial."""
        if not self.terms:
            raise ZeroPolynomial("the zero polynomial has no leading term")
        if order is None:
            order = GradedOrder(self.nvars)
        expo = order.max_monomial(self.terms)
        return expo, self.terms[expo]

    def leading_monomial(self, order=None):
        return self.leading_term(order)[0]

    def leading_coeff(self, order=None):
        return self.leading_term(order)[1]

    def integer_valued(self, probes=None):
        """Whether P takes integer values on integer points (checked exactly).

        A polynomial of total degree D is integer-valued iff it is integer
        on the simplex grid {0..D}^r, which is what we test.
        """
        d = max(self.total_degree(), 0)
        pts = probes or _grid(self.nvars, d)
        return all(self.evaluate(p).denominator == 1 for p in pts)

    def __repr__(self):
        return f"MultiPoly({format_poly(self)!r})"


def _grid(nvars, bound):
    pts = [()]
    for _ in range(nvars):
        pts = [p + (k,) for p in pts for k in range(bound + 1)]
    return pts


def leading_coeff_positive(P, order=None):
    return P.leading_coeff(order) > 0


def binomial_in_t(nvars, index, top_shift, q):
    """The polynomial binom(t_index + top_shift, q) as a MultiPoly."""
    t = MultiPoly.variable(nvars, index)
    out = MultiPoly.constant(nvars, 1)
    for k in range(q):
        out = out * (t + (top_shift - k))
    return out * Fraction(1, _factorial(q))


def _factorial(q):
    out = 1
    for k in range(2, q + 1):
        out *= k
    return out


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<var>t\d*)|(?P<op>\*\*|[-+*^()]))")


def parse_poly(text, nvars=None):
    """Parse text like '3*t1*t2 + 1/2*t2^2 - t1 + 1' into a MultiPoly.

    For one variable the name 't' is accepted; 't3' means the third
    variable.  nvars is inferred from the largest index when omitted.
    """
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise ParseError(f"cannot parse polynomial near {text[pos:]!r}")
            break
        pos = m.end()
        if m.lastgroup:
            tokens.append((m.lastgroup, m.group(m.lastgroup)))
    if not tokens:
        raise ParseError("empty polynomial")

    max_index = 1
    for kind, val in tokens:
        if kind == "var" and val != "t":
            max_index = max(max_index, int(val[1:]))
    if nvars is None:
        nvars = max_index
    if max_index > nvars:
        raise ParseError(f"variable t{max_index} exceeds {nvars} variables")

    # Split into signed additive chunks, then parse each chunk as a product.
    chunks = []
    sign = 1
    current = []
    depth = 0
    for kind, val in tokens:
        if kind == "op" and val in "+-" and depth == 0 and not current:
            sign = sign * (-1 if val == "-" else 1)
        elif kind == "op" and val in "+-" and depth == 0:
            chunks.append((sign, current))
            sign = -1 if val == "-" else 1
            current = []
        else:
            if kind == "op" and val == "(":
                depth += 1
            elif kind == "op" and val == ")":
                depth -= 1
            current.append((kind, val))
    if current:
        chunks.append((sign, current))
    if depth != 0:
        raise ParseError("unbalanced parentheses")

    poly = MultiPoly.zero(nvars)
    for sign, chunk in chunks:
        poly = poly + _parse_product(chunk, nvars) * sign
    return poly


def _parse_product(tokens, nvars):
    factors = []
    i = 0
    while i < len(tokens):
        kind, val = tokens[i]
        if kind == "op" and val == "*":
            i += 1
            continue
        if kind == "num":
            coeff = Fraction(val) if "/" not in val else Fraction(*map(int, val.split("/")))
            factor = MultiPoly.constant(nvars, coeff)
        elif kind == "var":
            index = 0 if val == "t" else int(val[1:]) - 1
            factor = MultiPoly.variable(nvars, index)
        else:
            raise ParseError(f"unexpected token {val!r} in term")
        i += 1
        if i + 1 < len(tokens) and tokens[i][0] == "op" and tokens[i][1] in ("^", "**"):
            if tokens[i + 1][0] != "num" or "/" in tokens[i + 1][1]:
                raise ParseError("exponent must be an integer")
            factor = factor ** int(tokens[i + 1][1])
            i += 2
        factors.append(factor)
    if not factors:
        raise ParseError("empty term")
    out = MultiPoly.constant(nvars, 1)
    for f in factors:
        out = out * f
    return out


def format_poly(P, order=None):
    """Canonical text form, terms in decreasing graded lex order."""
    if P.is_zero():
        return "0"
    if order is None:
        order = GradedOrder(P.nvars)
    names = ["t"] if P.nvars == 1 else [f"t{i+1}" for i in range(P.nvars)]
    parts = []
    for expo in sorted(P.terms, key=order.key, reverse=True):
        coeff = P.terms[expo]
        mono = "*".join(
            names[i] if e == 1 else f"{names[i]}^{e}"
            for i, e in enumerate(expo) if e
        )
        mag = abs(coeff)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        parts.append(("-" if coeff < 0 else "+", body))
    sign, body = parts[0]
    text = ("-" if sign == "-" else "") + body
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text
