"""Sparse bihomogeneous polynomials over S = F_p[x_1..x_m, y_1..y_n].

The single-graded subrings F_p[x] and F_p[y] reuse the same representation
with the other variable block empty, so all Groebner and resolution code is
written once.  Monomials are plain exponent tuples of length m + n; the
monomial order is total-degree reverse-lexicographic with
x1 > ... > xm > y1 > ... > yn.
"""

import itertools
from dataclasses import dataclass
from math import comb
from typing import NamedTuple

from .errors import (
    NotBihomogeneousError,
    ParseError,
    RingMismatchError,
    UnknownVariableError,
    ZeroPolynomialError,
)
from .linalg import DEFAULT_PRIME, _check_prime


class Bidegree(NamedTuple):
    a: int
    b: int

    def __add__(self, other):
        return Bidegree(self.a + other[0], self.b + other[1])

    def __sub__(self, other):
        return Bidegree(self.a - other[0], self.b - other[1])

    def __neg__(self):
        return Bidegree(-self.a, -self.b)

    @property
    def total(self):
        return self.a + self.b

    def __str__(self):
        return f"({self.a},{self.b})"


@dataclass(frozen=True)
class RingSpec:
    """S = F_p[x_1..x_m, y_1..y_n], standard bigraded: deg x_i = (1,0),
    deg y_j = (0,1).  m = 0 or n = 0 gives the single-graded subrings."""

    m: int
    n: int
    p: int = DEFAULT_PRIME

    def __post_init__(self):
        if self.m < 0 or self.n < 0 or self.m + self.n < 1:
            raise ValueError("need m >= 0, n >= 0 and at least one variable")
        _check_prime(self.p)

    @classmethod
    def x_only(cls, m, p=DEFAULT_PRIME):
        return cls(m, 0, p)

    @classmethod
    def y_only(cls, n, p=DEFAULT_PRIME):
        return cls(0, n, p)

    @property
    def flavor(self):
        if self.n == 0:
            return "x"
        if self.m == 0:
            return "y"
        return "bigraded"

    @property
    def nvars(self):
        return self.m + self.n

    @property
    def canonical_degree(self):
        """Generator degree of the canonical module S(-m,-n)."""
        return Bidegree(self.m, self.n)

    def variable_name(self, i):
        if i < self.m:
            return f"x{i + 1}"
        return f"y{i - self.m + 1}"

    def variable_degree(self, i):
        return Bidegree(1, 0) if i < self.m else Bidegree(0, 1)

    def variable(self, i):
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial(self, ((tuple(e), 1),))

    def gens(self):
        return [self.variable(i) for i in range(self.nvars)]

    def one(self):
        return Polynomial(self, (((0,) * self.nvars, 1),))

    def zero(self):
        return Polynomial(self, ())

    def __str__(self):
        vs = ",".join(self.variable_name(i) for i in range(self.nvars))
        return f"F_{self.p}[{vs}]"


# ---------------------------------------------------------------------------
# monomials: exponent tuples, grevlex key


def mono_key(e):
    """Sort key realizing degrevlex: bigger key = bigger monomial."""
    return (sum(e), tuple(-c for c in reversed(e)))


def mono_mul(e, f):
    return tuple(a + b for a, b in zip(e, f))


def mono_divides(e, f):
    """True if x^e divides x^f."""
    return all(a <= b for a, b in zip(e, f))


def mono_div(f, e):
    return tuple(b - a for a, b in zip(e, f))


def mono_lcm(e, f):
    return tuple(max(a, b) for a, b in zip(e, f))


def mono_coprime(e, f):
    return all(a == 0 or b == 0 for a, b in zip(e, f))


def mono_bidegree(ring, e):
    return Bidegree(sum(e[: ring.m]), sum(e[ring.m:]))


def _compositions(total, parts):
    """All tuples of `parts` nonnegative ints summing to `total`."""
    if parts == 0:
        return [()] if total == 0 else []
    if parts == 1:
        return [(total,)]
    out = []
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            out.append((first,) + rest)
    return out


def block_dim(k, length):
    """Number of monomials of degree k in `length` variables."""
    if k < 0:
        return 0
    if length == 0:
        return 1 if k == 0 else 0
    return comb(k + length - 1, length - 1)


def piece_dim(ring, d):
    """dim_K S_d, the closed binomial form."""
    a, b = d
    return block_dim(a, ring.m) * block_dim(b, ring.n)


def monomial_basis(ring, d):
    """All monomials of bidegree d, descending in the monomial order.
    Empty when a component of d is negative."""
    a, b = d
    if a < 0 or b < 0:
        return []
    xs = _compositions(a, ring.m)
    ys = _compositions(b, ring.n)
    if ring.m == 0 and a != 0:
        return []
    if ring.n == 0 and b != 0:
        return []
    monos = [x + y for x, y in itertools.product(xs, ys)]
    monos.sort(key=mono_key, reverse=True)
    return monos


# ---------------------------------------------------------------------------
# polynomials


class Polynomial:
    """Terms stored as a tuple of (exponent tuple, coefficient) pairs,
    strictly descending in the monomial order, coefficients in [1, p).
    Immutable and hashable."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms
        self._hash = None

    @classmethod
    def from_dict(cls, ring, d):
        p = ring.p
        items = [(e, c % p) for e, c in d.items() if c % p]
        items.sort(key=lambda t: mono_key(t[0]), reverse=True)
        return cls(ring, tuple(items))

    @classmethod
    def constant(cls, ring, c):
        return cls.from_dict(ring, {(0,) * ring.nvars: c})

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def _check_ring(self, other):
        if self.ring != other.ring:
            raise RingMismatchError(
                f"operands over {self.ring} and {other.ring}")

    def __add__(self, other):
        if isinstance(other, int):
            other = Polynomial.constant(self.ring, other)
        self._check_ring(other)
        d = dict(self.terms)
        p = self.ring.p
        for e, c in other.terms:
            v = (d.get(e, 0) + c) % p
            if v:
                d[e] = v
            else:
                d.pop(e, None)
        return Polynomial.from_dict(self.ring, d)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        p = self.ring.p
        return Polynomial(self.ring, tuple((e, p - c) for e, c in self.terms))

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        self._check_ring(other)
        d = {}
        p = self.ring.p
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = mono_mul(e1, e2)
                d[e] = (d.get(e, 0) + c1 * c2) % p
        return Polynomial.from_dict(self.ring, d)

    __rmul__ = __mul__

    def scale(self, c):
        c %= self.ring.p
        if c == 0:
            return self.ring.zero()
        p = self.ring.p
        return Polynomial(self.ring,
                          tuple((e, (k * c) % p) for e, k in self.terms))

    def term_mul(self, coeff, mono):
        """Multiply by the single term coeff * x^mono."""
        coeff %= self.ring.p
        if coeff == 0:
            return self.ring.zero()
        p = self.ring.p
        return Polynomial(self.ring,
                          tuple((mono_mul(e, mono), (c * coeff) % p)
                                for e, c in self.terms))

    def lead(self):
        """(monomial, coefficient) of the leading term."""
        if not self.terms:
            raise ZeroPolynomialError("zero polynomial has no leading term")
        return self.terms[0]

    def is_bihomogeneous(self):
        if not self.terms:
            return True
        degs = {mono_bidegree(self.ring, e) for e, _ in self.terms}
        return len(degs) == 1

    def bidegree(self):
        if not self.terms:
            raise ZeroPolynomialError("zero polynomial has no bidegree")
        degs = {mono_bidegree(self.ring, e) for e, _ in self.terms}
        if len(degs) != 1:
            raise NotBihomogeneousError(f"mixed bidegrees {sorted(degs)}")
        return next(iter(degs))

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, self.terms))
        return self._hash

    def _term_str(self, e, c):
        # symmetric representative for readability; parses back fine
        cs = c if c <= self.ring.p // 2 else c - self.ring.p
        factors = []
        for i, k in enumerate(e):
            if k == 1:
                factors.append(self.ring.variable_name(i))
            elif k > 1:
                factors.append(f"{self.ring.variable_name(i)}^{k}")
        if not factors:
            return str(cs), cs < 0
        body = "*".join(factors)
        if cs == 1:
            return body, False
        if cs == -1:
            return body, True
        return f"{abs(cs)}*{body}", cs < 0

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for i, (e, c) in enumerate(self.terms):
            body, negative = self._term_str(e, c)
            body = body.lstrip("-")
            if i == 0:
                parts.append(("-" if negative else "") + body)
            else:
                parts.append(("- " if negative else "+ ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"<{self} over {self.ring}>"


def bidegree_of(f: Polynomial) -> Bidegree:
    """Common bidegree of a nonzero bihomogeneous polynomial."""
    return f.bidegree()


# ---------------------------------------------------------------------------
# parser
#
# term    = [integer *] factor (* factor)*  |  integer
# factor  = variable [^ positive-integer]
# variable = "x"k (1 <= k <= m) | "y"k (1 <= k <= n)
# terms joined by + and -; whitespace ignored.


def _tokenize(text):
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in "+-*^":
            tokens.append((ch, ch, i))
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("int", int(text[i:j]), i))
            i = j
            continue
        if ch in "xy":
            j = i + 1
            while j < len(text) and text[j].isdigit():
                j += 1
            if j == i + 1:
                raise ParseError(f"variable '{ch}' needs an index", i)
            tokens.append(("var", (ch, int(text[i + 1:j])), i))
            i = j
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(("end", None, len(text)))
    return tokens


def parse_poly(text: str, ring: RingSpec) -> Polynomial:
    """Parse a polynomial, normalizing coefficients mod p and collecting
    like terms.  Raises ParseError / UnknownVariableError with positions."""
    tokens = _tokenize(text)
    pos = 0

    def peek():
        return tokens[pos]

    def advance():
        nonlocal pos
        tok = tokens[pos]
        pos += 1
        return tok

    def var_index(name, at):
        block, k = name
        if block == "x":
            if not (1 <= k <= ring.m):
                raise UnknownVariableError(f"no variable x{k} (m={ring.m})", at)
            return k - 1
        if not (1 <= k <= ring.n):
            raise UnknownVariableError(f"no variable y{k} (n={ring.n})", at)
        return ring.m + k - 1

    def parse_term():
        coeff = 1
        expo = [0] * ring.nvars
        saw_atom = False
        while True:
            kind, value, at = peek()
            if kind == "int":
                advance()
                coeff = (coeff * value) % ring.p
            elif kind == "var":
                advance()
                idx = var_index(value, at)
                power = 1
                if peek()[0] == "^":
                    advance()
                    ekind, evalue, eat = advance()
                    if ekind != "int" or evalue < 1:
                        raise ParseError("exponent must be a positive integer",
                                         eat)
                    power = evalue
                expo[idx] += power
            else:
                raise ParseError("expected a coefficient or variable", at)
            saw_atom = True
            if peek()[0] == "*":
                advance()
                continue
            break
        if not saw_atom:
            raise ParseError("empty term", peek()[2])
        return coeff, tuple(expo)

    terms = {}
    sign = 1
    kind, _, at = peek()
    if kind in "+-":
        sign = -1 if kind == "-" else 1
        advance()
    while True:
        coeff, expo = parse_term()
        terms[expo] = terms.get(expo, 0) + sign * coeff
        kind, _, at = peek()
        if kind == "end":
            break
        if kind == "+":
            sign = 1
        elif kind == "-":
            sign = -1
        else:
            raise ParseError("expected '+', '-' or end of input", at)
        advance()
    return Polynomial.from_dict(ring, terms)
