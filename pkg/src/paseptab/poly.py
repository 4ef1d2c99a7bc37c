"""Exact arithmetic for polynomials in the three variables q, a, b.

Throughout the package a stands for 1/alpha and b for 1/beta, so every
stationary weight of the exclusion process is a polynomial in q, a, b with
nonnegative integer coefficients.  Coefficients are Python ints, so nothing
ever overflows, and differences of weights (used by the monotonicity checks)
may carry negative coefficients.

Exponents are signed.  Negative exponents never reach a user-facing
generating function, but they do occur in two internal spots: the
lower-triangular transfer matrix has entries proportional to powers of 1/b,
and the q-Eulerian closed form passes through a q^(k-k^2) prefactor whose
negative powers cancel only at the very end.

A polynomial is stored as a mapping {(e_q, e_a, e_b): coeff} with zero
coefficients dropped, so equality is plain dict equality.  Canonical term
order, used by serialization and all golden tests, is ascending q-exponent,
then ascending b-exponent, then descending a-exponent.
"""

from __future__ import annotations

from fractions import Fraction

# exponents of (q, a, b)
Monomial = tuple[int, int, int]

_VARS = "qab"


class PolyParseError(ValueError):
    """Malformed polynomial text; carries the offending position."""

    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def _sort_key(mono):
    eq, ea, eb = mono
    return (eq, eb, -ea)


class Poly:
    """Immutable polynomial in q, a, b with int coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for mono, coeff in terms.items():
                if coeff:
                    clean[tuple(mono)] = coeff
        self._terms = clean
        self._hash = None

    @classmethod
    def zero(cls):
        return _ZERO

    @classmethod
    def one(cls):
        return _ONE

    @classmethod
    def const(cls, c):
        return cls({(0, 0, 0): int(c)})

    @classmethod
    def monomial(cls, coeff, e_q=0, e_a=0, e_b=0):
        return cls({(e_q, e_a, e_b): int(coeff)})

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other):
        if isinstance(other, int):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        terms = dict(self._terms)
        for mono, coeff in other._terms.items():
            terms[mono] = terms.get(mono, 0) + coeff
        return Poly(terms)

    __radd__ = __add__

    def __neg__(self):
        return Poly({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return Poly.const(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return _ZERO
            return Poly({m: c * other for m, c in self._terms.items()})
        if not isinstance(other, Poly):
            return NotImplemented
        terms = {}
        for (q1, a1, b1), c1 in self._terms.items():
            for (q2, a2, b2), c2 in other._terms.items():
                mono = (q1 + q2, a1 + a2, b1 + b2)
                terms[mono] = terms.get(mono, 0) + c1 * c2
        return Poly(terms)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out = _ONE
        for _ in range(n):
            out = out * self
        return out

    def is_nonnegative(self):
        """True when every coefficient is nonnegative."""
        return all(c > 0 for c in self._terms.values())

    def is_polynomial(self):
        """True when no exponent is negative (no Laurent part)."""
        return all(e >= 0 for mono in self._terms for e in mono)

    def coeff(self, e_q, e_a, e_b):
        return self._terms.get((e_q, e_a, e_b), 0)

    def subs_ab_one(self):
        """Set a = b = 1, leaving a polynomial in q alone."""
        terms = {}
        for (eq, _, _), c in self._terms.items():
            mono = (eq, 0, 0)
            terms[mono] = terms.get(mono, 0) + c
        return Poly(terms)

    def evaluate(self, q, alpha, beta):
        """Exact value at q, with a = 1/alpha and b = 1/beta."""
        q = Fraction(q)
        alpha = Fraction(alpha)
        beta = Fraction(beta)
        if alpha == 0:
            raise ValueError("alpha must be nonzero")
        if beta == 0:
            raise ValueError("beta must be nonzero")
        a = 1 / alpha
        b = 1 / beta
        total = Fraction(0)
        for (eq, ea, eb), c in self._terms.items():
            total += c * q**eq * a**ea * b**eb
        return total

    def eval_q(self, q):
        """Value at a = b = 1 (any q, including negative test points)."""
        q = Fraction(q)
        total = Fraction(0)
        for (eq, _, _), c in self._terms.items():
            total += c * q**eq
        return total

    def serialize(self):
        """Canonical text form; parse() inverts it."""
        if not self._terms:
            return "0"
        parts = []
        for mono in sorted(self._terms, key=_sort_key):
            parts.append(_term_text(mono, self._terms[mono]))
        return " + ".join(parts)

    def __str__(self):
        return self.serialize()

    def __repr__(self):
        return f"Poly({self.serialize()!r})"


_ZERO = Poly()
_ONE = Poly({(0, 0, 0): 1})

Q = Poly({(1, 0, 0): 1})
A = Poly({(0, 1, 0): 1})
B = Poly({(0, 0, 1): 1})


def _term_text(mono, coeff):
    pieces = []
    for var, e in zip(_VARS, mono):
        if e == 1:
            pieces.append(var)
        elif e != 0:
            pieces.append(f"{var}^{e}")
    if not pieces:
        return str(coeff)
    if coeff != 1:
        pieces.insert(0, str(coeff))
    return "*".join(pieces)


def parse(text):
    """Parse the canonical grammar: terms joined by '+', each term an
    optional integer coefficient and variables q, a, b with optional
    integer exponents, '*' separators optional, whitespace ignored."""
    if not isinstance(text, str):
        raise PolyParseError("input must be a string", 0)
    pos = 0
    n = len(text)

    def skip_ws(i):
        while i < n and text[i].isspace():
            i += 1
        return i

    def read_int(i, what):
        j = i
        if j < n and text[j] == "-":
            j += 1
        start_digits = j
        while j < n and text[j].isdigit():
            j += 1
        if j == start_digits:
            raise PolyParseError(f"expected {what}", i)
        return int(text[i:j]), j

    terms = {}
    pos = skip_ws(pos)
    if pos == n:
        raise PolyParseError("empty input", pos)
    while True:
        # one term
        coeff = 1
        exps = [0, 0, 0]
        saw_anything = False
        pos = skip_ws(pos)
        if pos < n and (text[pos].isdigit() or text[pos] == "-"):
            coeff, pos = read_int(pos, "integer coefficient")
            saw_anything = True
        while True:
            pos = skip_ws(pos)
            mark = pos
            if pos < n and text[pos] == "*":
                pos = skip_ws(pos + 1)
                if pos >= n or text[pos] not in _VARS:
                    raise PolyParseError("expected a variable after '*'", pos)
            if pos < n and text[pos] in _VARS:
                var_index = _VARS.index(text[pos])
                pos += 1
                e = 1
                here = skip_ws(pos)
                if here < n and text[here] == "^":
                    e, pos = read_int(skip_ws(here + 1), "integer exponent")
                exps[var_index] += e
                saw_anything = True
            else:
                pos = mark
                break
        if not saw_anything:
            raise PolyParseError("empty term", pos)
        mono = tuple(exps)
        terms[mono] = terms.get(mono, 0) + coeff
        pos = skip_ws(pos)
        if pos == n:
            break
        if text[pos] != "+":
            raise PolyParseError(f"unexpected character {text[pos]!r}", pos)
        pos += 1
    return Poly(terms)
