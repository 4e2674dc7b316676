"""Exact symbolic kernel: weights, characters, polynomials, Euler classes.

All arithmetic is over arbitrary-precision rationals (``fractions.Fraction``);
there is no floating point anywhere in the package.  The base ring is
Q[t_1, ..., t_N, h].  A *weight* is an integral linear form
``a_1*t_1 + ... + a_N*t_N + m*h``; a *character* is a finite multiset of
weights with (possibly negative, mid-computation) integer multiplicities,
written additively.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import errors

# ---------------------------------------------------------------------------
# weights


@dataclass(frozen=True)
class Weight:
    """Linear form sum(a[i] * t_{i+1}) + m * h with integer coefficients."""

    a: tuple
    m: int

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(int(x) for x in self.a))

    @property
    def nvars(self):
        return len(self.a)

    def __add__(self, other):
        self._check(other)
        return Weight(tuple(x + y for x, y in zip(self.a, other.a)), self.m + other.m)

    def __sub__(self, other):
        self._check(other)
        return Weight(tuple(x - y for x, y in zip(self.a, other.a)), self.m - other.m)

    def __neg__(self):
        return Weight(tuple(-x for x in self.a), -self.m)

    def _check(self, other):
        if self.nvars != other.nvars:
            raise ValueError("weights live over different variable counts")

    def is_zero(self):
        return self.m == 0 and all(x == 0 for x in self.a)

    def a_part_zero(self):
        return all(x == 0 for x in self.a)

    def involution(self):
        """The symplectic pairing partner h - w."""
        return Weight(tuple(-x for x in self.a), 1 - self.m)

    def shift_h(self, dm):
        return Weight(self.a, self.m + dm)

    def substitute(self, i, dm=1):
        """Apply t_i -> t_i + dm*h (the Hanany-Witten torus twist)."""
        return Weight(self.a, self.m + dm * self.a[i - 1])

    def difference_indices(self):
        """Return (i, j) if the A-part is exactly t_i - t_j, else None."""
        plus = [k + 1 for k, x in enumerate(self.a) if x == 1]
        minus = [k + 1 for k, x in enumerate(self.a) if x == -1]
        others = [x for x in self.a if x not in (0, 1, -1)]
        if len(plus) == 1 and len(minus) == 1 and not others:
            return plus[0], minus[0]
        return None

    def to_poly(self):
        p = Poly.zero(self.nvars)
        for k, x in enumerate(self.a):
            if x:
                p = p + Poly.variable(self.nvars, k + 1) * x
        if self.m:
            p = p + Poly.variable(self.nvars, 0) * self.m
        return p

    def render(self):
        if self.is_zero():
            return "0"
        parts = []
        for k, x in enumerate(self.a):
            if x:
                parts.append((x, f"t{k + 1}"))
        if self.m:
            parts.append((self.m, "h"))
        out = ""
        for coeff, name in parts:
            sign = "-" if coeff < 0 else "+"
            mag = abs(coeff)
            body = name if mag == 1 else f"{mag}*{name}"
            if not out:
                out = body if coeff > 0 else f"-{body}"
            else:
                out += f"{sign}{body}"
        return out

    def __repr__(self):
        return f"Weight({self.render()})"

    def sort_key(self):
        return (self.m, self.a)


def t(i, nvars):
    """The weight t_i over N = nvars variables."""
    return Weight(tuple(1 if k == i - 1 else 0 for k in range(nvars)), 0)


def h(nvars):
    """The weight h over N = nvars variables."""
    return Weight((0,) * nvars, 1)


# ---------------------------------------------------------------------------
# characters


class Character:
    """Finite integer-multiplicity multiset of weights (additive notation).

    Negative multiplicities are legal mid-computation (virtual characters);
    finished tangent characters must be effective.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        self.terms = {}
        if terms:
            for w, mult in dict(terms).items():
                if mult:
                    self.terms[w] = mult

    @classmethod
    def from_weights(cls, nvars, weights):
        c = cls(nvars)
        for w in weights:
            c.terms[w] = c.terms.get(w, 0) + 1
            if c.terms[w] == 0:
                del c.terms[w]
        return c

    def copy(self):
        return Character(self.nvars, dict(self.terms))

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, Character) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def _merge(self, other, sign):
        out = dict(self.terms)
        for w, mult in other.terms.items():
            out[w] = out.get(w, 0) + sign * mult
            if out[w] == 0:
                del out[w]
        return Character(self.nvars, out)

    def __add__(self, other):
        return self._merge(other, 1)

    def __sub__(self, other):
        return self._merge(other, -1)

    def __mul__(self, other):
        """Convolution: char(V (x) W) = char V * char W."""
        out = {}
        for w1, m1 in self.terms.items():
            for w2, m2 in other.terms.items():
                w = w1 + w2
                out[w] = out.get(w, 0) + m1 * m2
                if out[w] == 0:
                    del out[w]
        return Character(self.nvars, out)

    def scale(self, k):
        return Character(self.nvars, {w: k * m for w, m in self.terms.items()})

    def dual(self):
        return Character(self.nvars, {-w: m for w, m in self.terms.items()})

    def shift(self, w):
        """Multiply by the one-dimensional character of weight w."""
        return Character(self.nvars, {wt + w: m for wt, m in self.terms.items()})

    def substitute(self, i, dm=1):
        out = {}
        for w, mult in self.terms.items():
            w2 = w.substitute(i, dm)
            out[w2] = out.get(w2, 0) + mult
        return Character(self.nvars, out)

    def involution_image(self):
        return Character(self.nvars, {w.involution(): m for w, m in self.terms.items()})

    def is_effective(self):
        return all(m > 0 for m in self.terms.values())

    def total(self):
        """Total multiplicity = dimension of the represented space."""
        return sum(self.terms.values())

    def weights(self):
        """All weights with multiplicity, canonically sorted."""
        out = []
        for w in sorted(self.terms, key=Weight.sort_key):
            out.extend([w] * self.terms[w])
        return out

    def render(self):
        if not self.terms:
            return "0"
        return " + ".join(
            w.render() if m == 1 else f"{m}*({w.render()})"
            for w, m in sorted(self.terms.items(), key=lambda kv: kv[0].sort_key())
        )

    def __repr__(self):
        return f"Character({self.render()})"


# ---------------------------------------------------------------------------
# polynomials

# Exponent tuples are (e_1, ..., e_N, e_h).  The canonical term order is
# graded lexicographic with h ranked above every t_i.


def _term_key(exps):
    return (sum(exps), exps[-1], exps[:-1])


class Poly:
    """Exact multivariate polynomial in t_1..t_N, h over Q."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        self.terms = {}
        if terms:
            for e, c in terms.items():
                c = Fraction(c)
                if c:
                    self.terms[tuple(e)] = c

    @classmethod
    def zero(cls, nvars):
        return cls(nvars)

    @classmethod
    def const(cls, nvars, c):
        c = Fraction(c)
        if not c:
            return cls(nvars)
        return cls(nvars, {(0,) * (nvars + 1): c})

    @classmethod
    def variable(cls, nvars, i):
        """t_i for i in 1..N, or h for i = 0."""
        e = [0] * (nvars + 1)
        if i == 0:
            e[nvars] = 1
        else:
            e[i - 1] = 1
        return cls(nvars, {tuple(e): Fraction(1)})

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return not self.terms or set(self.terms) == {(0,) * (self.nvars + 1)}

    def constant_value(self):
        return self.terms.get((0,) * (self.nvars + 1), Fraction(0))

    def __eq__(self, other):
        return isinstance(other, Poly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def _coerce(self, other):
        if isinstance(other, Poly):
            return other
        return Poly.const(self.nvars, other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, Fraction(0)) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Poly(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                s = out.get(e, Fraction(0)) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return Poly(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a Poly")
        result = Poly.const(self.nvars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def mod_h(self):
        """Substitute h -> 0 (delete every monomial containing h)."""
        return Poly(
            self.nvars, {e: c for e, c in self.terms.items() if e[-1] == 0}
        )

    def degree(self):
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self, d=None):
        if not self.terms:
            return True
        degs = {sum(e) for e in self.terms}
        if len(degs) != 1:
            return False
        return d is None or degs == {d}

    def leading(self):
        """Leading (exponent, coefficient) in the canonical term order."""
        e = max(self.terms, key=_term_key)
        return e, self.terms[e]

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda ec: _term_key(ec[0]), reverse=True)

    def substitute(self, i, dm=1):
        """Apply t_i -> t_i + dm*h, exactly."""
        ti = Poly.variable(self.nvars, i) + Poly.variable(self.nvars, 0) * dm
        out = Poly.zero(self.nvars)
        for e, c in self.terms.items():
            mono = Poly.const(self.nvars, c)
            for k, exp in enumerate(e[:-1]):
                if exp:
                    base = ti if k == i - 1 else Poly.variable(self.nvars, k + 1)
                    mono = mono * base**exp
            if e[-1]:
                mono = mono * Poly.variable(self.nvars, 0) ** e[-1]
            out = out + mono
        return out

    def _render_monomial(self, e):
        parts = []
        if e[-1]:
            parts.append("h" if e[-1] == 1 else f"h^{e[-1]}")
        for k, exp in enumerate(e[:-1]):
            if exp:
                parts.append(f"t{k + 1}" if exp == 1 else f"t{k + 1}^{exp}")
        return "*".join(parts)

    def render(self):
        """Canonical rendering in the expression grammar.

        Terms appear in descending canonical order; the heaviest variable h
        is written first inside each monomial.
        """
        if not self.terms:
            return "0"
        out = ""
        for e, c in self.sorted_terms():
            mono = self._render_monomial(e)
            mag = abs(c)
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{mag}*{mono}"
            else:
                body = str(mag)
            if not out:
                out = body if c > 0 else f"-{body}"
            else:
                out += f" + {body}" if c > 0 else f" - {body}"
        return out

    def __repr__(self):
        return f"Poly({self.render()})"


# ---------------------------------------------------------------------------
# expression parser
#
# expr   := ['-'] term (('+'|'-') term)*
# term   := factor ('*' factor)*
# factor := atom ('^' uint)?
# atom   := int | 't' uint | 'h' | '(' expr ')'
#
# The optional leading '-' is a strict extension of the grammar so that
# canonical renderings (which may start with a negative term) round-trip.


class _Tokens:
    def __init__(self, src):
        self.src = src
        self.pos = 0

    def peek(self):
        while self.pos < len(self.src) and self.src[self.pos].isspace():
            self.pos += 1
        if self.pos >= len(self.src):
            return None
        return self.src[self.pos]

    def error(self, message):
        raise errors.SyntaxError(message, self.pos)

    def take_uint(self):
        start = self.pos
        while self.pos < len(self.src) and self.src[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self.error("expected a digit")
        return int(self.src[start : self.pos])


def _parse_expr(tok, nvars):
    sign = 1
    if tok.peek() == "-":
        tok.pos += 1
        sign = -1
    p = _parse_term(tok, nvars) * sign
    while tok.peek() in ("+", "-"):
        op = tok.peek()
        tok.pos += 1
        q = _parse_term(tok, nvars)
        p = p + q if op == "+" else p - q
    return p


def _parse_term(tok, nvars):
    p = _parse_factor(tok, nvars)
    while tok.peek() == "*":
        tok.pos += 1
        p = p * _parse_factor(tok, nvars)
    return p


def _parse_factor(tok, nvars):
    p = _parse_atom(tok, nvars)
    if tok.peek() == "^":
        tok.pos += 1
        return p ** tok.take_uint()
    return p


def _parse_atom(tok, nvars):
    c = tok.peek()
    if c is None:
        tok.error("unexpected end of expression")
    if c == "(":
        tok.pos += 1
        p = _parse_expr(tok, nvars)
        if tok.peek() != ")":
            tok.error("expected ')'")
        tok.pos += 1
        return p
    if c == "h":
        tok.pos += 1
        return Poly.variable(nvars, 0)
    if c == "t":
        tok.pos += 1
        at = tok.pos
        i = tok.take_uint()
        if not 1 <= i <= nvars:
            raise errors.UnknownVariable(f"t{i} with N={nvars}", at)
        return Poly.variable(nvars, i)
    if c.isdigit():
        return Poly.const(nvars, tok.take_uint())
    tok.error(f"unexpected character {c!r}")


def poly_parse(expr, nvars):
    """Parse an expression in t1..tN, h into canonical :class:`Poly` form."""
    tok = _Tokens(expr)
    p = _parse_expr(tok, nvars)
    if tok.peek() is not None:
        tok.error("trailing input")
    return p


def mod_h(p):
    """Substitute h -> 0; p is divisible by h iff the result is zero."""
    return p.mod_h()


def exact_divide(p, q):
    """Return r with p = q*r, or raise :class:`errors.NotDivisible`."""
    if q.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    r = Poly.zero(p.nvars)
    rem = p
    qe, qc = q.leading()
    while not rem.is_zero():
        re, rc = rem.leading()
        e = tuple(x - y for x, y in zip(re, qe))
        if any(x < 0 for x in e):
            raise errors.NotDivisible(f"({p.render()}) / ({q.render()})")
        mono = Poly(p.nvars, {e: rc / qc})
        r = r + mono
        rem = rem - mono * q
    return r


# ---------------------------------------------------------------------------
# factored classes and rational functions


class FactoredClass:
    """constant * product of linear forms (weights) with positive exponents.

    Houses Euler classes; kept factored so that rational-function
    cancellation never needs a multivariate GCD.
    """

    __slots__ = ("nvars", "constant", "factors")

    def __init__(self, nvars, constant=1, factors=()):
        self.nvars = nvars
        self.constant = Fraction(constant)
        merged = {}
        for w, exp in factors:
            if exp < 0:
                raise ValueError("factor exponents must be positive")
            if exp:
                merged[w] = merged.get(w, 0) + exp
        self.factors = tuple(
            sorted(merged.items(), key=lambda we: we[0].sort_key())
        )

    @classmethod
    def one(cls, nvars):
        return cls(nvars)

    @classmethod
    def from_character(cls, char):
        """Euler class of an effective character: product of its weights."""
        if not char.is_effective():
            raise errors.NonEffective(char.render())
        return cls(char.nvars, 1, list(char.terms.items()))

    def is_zero(self):
        return self.constant == 0

    def degree(self):
        return sum(exp for _, exp in self.factors)

    def expand(self):
        p = Poly.const(self.nvars, self.constant)
        for w, exp in self.factors:
            p = p * w.to_poly() ** exp
        return p

    def __mul__(self, other):
        if isinstance(other, FactoredClass):
            return FactoredClass(
                self.nvars,
                self.constant * other.constant,
                self.factors + other.factors,
            )
        return FactoredClass(self.nvars, self.constant * Fraction(other), self.factors)

    def __eq__(self, other):
        return (
            isinstance(other, FactoredClass)
            and self.constant == other.constant
            and self.factors == other.factors
        )

    def __hash__(self):
        return hash((self.constant, self.factors))

    def render(self):
        if self.is_zero():
            return "0"
        parts = []
        if self.constant != 1 or not self.factors:
            parts.append(str(self.constant))
        for w, exp in self.factors:
            body = f"({w.render()})"
            parts.append(body if exp == 1 else f"{body}^{exp}")
        return "*".join(parts)

    def __repr__(self):
        return f"FactoredClass({self.render()})"


def integer_ratio_mod_h(p, e):
    """The integer a with modH(p) = a * modH(expand(e)) (Cor-style ratio).

    Raises :class:`errors.NotProportional` when no such integer exists.
    """
    den = e.expand().mod_h()
    if den.is_zero():
        raise ValueError("denominator vanishes mod h")
    num = p.mod_h()
    if num.is_zero():
        return 0
    try:
        q = exact_divide(num, den)
    except errors.NotDivisible:
        raise errors.NotProportional(
            f"{num.render()} vs {den.render()}"
        ) from None
    if not q.is_constant():
        raise errors.NotProportional(f"ratio {q.render()} is not constant")
    c = q.constant_value()
    if c.denominator != 1:
        raise errors.NotProportional(f"ratio {c} is not an integer")
    return int(c)


class RationalFn:
    """numerator / factored denominator with eager linear cancellation."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if den is None:
            den = FactoredClass.one(num.nvars)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        # cancel linear denominator factors that exactly divide the numerator
        kept = []
        for w, exp in den.factors:
            wp = w.to_poly()
            while exp and not num.is_zero():
                try:
                    num = exact_divide(num, wp)
                except errors.NotDivisible:
                    break
                exp -= 1
            if exp:
                kept.append((w, exp))
        if num.is_zero():
            kept = []
        if den.constant != 1:
            num = num * (1 / den.constant)
        self.num = num
        self.den = FactoredClass(num.nvars, 1, kept)

    @classmethod
    def from_poly(cls, p):
        return cls(p)

    @classmethod
    def const(cls, nvars, c):
        return cls(Poly.const(nvars, c))

    def is_polynomial(self):
        return not self.den.factors

    def is_zero(self):
        return self.num.is_zero()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RationalFn.const(self.num.nvars, other)
        if isinstance(other, Poly):
            other = RationalFn(other)
        return (self.num * other.den.expand()) == (other.num * self.den.expand())

    def __hash__(self):
        # canonical only up to cancellation; fine for our fully reduced values
        return hash((self.num, self.den))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RationalFn.const(self.num.nvars, other)
        num = self.num * other.den.expand() + other.num * self.den.expand()
        return RationalFn(num, self.den * other.den)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RationalFn.const(self.num.nvars, other)
        num = self.num * other.den.expand() - other.num * self.den.expand()
        return RationalFn(num, self.den * other.den)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RationalFn.const(self.num.nvars, other)
        if isinstance(other, Poly):
            other = RationalFn(other)
        return RationalFn(self.num * other.num, self.den * other.den)

    def render(self):
        if self.is_polynomial():
            return self.num.render()
        return f"({self.num.render()}) / ({self.den.render()})"

    def __repr__(self):
        return f"RationalFn({self.render()})"
