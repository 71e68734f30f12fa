"""Exact scalars, weighted monomials, sparse polynomials and quotient rings.

Polynomials are stored as ``{exponent_tuple: coefficient}`` dictionaries.
Coefficients are plain Python ints reduced into ``[0, p)`` for a prime field
and :class:`fractions.Fraction` for the rationals; every constructor
canonicalises, so two equal polynomials always have equal dictionaries.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .errors import DegenerateRingError, HomogeneityError, ParseError, RingMismatchError

DEFAULT_CHARACTERISTIC = 32003


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


class Field:
    """A prime field GF(p), or the rationals when ``characteristic == 0``."""

    def __init__(self, characteristic: int = DEFAULT_CHARACTERISTIC):
        if characteristic and not _is_prime(characteristic):
            raise ValueError(f"characteristic {characteristic} is not prime")
        self.p = characteristic

    @classmethod
    def parse(cls, text: str) -> "Field":
        text = text.strip()
        if text in ("QQ", "Q"):
            return cls(0)
        m = re.fullmatch(r"(?:GF|F|ZZ/)\(?(\d+)\)?", text)
        if not m:
            raise ParseError(f"unknown field {text!r}")
        return cls(int(m.group(1)))

    @property
    def name(self) -> str:
        return f"GF({self.p})" if self.p else "QQ"

    def __call__(self, value):
        if self.p:
            if isinstance(value, Fraction):
                return value.numerator * pow(value.denominator, -1, self.p) % self.p
            return int(value) % self.p
        return Fraction(value)

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        if self.p:
            return pow(a, self.p - 2, self.p)
        return 1 / Fraction(a)

    def normalize(self, a):
        return a % self.p if self.p else a

    def random_element(self, rng, nonzero=False):
        if self.p:
            lo = 1 if nonzero else 0
            return rng.randrange(lo, self.p)
        while True:
            v = Fraction(rng.randint(-50, 50), rng.randint(1, 7))
            if v or not nonzero:
                return v

    def to_signed(self, a):
        """Symmetric representative, used only for printing."""
        if self.p and a > self.p // 2:
            return a - self.p
        return a

    def __eq__(self, other):
        return isinstance(other, Field) and other.p == self.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __repr__(self):
        return f"Field({self.name})"


# --- monomials as exponent tuples -------------------------------------------

def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a, b):
    return tuple(x - y for x, y in zip(a, b))


def mono_divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


def mono_coprime(a, b):
    return all(not (x and y) for x, y in zip(a, b))


@dataclass(frozen=True)
class TermOrder:
    """Weighted degree reverse lexicographic order.

    ``key(m)`` is increasing in the order: first the weighted degree, then the
    usual revlex tie-break (smaller exponent in the last variable wins).
    """

    weights: tuple

    def degree(self, exps) -> int:
        return sum(w * e for w, e in zip(self.weights, exps))

    def key(self, exps):
        return (self.degree(exps), tuple(-e for e in reversed(exps)))

    def compare(self, a, b) -> int:
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)


@dataclass(frozen=True)
class Monomial:
    exponents: tuple
    weighted_degree: int


class PolyRing:
    """Ambient weighted polynomial ring ``k[x_1..x_n]``."""

    def __init__(self, variables: Sequence[str], weights: Sequence[int] | None = None,
                 field: Field | None = None):
        self.variables = tuple(variables)
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("duplicate variable names")
        self.weights = tuple(weights) if weights is not None else (1,) * len(self.variables)
        if len(self.weights) != len(self.variables):
            raise ValueError("one weight per variable required")
        if any(w <= 0 for w in self.weights):
            raise ValueError("weights must be positive")
        self.field = field or Field()
        self.order = TermOrder(self.weights)
        self.nvars = len(self.variables)
        self.one_mono = (0,) * self.nvars

    def __eq__(self, other):
        return (isinstance(other, PolyRing) and self.variables == other.variables
                and self.weights == other.weights and self.field == other.field)

    def __hash__(self):
        return hash((self.variables, self.weights, self.field))

    def __repr__(self):
        return f"{self.field.name}[{','.join(self.variables)}] weights {list(self.weights)}"

    @property
    def standard_graded(self) -> bool:
        return all(w == 1 for w in self.weights)

    def degree(self, exps) -> int:
        return self.order.degree(exps)

    def var(self, name: str) -> "Polynomial":
        i = self.variables.index(name)
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial(self, {tuple(e): 1})

    def gens(self):
        return [self.var(v) for v in self.variables]

    def const(self, c) -> "Polynomial":
        c = self.field(c)
        return Polynomial(self, {self.one_mono: c} if c else {})

    def zero(self):
        return Polynomial(self, {})

    def one(self):
        return self.const(1)

    def __call__(self, expr) -> "Polynomial":
        if isinstance(expr, Polynomial):
            if expr.ring != self:
                raise RingMismatchError(f"{expr.ring!r} vs {self!r}")
            return expr
        if isinstance(expr, (int, Fraction)):
            return self.const(expr)
        return parse_polynomial(str(expr), self)


class Polynomial:
    """Immutable sparse polynomial over a :class:`PolyRing`."""

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self._terms = terms
        self._hash = None

    @classmethod
    def from_terms(cls, ring, items):
        f = ring.field
        acc = {}
        for m, c in items:
            acc[m] = acc.get(m, 0) + c
        return cls(ring, {m: f(c) for m, c in acc.items() if f(c)})

    @property
    def raw(self) -> dict:
        return self._terms

    @property
    def terms(self):
        """(coefficient, Monomial) pairs, strictly descending in the term order."""
        ms = sorted(self._terms, key=self.ring.order.key, reverse=True)
        return [(self._terms[m], Monomial(m, self.ring.degree(m))) for m in ms]

    def leading_monomial(self):
        return max(self._terms, key=self.ring.order.key) if self._terms else None

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {self.ring.one_mono}

    def constant_coefficient(self):
        return self._terms.get(self.ring.one_mono, 0)

    def degrees(self) -> set:
        return {self.ring.degree(m) for m in self._terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    @property
    def degree(self):
        ds = self.degrees()
        if not ds:
            return None
        if len(ds) > 1:
            raise HomogeneityError(f"{self} is not weighted-homogeneous")
        return ds.pop()

    def support_variables(self) -> set:
        return {i for m in self._terms for i, e in enumerate(m) if e}

    def _check(self, other):
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        if other.ring != self.ring:
            raise RingMismatchError(f"operands live in {self.ring!r} and {other.ring!r}")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        f = self.ring.field
        out = dict(self._terms)
        for m, c in other._terms.items():
            v = f.normalize(out.get(m, 0) + c)
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        f = self.ring.field
        return Polynomial(self.ring, {m: f.normalize(-c) for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        f = self.ring.field
        out = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return Polynomial(self.ring, {m: f.normalize(c) for m, c in out.items() if f.normalize(c)})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative exponent")
        out = self.ring.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def scale(self, c):
        f = self.ring.field
        c = f(c)
        if not c:
            return self.ring.zero()
        return Polynomial(self.ring, {m: f.normalize(a * c) for m, a in self._terms.items()})

    def derivative(self, name: str):
        i = self.ring.variables.index(name)
        f = self.ring.field
        out = {}
        for m, c in self._terms.items():
            if m[i]:
                e = list(m)
                e[i] -= 1
                v = f.normalize(c * m[i])
                if v:
                    out[tuple(e)] = v
        return Polynomial(self.ring, out)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        return isinstance(other, Polynomial) and other.ring == self.ring and other._terms == self._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def __str__(self):
        return format_poly(self._terms, self.ring)

    def __repr__(self):
        return f"Polynomial({self})"


def format_poly(terms: dict, ring: PolyRing) -> str:
    if not terms:
        return "0"
    out = []
    for m in sorted(terms, key=ring.order.key, reverse=True):
        c = ring.field.to_signed(terms[m])
        factors = []
        for v, e in zip(ring.variables, m):
            if e == 1:
                factors.append(v)
            elif e:
                factors.append(f"{v}^{e}")
        mono = "*".join(factors)
        neg = c < 0
        a = -c if neg else c
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        if not out:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


# --- expression parser --------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*^()/]))")


def _tokenize(text: str):
    pos = 0
    out = []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"cannot parse {text!r} at position {pos}")
        num, ident, op = m.groups()
        if num is not None:
            out.append(("num", int(num)))
        elif ident is not None:
            out.append(("id", ident))
        else:
            out.append(("op", "^" if op == "**" else op))
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    return out


def parse_polynomial(text: str, ring: PolyRing) -> Polynomial:
    """Parse ``+ - * ^ ( )`` expressions with integer literals and ring variables."""
    toks = _tokenize(text)
    i = 0

    def peek():
        return toks[i] if i < len(toks) else (None, None)

    def take():
        nonlocal i
        t = toks[i]
        i += 1
        return t

    def expr():
        v = term()
        while peek() in (("op", "+"), ("op", "-")):
            op = take()[1]
            rhs = term()
            v = v + rhs if op == "+" else v - rhs
        return v

    def term():
        v = unary()
        while peek() in (("op", "*"), ("op", "/")):
            op = take()[1]
            rhs = unary()
            if op == "*":
                v = v * rhs
            else:
                if not rhs.is_constant() or rhs.is_zero():
                    raise ParseError("division only by nonzero constants")
                v = v.scale(ring.field.inv(rhs.constant_coefficient()))
        return v

    def unary():
        if peek() == ("op", "-"):
            take()
            return -unary()
        if peek() == ("op", "+"):
            take()
            return unary()
        return power()

    def power():
        base = atom()
        if peek() == ("op", "^"):
            take()
            kind, val = take()
            if kind != "num":
                raise ParseError("exponent must be a non-negative integer")
            return base ** val
        return base

    def atom():
        kind, val = peek()
        if kind == "num":
            take()
            return ring.const(val)
        if kind == "id":
            take()
            if val not in ring.variables:
                raise ParseError(f"unknown variable {val!r} (ring has {ring.variables})")
            return ring.var(val)
        if (kind, val) == ("op", "("):
            take()
            v = expr()
            if take() != ("op", ")"):
                raise ParseError("unbalanced parentheses")
            return v
        raise ParseError(f"unexpected token {val!r} in {text!r}")

    if not toks:
        raise ParseError("empty expression")
    out = expr()
    if i != len(toks):
        raise ParseError(f"trailing input in {text!r}")
    return out


# --- quotient rings -----------------------------------------------------------

class QuotientRing:
    """``k[x_1..x_n]/I`` for a weighted-homogeneous ideal ``I``.

    The maximal ideal is always the ideal generated by all variables.
    """

    def __init__(self, ambient: PolyRing, ideal_generators: Iterable[Polynomial] = (), name=None):
        self.ambient = ambient
        self.ideal_generators = tuple(ideal_generators)
        self.name = name
        for g in self.ideal_generators:
            if g.ring != ambient:
                raise RingMismatchError("generator outside the ambient ring")
            if not g.is_homogeneous():
                bad = _offending_term(g)
                raise HomogeneityError(f"generator {g} is not weighted-homogeneous (offending term {bad})")
        from .groebner import ideal_groebner_basis

        self._gb = ideal_groebner_basis(ambient, [g.raw for g in self.ideal_generators if g])
        if any(set(g) == {ambient.one_mono} for g in self._gb):
            raise DegenerateRingError("the ideal is the unit ideal; the quotient is the zero ring")

    # convenience accessors
    @property
    def variables(self):
        return self.ambient.variables

    @property
    def weights(self):
        return self.ambient.weights

    @property
    def field(self):
        return self.ambient.field

    @property
    def nvars(self):
        return self.ambient.nvars

    @property
    def standard_graded(self):
        return self.ambient.standard_graded

    @property
    def reduced_gb(self):
        return [Polynomial(self.ambient, dict(g)) for g in self._gb]

    @property
    def gb_raw(self):
        return self._gb

    def __eq__(self, other):
        return (isinstance(other, QuotientRing) and other.ambient == self.ambient
                and self._key == other._key)

    @cached_property
    def _key(self):
        return frozenset(frozenset(g.items()) for g in self._gb)

    def __hash__(self):
        return hash((self.ambient, self._key))

    def __repr__(self):
        gens = ", ".join(str(g) for g in self.ideal_generators)
        return f"{self.ambient.field.name}[{','.join(self.variables)}]/({gens})"

    def __call__(self, expr) -> Polynomial:
        return self.reduce(self.ambient(expr))

    def var(self, name):
        return self.ambient.var(name)

    def gens(self):
        return self.ambient.gens()

    def reduce(self, f: Polynomial) -> Polynomial:
        if f.ring != self.ambient:
            raise RingMismatchError("element of a different ring")
        from .groebner import reduce_poly

        return Polynomial(self.ambient, reduce_poly(f.raw, self._gb, self.ambient))

    def is_zero(self, f: Polynomial) -> bool:
        return self.reduce(f).is_zero()

    def quotient(self, extra: Iterable) -> "QuotientRing":
        extra = [self.ambient(e) for e in extra]
        return QuotientRing(self.ambient, list(self.ideal_generators) + extra)

    def maximal_ideal_generators(self):
        return [g for g in self.gens() if not self.is_zero(g)]

    def modeling_note(self) -> str:
        return ("power series ring modeled by its weighted-graded polynomial avatar "
                f"{self!r}; local statements refer to the localization at the homogeneous maximal ideal")

    def describe(self) -> dict:
        return {
            "field": self.field.name,
            "variables": list(self.variables),
            "weights": list(self.weights),
            "generators": [str(g) for g in self.ideal_generators],
            "reduced_gb": [str(g) for g in self.reduced_gb],
        }


def _offending_term(g: Polynomial) -> str:
    degs = {}
    for m in g.raw:
        degs.setdefault(g.ring.degree(m), []).append(m)
    lead_deg = g.ring.degree(g.leading_monomial())
    for d, ms in degs.items():
        if d != lead_deg:
            return format_poly({ms[0]: g.raw[ms[0]]}, g.ring)
    return str(g)


def make_quotient_ring(variables, weights=None, field=None, generators=(), name=None) -> QuotientRing:
    """Build ``k[variables]/(generators)``; generators may be strings or Polynomials."""
    if isinstance(field, (int, str)) or field is None:
        field = Field.parse(field) if isinstance(field, str) else Field(field if field is not None else DEFAULT_CHARACTERISTIC)
    amb = PolyRing(variables, weights, field)
    gens = [amb(g) for g in generators]
    return QuotientRing(amb, gens, name=name)


def poly_arith(op: str, a: Polynomial, b) -> Polynomial:
    """``op`` in {'add', 'sub', 'mul', 'scalar_mul'}; ``b`` is a scalar for scalar_mul."""
    if op == "scalar_mul":
        return a.scale(b)
    if not isinstance(b, Polynomial) or b.ring != a.ring:
        raise RingMismatchError("operands must share one ambient ring")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")
