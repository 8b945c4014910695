"""Exact scalar arithmetic for the indicator computations.

Three coefficient fields are supported:

* the rationals (plain ``fractions.Fraction``),
* cyclotomic fields Q(z), z a primitive n-th root of unity,
* rational functions Q(q) in a single variable.

Every element is kept in a canonical form (cyclotomics reduced modulo the
n-th cyclotomic polynomial, rational functions with coprime numerator and
monic denominator), so equality is literal coefficient comparison and
repeated runs print identical strings.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache


class FieldMismatch(Exception):
    """Raised when scalars from different fields are combined."""

    def __init__(self, message, pos=None):
        super().__init__(message)
        self.pos = pos


class ParseError(Exception):
    """Scalar text that does not match the grammar; carries the offset."""

    def __init__(self, message, pos):
        super().__init__("%s at position %d" % (message, pos))
        self.pos = pos


# ---------------------------------------------------------------------------
# dense polynomials over Q, represented as trimmed tuples of Fraction
# (index = degree, no trailing zeros, () is the zero polynomial)

def _trim(cs):
    cs = list(cs)
    while cs and not cs[-1]:
        cs.pop()
    return tuple(cs)


def poly_add(a, b):
    n = max(len(a), len(b))
    return _trim((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                 for i in range(n))


def poly_neg(a):
    return tuple(-c for c in a)


def poly_sub(a, b):
    return poly_add(a, poly_neg(b))


def poly_mul(a, b):
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return _trim(out)


def poly_divmod(a, b):
    """Quotient and remainder of a by b (b nonzero), exact over Q."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1] / lead
        if c:
            q[i] = c
            for j, bj in enumerate(b):
                a[i + j] -= c * bj
    return _trim(q), _trim(a)


def poly_monic(a):
    if not a:
        return a
    lead = a[-1]
    if lead == 1:
        return a
    return tuple(c / lead for c in a)


def poly_gcd(a, b):
    """Monic gcd via the Euclidean algorithm."""
    while b:
        a, b = b, poly_divmod(a, b)[1]
    return poly_monic(a)


def poly_ext_gcd(a, b):
    """(g, s, t) with s*a + t*b = g, g monic."""
    r0, r1 = a, b
    s0, s1 = (Fraction(1),), ()
    t0, t1 = (), (Fraction(1),)
    while r1:
        q, r = poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, poly_sub(s0, poly_mul(q, s1))
        t0, t1 = t1, poly_sub(t0, poly_mul(q, t1))
    if r0:
        lead = r0[-1]
        r0 = tuple(c / lead for c in r0)
        s0 = tuple(c / lead for c in s0)
        t0 = tuple(c / lead for c in t0)
    return r0, s0, t0


@lru_cache(maxsize=None)
def cyclotomic_poly(n):
    """Coefficients of the n-th cyclotomic polynomial.

    Computed by dividing x^n - 1 by the cyclotomic polynomials of the
    proper divisors, which stays exact and is plenty fast for the orders
    used here.
    """
    if n < 1:
        raise ValueError("order must be positive")
    xn_minus_1 = _trim([Fraction(-1)] + [Fraction(0)] * (n - 1) + [Fraction(1)])
    acc = (Fraction(1),)
    for d in range(1, n):
        if n % d == 0:
            acc = poly_mul(acc, cyclotomic_poly(d))
    q, r = poly_divmod(xn_minus_1, acc)
    assert not r
    return q


def _as_fraction(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    return None


class Cyclotomic:
    """Element of Q(z) with z = exp(2*pi*i/n), reduced mod cyclotomic_poly(n).

    coeffs has fixed length phi(n) = deg of the cyclotomic polynomial, so
    two equal elements always have equal coefficient tuples.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order, coeffs):
        modulus = cyclotomic_poly(order)
        deg = len(modulus) - 1
        cs = _trim(Fraction(c) for c in coeffs)
        if len(cs) > deg:
            cs = poly_divmod(cs, modulus)[1]
        self.order = order
        self.coeffs = tuple(cs) + (Fraction(0),) * (deg - len(cs))

    @staticmethod
    def generator(order):
        return Cyclotomic(order, (0, 1))

    def _coerce(self, other):
        if isinstance(other, Cyclotomic):
            if other.order != self.order:
                raise FieldMismatch(
                    "cannot mix cyclotomic orders %d and %d"
                    % (self.order, other.order))
            return other
        f = _as_fraction(other)
        if f is None:
            return None
        return Cyclotomic(self.order, (f,))

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Cyclotomic(self.order,
                          [a + b for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.order, [-c for c in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Cyclotomic(self.order, poly_mul(_trim(self.coeffs),
                                               _trim(o.coeffs)))

    __rmul__ = __mul__

    def inverse(self):
        p = _trim(self.coeffs)
        if not p:
            raise ZeroDivisionError("division by zero in cyclotomic field")
        g, s, _ = poly_ext_gcd(p, cyclotomic_poly(self.order))
        assert g == (Fraction(1),)
        return Cyclotomic(self.order, s)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        base = self
        if e < 0:
            base, e = self.inverse(), -e
        out = Cyclotomic(self.order, (1,))
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other):
        try:
            o = self._coerce(other)
        except FieldMismatch:
            return NotImplemented
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __bool__(self):
        return any(self.coeffs)

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __repr__(self):
        return "Cyclotomic(%d, %r)" % (self.order, list(self.coeffs))

    def __str__(self):
        return scalar_to_string(self)


class RatFun:
    """Rational function in q over Q; numerator and denominator coprime,
    denominator monic."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=(1,)):
        num = _trim(Fraction(c) for c in num)
        den = _trim(Fraction(c) for c in den)
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if not num:
            den = (Fraction(1),)
        else:
            g = poly_gcd(num, den)
            if len(g) > 1:
                num = poly_divmod(num, g)[0]
                den = poly_divmod(den, g)[0]
            lead = den[-1]
            if lead != 1:
                num = tuple(c / lead for c in num)
                den = tuple(c / lead for c in den)
        self.num = num
        self.den = den

    @staticmethod
    def generator():
        return RatFun((0, 1))

    def _coerce(self, other):
        if isinstance(other, RatFun):
            return other
        f = _as_fraction(other)
        if f is None:
            return None
        return RatFun((f,))

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFun(poly_add(poly_mul(self.num, o.den),
                               poly_mul(o.num, self.den)),
                      poly_mul(self.den, o.den))

    __radd__ = __add__

    def __neg__(self):
        return RatFun(poly_neg(self.num), self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFun(poly_mul(self.num, o.num), poly_mul(self.den, o.den))

    __rmul__ = __mul__

    def inverse(self):
        if not self.num:
            raise ZeroDivisionError("division by zero in Q(q)")
        return RatFun(self.den, self.num)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        base = self
        if e < 0:
            base, e = self.inverse(), -e
        out = RatFun((1,))
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __bool__(self):
        return bool(self.num)

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return "RatFun(%r, %r)" % (list(self.num), list(self.den))

    def __str__(self):
        return scalar_to_string(self)


# ---------------------------------------------------------------------------
# field tags

@dataclass(frozen=True)
class FieldTag:
    """Identifies the coefficient field of a document or matrix."""

    kind: str                 # "rational" | "cyclotomic" | "rational_function"
    order: int | None = None  # set exactly when kind == "cyclotomic"

    def __post_init__(self):
        if self.kind not in ("rational", "cyclotomic", "rational_function"):
            raise ValueError("unknown field kind %r" % (self.kind,))
        if (self.kind == "cyclotomic") != (self.order is not None):
            raise ValueError("cyclotomic tags need an order, others must not")
        if self.order is not None and self.order < 1:
            raise ValueError("cyclotomic order must be positive")

    def __str__(self):
        if self.kind == "cyclotomic":
            return "cyclotomic(%d)" % self.order
        return self.kind

    def zero(self):
        return self.coerce(0)

    def one(self):
        return self.coerce(1)

    def coerce(self, x):
        """Embed x (int, Fraction, or a scalar of this field) into the field."""
        if self.kind == "rational":
            f = _as_fraction(x)
            if f is not None:
                return f
        elif self.kind == "cyclotomic":
            if isinstance(x, Cyclotomic):
                if x.order == self.order:
                    return x
                raise FieldMismatch("cyclotomic order %d does not match %s"
                                    % (x.order, self))
            f = _as_fraction(x)
            if f is not None:
                return Cyclotomic(self.order, (f,))
        else:
            if isinstance(x, RatFun):
                return x
            f = _as_fraction(x)
            if f is not None:
                return RatFun((f,))
        raise FieldMismatch("cannot interpret %r as an element of %s"
                            % (x, self))

    def generator(self):
        if self.kind == "cyclotomic":
            return Cyclotomic.generator(self.order)
        if self.kind == "rational_function":
            return RatFun.generator()
        raise FieldMismatch("the rational field has no distinguished generator")


RATIONAL = FieldTag("rational")
RATIONAL_FUNCTION = FieldTag("rational_function")


def cyclotomic_field(n):
    return FieldTag("cyclotomic", n)


def field_tag_from_string(text):
    """Parse "rational", "cyclotomic(n)" or "rational_function"."""
    text = text.strip()
    if text == "rational":
        return RATIONAL
    if text == "rational_function":
        return RATIONAL_FUNCTION
    if text.startswith("cyclotomic(") and text.endswith(")"):
        inner = text[len("cyclotomic("):-1].strip()
        if inner.isdigit():
            return cyclotomic_field(int(inner))
    raise ValueError("unknown field %r" % (text,))


# ---------------------------------------------------------------------------
# parsing
#
#   expr   := ['-'] term (('+'|'-') term)*
#   term   := factor (('*'|'/') factor)*        '/' binds like '*', left assoc
#   factor := atom ['^' sint]
#   atom   := uint | 'z' | 'q' | '(' expr ')'

class _Parser:
    def __init__(self, text, tag):
        self.text = text
        self.tag = tag
        self.pos = 0

    def error(self, message, pos=None):
        raise ParseError(message, self.pos if pos is None else pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos] in " \t":
            self.pos += 1

    def peek(self):
        self.skip_ws()
        if self.pos < len(self.text):
            return self.text[self.pos]
        return ""

    def parse(self):
        value = self.expr()
        self.skip_ws()
        if self.pos != len(self.text):
            self.error("unexpected %r" % self.text[self.pos])
        return value

    def expr(self):
        if self.peek() == "-":
            self.pos += 1
            value = -self.term()
        else:
            value = self.term()
        while True:
            ch = self.peek()
            if ch == "+":
                self.pos += 1
                value = value + self.term()
            elif ch == "-":
                self.pos += 1
                value = value - self.term()
            else:
                return value

    def term(self):
        value = self.factor()
        while True:
            ch = self.peek()
            if ch == "*":
                self.pos += 1
                value = value * self.factor()
            elif ch == "/":
                at = self.pos
                self.pos += 1
                try:
                    value = value / self.factor()
                except ZeroDivisionError:
                    self.error("division by zero", at)
            else:
                return value

    def factor(self):
        value = self.atom()
        if self.peek() == "^":
            at = self.pos
            self.pos += 1
            e = self.sint()
            try:
                value = value ** e
            except ZeroDivisionError:
                self.error("zero raised to a negative power", at)
        return value

    def sint(self):
        sign = 1
        if self.peek() == "-":
            self.pos += 1
            sign = -1
        return sign * self.uint()

    def uint(self):
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            if self.pos < len(self.text):
                self.error("expected a number, got %r" % self.text[self.pos])
            self.error("unexpected end of input")
        return int(self.text[start:self.pos])

    def atom(self):
        ch = self.peek()
        if ch.isdigit():
            return self.tag.coerce(self.uint())
        if ch == "z":
            if self.tag.kind != "cyclotomic":
                raise FieldMismatch("'z' is only valid over a cyclotomic field",
                                    self.pos)
            self.pos += 1
            return self.tag.generator()
        if ch == "q":
            if self.tag.kind != "rational_function":
                raise FieldMismatch("'q' is only valid over rational functions",
                                    self.pos)
            self.pos += 1
            return self.tag.generator()
        if ch == "(":
            self.pos += 1
            value = self.expr()
            if self.peek() != ")":
                self.error("expected ')'")
            self.pos += 1
            return value
        if ch == "":
            self.error("unexpected end of input")
        self.error("unexpected %r" % ch)


def parse_scalar(text, tag):
    """Parse a scalar literal in the field described by tag."""
    if not isinstance(text, str):
        raise ParseError("scalar must be a string, got %r" % (text,), 0)
    return _Parser(text, tag).parse()


# ---------------------------------------------------------------------------
# canonical printing

def _frac_string(f):
    return str(f)  # Fraction prints gcd-reduced with positive denominator


def _term_string(coeff, var, power):
    """One monomial, sign stripped (caller handles joining)."""
    if power == 0:
        return _frac_string(coeff)
    base = var if power == 1 else "%s^%d" % (var, power)
    if coeff == 1:
        return base
    return "%s*%s" % (_frac_string(coeff), base)


def _poly_string(coeffs, var, descending=False):
    terms = [(i, c) for i, c in enumerate(coeffs) if c]
    if not terms:
        return "0"
    if descending:
        terms.reverse()
    parts = []
    for i, c in terms:
        if not parts:
            head = _term_string(abs(c), var, i)
            parts.append("-" + head if c < 0 else head)
        else:
            parts.append(("- " if c < 0 else "+ ") + _term_string(abs(c), var, i))
    return " ".join(parts)


def scalar_to_string(x):
    """Canonical text form; parse_scalar inverts it exactly."""
    f = _as_fraction(x)
    if f is not None:
        return _frac_string(f)
    if isinstance(x, Cyclotomic):
        return _poly_string(x.coeffs, "z")
    if isinstance(x, RatFun):
        num = _poly_string(x.num, "q", descending=True)
        if x.den == (Fraction(1),):
            return num
        den = _poly_string(x.den, "q", descending=True)
        return "(%s)/(%s)" % (num, den)
    raise TypeError("not a scalar: %r" % (x,))
