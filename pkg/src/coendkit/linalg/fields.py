"""Exact ground fields: the rationals, prime fields and simple extensions.

Values are stored in canonical form so that equality is structural:
rationals as reduced ``gmpy2.mpq``, residues as ints in ``[0, p)``, and
extension elements as coefficient tuples of length ``deg(min_poly)``.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction

import gmpy2
import numpy as np

from ..errors import DivisionByZero, FieldMismatch, ParseError

mpq = gmpy2.mpq


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class Field:
    """Common interface. Subclasses are frozen dataclasses, so equal specs compare equal."""

    dtype = object
    generator = None

    # -- construction of canonical values
    def coerce(self, x):
        raise NotImplementedError

    def array(self, values) -> np.ndarray:
        raw = np.asarray(values, dtype=object)
        out = np.empty(raw.shape, dtype=self.dtype)
        flat_in, flat_out = raw.reshape(-1), out.reshape(-1)
        for i, v in enumerate(flat_in):
            flat_out[i] = self.coerce(v)
        return out

    def zeros(self, shape) -> np.ndarray:
        out = np.empty(shape, dtype=object)
        out.fill(self.zero)
        return out

    # -- arithmetic on canonical values
    def add(self, a, b):
        return self.coerce(a + b)

    def sub(self, a, b):
        return self.coerce(a - b)

    def mul(self, a, b):
        return self.coerce(a * b)

    def neg(self, a):
        return self.coerce(-a)

    def inv(self, a):
        raise NotImplementedError

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a) -> bool:
        return a == self.zero

    # -- enumeration (finite fields only)
    @property
    def order(self):
        return None

    def elements(self):
        raise TypeError(f"{self} is infinite")

    def random(self, rng):
        raise NotImplementedError

    # -- text
    def parse(self, text: str):
        return self.coerce(_parse_poly(text, self))

    def format(self, a) -> str:
        raise NotImplementedError

    def check_same(self, other):
        if self != other:
            raise FieldMismatch(f"{self} vs {other}")


@dataclass(frozen=True)
class Rationals(Field):
    def __post_init__(self):
        object.__setattr__(self, "zero", mpq(0))
        object.__setattr__(self, "one", mpq(1))

    def coerce(self, x):
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, ExtElement):
            raise FieldMismatch(f"extension element in {self}")
        if isinstance(x, Fraction):
            return mpq(x.numerator, x.denominator)
        return mpq(x)

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("division by zero in Q")
        return 1 / mpq(a)

    def random(self, rng):
        return mpq(int(rng.integers(-4, 5)), int(rng.integers(1, 4)))

    def format(self, a) -> str:
        a = mpq(a)
        if a.denominator == 1:
            return str(a.numerator)
        return f"{a.numerator}/{a.denominator}"

    characteristic = 0

    def __str__(self):
        return "Q"


@dataclass(frozen=True)
class PrimeField(Field):
    p: int

    dtype = np.int64

    def __post_init__(self):
        if not isinstance(self.p, int) or not is_prime(self.p):
            raise ValueError(f"{self.p!r} is not prime")
        if self.p >= 2**31:
            raise ValueError("prime must be below 2^31 for int64 kernels")
        object.__setattr__(self, "zero", 0)
        object.__setattr__(self, "one", 1)

    @property
    def characteristic(self):
        return self.p

    def coerce(self, x):
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, ExtElement):
            raise FieldMismatch(f"extension element in {self}")
        if isinstance(x, (Fraction, type(mpq(0)))):
            num, den = int(x.numerator), int(x.denominator)
            if den % self.p == 0:
                raise DivisionByZero(f"denominator divisible by {self.p}")
            return num * pow(den, -1, self.p) % self.p
        return int(x) % self.p

    def array(self, values) -> np.ndarray:
        raw = np.asarray(values, dtype=object)
        if raw.size and all(isinstance(v, (int, np.integer)) for v in raw.reshape(-1)):
            return np.mod(raw, self.p).astype(np.int64)
        return super().array(values).astype(np.int64)

    def zeros(self, shape):
        return np.zeros(shape, dtype=np.int64)

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        a = int(a) % self.p
        if a == 0:
            raise DivisionByZero(f"division by zero in F_{self.p}")
        return pow(a, -1, self.p)

    @property
    def order(self):
        return self.p

    def elements(self):
        return range(self.p)

    def random(self, rng):
        return int(rng.integers(0, self.p))

    def format(self, a) -> str:
        return str(int(a))

    def __str__(self):
        return f"F_{self.p}"


@dataclass(frozen=True)
class SimpleExtension(Field):
    """base[x]/(min_poly); ``min_poly`` lists coefficients from degree 0 upward."""

    base: Field
    min_poly: tuple
    name: str = "a"

    def __post_init__(self):
        if not isinstance(self.base, (Rationals, PrimeField)):
            raise ValueError("extension base must be Q or a prime field")
        if not re.fullmatch(r"[A-Za-z_]\w*", self.name):
            raise ValueError(f"bad generator name {self.name!r}")
        poly = tuple(self.base.coerce(c) for c in self.min_poly)
        if len(poly) < 2 or poly[-1] != self.base.one:
            raise ValueError("min_poly must be monic of degree >= 1")
        object.__setattr__(self, "min_poly", poly)
        if 2 <= self.degree <= 3 and _has_root(self.base, poly):
            raise ValueError("min_poly has a root in the base field")
        object.__setattr__(self, "zero", ExtElement(self, (self.base.zero,) * self.degree))
        object.__setattr__(self, "one", ExtElement(self, (self.base.one,) + (self.base.zero,) * (self.degree - 1)))

    generator = property(lambda self: self.name)

    @property
    def degree(self):
        return len(self.min_poly) - 1

    @property
    def characteristic(self):
        return self.base.characteristic

    def gen(self):
        if self.degree == 1:
            return self.coerce(-self.min_poly[0])
        c = [self.base.zero] * self.degree
        c[1] = self.base.one
        return ExtElement(self, tuple(c))

    def coerce(self, x):
        if isinstance(x, ExtElement):
            if x.field != self:
                raise FieldMismatch(f"{x.field} vs {self}")
            return x
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, _Poly):
            return self._reduce(x.coeffs)
        return ExtElement(self, (self.base.coerce(x),) + (self.base.zero,) * (self.degree - 1))

    def _reduce(self, coeffs):
        base, d, mp = self.base, self.degree, self.min_poly
        c = [base.coerce(v) for v in coeffs]
        for k in range(len(c) - 1, d - 1, -1):
            lead = c[k]
            if lead != base.zero:
                for j in range(d + 1):
                    c[k - d + j] = base.sub(c[k - d + j], base.mul(lead, mp[j]))
        c = c[:d] + [base.zero] * (d - len(c))
        return ExtElement(self, tuple(c))

    def inv(self, a):
        a = self.coerce(a)
        if a.is_zero():
            raise DivisionByZero(f"division by zero in {self}")
        g, s = _poly_inverse(self.base, list(a.c), list(self.min_poly))
        if g is None:
            raise DivisionByZero(f"{self.format(a)} is a zero divisor: min_poly is reducible")
        return self._reduce(s)

    def is_zero(self, a) -> bool:
        return a.is_zero()

    @property
    def order(self):
        if self.base.order is None:
            return None
        return self.base.order ** self.degree

    def elements(self):
        for cs in itertools.product(list(self.base.elements()), repeat=self.degree):
            yield ExtElement(self, tuple(reversed(cs)))

    def random(self, rng):
        return ExtElement(self, tuple(self.base.random(rng) for _ in range(self.degree)))

    def format(self, a) -> str:
        terms = []
        for k, v in enumerate(a.c):
            if v == self.base.zero:
                continue
            s = self.base.format(v)
            if k == 0:
                terms.append(s)
                continue
            mono = self.name if k == 1 else f"{self.name}^{k}"
            terms.append(mono if s == "1" else f"{s}*{mono}")
        if not terms:
            return "0"
        out = terms[0]
        for t in terms[1:]:
            out += t if t.startswith("-") else "+" + t
        return out

    def __str__(self):
        return f"{self.base}[{self.name}]/({_poly_str(self.base, self.min_poly, self.name)})"


class ExtElement:
    """Element of a SimpleExtension; supports the arithmetic dunders so numpy object arrays work."""

    __slots__ = ("field", "c")

    def __init__(self, field, c):
        self.field = field
        self.c = c

    def is_zero(self):
        z = self.field.base.zero
        return all(v == z for v in self.c)

    def _lift(self, other):
        if isinstance(other, ExtElement):
            if other.field != self.field:
                raise FieldMismatch(f"{other.field} vs {self.field}")
            return other
        return self.field.coerce(other)

    def __add__(self, other):
        o = self._lift(other)
        b = self.field.base
        return ExtElement(self.field, tuple(b.add(x, y) for x, y in zip(self.c, o.c)))

    __radd__ = __add__

    def __neg__(self):
        b = self.field.base
        return ExtElement(self.field, tuple(b.neg(x) for x in self.c))

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        b = self.field.base
        prod = [b.zero] * (2 * len(self.c) - 1)
        for i, x in enumerate(self.c):
            if x == b.zero:
                continue
            for j, y in enumerate(o.c):
                prod[i + j] = b.add(prod[i + j], b.mul(x, y))
        return self.field._reduce(prod)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * self.field.inv(self._lift(other))

    def __rtruediv__(self, other):
        return self._lift(other) * self.field.inv(self)

    def __eq__(self, other):
        if isinstance(other, ExtElement):
            return self.field == other.field and self.c == other.c
        try:
            return self.c == self.field.coerce(other).c
        except (TypeError, ValueError, FieldMismatch):
            return NotImplemented

    def __hash__(self):
        return hash((self.field, self.c))

    def __repr__(self):
        return f"ExtElement({self.field.format(self)!r})"


class _Poly:
    """Intermediate parse result: a polynomial in the generator with base-field coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        self.coeffs = coeffs


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(\S))")


def _parse_poly(text, field):
    """Grammar:  expr := ['+'|'-'] term (('+'|'-') term)*
                 term := coeff ['*' mono] | mono
                 coeff := INT ['/' INT]
                 mono := GEN ['^' INT]
    GEN is only accepted by extension fields. The unicode minus sign is accepted.
    """
    if not isinstance(text, str):
        raise ParseError(f"scalar must be a string, got {type(text).__name__}")
    src = text.replace("−", "-")
    toks, pos = [], 0
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if m is None:
            break
        if m.group(0).strip():
            toks.append((m.lastindex, m.group(m.lastindex), m.start(m.lastindex)))
        pos = m.end()
    if not toks:
        raise ParseError(f"empty scalar {text!r}", pos=0)
    base = field.base if isinstance(field, SimpleExtension) else field
    gen = field.generator
    coeffs = {}
    i = 0

    def peek(kind=None, val=None):
        if i >= len(toks):
            return False
        k, v, _ = toks[i]
        return (kind is None or k == kind) and (val is None or v == val)

    def fail(msg):
        at = toks[i][2] if i < len(toks) else len(src)
        raise ParseError(f"{msg} in scalar {text!r}", pos=at)

    def integer():
        nonlocal i
        if not peek(1):
            fail("expected integer")
        i += 1
        return int(toks[i - 1][1])

    first = True
    while i < len(toks):
        sign = 1
        if peek(3, "+") or peek(3, "-"):
            sign = -1 if toks[i][1] == "-" else 1
            i += 1
        elif not first:
            fail("expected '+' or '-'")
        first = False
        coef, power, has_coef = Fraction(1), 0, False
        if peek(1):
            has_coef = True
            num = integer()
            den = 1
            if peek(3, "/"):
                i += 1
                den = integer()
                if den == 0:
                    raise DivisionByZero(f"zero denominator in {text!r}")
            coef = Fraction(num, den)
            if peek(3, "*"):
                i += 1
                if not peek(2):
                    fail("expected generator")
        if peek(2):
            if gen is None or toks[i][1] != gen:
                fail(f"unknown symbol {toks[i][1]!r}")
            i += 1
            power = 1
            if peek(3, "^"):
                i += 1
                power = integer()
        elif not has_coef:
            fail("expected term")
        coeffs[power] = coeffs.get(power, Fraction(0)) + sign * coef
    if isinstance(field, SimpleExtension):
        top = max(coeffs)
        return _Poly([base.coerce(coeffs.get(k, 0)) for k in range(top + 1)])
    if set(coeffs) != {0}:
        fail("generator not allowed")
    return coeffs[0]


def _poly_str(base, coeffs, name):
    parts = []
    for k in range(len(coeffs) - 1, -1, -1):
        v = coeffs[k]
        if v == base.zero:
            continue
        s = base.format(v)
        mono = "" if k == 0 else (name if k == 1 else f"{name}^{k}")
        if mono and s == "1":
            parts.append(mono)
        else:
            parts.append(s + ("*" + mono if mono else ""))
    return "+".join(parts).replace("+-", "-")


def _has_root(base, poly):
    def ev(x):
        acc = base.zero
        for c in reversed(poly):
            acc = base.add(base.mul(acc, x), c)
        return acc

    if base.order is not None:
        return any(ev(x) == base.zero for x in base.elements())
    # rational root test on the integer-scaled polynomial
    den = 1
    for c in poly:
        den = den * c.denominator // gmpy2.gcd(den, c.denominator)
    ints = [int(c * den) for c in poly]
    if ints[0] == 0:
        return True
    lead, const = abs(ints[-1]), abs(ints[0])
    divs = lambda n: [d for d in range(1, n + 1) if n % d == 0]
    for pn in divs(const):
        for qd in divs(lead):
            for s in (1, -1):
                if ev(mpq(s * pn, qd)) == 0:
                    return True
    return False


def _poly_inverse(base, a, m):
    """Extended Euclid over ``base``: returns (gcd, s) with s*a = 1 mod m, or (None, None)."""

    def trim(p):
        while p and p[-1] == base.zero:
            p.pop()
        return p

    def sub_mul(p, q, c, shift):
        out = p + [base.zero] * max(0, len(q) + shift - len(p))
        for k, v in enumerate(q):
            out[k + shift] = base.sub(out[k + shift], base.mul(c, v))
        return trim(out)

    r0, r1 = trim(list(m)), trim(list(a))
    s0, s1 = [], [base.one]
    while r1:
        q = []
        rem = list(r0)
        inv_lead = base.inv(r1[-1])
        qcoef = {}
        while rem and len(rem) >= len(r1):
            c = base.mul(rem[-1], inv_lead)
            shift = len(rem) - len(r1)
            qcoef[shift] = c
            rem = sub_mul(rem, r1, c, shift)
        q = [qcoef.get(k, base.zero) for k in range(max(qcoef, default=-1) + 1)]
        snew = list(s0)
        for k, c in enumerate(q):
            if c != base.zero:
                snew = sub_mul(snew, s1, c, k)
        r0, r1 = r1, rem
        s0, s1 = s1, snew
    if len(r0) != 1:
        return None, None
    c = base.inv(r0[0])
    return r0, [base.mul(c, v) for v in s0]


@dataclass(frozen=True)
class Scalar:
    """A field element tagged with its field; mixing fields raises FieldMismatch."""

    field: Field
    value: object

    @classmethod
    def of(cls, field, x):
        return cls(field, field.coerce(x))

    def _op(self, other, name):
        if not isinstance(other, Scalar):
            other = Scalar.of(self.field, other)
        self.field.check_same(other.field)
        return Scalar(self.field, getattr(self.field, name)(self.value, other.value))

    def __add__(self, o):
        return self._op(o, "add")

    def __sub__(self, o):
        return self._op(o, "sub")

    def __mul__(self, o):
        return self._op(o, "mul")

    def __truediv__(self, o):
        return self._op(o, "div")

    def __neg__(self):
        return Scalar(self.field, self.field.neg(self.value))

    def __eq__(self, o):
        if isinstance(o, Scalar):
            return self.field == o.field and self.value == o.value
        return self.value == self.field.coerce(o)

    def __hash__(self):
        return hash((self.field, str(self)))

    def __str__(self):
        return self.field.format(self.value)

    def __repr__(self):
        return f"Scalar({self}, {self.field})"


def scalar_arith(a: Scalar, b: Scalar, op: str) -> Scalar:
    ops = {"add": "__add__", "sub": "__sub__", "mul": "__mul__", "div": "__truediv__"}
    if op not in ops:
        raise ValueError(f"unknown op {op!r}")
    if not isinstance(a, Scalar) or not isinstance(b, Scalar):
        raise TypeError("scalar_arith takes Scalar operands")
    return getattr(a, ops[op])(b)


def field_from_spec(spec) -> Field:
    """Build a field from a JSON-style description (see the CLI bundle format)."""
    if isinstance(spec, Field):
        return spec
    if isinstance(spec, str):
        spec = {"kind": spec}
    kind = spec.get("kind")
    if kind in ("rationals", "Q"):
        return Rationals()
    if kind == "prime_field":
        return PrimeField(int(spec["p"]))
    if kind == "simple_extension":
        base = field_from_spec(spec["base"])
        return SimpleExtension(base, tuple(base.parse(str(c)) for c in spec["min_poly"]), spec.get("generator", "a"))
    raise ValueError(f"unknown field kind {kind!r}")


def field_to_spec(field: Field) -> dict:
    if isinstance(field, Rationals):
        return {"kind": "rationals"}
    if isinstance(field, PrimeField):
        return {"kind": "prime_field", "p": field.p}
    return {
        "kind": "simple_extension",
        "base": field_to_spec(field.base),
        "min_poly": [field.base.format(c) for c in field.min_poly],
        "generator": field.name,
    }
