"""Exact coefficient arithmetic.

Three layers, all immutable:

* ``CycRational``: an element of the cyclotomic field Q(zeta_r), stored as
  rational coordinates in the power basis 1, zeta, ..., zeta^(phi(r)-1).
* ``Poly``: a polynomial in ``t`` over Q(zeta_r).  Internally a tuple of
  ``phi(r)`` rational polynomials ``f_i(t)`` with ``f = sum_i f_i(t) zeta^i``,
  so ring operations are a handful of FLINT calls.
* ``RatFunc``: a reduced fraction ``num/den`` with a monic denominator and
  ``gcd(num, den) = 1`` over Q(zeta_r).

The variable ``t`` is a formal real variable: conjugation sends zeta to
zeta^-1 and fixes ``t``.
"""
from __future__ import annotations

from functools import lru_cache
from math import gcd as igcd

from flint import fmpq, fmpq_poly, fmpz_poly

Rational = fmpq

_ZERO_POLY = fmpq_poly([])
_ONE = fmpq(1)


def as_rational(value) -> fmpq:
    """Coerce ints, fmpq, Fractions or "p/q" strings to an exact rational."""
    if isinstance(value, fmpq):
        return value
    if isinstance(value, int):
        return fmpq(value)
    if isinstance(value, str):
        num, _, den = value.strip().partition("/")
        return fmpq(int(num), int(den) if den else 1)
    if hasattr(value, "numerator") and hasattr(value, "denominator"):
        return fmpq(int(value.numerator), int(value.denominator))
    raise TypeError(f"cannot interpret {value!r} as a rational number")


def euler_phi(r: int) -> int:
    return sum(1 for k in range(1, r + 1) if igcd(k, r) == 1)


class _Field:
    """Reduction data for Q(zeta_r)."""

    def __init__(self, r: int):
        if r < 1:
            raise ValueError("cyclotomic order must be positive")
        self.r = r
        self.phi = euler_phi(r)
        cyc = fmpq_poly(fmpz_poly.cyclotomic(r))
        # power[k] = coordinates of zeta^k, 0 <= k < r
        self.power = []
        for k in range(r):
            rem = fmpq_poly([0] * k + [1]) % cyc
            self.power.append(tuple(rem[i] for i in range(self.phi)))
        self.units = [k for k in range(1, r + 1) if igcd(k, r) == 1]

    def reduce(self, buckets: list) -> tuple:
        """Fold a coefficient list indexed by powers of zeta into the power basis.

        Works for both rational and polynomial bucket entries.
        """
        phi = self.phi
        out = list(buckets[:phi]) + [0] * max(0, phi - len(buckets))
        for k in range(phi, len(buckets)):
            b = buckets[k]
            if not b:
                continue
            for i, c in enumerate(self.power[k % self.r]):
                if c:
                    out[i] = out[i] + c * b
        return tuple(out)

    def convolve(self, a, b) -> tuple:
        buckets = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                if bj:
                    buckets[i + j] = buckets[i + j] + ai * bj
        return self.reduce(buckets)

    def galois(self, coords, k: int) -> tuple:
        """Apply zeta -> zeta^k to a coordinate vector."""
        if k % self.r == 1 % self.r:
            return tuple(coords)
        buckets = [0] * self.r
        for i, c in enumerate(coords):
            if c:
                j = (i * k) % self.r
                buckets[j] = buckets[j] + c
        return self.reduce(buckets)


@lru_cache(maxsize=None)
def field(r: int) -> _Field:
    return _Field(r)


class _Defer(Exception):
    """Internal signal: let the richer operand handle a mixed operation."""


def _deferring(method):
    def wrapper(self, other):
        try:
            return method(self, other)
        except _Defer:
            return NotImplemented
    wrapper.__name__ = method.__name__
    wrapper.__doc__ = method.__doc__
    return wrapper


class CycRational:
    """Element of Q(zeta_r) in power-basis coordinates."""

    __slots__ = ("order", "coords", "_hash")

    def __init__(self, order: int, coords=None):
        fld = field(order)
        if coords is None:
            coords = (0,)
        coords = [as_rational(c) for c in coords]
        if len(coords) > fld.phi:
            # accept any vector indexed by powers of zeta and reduce it
            coords = list(fld.reduce(coords))
        coords += [fmpq(0)] * (fld.phi - len(coords))
        self.order = order
        self.coords = tuple(fmpq(c) for c in coords)
        self._hash = None

    @classmethod
    def _raw(cls, order: int, coords: tuple) -> CycRational:
        obj = object.__new__(cls)
        obj.order = order
        obj.coords = tuple(fmpq(c) if not isinstance(c, fmpq) else c for c in coords)
        obj._hash = None
        return obj

    @classmethod
    def zeta(cls, order: int, k: int = 1) -> CycRational:
        return cls._raw(order, field(order).power[k % order])

    @classmethod
    def from_rational(cls, order: int, value) -> CycRational:
        fld = field(order)
        return cls._raw(order, (as_rational(value),) + (fmpq(0),) * (fld.phi - 1))

    def _coerce(self, other) -> CycRational:
        if isinstance(other, (Poly, RatFunc)):
            raise _Defer
        if isinstance(other, CycRational):
            if other.order != self.order:
                raise ValueError(
                    f"cyclotomic orders differ: {self.order} vs {other.order}")
            return other
        return CycRational.from_rational(self.order, other)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_rational(self) -> bool:
        return not any(self.coords[1:])

    def rational(self) -> fmpq:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coords[0]

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, fmpq)):
            return self.is_rational() and self.coords[0] == other
        if not isinstance(other, CycRational):
            return NotImplemented
        return self.order == other.order and self.coords == other.coords

    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(self.coords[0])
            else:
                self._hash = hash((self.order, self.coords))
        return self._hash

    @_deferring
    def __add__(self, other):
        other = self._coerce(other)
        return CycRational._raw(
            self.order, tuple(a + b for a, b in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __neg__(self):
        return CycRational._raw(self.order, tuple(-a for a in self.coords))

    @_deferring
    def __sub__(self, other):
        return self + (-self._coerce(other))

    @_deferring
    def __rsub__(self, other):
        return self._coerce(other) - self

    @_deferring
    def __mul__(self, other):
        if isinstance(other, (int, fmpq)):
            return CycRational._raw(self.order, tuple(a * other for a in self.coords))
        other = self._coerce(other)
        fld = field(self.order)
        return CycRational._raw(self.order, fld.convolve(self.coords, other.coords))

    __rmul__ = __mul__

    def galois(self, k: int) -> CycRational:
        """Image under the automorphism zeta -> zeta^k (k coprime to r)."""
        fld = field(self.order)
        if igcd(k, self.order) != 1:
            raise ValueError(f"{k} is not a unit modulo {self.order}")
        return CycRational._raw(self.order, fld.galois(self.coords, k))

    def conj(self) -> CycRational:
        return self.galois(-1)

    def norm(self) -> fmpq:
        prod = CycRational.from_rational(self.order, 1)
        for k in field(self.order).units:
            prod = prod * self.galois(k)
        return prod.rational()

    def inverse(self) -> CycRational:
        if self.is_zero():
            raise ZeroDivisionError("division by zero in Q(zeta)")
        if self.is_rational():
            return CycRational.from_rational(self.order, 1 / self.coords[0])
        others = CycRational.from_rational(self.order, 1)
        for k in field(self.order).units:
            if k % self.order != 1 % self.order:
                others = others * self.galois(k)
        nrm = (self * others).rational()
        return others * (1 / nrm)

    @_deferring
    def __truediv__(self, other):
        other = self._coerce(other)
        return self * other.inverse()

    @_deferring
    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = CycRational.from_rational(self.order, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __repr__(self):
        return f"CycRational({self.order}, {[str(c) for c in self.coords]})"

    def __str__(self):
        return _format_coords(self.coords, "z")

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coords]

    @classmethod
    def from_json(cls, order: int, data) -> CycRational:
        return cls(order, [as_rational(c) for c in data])


def _format_coords(coords, sym: str) -> str:
    terms = []
    for i, c in enumerate(coords):
        if not c:
            continue
        if i == 0:
            terms.append(str(c))
        else:
            mono = sym if i == 1 else f"{sym}^{i}"
            if c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}*{mono}")
    if not terms:
        return "0"
    if len(terms) == 1:
        return terms[0]
    return "(" + " + ".join(terms).replace("+ -", "- ") + ")"


def cyc_arith(a: CycRational, b: CycRational | None, op: str) -> CycRational:
    """Functional entry point: op in {"add", "mul", "div", "conj"}."""
    if op == "conj":
        return a.conj()
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


# ---------------------------------------------------------------- polynomials


def _poly_shift(p: fmpq_poly, k: int) -> fmpq_poly:
    return p.left_shift(k) if k else p


class Poly:
    """Polynomial in t over Q(zeta_r)."""

    __slots__ = ("order", "comps")

    def __init__(self, order: int, comps):
        self.order = order
        self.comps = tuple(comps)

    # constructors
    @classmethod
    def zero(cls, order: int) -> Poly:
        return cls(order, (_ZERO_POLY,) * field(order).phi)

    @classmethod
    def constant(cls, order: int, value) -> Poly:
        if isinstance(value, CycRational):
            return cls(order, tuple(fmpq_poly([c]) for c in value.coords))
        return cls.from_rational_poly(order, fmpq_poly([as_rational(value)]))

    @classmethod
    def monomial(cls, order: int, exponent: int, coeff=1) -> Poly:
        if not isinstance(coeff, CycRational):
            coeff = CycRational.from_rational(order, coeff)
        return cls(order, tuple(
            fmpq_poly([0] * exponent + [c]) if c else _ZERO_POLY for c in coeff.coords))

    @classmethod
    def from_rational_poly(cls, order: int, p: fmpq_poly) -> Poly:
        phi = field(order).phi
        return cls(order, (p,) + (_ZERO_POLY,) * (phi - 1))

    @classmethod
    def from_coeffs(cls, order: int, coeffs) -> Poly:
        """Build from a mapping exponent -> coefficient, or a dense sequence."""
        if not isinstance(coeffs, dict):
            coeffs = dict(enumerate(coeffs))
        phi = field(order).phi
        if not coeffs:
            return cls.zero(order)
        deg = max(coeffs)
        cols = [[fmpq(0)] * (deg + 1) for _ in range(phi)]
        for e, c in coeffs.items():
            if e < 0:
                raise ValueError("negative exponent in a polynomial")
            if not isinstance(c, CycRational):
                c = CycRational.from_rational(order, c)
            for i, x in enumerate(c.coords):
                cols[i][e] = cols[i][e] + x
        return cls(order, tuple(fmpq_poly(col) for col in cols))

    # structure
    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.comps)

    def __bool__(self):
        return not self.is_zero()

    def is_rational(self) -> bool:
        return all(c.is_zero() for c in self.comps[1:])

    def degree(self) -> int:
        return max(c.degree() for c in self.comps)

    def coeff(self, e: int) -> CycRational:
        return CycRational._raw(self.order, tuple(c[e] for c in self.comps))

    def coeffs(self) -> dict[int, CycRational]:
        """Sparse map exponent -> nonzero coefficient."""
        out = {}
        for e in range(self.degree() + 1):
            c = self.coeff(e)
            if c:
                out[e] = c
        return out

    def leading_coefficient(self) -> CycRational:
        return self.coeff(self.degree())

    def valuation(self) -> int:
        if self.is_zero():
            raise ValueError("zero polynomial has no valuation")
        return min(e for e in self.coeffs())

    def is_monomial(self) -> bool:
        return len(self.coeffs()) == 1

    def __eq__(self, other):
        if isinstance(other, (int, fmpq, CycRational)):
            other = Poly.constant(self.order, other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.order == other.order and self.comps == other.comps

    def __hash__(self):
        return hash(tuple(tuple(c.coeffs()) for c in self.comps))

    # arithmetic
    def _coerce(self, other) -> Poly:
        if isinstance(other, RatFunc):
            raise _Defer
        if isinstance(other, Poly):
            if other.order != self.order:
                raise ValueError("cyclotomic orders differ")
            return other
        return Poly.constant(self.order, other)

    @_deferring
    def __add__(self, other):
        other = self._coerce(other)
        return Poly(self.order, tuple(a + b for a, b in zip(self.comps, other.comps)))

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.order, tuple(-a for a in self.comps))

    @_deferring
    def __sub__(self, other):
        other = self._coerce(other)
        return Poly(self.order, tuple(a - b for a, b in zip(self.comps, other.comps)))

    @_deferring
    def __rsub__(self, other):
        return self._coerce(other) - self

    @_deferring
    def __mul__(self, other):
        if isinstance(other, (int, fmpq)):
            return Poly(self.order, tuple(a * other for a in self.comps))
        if isinstance(other, CycRational):
            return self.scale(other)
        other = self._coerce(other)
        if len(self.comps) == 1:
            return Poly(self.order, (self.comps[0] * other.comps[0],))
        fld = field(self.order)
        return Poly(self.order, tuple(
            c if not isinstance(c, int) else _ZERO_POLY
            for c in fld.convolve(self.comps, other.comps)))

    __rmul__ = __mul__

    def scale(self, c: CycRational) -> Poly:
        if c.is_rational():
            return self * c.coords[0]
        fld = field(self.order)
        out = fld.convolve(self.comps, c.coords)
        return Poly(self.order, tuple(
            x if not isinstance(x, int) else _ZERO_POLY for x in out))

    def shift(self, k: int) -> Poly:
        return Poly(self.order, tuple(_poly_shift(c, k) for c in self.comps))

    def __pow__(self, k: int) -> Poly:
        out = Poly.constant(self.order, 1)
        for _ in range(k):
            out = out * self
        return out

    def monic(self) -> Poly:
        return self.scale(self.leading_coefficient().inverse())

    def divmod(self, other: Poly) -> tuple[Poly, Poly]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if self.is_rational() and other.is_rational():
            q, rem = divmod(self.comps[0], other.comps[0])
            return (Poly.from_rational_poly(self.order, q),
                    Poly.from_rational_poly(self.order, rem))
        inv = other.leading_coefficient().inverse()
        db = other.degree()
        quot = Poly.zero(self.order)
        rem = self
        while not rem.is_zero() and rem.degree() >= db:
            k = rem.degree() - db
            c = rem.leading_coefficient() * inv
            term = Poly.monomial(self.order, k, c)
            quot = quot + term
            rem = rem - other.scale(c).shift(k)
        return quot, rem

    def __floordiv__(self, other):
        return self.divmod(self._coerce(other))[0]

    def __mod__(self, other):
        return self.divmod(self._coerce(other))[1]

    def exact_div(self, other: Poly) -> Poly:
        q, rem = self.divmod(other)
        if not rem.is_zero():
            raise ArithmeticError("inexact polynomial division")
        return q

    def gcd(self, other: Poly) -> Poly:
        """Monic gcd over Q(zeta_r); gcd(0, 0) = 0."""
        if self.is_rational() and other.is_rational():
            return Poly.from_rational_poly(self.order, self.comps[0].gcd(other.comps[0]))
        a, b = self, other
        while not b.is_zero():
            a, b = b, a.divmod(b)[1]
        if a.is_zero():
            return a
        return a.monic()

    def galois(self, k: int) -> Poly:
        if len(self.comps) == 1:
            return self
        fld = field(self.order)
        out = fld.galois(self.comps, k)
        return Poly(self.order, tuple(
            x if not isinstance(x, int) else _ZERO_POLY for x in out))

    def conj(self) -> Poly:
        return self.galois(-1)

    def compose_power(self, k: int) -> Poly:
        """p(t) -> p(t^k) for k >= 1."""
        if k == 1:
            return self
        tk = fmpq_poly([0] * k + [1])
        return Poly(self.order, tuple(c(tk) if not c.is_zero() else c for c in self.comps))

    def reverse_power(self, k: int, top: int) -> Poly:
        """t^(k*top) * p(t^-k), valid when top >= deg p."""
        coeffs = {}
        for e, c in self.coeffs().items():
            coeffs[k * (top - e)] = c
        return Poly.from_coeffs(self.order, coeffs)

    def __call__(self, value):
        """Evaluate at a rational or cyclotomic value of t."""
        if isinstance(value, CycRational):
            acc = CycRational.from_rational(self.order, 0)
            power = CycRational.from_rational(self.order, 1)
            for e in range(self.degree() + 1):
                c = self.coeff(e)
                if c:
                    acc = acc + c * power
                power = power * value
            return acc
        value = as_rational(value)
        return CycRational._raw(self.order, tuple(c(value) for c in self.comps))

    def __repr__(self):
        return f"Poly({self.order}, {self})"

    def __str__(self):
        items = sorted(self.coeffs().items(), reverse=True)
        if not items:
            return "0"
        parts = []
        for e, c in items:
            mono = "" if e == 0 else ("t" if e == 1 else f"t^{e}")
            cs = str(c)
            if not mono:
                parts.append(cs)
            elif cs == "1":
                parts.append(mono)
            elif cs == "-1":
                parts.append("-" + mono)
            else:
                parts.append(f"{cs}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self) -> dict[str, list[str]]:
        return {str(e): c.to_json() for e, c in self.coeffs().items()}

    @classmethod
    def from_json(cls, order: int, data) -> Poly:
        return cls.from_coeffs(order, {int(e): CycRational.from_json(order, c)
                                       for e, c in data.items()})


# ---------------------------------------------------------- rational functions


class RatFunc:
    """Reduced fraction of polynomials in t over Q(zeta_r)."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, *, order: int | None = None, _reduced=False):
        if not isinstance(num, Poly):
            if order is None:
                order = den.order if isinstance(den, Poly) else 1
            num = Poly.constant(order, num)
        if den is None:
            den = Poly.constant(num.order, 1)
            _reduced = True
        elif not isinstance(den, Poly):
            den = Poly.constant(num.order, den)
        if num.order != den.order:
            raise ValueError("cyclotomic orders differ")
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if not _reduced:
            num, den = _reduce(num, den)
        self.num = num
        self.den = den

    @property
    def order(self) -> int:
        return self.num.order

    @classmethod
    def from_poly(cls, p: Poly) -> RatFunc:
        return cls(p, Poly.constant(p.order, 1), _reduced=True)

    @classmethod
    def constant(cls, order: int, value) -> RatFunc:
        return cls.from_poly(Poly.constant(order, value))

    @classmethod
    def t_power(cls, order: int, k: int, coeff=1) -> RatFunc:
        if k >= 0:
            return cls.from_poly(Poly.monomial(order, k, coeff))
        return cls(Poly.constant(order, coeff), Poly.monomial(order, -k))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.degree() == 0

    def is_rational(self) -> bool:
        """True when every coefficient lies in Q (equivalently, is conj-fixed
        for r <= 2; for r >= 3 this is the realness test used throughout)."""
        return self.num.is_rational() and self.den.is_rational()

    def is_real(self) -> bool:
        return self.conj() == self

    def _coerce(self, other) -> RatFunc:
        if isinstance(other, RatFunc):
            if other.order != self.order:
                raise ValueError("cyclotomic orders differ")
            return other
        if isinstance(other, Poly):
            return RatFunc.from_poly(other)
        return RatFunc.constant(self.order, other)

    def __eq__(self, other):
        if not isinstance(other, (RatFunc, Poly, int, fmpq, CycRational)):
            return NotImplemented
        other = self._coerce(other)
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        other = self._coerce(other)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, fmpq, CycRational)):
            if not other:
                return RatFunc.constant(self.order, 0)
            return RatFunc(self.num * other, self.den, _reduced=True)
        other = self._coerce(other)
        if self.is_zero() or other.is_zero():
            return RatFunc.constant(self.order, 0)
        if self.is_polynomial() and other.is_polynomial():
            return RatFunc(self.num * other.num, _reduced=True)
        # cross-cancel before multiplying to keep degrees small
        g1 = self.num.gcd(other.den)
        g2 = other.num.gcd(self.den)
        n1, d2 = self.num.exact_div(g1), other.den.exact_div(g1)
        n2, d1 = other.num.exact_div(g2), self.den.exact_div(g2)
        num, den = n1 * n2, d1 * d2
        return RatFunc(num.scale(den.leading_coefficient().inverse()),
                       den.monic(), _reduced=True)

    __rmul__ = __mul__

    def inverse(self) -> RatFunc:
        if self.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        lc = self.num.leading_coefficient().inverse()
        return RatFunc(self.den.scale(lc), self.num.scale(lc), _reduced=True)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = RatFunc.constant(self.order, 1)
        for _ in range(k):
            out = out * self
        return out

    def conj(self) -> RatFunc:
        return RatFunc(self.num.conj(), self.den.conj())

    def substitute(self, k: int) -> RatFunc:
        """t -> t^k for a nonzero integer k."""
        if k == 0:
            raise ValueError("substitution exponent must be nonzero")
        if k > 0:
            return RatFunc(self.num.compose_power(k), self.den.compose_power(k))
        if self.is_zero():
            return self
        top = max(self.num.degree(), self.den.degree())
        return RatFunc(self.num.reverse_power(-k, top), self.den.reverse_power(-k, top))

    def times_t_power(self, k: int) -> RatFunc:
        return self * RatFunc.t_power(self.order, k)

    def poly(self) -> Poly | None:
        """The polynomial this function equals, or None."""
        if not self.is_polynomial():
            return None
        return self.num.scale(self.den.leading_coefficient().inverse())

    def __call__(self, value):
        d = self.den(value)
        if d.is_zero():
            raise ZeroDivisionError(f"pole at t = {value}")
        return self.num(value) / d

    def with_order(self, order: int) -> RatFunc:
        """Re-embed a rational-coefficient function into Q(zeta_order)(t)."""
        if order == self.order:
            return self
        if not self.is_rational():
            raise ValueError("only rational-coefficient functions can change field")
        return RatFunc(Poly.from_rational_poly(order, self.num.comps[0]),
                       Poly.from_rational_poly(order, self.den.comps[0]), _reduced=True)

    def __repr__(self):
        return f"RatFunc({self.order}, {self})"

    def __str__(self):
        if self.is_polynomial():
            return str(self.poly())
        num = str(self.num)
        if len(self.num.coeffs()) > 1:
            num = f"({num})"
        den = str(self.den)
        if len(self.den.coeffs()) > 1:
            den = f"({den})"
        return f"{num}/{den}"

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, order: int, data) -> RatFunc:
        return cls(Poly.from_json(order, data["num"]), Poly.from_json(order, data["den"]))


def _reduce(num: Poly, den: Poly) -> tuple[Poly, Poly]:
    if num.is_zero():
        return num, Poly.constant(num.order, 1)
    if den.degree() > 0:
        g = num.gcd(den)
        if g.degree() > 0:
            num, den = num.exact_div(g), den.exact_div(g)
    lc = den.leading_coefficient()
    if lc != 1:
        inv = lc.inverse()
        num, den = num.scale(inv), den.scale(inv)
    return num, den


def ratfunc_arith(a: RatFunc, b: RatFunc, op: str) -> RatFunc:
    """Functional entry point: op in {"add", "mul", "div"}."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def substitute(f: RatFunc, k: int) -> RatFunc:
    """Apply t -> t^k (k may be negative) and renormalize."""
    return f.substitute(k)


def poly_extract(f: RatFunc) -> Poly | None:
    """Return f as a polynomial, or None when its reduced denominator is not constant."""
    return f.poly()


def t_poly(order: int, coeffs) -> Poly:
    """Shorthand: polynomial from a dense list of rationals, low degree first."""
    return Poly.from_rational_poly(order, fmpq_poly([as_rational(c) for c in coeffs]))


def parse_ratfunc(text: str, order: int = 1) -> RatFunc:
    """Parse simple expressions such as "t^3 + t" or "(1 - t^2)/(1 - t)".

    Only rational coefficients and the symbol t are accepted; intended for
    tests and the command line, not as a general expression parser.
    """
    import ast

    tree = ast.parse(text.replace("^", "**"), mode="eval")

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.BinOp):
            lhs, rhs = ev(node.left), ev(node.right)
            if isinstance(node.op, ast.Add):
                return lhs + rhs
            if isinstance(node.op, ast.Sub):
                return lhs - rhs
            if isinstance(node.op, ast.Mult):
                return lhs * rhs
            if isinstance(node.op, ast.Div):
                return lhs / rhs
            if isinstance(node.op, ast.Pow):
                if not (rhs.is_polynomial() and rhs.num.degree() <= 0):
                    raise ValueError("exponent must be an integer constant")
                return lhs ** int(rhs.num.coeff(0).rational())
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
            return -ev(node.operand)
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return RatFunc.constant(order, node.value)
        if isinstance(node, ast.Name) and node.id == "t":
            return RatFunc.t_power(order, 1)
        raise ValueError(f"unsupported expression: {ast.dump(node)}")

    return ev(tree)
