"""Exact scalars and commuting parameter polynomials.

The coefficient tower of the operator engine is built from two layers:

* :class:`Scalar` -- a Gaussian rational ``re + im*i`` with exact
  :class:`fractions.Fraction` components.  All arithmetic is exact and
  equality is decidable.
* :class:`ParamPoly` -- a (Laurent) polynomial in named formal parameters
  (scaling dimensions, masses, rapidities, central values, ...) with
  Scalar coefficients.  Parameters commute with each other and with all
  base variables.  Negative exponents are allowed so that central values
  like ``1/(2*theta)`` stay inside the ring.

:class:`ParamRat` is the fraction field element used when solving linear
systems (span decompositions); it simplifies opportunistically via exact
multivariate division but never approximates.
"""

from __future__ import annotations

from fractions import Fraction


def _frac(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"cannot build an exact rational from {value!r}")


class Scalar:
    """Gaussian rational number re + im*i."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = _frac(re)
        self.im = _frac(im)

    @classmethod
    def coerce(cls, value) -> "Scalar":
        if isinstance(value, Scalar):
            return value
        return cls(_frac(value))

    def __add__(self, other):
        if not isinstance(other, (Scalar, int, Fraction)):
            return NotImplemented
        other = Scalar.coerce(other)
        return Scalar(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return Scalar(-self.re, -self.im)

    def __sub__(self, other):
        if not isinstance(other, (Scalar, int, Fraction)):
            return NotImplemented
        return self + (-Scalar.coerce(other))

    def __rsub__(self, other):
        return Scalar.coerce(other) + (-self)

    def __mul__(self, other):
        if not isinstance(other, (Scalar, int, Fraction)):
            return NotImplemented
        other = Scalar.coerce(other)
        return Scalar(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = Scalar.coerce(other)
        n = other.re * other.re + other.im * other.im
        if n == 0:
            raise ZeroDivisionError("division by zero Scalar")
        return self * Scalar(other.re / n, -other.im / n)

    def __rtruediv__(self, other):
        return Scalar.coerce(other) / self

    def conjugate(self):
        return Scalar(self.re, -self.im)

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Scalar(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __repr__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}*I" if self.im != 1 else "I"
        sign = "+" if self.im > 0 else "-"
        mag = abs(self.im)
        tail = "I" if mag == 1 else f"{mag}*I"
        return f"({self.re}{sign}{tail})"

    def is_rational(self) -> bool:
        return self.im == 0


ONE = Scalar(1)
I = Scalar(0, 1)


def _coerce_scalar(value) -> Scalar:
    return Scalar.coerce(value)


class ParamPoly:
    """Laurent polynomial in named commuting parameters over Scalar.

    Terms are stored as ``{monomial: Scalar}`` where a monomial is a sorted
    tuple of ``(name, exponent)`` pairs with nonzero integer exponents.
    The empty tuple is the constant monomial.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for mono, coef in terms.items():
                coef = _coerce_scalar(coef)
                if coef:
                    self.terms[mono] = coef

    # -- constructors -------------------------------------------------

    @classmethod
    def const(cls, value) -> "ParamPoly":
        value = _coerce_scalar(value)
        return cls({(): value}) if value else cls()

    @classmethod
    def var(cls, name: str, exponent: int = 1) -> "ParamPoly":
        if exponent == 0:
            return cls.const(1)
        return cls({((name, exponent),): ONE})

    @classmethod
    def coerce(cls, value) -> "ParamPoly":
        if isinstance(value, ParamPoly):
            return value
        return cls.const(value)

    # -- ring operations ----------------------------------------------

    def __add__(self, other):
        other = ParamPoly.coerce(other)
        terms = dict(self.terms)
        for mono, coef in other.terms.items():
            s = terms.get(mono, Scalar()) + coef
            if s:
                terms[mono] = s
            else:
                terms.pop(mono, None)
        out = ParamPoly()
        out.terms = terms
        return out

    __radd__ = __add__

    def __neg__(self):
        out = ParamPoly()
        out.terms = {m: -c for m, c in self.terms.items()}
        return out

    def __sub__(self, other):
        return self + (-ParamPoly.coerce(other))

    def __rsub__(self, other):
        return ParamPoly.coerce(other) + (-self)

    def __mul__(self, other):
        other = ParamPoly.coerce(other)
        terms = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = _mono_mul(m1, m2)
                s = terms.get(mono, Scalar()) + c1 * c2
                if s:
                    terms[mono] = s
                else:
                    terms.pop(mono, None)
        out = ParamPoly()
        out.terms = terms
        return out

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if self.is_monomial():
                mono, coef = next(iter(self.terms.items()))
                inv = ParamPoly({_mono_pow(mono, -1): ONE / coef})
                return inv ** (-k)
            raise ValueError("negative power of non-monomial ParamPoly")
        out = ParamPoly.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            return self * (ONE / _coerce_scalar(other))
        other = ParamPoly.coerce(other)
        q = other.try_div_into(self)
        if q is None:
            raise ValueError("inexact ParamPoly division; use ParamRat")
        return q

    # -- predicates ----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and () in self.terms)

    def constant_value(self) -> Scalar:
        if not self.terms:
            return Scalar()
        if self.is_constant():
            return self.terms[()]
        raise ValueError(f"not a constant: {self}")

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            other = ParamPoly.coerce(other)
        if not isinstance(other, ParamPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    # -- substitution / evaluation --------------------------------------

    def subs(self, assignment: dict) -> "ParamPoly":
        """Substitute parameters by ParamPoly/rational values (exact)."""
        out = ParamPoly()
        for mono, coef in self.terms.items():
            term = ParamPoly.const(coef)
            for name, exp in mono:
                if name in assignment:
                    repl = ParamPoly.coerce(assignment[name])
                    term = term * repl ** exp
                else:
                    term = term * ParamPoly.var(name, exp)
            out = out + term
        return out

    def rename(self, mapping: dict) -> "ParamPoly":
        out = ParamPoly()
        for mono, coef in self.terms.items():
            new = tuple(sorted((mapping.get(n, n), e) for n, e in mono))
            if len({n for n, _ in new}) != len(new):
                merged = {}
                for n, e in new:
                    merged[n] = merged.get(n, 0) + e
                new = tuple(sorted((n, e) for n, e in merged.items() if e))
            s = out.terms.get(new, Scalar()) + coef
            if s:
                out.terms[new] = s
            else:
                out.terms.pop(new, None)
        return out

    def eval_numeric(self, values: dict):
        """Evaluate at numeric parameter values (mpmath/complex friendly)."""
        total = 0
        for mono, coef in self.terms.items():
            term = complex(coef.re) if coef.im == 0 else complex(coef.re, coef.im)
            acc = 1
            for name, exp in mono:
                if name not in values:
                    raise KeyError(f"parameter {name!r} has no value")
                acc = acc * values[name] ** exp
            total = total + acc * term if coef.im == 0 else total + acc * term
        return total

    def eval_mp(self, values: dict, mp):
        """Evaluate with an mpmath context at high precision."""
        total = mp.mpc(0)
        for mono, coef in self.terms.items():
            term = mp.mpc(mp.mpf(coef.re.numerator) / mp.mpf(coef.re.denominator),
                          mp.mpf(coef.im.numerator) / mp.mpf(coef.im.denominator))
            for name, exp in mono:
                if name not in values:
                    raise KeyError(f"parameter {name!r} has no value")
                term = term * mp.power(values[name], exp)
            total += term
        return total

    def params(self) -> set:
        out = set()
        for mono in self.terms:
            out.update(name for name, _ in mono)
        return out

    # -- exact division --------------------------------------------------

    def try_div_into(self, dividend: "ParamPoly"):
        """Return dividend / self if the division is exact, else None."""
        if self.is_zero:
            raise ZeroDivisionError("division by zero ParamPoly")
        if dividend.is_zero:
            return ParamPoly()
        if self.is_monomial():
            mono, coef = next(iter(self.terms.items()))
            inv_mono = _mono_pow(mono, -1)
            out = ParamPoly()
            out.terms = {
                _mono_mul(m, inv_mono): c / coef for m, c in dividend.terms.items()
            }
            return out
        # shift both to true polynomials, run multivariate division
        shift = _common_shift(self, dividend)
        num = dividend._shifted(shift)
        den = self._shifted(shift)
        extra = _common_shift(den, den)
        # den now polynomial; num may still be Laurent if dividend had deeper
        # negative exponents: shift num alone and remember the monomial
        num_shift = _common_shift(num, num)
        num = num._shifted(num_shift)
        q = _poly_divide(num, den)
        if q is None:
            return None
        _ = extra
        back = {k: -v for k, v in num_shift.items()}
        return q._shifted(back)

    def _shifted(self, shift: dict) -> "ParamPoly":
        if not shift:
            return self
        out = ParamPoly()
        for mono, coef in self.terms.items():
            d = dict(mono)
            for name, k in shift.items():
                d[name] = d.get(name, 0) + k
            out.terms[tuple(sorted((n, e) for n, e in d.items() if e))] = coef
        return out

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for mono in sorted(self.terms, key=lambda m: (len(m), m)):
            coef = self.terms[mono]
            names = "*".join(
                n if e == 1 else f"{n}^{e}" for n, e in mono
            )
            if not names:
                bits.append(repr(coef))
            elif coef == ONE:
                bits.append(names)
            else:
                bits.append(f"{coef!r}*{names}")
        return " + ".join(bits)


def _mono_mul(m1, m2):
    if not m1:
        return m2
    if not m2:
        return m1
    d = dict(m1)
    for name, exp in m2:
        e = d.get(name, 0) + exp
        if e:
            d[name] = e
        else:
            del d[name]
    return tuple(sorted(d.items()))


def _mono_pow(mono, k):
    return tuple(sorted((n, e * k) for n, e in mono))


def _common_shift(p: ParamPoly, q: ParamPoly) -> dict:
    """Exponent shift making all exponents of p's and q's variables >= 0."""
    mins = {}
    for poly in (p, q):
        for mono in poly.terms:
            for name, exp in mono:
                mins[name] = min(mins.get(name, 0), exp)
    return {n: -m for n, m in mins.items() if m < 0}


def _mono_key(mono):
    deg = sum(e for _, e in mono)
    return (deg, mono)


def _poly_divide(num: ParamPoly, den: ParamPoly):
    """Multivariate polynomial division; returns quotient iff remainder 0."""
    names = sorted({n for p in (num, den) for m in p.terms for n, _ in m})

    def key(mono):
        d = dict(mono)
        return (sum(d.values()), tuple(d.get(n, 0) for n in names))

    lead_den = max(den.terms, key=key)
    lead_coef = den.terms[lead_den]
    quotient = ParamPoly()
    rem = num
    guard = 0
    while not rem.is_zero:
        guard += 1
        if guard > 10000:
            return None
        lead_rem = max(rem.terms, key=key)
        # candidate quotient monomial
        d = dict(lead_rem)
        ok = True
        for name, exp in lead_den:
            e = d.get(name, 0) - exp
            if e < 0:
                ok = False
                break
            if e:
                d[name] = e
            else:
                d.pop(name, None)
        if not ok:
            return None
        qmono = tuple(sorted(d.items()))
        qterm = ParamPoly({qmono: rem.terms[lead_rem] / lead_coef})
        quotient = quotient + qterm
        rem = rem - qterm * den
    return quotient


class ParamRat:
    """Element of the fraction field of ParamPoly."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = ParamPoly.coerce(num)
        den = ParamPoly.const(1) if den is None else ParamPoly.coerce(den)
        if den.is_zero:
            raise ZeroDivisionError("zero denominator")
        self.num, self.den = self._reduce(num, den)

    @staticmethod
    def _reduce(num, den):
        if num.is_zero:
            return ParamPoly(), ParamPoly.const(1)
        q = den.try_div_into(num)
        if q is not None:
            return q, ParamPoly.const(1)
        # normalise the denominator by its "leading" coefficient
        lead = max(den.terms, key=_mono_key)
        c = den.terms[lead]
        num = num * (ONE / c)
        den = den * (ONE / c)
        return num, den

    @classmethod
    def coerce(cls, value) -> "ParamRat":
        if isinstance(value, ParamRat):
            return value
        return cls(value)

    @property
    def is_zero(self):
        return self.num.is_zero

    def __add__(self, other):
        other = ParamRat.coerce(other)
        return ParamRat(self.num * other.den + other.num * self.den,
                        self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        out = ParamRat(ParamPoly.const(0))
        out.num, out.den = -self.num, self.den
        return out

    def __sub__(self, other):
        return self + (-ParamRat.coerce(other))

    def __rsub__(self, other):
        return ParamRat.coerce(other) + (-self)

    def __mul__(self, other):
        other = ParamRat.coerce(other)
        return ParamRat(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = ParamRat.coerce(other)
        if other.is_zero:
            raise ZeroDivisionError
        return ParamRat(self.num * other.den, self.den * other.num)

    def __eq__(self, other):
        other = ParamRat.coerce(other)
        return (self.num * other.den) == (other.num * self.den)

    def is_poly(self) -> bool:
        return self.den == ParamPoly.const(1)

    def as_poly(self) -> ParamPoly:
        if not self.is_poly():
            raise ValueError(f"not polynomial: {self}")
        return self.num

    def __repr__(self):
        if self.is_poly():
            return repr(self.num)
        return f"({self.num!r})/({self.den!r})"


def param(name: str) -> ParamPoly:
    """Convenience constructor for a first-power parameter."""
    return ParamPoly.var(name)
