"""Base-variable coefficient layer: Laurent polynomials over ParamPoly.

A :class:`VarSpace` fixes the ordered tuple of base variables of a
representation (e.g. ``('t', 'r')`` or ``('zeta', 't', 'r')``), which of
them admit negative powers (only the time-like variable, or ``z``/``zbar``
in the holomorphic case), which are differentiable, and an optional formal
series variable (the lattice spacing) truncated at a fixed order.

A :class:`CoeffExpr` is a finite sum of monomials in the base variables
with ParamPoly coefficients, canonical (zero terms pruned), and exact.
"""

from __future__ import annotations

from fractions import Fraction

from .params import ParamPoly, Scalar


class ConfigurationError(ValueError):
    """Raised on incompatible spaces, truncation orders or bad parameters."""


class ConstructionError(ValueError):
    """Raised when an operation would leave the coefficient ring."""


class VarSpace:
    """Ordered base variables with Laurent/series annotations."""

    __slots__ = ("names", "laurent", "series", "order", "_index")

    def __init__(self, names, laurent=(), series=None, order=None):
        self.names = tuple(names)
        self.laurent = frozenset(laurent)
        self.series = series
        self.order = order
        if series is not None:
            if series not in self.names:
                raise ConfigurationError(f"series variable {series!r} not in space")
            if order is None or order < 0:
                raise ConfigurationError("series variable needs a truncation order")
        self._index = {n: i for i, n in enumerate(self.names)}
        unknown = self.laurent - set(self.names)
        if unknown:
            raise ConfigurationError(f"laurent variables {unknown} not in space")

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise ConfigurationError(f"unknown variable {name!r}") from None

    @property
    def diff_names(self):
        return tuple(n for n in self.names if n != self.series)

    def __eq__(self, other):
        return (isinstance(other, VarSpace)
                and self.names == other.names
                and self.laurent == other.laurent
                and self.series == other.series
                and self.order == other.order)

    def __hash__(self):
        return hash((self.names, self.laurent, self.series, self.order))

    def __repr__(self):
        extra = ""
        if self.series:
            extra = f", series={self.series}^<={self.order}"
        return f"VarSpace({','.join(self.names)}{extra})"

    def compatible(self, other: "VarSpace"):
        if self != other:
            raise ConfigurationError(
                f"incompatible variable spaces {self!r} vs {other!r}")

    def without_series(self) -> "VarSpace":
        if self.series is None:
            return self
        names = tuple(n for n in self.names if n != self.series)
        return VarSpace(names, laurent=self.laurent & set(names))


class CoeffExpr:
    """Exact Laurent-polynomial coefficient over a VarSpace."""

    __slots__ = ("space", "terms")

    def __init__(self, space: VarSpace, terms=None):
        self.space = space
        self.terms = {}
        if terms:
            for exps, poly in terms.items():
                poly = ParamPoly.coerce(poly)
                if poly.is_zero:
                    continue
                self._validate(exps)
                self.terms[tuple(exps)] = poly

    def _validate(self, exps):
        names = self.space.names
        if len(exps) != len(names):
            raise ConfigurationError("exponent tuple does not match space")
        for name, e in zip(names, exps):
            if e < 0 and name not in self.space.laurent:
                raise ConstructionError(
                    f"negative power of {name!r} is not allowed")

    # -- constructors --------------------------------------------------

    @classmethod
    def zero(cls, space) -> "CoeffExpr":
        return cls(space)

    @classmethod
    def const(cls, space, value) -> "CoeffExpr":
        poly = ParamPoly.coerce(value)
        if poly.is_zero:
            return cls(space)
        return cls(space, {(0,) * len(space.names): poly})

    @classmethod
    def mono(cls, space, coef=1, **powers) -> "CoeffExpr":
        exps = [0] * len(space.names)
        for name, e in powers.items():
            exps[space.index(name)] = e
        return cls(space, {tuple(exps): ParamPoly.coerce(coef)})

    # -- arithmetic ----------------------------------------------------

    def _truncate_ok(self, exps) -> bool:
        if self.space.series is None:
            return True
        i = self.space.index(self.space.series)
        return exps[i] <= self.space.order

    def __add__(self, other):
        if isinstance(other, (int, Fraction, Scalar, ParamPoly)):
            other = CoeffExpr.const(self.space, other)
        self.space.compatible(other.space)
        terms = dict(self.terms)
        for exps, poly in other.terms.items():
            s = terms.get(exps, ParamPoly()) + poly
            if s.is_zero:
                terms.pop(exps, None)
            else:
                terms[exps] = s
        out = CoeffExpr(self.space)
        out.terms = terms
        return out

    __radd__ = __add__

    def __neg__(self):
        out = CoeffExpr(self.space)
        out.terms = {e: -p for e, p in self.terms.items()}
        return out

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, Scalar, ParamPoly)):
            other = CoeffExpr.const(self.space, other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Scalar, ParamPoly)):
            out = CoeffExpr(self.space)
            poly = ParamPoly.coerce(other)
            if poly.is_zero:
                return out
            out.terms = {e: p * poly for e, p in self.terms.items()}
            return out
        self.space.compatible(other.space)
        terms = {}
        for e1, p1 in self.terms.items():
            for e2, p2 in other.terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                if not self._truncate_ok(exps):
                    continue
                s = terms.get(exps, ParamPoly()) + p1 * p2
                if s.is_zero:
                    terms.pop(exps, None)
                else:
                    terms[exps] = s
        out = CoeffExpr(self.space)
        out.terms = terms
        return out

    __rmul__ = __mul__

    # -- calculus -------------------------------------------------------

    def diff(self, name: str) -> "CoeffExpr":
        i = self.space.index(name)
        if name == self.space.series:
            raise ConstructionError("the series variable is not differentiable")
        out = CoeffExpr(self.space)
        for exps, poly in self.terms.items():
            e = exps[i]
            if e == 0:
                continue
            new = list(exps)
            new[i] = e - 1
            new = tuple(new)
            s = out.terms.get(new, ParamPoly()) + poly * Fraction(e)
            if s.is_zero:
                out.terms.pop(new, None)
            else:
                out.terms[new] = s
        return out

    # -- predicates -------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        zero = (0,) * len(self.space.names)
        return not self.terms or (len(self.terms) == 1 and zero in self.terms)

    def constant_poly(self) -> ParamPoly:
        if self.is_zero:
            return ParamPoly()
        if self.is_constant():
            return next(iter(self.terms.values()))
        raise ValueError(f"not constant in the base variables: {self}")

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Scalar, ParamPoly)):
            other = CoeffExpr.const(self.space, other)
        if not isinstance(other, CoeffExpr):
            return NotImplemented
        return self.space == other.space and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    # -- reshaping ---------------------------------------------------------

    def truncated(self, order: int) -> "CoeffExpr":
        """Drop series-variable powers above `order` (no-op without series)."""
        if self.space.series is None:
            return self
        i = self.space.index(self.space.series)
        space = VarSpace(self.space.names, self.space.laurent,
                         self.space.series, order)
        out = CoeffExpr(space)
        out.terms = {e: p for e, p in self.terms.items() if e[i] <= order}
        return out

    def without_series(self) -> "CoeffExpr":
        """Project onto the series-free space (keeps order-0 terms only)."""
        if self.space.series is None:
            return self
        i = self.space.index(self.space.series)
        space = self.space.without_series()
        out = CoeffExpr(space)
        for exps, poly in self.terms.items():
            if exps[i] != 0:
                continue
            new = tuple(e for j, e in enumerate(exps) if j != i)
            out.terms[new] = poly
        return out

    def series_shift(self, k: int) -> "CoeffExpr":
        """Multiply by series_var**k (k may be negative if exponents allow)."""
        if self.space.series is None:
            raise ConstructionError("no series variable in this space")
        i = self.space.index(self.space.series)
        out = CoeffExpr(self.space)
        for exps, poly in self.terms.items():
            e = exps[i] + k
            if e < 0:
                raise ConstructionError("series shift would produce a pole")
            if e > self.space.order:
                continue
            new = list(exps)
            new[i] = e
            out.terms[tuple(new)] = poly
        return out

    def embed(self, space: VarSpace, varmap: dict) -> "CoeffExpr":
        """Re-express over `space`, sending variable names through varmap."""
        idx = [space.index(varmap.get(n, n)) for n in self.space.names]
        out = CoeffExpr(space)
        for exps, poly in self.terms.items():
            new = [0] * len(space.names)
            for pos, e in zip(idx, exps):
                new[pos] += e
            key = tuple(new)
            s = out.terms.get(key, ParamPoly()) + poly
            if not s.is_zero:
                out.terms[key] = s
            else:
                out.terms.pop(key, None)
        return out

    def subs_params(self, assignment: dict) -> "CoeffExpr":
        out = CoeffExpr(self.space)
        for exps, poly in self.terms.items():
            p = poly.subs(assignment)
            if not p.is_zero:
                cur = out.terms.get(exps, ParamPoly()) + p
                if cur.is_zero:
                    out.terms.pop(exps, None)
                else:
                    out.terms[exps] = cur
        return out

    def rename_params(self, mapping: dict) -> "CoeffExpr":
        out = CoeffExpr(self.space)
        for exps, poly in self.terms.items():
            out.terms[exps] = poly.rename(mapping)
        return out

    def div_exact(self, other: "CoeffExpr"):
        """Exact division by a base-variable monomial coefficient, else None."""
        if not other.is_monomial():
            return None
        (exps, poly), = other.terms.items()
        if not poly.is_monomial():
            return None
        out = CoeffExpr(self.space)
        for e, p in self.terms.items():
            new = tuple(a - b for a, b in zip(e, exps))
            try:
                self._validate(new)
            except ConstructionError:
                return None
            out.terms[new] = poly.try_div_into(p)
        return out

    # -- evaluation ---------------------------------------------------------

    def eval_mp(self, point: dict, params: dict, mp):
        total = mp.mpc(0)
        for exps, poly in self.terms.items():
            term = poly.eval_mp(params, mp)
            for name, e in zip(self.space.names, exps):
                if e:
                    term = term * mp.power(point[name], e)
            total += term
        return total

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for exps in sorted(self.terms):
            poly = self.terms[exps]
            mono = "*".join(
                n if e == 1 else f"{n}^{e}"
                for n, e in zip(self.space.names, exps) if e
            )
            coef = repr(poly)
            if len(poly.terms) > 1:
                coef = f"({coef})"
            if not mono:
                bits.append(coef)
            elif coef == "1":
                bits.append(mono)
            elif coef == "-1":
                bits.append(f"-{mono}")
            else:
                bits.append(f"{coef}*{mono}")
        return " + ".join(bits)
