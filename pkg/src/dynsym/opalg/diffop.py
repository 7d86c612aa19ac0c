"""Normal-ordered differential operators with exact coefficients.

A :class:`DiffOp` is a finite map from derivative multi-indices (over the
differentiable variables of a :class:`VarSpace`) to :class:`CoeffExpr`
coefficients, kept in normal form: every coefficient stands to the left of
its derivatives.  Composition applies the Leibniz rule exactly, so the
type is closed under addition, composition and commutators (modulo the
series truncation when a lattice-spacing variable is present).
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .coeff import CoeffExpr, ConfigurationError, VarSpace
from .params import ParamPoly, Scalar


class DiffOp:
    """Finite sum coeff * d^alpha in normal form."""

    __slots__ = ("space", "terms")

    def __init__(self, space: VarSpace, terms=None):
        self.space = space
        self.terms = {}
        if terms:
            for didx, coeff in terms.items():
                if not isinstance(coeff, CoeffExpr):
                    coeff = CoeffExpr.const(space, coeff)
                if coeff.is_zero:
                    continue
                if len(didx) != len(space.names):
                    raise ConfigurationError("derivative index does not match space")
                if any(k < 0 for k in didx):
                    raise ConfigurationError("negative derivative order")
                si = space.index(space.series) if space.series else None
                if si is not None and didx[si]:
                    raise ConfigurationError("cannot differentiate the series variable")
                self.terms[tuple(didx)] = coeff

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, space) -> "DiffOp":
        return cls(space)

    @classmethod
    def identity(cls, space) -> "DiffOp":
        return cls.from_coeff(CoeffExpr.const(space, 1))

    @classmethod
    def from_coeff(cls, coeff: CoeffExpr) -> "DiffOp":
        zero = (0,) * len(coeff.space.names)
        return cls(coeff.space, {zero: coeff})

    @classmethod
    def partial(cls, space: VarSpace, name: str, order: int = 1) -> "DiffOp":
        didx = [0] * len(space.names)
        didx[space.index(name)] = order
        return cls(space, {tuple(didx): CoeffExpr.const(space, 1)})

    # -- linear structure -------------------------------------------------

    def __add__(self, other):
        if isinstance(other, CoeffExpr):
            other = DiffOp.from_coeff(other)
        elif isinstance(other, (int, Fraction, Scalar, ParamPoly)):
            other = DiffOp.from_coeff(CoeffExpr.const(self.space, other))
        self.space.compatible(other.space)
        terms = dict(self.terms)
        for didx, coeff in other.terms.items():
            s = terms.get(didx)
            s = coeff if s is None else s + coeff
            if s.is_zero:
                terms.pop(didx, None)
            else:
                terms[didx] = s
        out = DiffOp(self.space)
        out.terms = terms
        return out

    __radd__ = __add__

    def __neg__(self):
        out = DiffOp(self.space)
        out.terms = {d: -c for d, c in self.terms.items()}
        return out

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, Scalar, ParamPoly, CoeffExpr)):
            other = DiffOp.from_coeff(CoeffExpr.const(self.space, other)
                                      if not isinstance(other, CoeffExpr) else other)
        return self + (-other)

    def scale(self, factor) -> "DiffOp":
        """Left-multiply by a scalar, ParamPoly or CoeffExpr."""
        if isinstance(factor, CoeffExpr):
            self.space.compatible(factor.space)
            out = DiffOp(self.space)
            for didx, coeff in self.terms.items():
                c = factor * coeff
                if not c.is_zero:
                    out.terms[didx] = c
            return out
        out = DiffOp(self.space)
        for didx, coeff in self.terms.items():
            c = coeff * factor
            if not c.is_zero:
                out.terms[didx] = c
        return out

    def __mul__(self, other):
        """Operator composition self o other (normal-ordered, exact Leibniz)."""
        if isinstance(other, (int, Fraction, Scalar, ParamPoly, CoeffExpr)):
            return self.scale(other)
        self.space.compatible(other.space)
        out = DiffOp(self.space)
        for alpha, f in self.terms.items():
            for beta, g in other.terms.items():
                for kappa, mult in _leibniz_splits(alpha):
                    dg = g
                    for name, k in zip(self.space.names, kappa):
                        for _ in range(k):
                            dg = dg.diff(name)
                        if dg.is_zero:
                            break
                    if dg.is_zero:
                        continue
                    didx = tuple(a - k + b for a, k, b in zip(alpha, kappa, beta))
                    coeff = f * dg * mult
                    cur = out.terms.get(didx)
                    cur = coeff if cur is None else cur + coeff
                    if cur.is_zero:
                        out.terms.pop(didx, None)
                    else:
                        out.terms[didx] = cur
        return out

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, Scalar, ParamPoly)):
            return self.scale(other)
        if isinstance(other, CoeffExpr):
            return self.scale(other)
        return NotImplemented

    def commutator(self, other: "DiffOp") -> "DiffOp":
        return self * other - other * self

    def __pow__(self, k: int) -> "DiffOp":
        if k < 0:
            raise ValueError("negative operator power")
        out = DiffOp.identity(self.space)
        for _ in range(k):
            out = out * self
        return out

    # -- action ------------------------------------------------------------

    def apply(self, target: CoeffExpr) -> CoeffExpr:
        """Exact action on a coefficient expression (monomial or sum)."""
        self.space.compatible(target.space)
        total = CoeffExpr.zero(self.space)
        for alpha, f in self.terms.items():
            g = target
            for name, k in zip(self.space.names, alpha):
                for _ in range(k):
                    g = g.diff(name)
                if g.is_zero:
                    break
            if g.is_zero:
                continue
            total = total + f * g
        return total

    # -- predicates ----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def is_multiplication(self) -> bool:
        zero = (0,) * len(self.space.names)
        return not self.terms or set(self.terms) == {zero}

    def is_scalar(self) -> bool:
        """True when the operator is multiplication by a variable-free constant."""
        if self.is_zero:
            return True
        if not self.is_multiplication():
            return False
        return next(iter(self.terms.values())).is_constant()

    def scalar_poly(self) -> ParamPoly:
        if self.is_zero:
            return ParamPoly()
        if not self.is_scalar():
            raise ValueError(f"not a scalar operator: {self}")
        return next(iter(self.terms.values())).constant_poly()

    def __eq__(self, other):
        if not isinstance(other, DiffOp):
            return NotImplemented
        return self.space == other.space and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    # -- reshaping -------------------------------------------------------------

    def truncated(self, order: int) -> "DiffOp":
        if self.space.series is None:
            return self
        space = VarSpace(self.space.names, self.space.laurent,
                         self.space.series, order)
        out = DiffOp(space)
        for didx, coeff in self.terms.items():
            c = coeff.truncated(order)
            c.space = space
            if not c.is_zero:
                out.terms[didx] = c
        return out

    def without_series(self) -> "DiffOp":
        if self.space.series is None:
            return self
        i = self.space.index(self.space.series)
        space = self.space.without_series()
        out = DiffOp(space)
        for didx, coeff in self.terms.items():
            c = coeff.without_series()
            if c.is_zero:
                continue
            new = tuple(e for j, e in enumerate(didx) if j != i)
            out.terms[new] = c
        return out

    def series_shift(self, k: int) -> "DiffOp":
        out = DiffOp(self.space)
        for didx, coeff in self.terms.items():
            c = coeff.series_shift(k)
            if not c.is_zero:
                out.terms[didx] = c
        return out

    def embed(self, space: VarSpace, varmap: dict) -> "DiffOp":
        out = DiffOp(space)
        for didx, coeff in self.terms.items():
            new = [0] * len(space.names)
            for name, k in zip(self.space.names, didx):
                new[space.index(varmap.get(name, name))] += k
            key = tuple(new)
            c = coeff.embed(space, varmap)
            cur = out.terms.get(key)
            cur = c if cur is None else cur + c
            if cur.is_zero:
                out.terms.pop(key, None)
            else:
                out.terms[key] = cur
        return out

    def subs_params(self, assignment: dict) -> "DiffOp":
        out = DiffOp(self.space)
        for didx, coeff in self.terms.items():
            c = coeff.subs_params(assignment)
            if not c.is_zero:
                out.terms[didx] = c
        return out

    def rename_params(self, mapping: dict) -> "DiffOp":
        out = DiffOp(self.space)
        for didx, coeff in self.terms.items():
            out.terms[didx] = coeff.rename_params(mapping)
        return out

    def substitute_partial(self, name: str, replacement: ParamPoly) -> "DiffOp":
        """Formally replace every d/d`name` by a constant (dualisation checks).

        Only valid when no coefficient depends on `name`; the derivative
        exponent k becomes replacement**k.
        """
        i = self.space.index(name)
        for coeff in self.terms.values():
            if any(exps[i] for exps in coeff.terms):
                raise ConfigurationError(
                    f"coefficients depend on {name!r}; substitution is ill-defined")
        names = tuple(n for n in self.space.names if n != name)
        space = VarSpace(names, laurent=self.space.laurent & set(names),
                         series=self.space.series, order=self.space.order)
        out = DiffOp(space)
        for didx, coeff in self.terms.items():
            k = didx[i]
            new_didx = tuple(e for j, e in enumerate(didx) if j != i)
            c = CoeffExpr(space, {
                tuple(e for j, e in enumerate(exps) if j != i): poly
                for exps, poly in coeff.terms.items()})
            if k:
                c = c * replacement ** k
            cur = out.terms.get(new_didx)
            cur = c if cur is None else cur + c
            if cur.is_zero:
                out.terms.pop(new_didx, None)
            else:
                out.terms[new_didx] = cur
        return out

    # -- division ------------------------------------------------------------

    def leading_index(self):
        if self.is_zero:
            raise ValueError("zero operator has no leading index")
        return max(self.terms, key=lambda d: (sum(d), d))

    def right_divide(self, divisor: "DiffOp"):
        """Write self = L o divisor + remainder (division by the leading term).

        The divisor's leading coefficient must be a monomial (constant in
        practice: Schroedinger operators).  Returns (L, remainder).
        """
        self.space.compatible(divisor.space)
        lead = divisor.leading_index()
        lead_coeff = divisor.terms[lead]
        quotient = DiffOp.zero(self.space)
        rem = self
        while not rem.is_zero:
            cand = None
            for didx in rem.terms:
                if all(a >= b for a, b in zip(didx, lead)):
                    key = (sum(didx), didx)
                    if cand is None or key > cand[0]:
                        cand = (key, didx)
            if cand is None:
                break
            didx = cand[1]
            c = rem.terms[didx].div_exact(lead_coeff)
            if c is None:
                break
            lterm = DiffOp(self.space, {
                tuple(a - b for a, b in zip(didx, lead)): c})
            quotient = quotient + lterm
            rem = rem - lterm * divisor
        return quotient, rem

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for didx in sorted(self.terms, key=lambda d: (sum(d), d)):
            coeff = self.terms[didx]
            dstr = "*".join(
                f"D{n}" if k == 1 else f"D{n}^{k}"
                for n, k in zip(self.space.names, didx) if k
            )
            cstr = repr(coeff)
            if len(coeff.terms) > 1:
                cstr = f"({cstr})"
            if dstr:
                bits.append(f"{cstr}*{dstr}" if cstr != "1" else dstr)
            else:
                bits.append(cstr)
        return " + ".join(bits)


def _leibniz_splits(alpha):
    """All kappa <= alpha with multinomial weights prod(C(alpha_i, kappa_i))."""
    splits = [((), 1)]
    for a in alpha:
        splits = [
            (kappa + (k,), mult * comb(a, k))
            for kappa, mult in splits
            for k in range(a + 1)
        ]
    return splits


# -- the spec-level operation names -----------------------------------------

def op_mul(a: DiffOp, b: DiffOp) -> DiffOp:
    """Normal-ordered composition a o b."""
    return a * b


def op_commutator(a: DiffOp, b: DiffOp) -> DiffOp:
    """Commutator [a, b] = a o b - b o a in normal form."""
    return a.commutator(b)


def op_apply(a: DiffOp, monomial: CoeffExpr) -> CoeffExpr:
    """Exact action of the operator on a coefficient expression."""
    return a.apply(monomial)


def series_truncate(a: DiffOp, order: int) -> DiffOp:
    """Reduce all coefficients modulo series_var**(order+1)."""
    return a.truncated(order)
