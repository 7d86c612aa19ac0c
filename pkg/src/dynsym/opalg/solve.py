"""Span decomposition of operators by exact monomial matching.

Writes an operator as a parameter-rational linear combination of basis
operators by collecting every (derivative index, variable monomial) pair
into one linear system and eliminating over the fraction field of
ParamPoly.  No numeric sampling: membership is decided exactly.
"""

from __future__ import annotations

from .diffop import DiffOp
from .params import ParamPoly, ParamRat


class NotInSpan:
    """Failed decomposition; carries the offending residual operator."""

    __slots__ = ("residual",)

    def __init__(self, residual=None):
        self.residual = residual

    def __bool__(self):
        return False

    def __repr__(self):
        return f"NotInSpan({self.residual!r})"


def op_decompose(target: DiffOp, basis):
    """Coefficients c_i with target = sum c_i basis_i, or NotInSpan.

    Coefficients are ParamRat (parameter-rational); the result is verified
    exactly after back-substitution.
    """
    basis = list(basis)
    for b in basis:
        target.space.compatible(b.space)

    rows = {}

    def add_entries(op: DiffOp, col: int):
        for didx, coeff in op.terms.items():
            for exps, poly in coeff.terms.items():
                rows.setdefault((didx, exps), {})[col] = poly

    for i, b in enumerate(basis):
        add_entries(b, i)
    add_entries(target, len(basis))

    n = len(basis)
    system = [dict(entries) for entries in rows.values()]
    coeffs = _solve_rational(system, n)
    if coeffs is None:
        # residual is reported relative to the zero combination
        return NotInSpan(target)

    combo = DiffOp.zero(target.space)
    lcm_den = ParamPoly.const(1)
    for c in coeffs:
        if not c.is_poly():
            lcm_den = lcm_den * c.den
    residual = target.scale(lcm_den)
    for c, b in zip(coeffs, basis):
        residual = residual - b.scale((c * ParamRat(lcm_den)).as_poly())
    _ = combo
    if not residual.is_zero:
        return NotInSpan(residual)
    return coeffs


def _solve_rational(system, n):
    """Gaussian elimination over ParamRat for sparse rows; None if inconsistent.

    `system` is a list of {column: ParamPoly} dicts; column n is the rhs.
    Returns a list of n ParamRat values (free unknowns set to zero).
    """
    rows = []
    for entries in system:
        row = {c: ParamRat(p) for c, p in entries.items() if not p.is_zero}
        if row:
            rows.append(row)

    solved = {}
    col_order = []
    for col in range(n):
        pivot_row = None
        for row in rows:
            if col in row and not row[col].is_zero:
                if pivot_row is None or _simpler(row[col], pivot_row[col]):
                    pivot_row = row
        if pivot_row is None:
            continue
        rows.remove(pivot_row)
        piv = pivot_row[col]
        norm = {c: v / piv for c, v in pivot_row.items()}
        new_rows = []
        for row in rows:
            if col in row and not row[col].is_zero:
                f = row[col]
                merged = dict(row)
                for c, v in norm.items():
                    cur = merged.get(c, ParamRat(0)) - f * v
                    if cur.is_zero:
                        merged.pop(c, None)
                    else:
                        merged[c] = cur
                merged.pop(col, None)
                if merged:
                    new_rows.append(merged)
            else:
                new_rows.append(row)
        rows = new_rows
        solved[col] = norm
        col_order.append(col)

    for row in rows:
        rhs = row.get(n)
        lhs_cols = [c for c in row if c != n]
        if not lhs_cols and rhs is not None and not rhs.is_zero:
            return None

    values = {c: ParamRat(0) for c in range(n)}
    for col in reversed(col_order):
        norm = solved[col]
        acc = norm.get(n, ParamRat(0))
        for c, v in norm.items():
            if c == n or c == col:
                continue
            acc = acc - v * values[c]
        values[col] = acc
    return [values[c] for c in range(n)]


def _simpler(a: ParamRat, b: ParamRat) -> bool:
    """Prefer constant pivots to keep elimination fractions small."""
    def score(x: ParamRat):
        return (0 if x.is_poly() and x.num.is_constant() else 1,
                len(x.num.terms) + len(x.den.terms))
    return score(a) < score(b)
