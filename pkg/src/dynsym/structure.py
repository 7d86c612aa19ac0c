"""Lie-structure verification: bracket tables, invariant-operator
commutators, Casimir reduction, parabolic closure, density brackets and
indicial exponents.

Every check is exact: a residual is a normal-form operator and passes
only when it is identically zero (zero modulo the truncation order for
series representations).  Reports serialise to plain dictionaries so the
command-line front end can emit them as JSON.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .opalg import (DiffOp, NotInSpan, op_commutator, op_decompose,
                    ParamPoly, param)
from .reps import GeneratorFamily, label_str, label_key, make_schrodinger_op

HALF = Fraction(1, 2)


@dataclass
class CheckItem:
    subject: str
    residual: str
    passed: bool
    clipped: bool = False
    info: str = ""

    def as_dict(self):
        out = {"pair": self.subject, "residual": self.residual,
               "pass": self.passed}
        if self.clipped:
            out["window_clipped"] = True
        if self.info:
            out["info"] = self.info
        return out


@dataclass
class CheckReport:
    """Outcome of one structural check over a generator family."""

    check: str
    params: dict = field(default_factory=dict)
    items: list = field(default_factory=list)

    def add(self, subject, residual: DiffOp, clipped=False, info=""):
        passed = residual.is_zero
        self.items.append(CheckItem(
            subject=subject,
            residual="0" if passed else repr(residual),
            passed=passed, clipped=clipped, info=info))

    @property
    def passed(self) -> bool:
        return all(it.passed for it in self.items if not it.clipped)

    def as_dict(self):
        return {"check": self.check, "params": self.params,
                "items": [it.as_dict() for it in self.items],
                "pass": self.passed}

    def failures(self):
        return [it for it in self.items if not it.passed and not it.clipped]


def _params_dict(fam: GeneratorFamily) -> dict:
    p = fam.params
    out = {"rep": fam.rep_id, "d": p.d}
    for name in ("x", "xt", "xi", "xit", "xip", "M", "gamma", "theta",
                 "alpha"):
        v = getattr(p, name)
        if v is not None:
            out[name] = str(v)
    if fam.rep_id.startswith("nonlocal"):
        out["n"] = p.n
    if fam.rep_id == "lattice_sch":
        out["order"] = p.order
    return out


def check_structure_constants(fam: GeneratorFamily) -> CheckReport:
    """Residual [G_a, G_b] - table combination for every ordered pair."""
    report = CheckReport("structure-constants", _params_dict(fam))
    labels = fam.labels()
    for la in labels:
        for lb in labels:
            if label_key(lb) <= label_key(la):
                continue
            got = op_commutator(fam[la], fam[lb])
            expected, clipped = fam.expected_bracket(la, lb)
            subject = f"[{label_str(la)}, {label_str(lb)}]"
            if clipped:
                report.add(subject, DiffOp.zero(fam.space), clipped=True,
                           info="target outside index window")
                continue
            report.add(subject, got - expected)
    return report


def check_dynamical_symmetry(S: DiffOp, fam: GeneratorFamily,
                             allowed=None) -> CheckReport:
    """Decompose [S, G] = L o S + anomaly for every generator.

    `allowed` maps labels to expected anomaly operators (exact); any
    remainder beyond L o S and the expected anomaly fails the check.
    The multiplier L (a left factor, possibly operator-valued) and the
    anomaly are recorded verbatim.
    """
    report = CheckReport("dynamical-symmetry", _params_dict(fam))
    allowed = allowed or {}
    for label in fam.labels():
        com = op_commutator(S, fam[label])
        L, rem = com.right_divide(S)
        anomaly = allowed.get(label)
        if anomaly is not None:
            rem = rem - anomaly
        info = f"lambda = {L!r}"
        if anomaly is not None:
            info += f"; allowed anomaly = {anomaly!r}"
        report.add(label_str(label), rem, info=info)
    return report


def casimir_c4(fam: GeneratorFamily) -> DiffOp:
    """Quartic Casimir of the mass-type finite algebra in normal form.

    Built from 4 M_0 X_0 - {Y_-, Y_+} squared minus twice the
    anticommutator of the two invariant quadratics.  Scalar (a pure
    multiplication by a parameter polynomial) on the boundary
    representation; an honest operator on dual/bulk variants.
    """
    M0 = fam.get("M", 0)
    X0, Xm, Xp = fam.get("X", 0), fam.get("X", -1), fam.get("X", 1)
    Ym, Yp = fam.get("Y", -HALF, 1), fam.get("Y", HALF, 1)
    A = M0.scale(Fraction(4)) * X0 - Ym * Yp - Yp * Ym
    B = M0.scale(Fraction(2)) * Xm - Ym * Ym
    C = M0.scale(Fraction(2)) * Xp - Yp * Yp
    return A * A - (B * C + C * B).scale(Fraction(2))


def casimir_report(fam: GeneratorFamily) -> CheckReport:
    report = CheckReport("casimir-quartic", _params_dict(fam))
    op = casimir_c4(fam)
    if op.is_scalar():
        report.add("C4 scalar", DiffOp.zero(fam.space),
                   info=f"value = {op.scalar_poly()!r}")
    else:
        zero_d = (0,) * len(fam.space.names)
        nonscalar = DiffOp(fam.space, {d: c for d, c in op.terms.items()
                                       if d != zero_d or not c.is_constant()})
        report.add("C4 scalar", nonscalar, info="non-scalar residual shown")
    return report


def check_parabolic(N: DiffOp, fam: GeneratorFamily, S: DiffOp = None) -> CheckReport:
    """[N, G] must decompose in span(family + N); optionally [S, N] = L o S."""
    report = CheckReport("parabolic-closure", _params_dict(fam))
    labels = fam.labels()
    basis = [fam[l] for l in labels] + [N]
    names = [label_str(l) for l in labels] + ["N"]
    for label in labels:
        com = op_commutator(N, fam[label])
        dec = op_decompose(com, basis)
        subject = f"[N, {label_str(label)}]"
        if isinstance(dec, NotInSpan):
            report.add(subject, dec.residual)
            continue
        combo = ", ".join(f"{c!r}*{n}" for c, n in zip(dec, names)
                          if not c.is_zero) or "0"
        report.add(subject, DiffOp.zero(fam.space), info=combo)
    report.add("[N, N]", op_commutator(N, N))
    if S is not None:
        com = op_commutator(S, N)
        L, rem = com.right_divide(S)
        report.add("[S, N]", rem, info=f"lambda = {L!r}")
    return report


def check_lie_closure(fam: GeneratorFamily, extra=()) -> CheckReport:
    """Every pairwise commutator must lie in the family's span."""
    report = CheckReport("lie-closure", _params_dict(fam))
    labels = fam.labels()
    basis = [fam[l] for l in labels] + list(extra)
    names = [label_str(l) for l in labels] + [f"extra{i}" for i in
                                              range(len(extra))]
    for i, la in enumerate(labels):
        for lb in labels[i + 1:]:
            com = op_commutator(fam[la], fam[lb])
            subject = f"[{label_str(la)}, {label_str(lb)}]"
            if com.is_zero:
                report.add(subject, com, info="0")
                continue
            dec = op_decompose(com, basis)
            if isinstance(dec, NotInSpan):
                report.add(subject, dec.residual)
                continue
            combo = ", ".join(f"{c!r}*{n}" for c, n in zip(dec, names)
                              if not c.is_zero) or "0"
            report.add(subject, DiffOp.zero(fam.space), info=combo)
    return report


def density_bracket(n, m, alpha):
    """Action of the vector field z^{n+1} d/dz on z^{m+1} (dz)^alpha.

    Returns (coefficient, index): the result is coefficient *
    z^{index+1} (dz)^alpha.  The coefficient is exact (Fraction or
    ParamPoly when alpha is formal).
    """
    n, m = Fraction(n), Fraction(m)
    if alpha is None:
        alpha = param("alpha")
    if isinstance(alpha, ParamPoly):
        coef = ParamPoly.const(m + 1) + alpha * (n + 1)
    else:
        coef = (m + 1) + Fraction(alpha) * (n + 1)
    return coef, n + m + 1


def indicial_exponents(x):
    """Roots {x, 3-x} of (2a-1)(2a-5) = (2x-1)(2x-5), solved exactly."""
    x = Fraction(x)
    # a^2 - 3a + (3x - x^2) = 0  ->  a = (3 +- |2x - 3|)/2
    disc = 9 - 4 * (3 * x - x * x)          # = (2x-3)^2
    root = abs(2 * x - 3)
    assert root * root == disc
    a1 = (3 - root) / 2
    a2 = (3 + root) / 2
    return (a1, a2)


def sch_anomaly_coefficient(d: int) -> ParamPoly:
    """ParamPoly factor multiplying M_0 in [S, X_1] for the mass rep."""
    return 2 * param("x") - d


def expected_sch_anomaly(fam: GeneratorFamily) -> dict:
    """Allowed anomaly map for the massive Schroedinger family."""
    d = fam.params.d
    M0 = fam.get("M", 0)
    return {("X", Fraction(1)): M0.scale(sch_anomaly_coefficient(d))}
