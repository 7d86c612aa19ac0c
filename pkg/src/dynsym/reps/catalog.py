"""Constructors for every representation, invariant operator and N.

All generators are built exactly from their closed forms.  Two printed
sources carry internal inconsistencies which are resolved here in favour
of the variant that closes the algebra and reproduces the stated
invariant operators and covariant functions (see the engine tests):

* the second-scaling-dimension term in the generalised X_n enters with
  weight ``n`` (``-n*xi*t^n``); the companion quadratic weight breaks
  Lie closure outside the ageing window and contradicts the invariant
  Schroedinger operator;
* the z=2 dual conformal-galilean X_1 carries ``(i/2) r^2 d_zeta``, the
  same coefficient it inherits from the dual mass representation;
* the non-local invariant operator's potential is
  ``2M(x + xi - (n-1)/2)/t``, fixed by the exceptional commutator;
* the bulk X_n first term acts with ``d_zeta`` attached.
"""

from __future__ import annotations

from fractions import Fraction

from ..opalg import (CoeffExpr, ConfigurationError, DiffOp, ParamPoly,
                     Scalar, VarSpace)
from ..opalg.params import I
from .families import GeneratorFamily, RepParams
from . import tables

HALF = Fraction(1, 2)

REP_IDS = (
    "conformal2d", "conformal_gen", "sv", "sv_gen", "sch", "sch_gen", "age",
    "cga", "ecga", "dual_sch", "bulk_sch", "dual_cga_z2", "dual_cga",
    "nonlocal_age", "nonlocal_dual", "lattice_sch", "density",
)


# ---------------------------------------------------------------------------
# small builders

def _r_names(d):
    return ("r",) if d == 1 else tuple(f"r{j}" for j in range(1, d + 1))


def _g_names(d):
    return ("gam",) if d == 1 else tuple(f"gam{j}" for j in range(1, d + 1))


def _z_names(d):
    return ("zeta",) if d == 1 else tuple(f"zeta{j}" for j in range(1, d + 1))


def _tpow(space, k, coef=1):
    return CoeffExpr.mono(space, coef, t=k)


def _xi_of_t(space, p: RepParams, shift: int) -> CoeffExpr:
    """Xi(t) * t^shift as a coefficient (zero when Xi is absent)."""
    out = CoeffExpr.zero(space)
    for k, c in (p.xi_terms() or ()):
        from .families import _coerce
        out = out + CoeffExpr.mono(space, _coerce(c, f"Xi_{k}"), t=k + shift)
    return out


def _int_windows(p: RepParams, default):
    lo, hi = p.window if p.window is not None else default
    return [Fraction(n) for n in range(int(lo), int(hi) + 1)]


def _half_window(p: RepParams):
    lo, hi = p.ym_window
    out = []
    m = Fraction(lo)
    while m <= Fraction(hi):
        out.append(m)
        m += 1
    return out


# ---------------------------------------------------------------------------
# Schroedinger-Virasoro style representations (mass M, dynamical exponent 2)

def _sv_space(d):
    return VarSpace(("t",) + _r_names(d), laurent={"t"})


def _sv_X(space, d, n, x, xi, p: RepParams, M):
    rn = _r_names(d)
    op = -(DiffOp(space, {_didx(space, "t"): _tpow(space, n + 1)}))
    for r in rn:
        op = op - DiffOp(space, {_didx(space, r): CoeffExpr.mono(
            space, Fraction(n + 1, 2), t=n, **{r: 1})})
    if n * (n + 1) != 0:
        r2coef = M * Fraction(n * (n + 1), 4)
        for r in rn:
            op = op - DiffOp.from_coeff(
                CoeffExpr.mono(space, r2coef, t=n - 1, **{r: 2}))
    scal = CoeffExpr.mono(space, x * Fraction(n + 1, 2), t=n)
    if n:
        scal = scal + CoeffExpr.mono(space, xi * Fraction(n), t=n)
    scal = scal + _xi_of_t(space, p, n)
    return op - DiffOp.from_coeff(scal)


def _sv_Y(space, d, m, j, M):
    r = _r_names(d)[j - 1]
    op = -DiffOp(space, {_didx(space, r): _tpow(space, int(m + HALF))})
    return op - DiffOp.from_coeff(CoeffExpr.mono(
        space, M * (m + HALF), t=int(m - HALF), **{r: 1}))


def _rot(space, d, n, j, k, extra_pairs=()):
    """-t^n (r_j d_k - r_k d_j) and optional extra rotated pairs."""
    rn = _r_names(d)
    pairs = ((rn[j - 1], rn[k - 1]),) + tuple(extra_pairs)
    op = DiffOp.zero(space)
    for (a, b) in pairs:
        op = op - DiffOp(space, {_didx(space, b): CoeffExpr.mono(
            space, 1, t=n, **{a: 1})})
        op = op + DiffOp(space, {_didx(space, a): CoeffExpr.mono(
            space, 1, t=n, **{b: 1})})
    return op


def _didx(space, name, order=1):
    didx = [0] * len(space.names)
    didx[space.index(name)] = order
    return tuple(didx)


def _make_sv_family(rep_id, p: RepParams, with_xi, x_window, y_window,
                    with_Xi):
    d = p.d
    space = _sv_space(d)
    x = p.poly("x")
    xi = p.poly("xi") if with_xi else ParamPoly()
    M = p.poly("M")
    pp = p if with_Xi else RepParams(d=d)
    gens = {}
    for n in x_window:
        gens[("X", n)] = _sv_X(space, d, int(n), x, xi, pp, M)
    for m in y_window:
        for j in range(1, d + 1):
            gens[("Y", m, j)] = _sv_Y(space, d, m, j, M)
    m_window = x_window if rep_id in ("sv", "sv_gen") else [Fraction(0)]
    for n in m_window:
        gens[("M", n)] = DiffOp.from_coeff(_tpow(space, int(n), -M))
    if d >= 2:
        r_window = x_window if rep_id in ("sv", "sv_gen") else [Fraction(0)]
        for n in r_window:
            for j in range(1, d + 1):
                for k in range(j + 1, d + 1):
                    gens[("R", n, j, k)] = _rot(space, d, int(n), j, k)
    return GeneratorFamily(rep_id, p, space, gens, tables.sv_table)


# ---------------------------------------------------------------------------
# conformal-galilean representations (rapidity gamma, dynamical exponent 1)

def _cga_space(d):
    names = ("t",) + _r_names(d)
    if d >= 2:
        names = names + _g_names(d)
    return VarSpace(names, laurent={"t"})


def _cga_gamma(space, p: RepParams, d, j):
    """gamma_j as a coefficient: a base variable for d >= 2, else a parameter."""
    if d >= 2:
        return CoeffExpr.mono(space, 1, **{_g_names(d)[j - 1]: 1})
    return CoeffExpr.const(space, p.poly("gamma"))


def _cga_X(space, p, d, n, x):
    rn = _r_names(d)
    op = -DiffOp(space, {_didx(space, "t"): _tpow(space, n + 1)})
    for r in rn:
        op = op - DiffOp(space, {_didx(space, r): CoeffExpr.mono(
            space, n + 1, t=n, **{r: 1})})
    if n * (n + 1) != 0:
        for j, r in enumerate(rn, start=1):
            gj = _cga_gamma(space, p, d, j)
            op = op - DiffOp.from_coeff(
                gj * CoeffExpr.mono(space, n * (n + 1), t=n - 1, **{r: 1}))
    return op - DiffOp.from_coeff(_tpow(space, n, p.poly("x") * (n + 1)))


def _cga_Y(space, p, d, n, j):
    r = _r_names(d)[j - 1]
    op = -DiffOp(space, {_didx(space, r): _tpow(space, n + 1)})
    gj = _cga_gamma(space, p, d, j)
    return op - DiffOp.from_coeff(gj * _tpow(space, n, n + 1))


def _make_cga_family(p: RepParams, window):
    d = p.d
    space = _cga_space(d)
    x = p.poly("x")
    gens = {}
    for n in window:
        gens[("X", n)] = _cga_X(space, p, d, int(n), x)
        for j in range(1, d + 1):
            gens[("Y", n, j)] = _cga_Y(space, p, d, int(n), j)
    if d >= 2:
        gn = _g_names(d)
        for n in [Fraction(0)] if len(window) <= 3 else window:
            for j in range(1, d + 1):
                for k in range(j + 1, d + 1):
                    gens[("R", n, j, k)] = _rot(
                        space, d, int(n), j, k,
                        extra_pairs=((gn[j - 1], gn[k - 1]),))
    return GeneratorFamily("cga", p, space, gens, tables.cga_table)


def _make_ecga_family(p: RepParams):
    if p.d != 2:
        raise ConfigurationError("the exotic extension lives in d = 2")
    space = VarSpace(("t", "r1", "r2", "gam1", "gam2", "eta"), laurent={"t"})
    x = p.poly("x")
    theta = p.poly("theta")
    # Heisenberg pair on the auxiliary variable: [h1, h2] = theta
    h = {
        1: DiffOp(space, {_didx(space, "eta"): CoeffExpr.const(space, theta)}),
        2: DiffOp.from_coeff(CoeffExpr.mono(space, 1, eta=1)),
    }
    eps = {(1, 2): 1, (2, 1): -1}
    gens = {}
    for n in (-1, 0, 1):
        op = -DiffOp(space, {_didx(space, "t"): _tpow(space, n + 1)})
        for r in ("r1", "r2"):
            op = op - DiffOp(space, {_didx(space, r): CoeffExpr.mono(
                space, n + 1, t=n, **{r: 1})})
        op = op - DiffOp.from_coeff(_tpow(space, n, x * (n + 1)))
        if n * (n + 1) != 0:
            for j, r in enumerate(("r1", "r2"), start=1):
                op = op - DiffOp.from_coeff(CoeffExpr.mono(
                    space, n * (n + 1), t=n - 1, **{f"gam{j}": 1, r: 1}))
                op = op - h[j].scale(
                    CoeffExpr.mono(space, n * (n + 1), **{r: 1}))
        gens[("X", Fraction(n))] = op
        for j in (1, 2):
            yop = -DiffOp(space, {_didx(space, f"r{j}"): _tpow(space, n + 1)})
            yop = yop - DiffOp.from_coeff(CoeffExpr.mono(
                space, n + 1, t=n, **{f"gam{j}": 1}))
            yop = yop - h[j].scale(_tpow(space, n, n + 1))
            if n * (n + 1) != 0:
                k = 2 if j == 1 else 1
                yop = yop - DiffOp.from_coeff(CoeffExpr.mono(
                    space, theta * Fraction(n * (n + 1) * eps[(j, k)]),
                    **{f"r{k}": 1}))
            gens[("Y", Fraction(n), j)] = yop
    rot = _rot(space, 2, 0, 1, 2, extra_pairs=(("gam1", "gam2"),))
    hh = h[1] * h[1] + h[2] * h[2]
    rot = rot - hh.scale(theta ** (-1) * HALF)
    gens[("R", Fraction(0), 1, 2)] = rot
    gens[("Theta",)] = DiffOp.from_coeff(CoeffExpr.const(space, theta))
    return GeneratorFamily("ecga", p, space, gens, tables.ecga_table)


# ---------------------------------------------------------------------------
# dual (mass-Fourier) representations

def _dual_space(d):
    return VarSpace(("zeta", "t") + _r_names(d), laurent={"t"})


def _dual_X(space, d, n, x, xi, p, with_Z=False):
    rn = _r_names(d)
    op = -DiffOp(space, {_didx(space, "t"): _tpow(space, n + 1)})
    for r in rn:
        op = op - DiffOp(space, {_didx(space, r): CoeffExpr.mono(
            space, Fraction(n + 1, 2), t=n, **{r: 1})})
    if with_Z:
        op = op - DiffOp(space, {_didx(space, "Z"): CoeffExpr.mono(
            space, Fraction(n + 1, 2), t=n, Z=1)})
    if n * (n + 1) != 0:
        coef = Scalar(Fraction(n * (n + 1), 4)) * I
        for r in rn:
            op = op + DiffOp(space, {_didx(space, "zeta"): CoeffExpr.mono(
                space, coef, t=n - 1, **{r: 2})})
        if with_Z:
            op = op + DiffOp(space, {_didx(space, "zeta"): CoeffExpr.mono(
                space, coef, t=n - 1, Z=2)})
    scal = CoeffExpr.mono(space, x * Fraction(n + 1, 2), t=n)
    if n:
        scal = scal + CoeffExpr.mono(space, xi * Fraction(n), t=n)
    scal = scal + _xi_of_t(space, p, n)
    return op - DiffOp.from_coeff(scal)


def _dual_Y(space, d, m, j):
    r = _r_names(d)[j - 1]
    op = DiffOp(space, {_didx(space, "zeta"): CoeffExpr.mono(
        space, Scalar((m + HALF)) * I, t=int(m - HALF), **{r: 1})})
    return op - DiffOp(space, {_didx(space, r): _tpow(space, int(m + HALF))})


def _dual_M(space, n):
    return DiffOp(space, {_didx(space, "zeta"): _tpow(space, int(n), I)})


def _make_dual_sch_family(rep_id, p: RepParams, x_window, y_window):
    d = p.d
    space = _dual_space(d)
    x = p.poly("x")
    xi = p.poly("xi")
    gens = {}
    for n in x_window:
        gens[("X", n)] = _dual_X(space, d, int(n), x, xi, p)
    for m in y_window:
        for j in range(1, d + 1):
            gens[("Y", m, j)] = _dual_Y(space, d, m, j)
    m_window = x_window if rep_id == "dual_sv" else [Fraction(0)]
    for n in m_window:
        gens[("M", n)] = _dual_M(space, n)
    if d >= 2:
        for j in range(1, d + 1):
            for k in range(j + 1, d + 1):
                gens[("R", Fraction(0), j, k)] = _rot(space, d, 0, j, k)
    return GeneratorFamily(rep_id, p, space, gens, tables.sv_table)


def _make_bulk_family(p: RepParams):
    d = p.d
    space = VarSpace(("Z", "zeta", "t") + _r_names(d), laurent={"t"})
    gens = {}
    for n in (-1, 0, 1):
        gens[("X", Fraction(n))] = _dual_X(
            space, d, n, ParamPoly(), ParamPoly(), RepParams(d=d), with_Z=True)
    for m in (-HALF, HALF):
        for j in range(1, d + 1):
            gens[("Y", m, j)] = _dual_Y(space, d, m, j)
    gens[("M", Fraction(0))] = _dual_M(space, 0)
    if d >= 2:
        for j in range(1, d + 1):
            for k in range(j + 1, d + 1):
                gens[("R", Fraction(0), j, k)] = _rot(space, d, 0, j, k)
    return GeneratorFamily("bulk_sch", p, space, gens, tables.sv_table)


def _make_dual_cga_z2_family(p: RepParams):
    """z=2 dual conformal-galilean set; closes once N is included."""
    if p.d != 1:
        raise ConfigurationError("the z=2 dual family is a d=1 construction")
    space = _dual_space(1)
    x = p.poly("x")
    xi = p.poly("xi")
    xpxi = x + xi
    gens = {
        ("X", Fraction(0)): _dual_X(space, 1, 0, x, xi, p),
        ("Y", -HALF, 1): _dual_Y(space, 1, -HALF, 1),
        ("Y", HALF, 1): _dual_Y(space, 1, HALF, 1),
        ("M", Fraction(0)): _dual_M(space, 0),
    }
    x1 = DiffOp(space, {_didx(space, "zeta"): CoeffExpr.mono(
        space, Scalar(HALF) * I, r=2)})
    x1 = x1 - DiffOp(space, {_didx(space, "t"): _tpow(space, 2)})
    x1 = x1 - DiffOp(space, {_didx(space, "r"): CoeffExpr.mono(space, 1, t=1, r=1)})
    x1 = x1 - DiffOp.from_coeff(_tpow(space, 1, xpxi))
    gens[("X", Fraction(1))] = x1
    vp = -DiffOp(space, {_didx(space, "zeta"): CoeffExpr.mono(space, 1, zeta=1, r=1)})
    vp = vp - DiffOp(space, {_didx(space, "t"): CoeffExpr.mono(space, 1, t=1, r=1)})
    vp = vp - DiffOp(space, {_didx(space, "r"):
                             CoeffExpr.mono(space, I, zeta=1, t=1)
                             + CoeffExpr.mono(space, HALF, r=2)})
    vp = vp - DiffOp.from_coeff(CoeffExpr.mono(space, xpxi, r=1))
    gens[("V",)] = vp
    gens[("N",)] = make_parabolic_N("dual_cga_z2", p, space)
    return GeneratorFamily("dual_cga_z2", p, space, gens, tables.cga_table)


def _make_dual_cga_family(p: RepParams, window):
    d = p.d
    names = ("t",) + _r_names(d) + _z_names(d)
    space = VarSpace(names, laurent={"t"})
    x = p.poly("x")
    rn, zn = _r_names(d), _z_names(d)
    gens = {}
    for n in window:
        n = int(n)
        op = -DiffOp(space, {_didx(space, "t"): _tpow(space, n + 1)})
        for r in rn:
            op = op - DiffOp(space, {_didx(space, r): CoeffExpr.mono(
                space, n + 1, t=n, **{r: 1})})
        if n * (n + 1) != 0:
            for r, z in zip(rn, zn):
                op = op + DiffOp(space, {_didx(space, z): CoeffExpr.mono(
                    space, Scalar(n * (n + 1)) * I, t=n - 1, **{r: 1})})
        op = op - DiffOp.from_coeff(_tpow(space, n, x * (n + 1)))
        gens[("X", Fraction(n))] = op
        for j in range(1, d + 1):
            yop = -DiffOp(space, {_didx(space, rn[j - 1]): _tpow(space, n + 1)})
            yop = yop + DiffOp(space, {_didx(space, zn[j - 1]): _tpow(
                space, n, Scalar(n + 1) * I)})
            gens[("Y", Fraction(n), j)] = yop
    if d >= 2:
        for j in range(1, d + 1):
            for k in range(j + 1, d + 1):
                gens[("R", Fraction(0), j, k)] = _rot(
                    space, d, 0, j, k, extra_pairs=((zn[j - 1], zn[k - 1]),))
    return GeneratorFamily("dual_cga", p, space, gens, tables.cga_table)


# ---------------------------------------------------------------------------
# non-local and lattice representations

def _make_nonlocal_family(p: RepParams, dual: bool):
    p.require("n")
    if p.d != 1:
        raise ConfigurationError("the non-local family is written for d = 1")
    n = p.n
    x = p.poly("x")
    xi = p.poly("xi")
    xpxi = x + xi
    space = _dual_space(1) if dual else _sv_space(1)
    dr = lambda k: _didx(space, "r", k)  # noqa: E731
    gens = {}
    x0 = -DiffOp(space, {_didx(space, "t"): _tpow(space, 1, Fraction(n, 2))})
    x0 = x0 - DiffOp(space, {dr(1): CoeffExpr.mono(space, HALF, r=1)})
    x0 = x0 - DiffOp.from_coeff(CoeffExpr.const(space, x * HALF))
    gens[("X", Fraction(0))] = x0

    didx_t = list(_didx(space, "t"))
    didx_t[space.index("r")] = n - 2
    x1 = -DiffOp(space, {tuple(didx_t): _tpow(space, 2, Fraction(n, 2))})
    x1 = x1 - DiffOp(space, {dr(n - 1): CoeffExpr.mono(space, 1, t=1, r=1)})
    x1 = x1 - DiffOp(space, {dr(n - 2): _tpow(space, 1, xpxi)})
    gens[("Y", -HALF, 1)] = -DiffOp(space, {dr(1): CoeffExpr.const(space, 1)})
    yp = -DiffOp(space, {dr(n - 1): _tpow(space, 1)})
    if dual:
        half_i = Scalar(HALF) * I
        gens[("X", Fraction(1))] = x1 + DiffOp(
            space, {_didx(space, "zeta"): CoeffExpr.mono(space, half_i, r=2)})
        gens[("Y", HALF, 1)] = yp + DiffOp(
            space, {_didx(space, "zeta"): CoeffExpr.mono(space, I, r=1)})
        gens[("M", Fraction(0))] = _dual_M(space, 0)
    else:
        M = p.poly("M")
        gens[("X", Fraction(1))] = x1 - DiffOp.from_coeff(
            CoeffExpr.mono(space, M * HALF, r=2))
        gens[("Y", HALF, 1)] = yp - DiffOp.from_coeff(
            CoeffExpr.mono(space, M, r=1))
        gens[("M", Fraction(0))] = DiffOp.from_coeff(CoeffExpr.const(space, -M))

    rep_id = "nonlocal_dual" if dual else "nonlocal_age"
    fam = GeneratorFamily(rep_id, p, space, gens, tables.sv_table)
    if not dual:
        S = make_schrodinger_op("nonlocal_age", p)

        def exceptional(la, lb):
            pair = {la, lb}
            if pair == {("X", Fraction(1)), ("Y", HALF, 1)}:
                if n == 2:
                    return DiffOp.zero(space)
                extra = DiffOp(space, {dr(n - 3): _tpow(
                    space, 2, Fraction(n - 2, 2))}) * S
                return extra if la == ("X", Fraction(1)) else -extra
            return None

        fam.extra_expected = exceptional
    return fam


def _sinh_cosh_series(space, order):
    """Taylor series of sinh/cosh((a/2) d_r) as truncated DiffOps."""
    from math import factorial
    sinh = DiffOp.zero(space)
    cosh = DiffOp.zero(space)
    for k in range(order + 1):
        coef = Fraction(1, 2 ** k * factorial(k))
        term = DiffOp(space, {_didx(space, "r", k): CoeffExpr.mono(
            space, coef, a=k)})
        if k % 2:
            sinh = sinh + term
        else:
            cosh = cosh + term
    return sinh, cosh


def _series_inverse(op: DiffOp, order: int) -> DiffOp:
    """Inverse of 1 + higher-order series in (a d_r): Neumann sum, exact."""
    space = op.space
    one = DiffOp.identity(space)
    rest = op - one
    if not all(exps[space.index("a")] > 0
               for coeff in rest.terms.values() for exps in coeff.terms):
        raise ConfigurationError("series inversion needs unit leading term")
    inv = one
    power = one
    sign = 1
    while True:
        power = power * rest
        sign = -sign
        if power.is_zero:
            break
        inv = inv + power.scale(Fraction(sign))
    return inv


def _make_lattice_family(p: RepParams):
    # build one order higher so the 1/a shifts stay exact mod a^(order+1)
    order = p.order
    space = VarSpace(("t", "r", "a"), laurent={"t"}, series="a",
                     order=order + 1)
    M = p.poly("M")
    sinh, cosh = _sinh_cosh_series(space, order + 1)
    cosh_inv = _series_inverse(cosh, order + 1)
    r_mult = DiffOp.from_coeff(CoeffExpr.mono(space, 1, r=1))
    t1 = DiffOp.from_coeff(_tpow(space, 1))
    crs = cosh_inv * r_mult * sinh          # cosh^{-1} r sinh, starts at a^1
    cr = cosh_inv * r_mult                   # cosh^{-1} r
    dt = DiffOp.partial(space, "t")
    gens = {
        ("X", Fraction(-1)): -dt,
        ("X", Fraction(0)): -(t1 * dt) - crs.series_shift(-1),
        ("X", Fraction(1)): (-(t1 * t1 * dt)
                             - (t1 * crs).series_shift(-1).scale(Fraction(2))
                             - (cr * cr).scale(M * HALF)),
        ("Y", -HALF, 1): -sinh.series_shift(-1).scale(Fraction(2)),
        ("Y", HALF, 1): (-(t1 * sinh).series_shift(-1).scale(Fraction(2))
                         - cr.scale(M)),
        ("M", Fraction(0)): DiffOp.from_coeff(CoeffExpr.const(space, -M)),
    }
    gens = {label: op.truncated(order) for label, op in gens.items()}
    final = VarSpace(("t", "r", "a"), laurent={"t"}, series="a", order=order)
    return GeneratorFamily("lattice_sch", p, final, gens, tables.sv_table)


# ---------------------------------------------------------------------------
# holomorphic families

def _make_conformal2d_family(p: RepParams, window):
    space = VarSpace(("z", "zb"), laurent={"z", "zb"})
    delta = p.poly("x")
    deltab = p.poly("xt")
    gens = {}
    for n in window:
        n = int(n)
        gens[("l", Fraction(n))] = (
            -DiffOp(space, {_didx(space, "z"): CoeffExpr.mono(space, 1, z=n + 1)})
            - DiffOp.from_coeff(CoeffExpr.mono(space, delta * (n + 1), z=n)))
        gens[("lb", Fraction(n))] = (
            -DiffOp(space, {_didx(space, "zb"): CoeffExpr.mono(space, 1, zb=n + 1)})
            - DiffOp.from_coeff(CoeffExpr.mono(space, deltab * (n + 1), zb=n)))
    return GeneratorFamily("conformal2d", p, space, gens, tables.witt_table)


def _make_conformal_gen_family(p: RepParams, window):
    space = VarSpace(("z",), laurent={"z"})
    gamma = p.poly("gamma")
    gens = {}
    for n in window:
        n = int(n)
        op = -DiffOp(space, {_didx(space, "z"): CoeffExpr.mono(space, 1, z=n + 1)})
        op = op - DiffOp.from_coeff(CoeffExpr.mono(space, gamma * n, z=n))
        gz = CoeffExpr.zero(space)
        for k, c in (p.g_terms() or ()):
            from .families import _coerce
            gz = gz + CoeffExpr.mono(space, _coerce(c, f"g_{k}"), z=k + n)
        gens[("l", Fraction(n))] = op - DiffOp.from_coeff(gz)
    return GeneratorFamily("conformal_gen", p, space, gens, tables.witt_table)


def _make_density_family(p: RepParams, window):
    space = VarSpace(("z",), laurent={"z"})
    alpha = p.poly("alpha")
    gens = {}
    for n in window:
        n = int(n)
        gens[("X", Fraction(n))] = (
            -DiffOp(space, {_didx(space, "z"): CoeffExpr.mono(space, 1, z=n + 1)})
            - DiffOp.from_coeff(CoeffExpr.mono(space, alpha * (n + 1), z=n)))
    return GeneratorFamily("density", p, space, gens, tables.witt_table)


# ---------------------------------------------------------------------------
# public constructors

_FINITE_X = [Fraction(-1), Fraction(0), Fraction(1)]
_AGE_X = [Fraction(0), Fraction(1)]
_PM_HALF = [-HALF, HALF]


def make_rep(rep_id: str, p: RepParams = None, **kwargs) -> GeneratorFamily:
    """Build the generator family for one representation id."""
    if p is None:
        p = RepParams(**kwargs)
    elif kwargs:
        raise ConfigurationError("pass either RepParams or keyword overrides")
    p.require("d")
    if rep_id in ("sv", "sv_gen"):
        return _make_sv_family(rep_id, p, with_xi=(rep_id == "sv_gen"),
                               x_window=_int_windows(p, (-2, 2)),
                               y_window=_half_window(p),
                               with_Xi=(rep_id == "sv_gen"))
    if rep_id in ("sch", "sch_gen"):
        return _make_sv_family(rep_id, p, with_xi=(rep_id == "sch_gen"),
                               x_window=_FINITE_X, y_window=_PM_HALF,
                               with_Xi=(rep_id == "sch_gen"))
    if rep_id == "age":
        return _make_sv_family("age", p, with_xi=True,
                               x_window=_AGE_X, y_window=_PM_HALF,
                               with_Xi=True)
    if rep_id == "cga":
        window = _int_windows(p, (-1, 1)) if p.window != (-2, 2) else _FINITE_X
        return _make_cga_family(p, window)
    if rep_id == "cga_window":
        return _make_cga_family(p, _int_windows(p, (-2, 2)))
    if rep_id == "ecga":
        return _make_ecga_family(p)
    if rep_id == "dual_sch":
        return _make_dual_sch_family("dual_sch", p, _FINITE_X, _PM_HALF)
    if rep_id == "dual_sv":
        return _make_dual_sch_family("dual_sv", p, _int_windows(p, (-2, 2)),
                                     _half_window(p))
    if rep_id == "bulk_sch":
        return _make_bulk_family(p)
    if rep_id == "dual_cga_z2":
        return _make_dual_cga_z2_family(p)
    if rep_id == "dual_cga":
        window = _int_windows(p, (-1, 1)) if p.window != (-2, 2) else _FINITE_X
        return _make_dual_cga_family(p, window)
    if rep_id == "nonlocal_age":
        return _make_nonlocal_family(p, dual=False)
    if rep_id == "nonlocal_dual":
        return _make_nonlocal_family(p, dual=True)
    if rep_id == "lattice_sch":
        return _make_lattice_family(p)
    if rep_id == "conformal2d":
        return _make_conformal2d_family(p, _int_windows(p, (-2, 2)))
    if rep_id == "conformal_gen":
        return _make_conformal_gen_family(p, _int_windows(p, (-2, 2)))
    if rep_id == "density":
        return _make_density_family(p, _int_windows(p, (-2, 2)))
    raise ConfigurationError(f"unknown representation id {rep_id!r}")


def make_schrodinger_op(rep_id: str, p: RepParams = None, **kwargs) -> DiffOp:
    """The invariant (Schroedinger/Laplace) operator for supported ids."""
    if p is None:
        p = RepParams(**kwargs)
    d = p.d
    if rep_id in ("sch", "sv"):
        space = _sv_space(d)
        op = DiffOp(space, {_didx(space, "t"): CoeffExpr.const(
            space, p.poly("M") * 2)})
        for r in _r_names(d):
            op = op - DiffOp.partial(space, r, 2)
        return op
    if rep_id in ("age", "sv_gen", "sch_gen"):
        space = _sv_space(d)
        M = p.poly("M")
        op = DiffOp(space, {_didx(space, "t"): CoeffExpr.const(space, M * 2)})
        for r in _r_names(d):
            op = op - DiffOp.partial(space, r, 2)
        pot = _tpow(space, -1, (p.poly("x") + p.poly("xi") - Fraction(d, 2))
                    * (M * 2))
        pot = pot + _xi_of_t(space, p, -1) * (M * 2)
        return op + DiffOp.from_coeff(pot)
    if rep_id in ("nonlocal_age", "nonlocal_dual"):
        p.require("n")
        n = p.n
        dual = rep_id == "nonlocal_dual"
        space = _dual_space(1) if dual else _sv_space(1)
        # potential fixed by the exceptional commutator: x + xi - (n-1)/2
        c = p.poly("x") + p.poly("xi") - Fraction(n - 1, 2)
        if dual:
            mass = DiffOp(space, {_didx(space, "zeta"): CoeffExpr.const(
                space, Scalar(0) - I)})
            op = mass.scale(Fraction(n)) * DiffOp.partial(space, "t")
            op = op - DiffOp.partial(space, "r", n)
            return op + mass.scale(_tpow(space, -1, 2 * c))
        M = p.poly("M")
        op = DiffOp(space, {_didx(space, "t"): CoeffExpr.const(space, M * n)})
        op = op - DiffOp.partial(space, "r", n)
        return op + DiffOp.from_coeff(_tpow(space, -1, M * 2 * c))
    if rep_id == "ecga":
        space = VarSpace(("t", "r1", "r2", "gam1", "gam2", "eta"),
                         laurent={"t"})
        theta = p.poly("theta")
        op = DiffOp(space, {_didx(space, "t"): CoeffExpr.const(space, theta)})
        # eps_ij (gamma_i + h_i) d_j with h1 = theta d_eta, h2 = eta
        op = op + DiffOp(space, {_didx(space, "r2"): CoeffExpr.mono(
            space, 1, gam1=1)})
        op = op - DiffOp(space, {_didx(space, "r1"): CoeffExpr.mono(
            space, 1, gam2=1)})
        d_eta_r2 = [0] * len(space.names)
        d_eta_r2[space.index("eta")] = 1
        d_eta_r2[space.index("r2")] = 1
        op = op + DiffOp(space, {tuple(d_eta_r2): CoeffExpr.const(space, theta)})
        op = op - DiffOp(space, {_didx(space, "r1"): CoeffExpr.mono(
            space, 1, eta=1)})
        return op
    if rep_id == "lattice_sch":
        from math import factorial
        order = p.order
        space = VarSpace(("t", "r", "a"), laurent={"t"}, series="a",
                         order=order)
        M = p.poly("M")
        op = DiffOp(space, {_didx(space, "t"): CoeffExpr.const(space, M * 2)})
        j = 1
        while 2 * j - 2 <= order:
            op = op - DiffOp(space, {_didx(space, "r", 2 * j): CoeffExpr.mono(
                space, Fraction(2, factorial(2 * j)), a=2 * j - 2)})
            j += 1
        return op
    if rep_id == "dual_sch":
        space = _dual_space(d)
        didx = [0] * len(space.names)
        didx[space.index("zeta")] = 1
        didx[space.index("t")] = 1
        op = DiffOp(space, {tuple(didx): CoeffExpr.const(space, Scalar(-2) * I)})
        for r in _r_names(d):
            op = op - DiffOp.partial(space, r, 2)
        c = (p.poly("x") + p.poly("xi") - Fraction(d, 2)) * (Scalar(2) * I)
        return op - DiffOp(space, {_didx(space, "zeta"): _tpow(space, -1, c)})
    if rep_id == "conformal2d":
        space = VarSpace(("z", "zb"), laurent={"z", "zb"})
        didx = [0] * len(space.names)
        didx[space.index("z")] = 1
        didx[space.index("zb")] = 1
        return DiffOp(space, {tuple(didx): CoeffExpr.const(space, 4)})
    raise ConfigurationError(f"no invariant operator for {rep_id!r}")


def make_parabolic_N(rep_id: str, p: RepParams = None, space=None, **kwargs) -> DiffOp:
    """The grading generator N of the maximal parabolic extension."""
    if p is None:
        p = RepParams(**kwargs)
    if rep_id in ("dual_sch", "dual_sv"):
        space = space or _dual_space(p.d)
        const = p.poly("xip")
    elif rep_id == "dual_cga_z2":
        space = space or _dual_space(1)
        const = p.poly("xi")
    elif rep_id == "nonlocal_dual":
        space = space or _dual_space(1)
        const = p.poly("xip")
    elif rep_id == "dual_cga":
        d = p.d
        space = space or VarSpace(("t",) + _r_names(d) + _z_names(d),
                                  laurent={"t"})
        op = DiffOp.from_coeff(CoeffExpr.const(space, -p.poly("xi")))
        for z in _z_names(d):
            op = op - DiffOp(space, {_didx(space, z): CoeffExpr.mono(
                space, 1, **{z: 1})})
        for r in _r_names(d):
            op = op - DiffOp(space, {_didx(space, r): CoeffExpr.mono(
                space, 1, **{r: 1})})
        return op
    else:
        raise ConfigurationError(f"no parabolic generator for {rep_id!r}")
    op = DiffOp(space, {_didx(space, "zeta"): CoeffExpr.mono(space, 1, zeta=1)})
    op = op - DiffOp(space, {_didx(space, "t"): _tpow(space, 1)})
    return op + DiffOp.from_coeff(CoeffExpr.const(space, const))


# ---------------------------------------------------------------------------
# two-point machinery

def two_body(gen: DiffOp, p1_names: dict = None, p2_names: dict = None) -> DiffOp:
    """Sum of the generator acting on point 1 and on point 2.

    The result lives on the doubled variable set (names suffixed 1/2);
    parameters are renamed per point (default ``x -> x1 / x2`` etc.).
    """
    space = gen.space
    names1 = tuple(f"{n}1" for n in space.names)
    names2 = tuple(f"{n}2" for n in space.names)
    laurent = {f"{n}{i}" for n in space.laurent for i in (1, 2)}
    doubled = VarSpace(names1 + names2, laurent=laurent)
    defaults = {"x": None, "xi": None, "M": None, "gamma": None, "xip": None,
                "xt": None, "xit": None, "alpha": None}
    ren1 = p1_names or {k: f"{k}1" for k in defaults}
    ren2 = p2_names or {k: f"{k}2" for k in defaults}
    g1 = gen.rename_params(ren1).embed(doubled, {n: f"{n}1" for n in space.names})
    g2 = gen.rename_params(ren2).embed(doubled, {n: f"{n}2" for n in space.names})
    return g1 + g2
