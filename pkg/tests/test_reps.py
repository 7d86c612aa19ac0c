"""Catalog tests: generator closed forms, windows, limits, dualisation."""

from fractions import Fraction

import pytest

from dynsym.opalg import (CoeffExpr, ConfigurationError, DiffOp, VarSpace,
                          op_commutator, param)
from dynsym.opalg.params import I
from dynsym.reps import (RepParams, make_parabolic_N, make_rep,
                         make_schrodinger_op, two_body)

H = Fraction(1, 2)


def test_sv_generators_match_closed_form():
    fam = make_rep("sv", d=1)
    sp = fam.space
    x, M = param("x"), param("M")
    # X_1 = -t^2 dt - t r dr - (M/2) r^2 - x t
    want = (-DiffOp(sp, {(1, 0): CoeffExpr.mono(sp, 1, t=2)})
            - DiffOp(sp, {(0, 1): CoeffExpr.mono(sp, 1, t=1, r=1)})
            - DiffOp.from_coeff(CoeffExpr.mono(sp, M * H, r=2))
            - DiffOp.from_coeff(CoeffExpr.mono(sp, x, t=1)))
    assert fam.get("X", 1) == want
    # Y_{3/2} = -t^2 dr - 2 t M r
    want = (-DiffOp(sp, {(0, 1): CoeffExpr.mono(sp, 1, t=2)})
            - DiffOp.from_coeff(CoeffExpr.mono(sp, 2 * M, t=1, r=1)))
    assert fam.get("Y", Fraction(3, 2), 1) == want


def test_cga_x1_has_rapidity_term():
    fam = make_rep("cga", d=1)
    sp = fam.space
    g = param("gamma")
    # -n(n+1) t^{n-1} gamma r at n = 1
    term = CoeffExpr.mono(sp, -2 * g, r=1)
    assert fam.get("X", 1).terms[(0, 0)].terms[(0, 1)] == term.terms[(0, 1)]


def test_age_x0_reduces_to_sv():
    a = make_rep("age", d=1, x=0, xi=0)
    s = make_rep("sv", d=1, x=0)
    assert a.get("X", 0) == s.get("X", 0)
    assert a.get("X", 1) == s.get("X", 1)


def test_sv_gen_reduces_to_sv():
    gen = make_rep("sv_gen", d=1, xi=0)
    plain = make_rep("sv", d=1)
    for label in plain.labels():
        assert gen[label] == plain[label]


def test_missing_parameter_window_guard():
    with pytest.raises(ConfigurationError):
        make_rep("nonlocal_age", d=1, n=1)
    with pytest.raises(ConfigurationError):
        make_rep("ecga", d=3)
    with pytest.raises(ConfigurationError):
        make_rep("no_such_rep")


def test_schrodinger_ops():
    sp = VarSpace(("t", "r"), laurent={"t"})
    M, x, xi = param("M"), param("x"), param("xi")
    S = make_schrodinger_op("sch", d=1)
    want = DiffOp(sp, {(1, 0): CoeffExpr.const(sp, 2 * M),
                       (0, 2): CoeffExpr.const(sp, -1)})
    assert S == want
    S = make_schrodinger_op("age", d=1)
    want = want + DiffOp.from_coeff(CoeffExpr.mono(sp, 2 * M * (x + xi - H), t=-1))
    assert S == want
    with pytest.raises(ConfigurationError):
        make_schrodinger_op("bulk_sch", d=1)


def test_nonlocal_potential_sign_fixed_by_exceptional_commutator():
    # the potential must make [X_1, Y_{1/2}] equal ((n-2)/2) t^2 dr^{n-3} S
    for n in (3, 4):
        fam = make_rep("nonlocal_age", d=1, n=n)
        S = make_schrodinger_op("nonlocal_age", d=1, n=n)
        got = op_commutator(fam.get("X", 1), fam.get("Y", H, 1))
        sp = fam.space
        want = DiffOp(sp, {(0, n - 3): CoeffExpr.mono(
            sp, Fraction(n - 2, 2), t=2)}) * S
        assert got == want
    # n = 2 collapses to the ageing commutator (zero)
    fam = make_rep("nonlocal_age", d=1, n=2)
    assert op_commutator(fam.get("X", 1), fam.get("Y", H, 1)).is_zero


def test_parabolic_generators():
    N = make_parabolic_N("dual_sch", d=1)
    sp = N.space
    want = (DiffOp(sp, {(1, 0, 0): CoeffExpr.mono(sp, 1, zeta=1)})
            - DiffOp(sp, {(0, 1, 0): CoeffExpr.mono(sp, 1, t=1)})
            + DiffOp.from_coeff(CoeffExpr.const(sp, param("xip"))))
    assert N == want
    assert op_commutator(N, N).is_zero
    N = make_parabolic_N("dual_cga", d=1)
    sp = N.space
    want = (-DiffOp(sp, {(0, 0, 1): CoeffExpr.mono(sp, 1, zeta=1)})
            - DiffOp(sp, {(0, 1, 0): CoeffExpr.mono(sp, 1, r=1)})
            - DiffOp.from_coeff(CoeffExpr.const(sp, param("xi"))))
    assert N == want
    with pytest.raises(ConfigurationError):
        make_parabolic_N("sch", d=1)


def test_dualisation_consistency():
    """Replacing d_zeta by the constant iM recovers the mass representation."""
    dual = make_rep("dual_sch", d=2, xi=0)
    cont = make_rep("sch", d=2)
    for label, op in dual.gens.items():
        red = op.substitute_partial("zeta", I * param("M"))
        ref = cont[label].embed(red.space, {})
        assert (red - ref).is_zero, label


def test_bulk_reduces_to_dual_on_boundary():
    """Z dZ -> x followed by Z = 0 sends the bulk X_n to the dual X_n."""
    bulk = make_rep("bulk_sch", d=1)
    dual = make_rep("dual_sch", d=1, xi=0)
    x = param("x")
    for n in (-1, 0, 1):
        op = bulk.get("X", n)
        sp = op.space
        iz = sp.index("Z")
        target = DiffOp(dual.space)
        for didx, coeff in op.terms.items():
            if didx[iz] == 1:
                # coefficient is c(t) * Z: the Z dZ part maps to x * c(t)
                new = {}
                for exps, poly in coeff.terms.items():
                    assert exps[iz] == 1
                    new[tuple(e for j, e in enumerate(exps) if j != iz)] = \
                        poly * x
                target = target + DiffOp.from_coeff(
                    CoeffExpr(dual.space, new))
                continue
            new = {}
            for exps, poly in coeff.terms.items():
                if exps[iz] != 0:
                    continue  # Z = 0
                new[tuple(e for j, e in enumerate(exps) if j != iz)] = poly
            if new:
                target = target + DiffOp(
                    dual.space,
                    {tuple(e for j, e in enumerate(didx) if j != iz):
                     CoeffExpr(dual.space, new)})
        assert (target - dual.get("X", n)).is_zero, n


def test_lattice_truncation_examples():
    fam = make_rep("lattice_sch", d=1, order=8)
    ym = fam.get("Y", -H, 1)
    cont = ym.truncated(0).without_series()
    sp = cont.space
    assert cont == -DiffOp.partial(sp, "r")
    t2 = ym.truncated(2)
    sp2 = t2.space
    want = (-DiffOp.partial(sp2, "r")
            - DiffOp(sp2, {(0, 3, 0): CoeffExpr.mono(
                sp2, Fraction(-1, 24) * -1, a=2)}).scale(Fraction(1)))
    # -dr - (a^2/24) dr^3
    want = DiffOp(sp2, {(0, 1, 0): CoeffExpr.const(sp2, -1),
                        (0, 3, 0): CoeffExpr.mono(sp2, Fraction(-1, 24), a=2)})
    assert t2 == want


def test_lattice_continuum_limit_full_family():
    fam = make_rep("lattice_sch", d=1, order=6)
    cont = make_rep("sch", d=1, x=0)
    for label, op in fam.gens.items():
        assert (op.truncated(0).without_series() - cont[label]).is_zero, label


def test_two_body_examples():
    fam = make_rep("sch", d=1)
    tb = two_body(fam.get("X", -1))
    sp = tb.space
    assert tb == (-DiffOp.partial(sp, "t1") - DiffOp.partial(sp, "t2"))
    tb = two_body(fam.get("M", 0))
    want = DiffOp.from_coeff(CoeffExpr.const(sp, -param("M1") - param("M2")))
    assert tb == want
    tb = two_body(fam.get("X", 0))
    want = (-DiffOp(sp, {(1, 0, 0, 0): CoeffExpr.mono(sp, 1, t1=1)})
            - DiffOp(sp, {(0, 0, 1, 0): CoeffExpr.mono(sp, 1, t2=1)})
            - DiffOp(sp, {(0, 1, 0, 0): CoeffExpr.mono(sp, H, r1=1)})
            - DiffOp(sp, {(0, 0, 0, 1): CoeffExpr.mono(sp, H, r2=1)})
            - DiffOp.from_coeff(CoeffExpr.const(
                sp, (param("x1") + param("x2")) * H)))
    assert tb == want
