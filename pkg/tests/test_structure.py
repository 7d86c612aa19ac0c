"""Structure checks: bracket tables, symmetries, Casimir, parabolic sets."""

from fractions import Fraction

from dynsym.opalg import CoeffExpr, DiffOp, op_commutator, param
from dynsym.reps import make_parabolic_N, make_rep, make_schrodinger_op
from dynsym.structure import (casimir_c4, casimir_report,
                              check_dynamical_symmetry, check_lie_closure,
                              check_parabolic, check_structure_constants,
                              density_bracket, expected_sch_anomaly,
                              indicial_exponents)

H = Fraction(1, 2)


def test_structure_constants_sch_all_dims():
    for d in (1, 2, 3):
        rep = check_structure_constants(make_rep("sch", d=d))
        assert rep.passed, rep.failures()


def test_structure_constants_windowed_sv():
    rep = check_structure_constants(make_rep("sv", d=1))
    assert rep.passed
    # window clipping is flagged, not failed
    assert any(it.clipped for it in rep.items)


def test_structure_constants_cga_and_ecga():
    for d in (1, 2, 3):
        assert check_structure_constants(make_rep("cga", d=d)).passed
    rep = check_structure_constants(make_rep("ecga", d=2))
    assert rep.passed


def test_ecga_exotic_brackets():
    fam = make_rep("ecga", d=2)
    theta = param("theta")
    got = op_commutator(fam.get("Y", 0, 1), fam.get("Y", 0, 2))
    assert got == DiffOp.from_coeff(CoeffExpr.const(fam.space, theta))
    got = op_commutator(fam.get("Y", 1, 1), fam.get("Y", -1, 2))
    assert got == DiffOp.from_coeff(CoeffExpr.const(fam.space, -2 * theta))
    got = op_commutator(fam.get("Y", 1, 2), fam.get("Y", -1, 1))
    assert got == DiffOp.from_coeff(CoeffExpr.const(fam.space, 2 * theta))


def test_structure_constants_dual_and_bulk():
    assert check_structure_constants(make_rep("dual_sch", d=1)).passed
    assert check_structure_constants(make_rep("dual_sch", d=2)).passed
    assert check_structure_constants(make_rep("bulk_sch", d=1)).passed
    assert check_structure_constants(make_rep("dual_cga", d=1)).passed
    assert check_structure_constants(make_rep("dual_cga", d=2)).passed


def test_structure_constants_lattice_through_order_8():
    rep = check_structure_constants(make_rep("lattice_sch", d=1, order=8))
    assert rep.passed, rep.failures()


def test_nonlocal_exceptional_commutator():
    for n in (2, 3, 4):
        rep = check_structure_constants(make_rep("nonlocal_age", d=1, n=n))
        assert rep.passed, (n, rep.failures())


def test_dynamical_symmetry_sch_anomaly():
    fam = make_rep("sch", d=1)
    S = make_schrodinger_op("sch", d=1)
    rep = check_dynamical_symmetry(S, fam, allowed=expected_sch_anomaly(fam))
    assert rep.passed, rep.failures()
    # the anomaly operator is (2x-d) M_0; it vanishes exactly at x = d/2
    anom = expected_sch_anomaly(fam)[("X", Fraction(1))]
    assert anom.subs_params({"x": H}).is_zero
    assert not anom.subs_params({"x": 1}).is_zero


def test_dynamical_symmetry_sch_x_half_pure():
    fam = make_rep("sch", d=1, x=Fraction(1, 2))
    S = make_schrodinger_op("sch", d=1)
    rep = check_dynamical_symmetry(S, fam)
    assert rep.passed
    com = op_commutator(S, fam.get("X", 1))
    L, rem = com.right_divide(S)
    assert rem.is_zero
    assert L == DiffOp.from_coeff(CoeffExpr.mono(S.space, -2, t=1))


def test_dynamical_symmetry_age_unconstrained():
    p = dict(d=1, Xi={-1: None, 0: None, 2: None})
    fam = make_rep("age", **p)
    S = make_schrodinger_op("age", **p)
    rep = check_dynamical_symmetry(S, fam)
    assert rep.passed, rep.failures()


def test_sch_extension_detects_constraint():
    """[S, X_{-1}] carries -2M(x + 2 xi - d/2) / t^2 exactly."""
    fam = make_rep("sch_gen", d=1)
    S = make_schrodinger_op("sch_gen", d=1)
    com = op_commutator(S, fam.get("X", -1))
    sp = S.space
    M, x, xi = param("M"), param("x"), param("xi")
    want = DiffOp.from_coeff(CoeffExpr.mono(sp, -2 * M * (x + 2 * xi - H), t=-2))
    assert com == want
    # vanishes exactly on x = d/2 - 2 xi
    assert com.subs_params({"x": H - 2 * xi}).is_zero


def test_dynamical_symmetry_nonlocal():
    for n in (2, 3):
        fam = make_rep("nonlocal_age", d=1, n=n)
        S = make_schrodinger_op("nonlocal_age", d=1, n=n)
        rep = check_dynamical_symmetry(S, fam)
        assert rep.passed, rep.failures()
        com = op_commutator(S, fam.get("X", 0))
        L, rem = com.right_divide(S)
        assert rem.is_zero
        assert L == DiffOp.from_coeff(
            CoeffExpr.const(S.space, Fraction(-n, 2)))


def test_dynamical_symmetry_conformal2d():
    fam = make_rep("conformal2d", x=0, xt=0)
    S = make_schrodinger_op("conformal2d")
    rep = check_dynamical_symmetry(S, fam)
    assert rep.passed, rep.failures()


def test_dynamical_symmetry_lattice():
    fam = make_rep("lattice_sch", d=1, order=8)
    S = make_schrodinger_op("lattice_sch", d=1, order=8)
    M0 = fam.get("M", 0)
    # x = 0 implicitly: anomaly on X_1 is (2*0 - 1) M_0 = -M_0
    allowed = {("X", Fraction(1)): M0.scale(Fraction(-1))}
    rep = check_dynamical_symmetry(S, fam, allowed=allowed)
    assert rep.passed, rep.failures()


def test_casimir_boundary_scalar():
    fam = make_rep("sch", d=1)
    c4 = casimir_c4(fam)
    assert c4.is_scalar()
    x, M = param("x"), param("M")
    assert c4.scalar_poly() == M * M * (2 * x - 1) * (2 * x - 5)
    # x = 1/2 is a root; symmetry under x <-> 3 - x is exact
    assert c4.subs_params({"x": H}).is_zero
    poly = c4.scalar_poly()
    assert poly - poly.subs({"x": 3 - x}) == 0
    assert casimir_report(fam).passed


def test_casimir_value_at_three_halves():
    fam = make_rep("sch", d=1, x=Fraction(3, 2))
    got = casimir_c4(fam).scalar_poly()
    M = param("M")
    assert got == -4 * M * M


def test_casimir_dual_and_bulk_not_scalar():
    for rid in ("dual_sch", "bulk_sch"):
        fam = make_rep(rid, d=1, xi=0)
        rep = casimir_report(fam)
        assert not rep.passed  # residual operator is reported, not hidden
        assert rep.items[0].residual != "0"


def test_parabolic_dual_sch():
    fam = make_rep("dual_sch", d=1, xi=0)
    N = make_parabolic_N("dual_sch", d=1)
    S = make_schrodinger_op("dual_sch", d=1, xi=0)
    rep = check_parabolic(N, fam, S)
    assert rep.passed, rep.failures()
    # spot values: [N, Y_{1/2}] = -Y_{1/2}, [N, Y_{-1/2}] = 0, [N, X_0] = 0
    got = op_commutator(N, fam.get("Y", H, 1))
    assert got == fam.get("Y", H, 1).scale(Fraction(-1))
    assert op_commutator(N, fam.get("Y", -H, 1)).is_zero
    assert op_commutator(N, fam.get("X", 0)).is_zero
    got = op_commutator(N, fam.get("M", 0))
    assert got == fam.get("M", 0).scale(Fraction(-1))


def test_parabolic_dual_cga_and_nonlocal():
    fam = make_rep("dual_cga", d=1)
    N = make_parabolic_N("dual_cga", d=1)
    assert check_parabolic(N, fam).passed
    fam = make_rep("nonlocal_dual", d=1, n=3)
    N = make_parabolic_N("nonlocal_dual", d=1, n=3)
    assert check_parabolic(N, fam).passed


def test_lie_closure_dual_cga_z2():
    fam = make_rep("dual_cga_z2", d=1)
    rep = check_lie_closure(fam)
    assert rep.passed, rep.failures()
    # the set is a genuine dynamical symmetry set of the dual operator
    S = make_schrodinger_op("dual_sch", d=1)
    for label in fam.labels():
        com = op_commutator(S, fam[label])
        _, rem = com.right_divide(S)
        assert rem.is_zero, label


def test_lie_closure_small_sets():
    fam = make_rep("sch", d=1)
    sub = {k: v for k, v in fam.gens.items() if k[0] == "X"}
    from dynsym.reps.families import GeneratorFamily
    subfam = GeneratorFamily("sch", fam.params, fam.space, sub, fam.table)
    assert check_lie_closure(subfam).passed
    single = GeneratorFamily("sch", fam.params, fam.space,
                             {("X", Fraction(0)): fam.get("X", 0)}, fam.table)
    assert check_lie_closure(single).passed


def test_density_bracket():
    coef, idx = density_bracket(2, 5, Fraction(-1))
    assert (coef, idx) == (Fraction(3), Fraction(8))  # (m - n) = 3
    coef, idx = density_bracket(0, 0, Fraction(-1))
    assert coef == 0
    coef, idx = density_bracket(3, 2, 0)
    assert coef == Fraction(3)  # alpha = 0: plain transport f u'
    # generic n, m, alpha = -1 reproduces the (m - n) rule; the global sign
    # convention of the operator realisation flips the table's (n - m)
    for n in range(-3, 4):
        for m in range(-3, 4):
            coef, idx = density_bracket(n, m, Fraction(-1))
            assert coef == Fraction(m - n)
            assert idx == n + m + 1


def test_density_family_closes():
    assert check_structure_constants(make_rep("density")).passed


def test_indicial_exponents():
    assert indicial_exponents(1) == (1, 2)
    assert indicial_exponents(Fraction(3, 2)) == (Fraction(3, 2), Fraction(3, 2))
    assert indicial_exponents(0) == (0, 3)
    # pair sums to 3 (matches the holographic kernel exponent pairing)
    for x in (Fraction(1, 3), Fraction(7, 5), 2):
        a, b = indicial_exponents(x)
        assert a + b == 3


def test_report_serialisation():
    rep = check_structure_constants(make_rep("sch", d=1))
    d = rep.as_dict()
    assert d["check"] == "structure-constants"
    assert d["pass"] is True
    assert all(set(item) >= {"pair", "residual", "pass"}
               for item in d["items"])
