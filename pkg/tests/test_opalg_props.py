"""Seeded randomised property tests of the operator ring axioms."""

import random
from fractions import Fraction

from dynsym.opalg import CoeffExpr, DiffOp, VarSpace, op_apply, op_mul, param

SPACE = VarSpace(("t", "r"), laurent={"t"})
PARAMS = [param("x"), param("M")]


def random_coeff(rng):
    out = CoeffExpr.zero(SPACE)
    for _ in range(rng.randint(1, 3)):
        c = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
        if rng.random() < 0.3:
            c = c * rng.choice(PARAMS)
        out = out + CoeffExpr.mono(SPACE, c,
                                   t=rng.randint(-2, 2), r=rng.randint(0, 2))
    return out


def random_op(rng):
    out = DiffOp.zero(SPACE)
    for _ in range(rng.randint(1, 3)):
        didx = (rng.randint(0, 1), rng.randint(0, 2))
        out = out + DiffOp(SPACE, {didx: random_coeff(rng)})
    return out


def test_mul_associative():
    rng = random.Random(1)
    for _ in range(25):
        a, b, c = random_op(rng), random_op(rng), random_op(rng)
        assert op_mul(op_mul(a, b), c) == op_mul(a, op_mul(b, c))


def test_commutator_antisymmetry_and_jacobi():
    rng = random.Random(2)
    for _ in range(20):
        a, b, c = random_op(rng), random_op(rng), random_op(rng)
        assert (a.commutator(b) + b.commutator(a)).is_zero
        jac = (a.commutator(b.commutator(c))
               + b.commutator(c.commutator(a))
               + c.commutator(a.commutator(b)))
        assert jac.is_zero


def test_apply_respects_composition():
    rng = random.Random(3)
    for _ in range(25):
        a, b = random_op(rng), random_op(rng)
        m = CoeffExpr.mono(SPACE, 1, t=rng.randint(-1, 2), r=rng.randint(0, 3))
        assert op_apply(op_mul(a, b), m) == op_apply(a, op_apply(b, m))


def test_normal_form_is_canonical():
    rng = random.Random(4)
    for _ in range(25):
        a = random_op(rng)
        assert (a - a).is_zero
        assert (a + (-a)).is_zero
