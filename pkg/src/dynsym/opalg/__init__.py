"""Exact Weyl-style arithmetic for differential operators.

Coefficients are Laurent polynomials in the base variables (negative
powers only where the representation needs them) over parameter
polynomials with Gaussian-rational scalars.  Everything is immutable
after construction and all operations are pure functions.
"""

from .params import Scalar, ParamPoly, ParamRat, param
from .coeff import VarSpace, CoeffExpr, ConfigurationError, ConstructionError
from .diffop import DiffOp, op_mul, op_commutator, op_apply, series_truncate
from .solve import op_decompose, NotInSpan

__all__ = [
    "Scalar", "ParamPoly", "ParamRat", "param",
    "VarSpace", "CoeffExpr", "ConfigurationError", "ConstructionError",
    "DiffOp", "op_mul", "op_commutator", "op_apply", "series_truncate",
    "op_decompose", "NotInSpan",
]
