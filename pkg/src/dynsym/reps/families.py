"""Generator families: parameter records, labels, and the family container.

A generator label is a tuple ``(kind, index, components...)``:

* ``("X", n)``            -- conformal/time family (n integer or half odd)
* ``("Y", m, j)``         -- Galilei/special family, spatial component j
* ``("M", n)``            -- mass / phase family
* ``("R", n, j, k)``      -- rotations, stored with j < k
* ``("V",)``              -- the extra z=2 conformal-galilean generator
* ``("N",)``              -- the parabolic grading generator
* ``("Theta",)``          -- the exotic central element
* ``("l", n) / ("lb", n)`` -- holomorphic / antiholomorphic 2d conformal
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from ..opalg import DiffOp, ParamPoly, VarSpace, ConfigurationError, param

_KIND_RANK = {"X": 0, "l": 0, "lb": 1, "Y": 2, "M": 3, "R": 4, "V": 5,
              "N": 6, "Theta": 7}


def label_key(label):
    kind = label[0]
    return (_KIND_RANK.get(kind, 9), kind, tuple(map(str, label[1:])))


def label_str(label) -> str:
    kind = label[0]
    if kind in ("X", "M", "l", "lb"):
        return f"{kind}[{label[1]}]"
    if kind == "Y":
        return f"Y[{label[1]}]^({label[2]})"
    if kind == "R":
        return f"R[{label[1]}]^({label[2]}{label[3]})"
    return kind


def _coerce(value, fallback_name: str) -> ParamPoly:
    if value is None:
        return param(fallback_name)
    if isinstance(value, ParamPoly):
        return value
    if isinstance(value, str):
        return ParamPoly.const(Fraction(value))
    return ParamPoly.const(value)


@dataclass
class RepParams:
    """Parameters selecting one concrete representation.

    Scaling dimensions and masses may be rationals (exact numerics) or left
    as ``None`` to stay formal symbols.  ``Xi`` and ``g`` are Laurent
    polynomials given as ``{exponent: coefficient}`` maps.
    """

    d: int = 1
    x: object = None          # scaling dimension (Delta for conformal2d)
    xt: object = None         # conjugate scaling dimension (Deltabar)
    xi: object = None         # second scaling dimension
    xit: object = None        # conjugate second scaling dimension
    xip: object = None        # parabolic constant xi'
    M: object = None          # mass
    gamma: object = None      # rapidity (scalar for d=1)
    theta: object = None      # exotic central value
    alpha: object = None      # density weight
    Xi: Optional[dict] = None  # Laurent coefficients of Xi(t)
    g: Optional[dict] = None   # Laurent coefficients of g(z) (conformal_gen)
    n: int = 2                # non-local dynamical exponent z = n
    window: tuple = (-2, 2)   # integer index window for infinite families
    ym_window: tuple = (Fraction(-3, 2), Fraction(3, 2))  # half-integer window
    order: int = 8            # series truncation order in the lattice constant

    def poly(self, name: str) -> ParamPoly:
        return _coerce(getattr(self, name), _DEFAULT_NAMES[name])

    def xi_poly_at(self, k: int) -> ParamPoly:
        if not self.Xi:
            return ParamPoly()
        return _coerce(self.Xi.get(k, 0), f"Xi_{k}")

    def xi_terms(self):
        return tuple(sorted(self.Xi.items())) if self.Xi else ()

    def g_terms(self):
        return tuple(sorted(self.g.items())) if self.g else ()

    def require(self, *names):
        for name in names:
            if name == "n" and self.n < 2:
                raise ConfigurationError("non-local order n must be >= 2")
            if name == "d" and self.d < 1:
                raise ConfigurationError("spatial dimension d must be >= 1")


_DEFAULT_NAMES = {
    "x": "x", "xt": "xt", "xi": "xi", "xit": "xit", "xip": "xip",
    "M": "M", "gamma": "gamma", "theta": "theta", "alpha": "alpha",
}


@dataclass
class GeneratorFamily:
    """A named, indexed set of DiffOps plus its abstract bracket table."""

    rep_id: str
    params: RepParams
    space: VarSpace
    gens: dict
    table: Callable  # (label_a, label_b) -> list[(coefficient, label)]
    extra_expected: Optional[Callable] = None  # (la, lb) -> DiffOp | None
    anomaly_ops: dict = field(default_factory=dict)  # label -> DiffOp allowed in [S, G]

    @property
    def d(self) -> int:
        return self.params.d

    def labels(self):
        return sorted(self.gens, key=label_key)

    def __getitem__(self, label) -> DiffOp:
        return self.gens[label]

    def get(self, kind, index=None, *components):
        if index is None:
            return self.gens[(kind,)]
        index = Fraction(index)
        return self.gens[(kind, index, *components)] if components \
            else self.gens[(kind, index)]

    def expected_bracket(self, la, lb) -> tuple:
        """(in-window DiffOp combination, clipped labels) for [G_a, G_b]."""
        combo = DiffOp.zero(self.space)
        clipped = []
        for coef, label in self.table(la, lb):
            gen = self.gens.get(label)
            if gen is None:
                clipped.append((coef, label))
            else:
                combo = combo + gen.scale(ParamPoly.coerce(coef))
        if self.extra_expected is not None:
            extra = self.extra_expected(la, lb)
            if extra is not None:
                combo = combo + extra
        return combo, clipped
