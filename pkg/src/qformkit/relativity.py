"""Interval invariance under candidate frame transformations.

The interval form of an event (t, x, y, z) is diag(-c^2, 1, ..., 1), an
indefinite form whose null cone is the light cone.  Pulling it back
through a candidate linear transform and running the proportionality
decision yields the scale factor kappa, or a concrete light-like event
that the transform moves off the cone.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .containment import (
    Counterexample,
    Proportional,
    WitnessVector,
    decide_containment,
)
from .errors import InvalidSpeed, NotPythagorean
from .forms import LinearTransform, QuadraticForm, apply_transform
from .scalars import render_rational

INTERVAL_PRESERVING = "interval-preserving"
CONFORMAL_SCALING = "conformal-scaling"
CONE_BREAKING = "cone-breaking"
DEGENERATE = "degenerate"

_AXES = {"x": 1, "y": 2, "z": 3}
_PLANES = {"xy": (1, 2), "xz": (1, 3), "yz": (2, 3)}


@dataclass(frozen=True)
class TransformReport:
    kappa: Optional[Fraction]
    classification: str
    witness_event: Optional[WitnessVector]
    pulled_back_form: QuadraticForm

    def to_json(self):
        from .forms import matrix_to_json
        from .scalars import render_quadext

        out = {
            "kappa": None if self.kappa is None else render_rational(self.kappa),
            "classification": self.classification,
            "pulled_back_form": matrix_to_json(self.pulled_back_form.matrix),
        }
        if self.witness_event is not None:
            out["witness_event"] = self.witness_event.to_json()
            out["q_value"] = render_quadext(self.witness_event.q_value)
            out["r_value"] = render_quadext(self.witness_event.r_value)
        return out


def minkowski_form(c, dim_space: int = 3) -> QuadraticForm:
    """diag(-c^2, 1, ..., 1) on (1 + dim_space) coordinates, time first."""
    c = Fraction(c)
    if c <= 0:
        raise InvalidSpeed(f"speed of light must be positive, got {c}")
    if dim_space < 1:
        raise InvalidSpeed(f"need at least one space dimension, got {dim_space}")
    return QuadraticForm.diagonal([-c * c] + [1] * dim_space)


def check_interval_invariance(L: LinearTransform, c=Fraction(1)) -> TransformReport:
    """Pull the interval form back through L and decide proportionality.

    kappa = 1 means the interval itself is preserved; positive kappa a
    conformal scaling; kappa = 0 a singular collapse of the cone; a
    counterexample is a light-like event that L maps off the cone.
    """
    q = minkowski_form(c, dim_space=L.dim - 1)
    pulled = apply_transform(q, L)
    verdict = decide_containment(q, pulled)
    if isinstance(verdict, Proportional):
        kappa = verdict.alpha
        if kappa == 1:
            cls = INTERVAL_PRESERVING
        elif kappa == 0:
            cls = DEGENERATE
        else:
            cls = CONFORMAL_SCALING
        return TransformReport(
            kappa=kappa,
            classification=cls,
            witness_event=None,
            pulled_back_form=pulled,
        )
    assert isinstance(verdict, Counterexample)
    return TransformReport(
        kappa=None,
        classification=CONE_BREAKING,
        witness_event=verdict.witness,
        pulled_back_form=pulled,
    )


def boost_from_triple(a: int, b: int, h: int, axis: str = "x") -> LinearTransform:
    """Exact-rational Lorentz boost (c = 1) from a Pythagorean triple:
    beta = a/h, gamma = h/b, gamma*beta = a/b."""
    if axis not in _AXES:
        raise ValueError(f"axis must be one of {sorted(_AXES)}, got {axis!r}")
    if a <= 0 or b <= 0 or h <= 0 or a * a + b * b != h * h:
        raise NotPythagorean(f"({a}, {b}, {h}) is not a positive Pythagorean triple")
    ax = _AXES[axis]
    gamma = Fraction(h, b)
    gb = Fraction(a, b)
    rows = [[Fraction(int(i == j)) for j in range(4)] for i in range(4)]
    rows[0][0] = gamma
    rows[0][ax] = -gb
    rows[ax][0] = -gb
    rows[ax][ax] = gamma
    return LinearTransform(rows)


def rotation_from_triple(a: int, b: int, h: int, plane: str = "xy") -> LinearTransform:
    """Exact-rational spatial rotation: cos = b/h, sin = a/h."""
    if plane not in _PLANES:
        raise ValueError(f"plane must be one of {sorted(_PLANES)}, got {plane!r}")
    if h == 0 or a * a + b * b != h * h:
        raise NotPythagorean(f"({a}, {b}, {h}) does not satisfy a^2 + b^2 = h^2")
    i, j = _PLANES[plane]
    cos = Fraction(b, h)
    sin = Fraction(a, h)
    rows = [[Fraction(int(r == c)) for c in range(4)] for r in range(4)]
    rows[i][i] = cos
    rows[j][j] = cos
    rows[i][j] = -sin
    rows[j][i] = sin
    return LinearTransform(rows)
