"""Zero-set containment for an indefinite base form.

Given indefinite q and any quadratic r with Z_q contained in Z_r, r must
be a scalar multiple of q.  The decision is an exact entrywise test in a
diagonalizing basis of q; when it fails, a counterexample vector on the
null cone of q (with r nonzero there) is constructed from a fixed finite
family and returned as an independently checkable certificate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .errors import DimensionMismatch, NoWitnessFound, NotIndefinite
from .forms import (
    INDEFINITE,
    CongruenceDiagonalization,
    QuadraticForm,
    classify,
    congruence_diagonalize,
    evaluate,
)
from .scalars import QuadExt, render_quadext, render_rational


@dataclass(frozen=True)
class WitnessVector:
    """A vector v with q(v) = 0 and r(v) != 0, coordinates in Q(sqrt(t))."""

    coords: tuple  # QuadExt entries sharing one radicand
    q_value: QuadExt
    r_value: QuadExt

    @property
    def t(self) -> Fraction:
        for c in self.coords:
            if c.rad != 0:
                return c.t
        return self.coords[0].t if self.coords else Fraction(1)

    def to_json(self):
        return {
            "t": render_rational(self.t),
            "coords": [
                [render_rational(c.rat), render_rational(c.rad)]
                for c in self.coords
            ],
        }


@dataclass(frozen=True)
class Proportional:
    alpha: Fraction

    def to_json(self):
        return {"verdict": "proportional", "alpha": render_rational(self.alpha)}


@dataclass(frozen=True)
class Counterexample:
    witness: WitnessVector

    def to_json(self):
        return {
            "verdict": "counterexample",
            "witness": self.witness.to_json(),
            "q_value": render_quadext(self.witness.q_value),
            "r_value": render_quadext(self.witness.r_value),
        }


ContainmentVerdict = Proportional | Counterexample


def decide_containment(q: QuadraticForm, r: QuadraticForm) -> ContainmentVerdict:
    """Decide Z_q subset-of Z_r for indefinite q; exact both ways.

    Returns Proportional(alpha) with r = alpha*q entrywise, or a
    Counterexample whose witness lies on the null cone of q with
    r nonzero there.
    """
    if q.dim != r.dim:
        raise DimensionMismatch(f"dims differ: {q.dim} vs {r.dim}")
    if classify(q) != INDEFINITE:
        raise NotIndefinite(
            "the base form must be indefinite (take both signs); "
            "semidefinite forms are outside this decision procedure"
        )
    dq = congruence_diagonalize(q)
    rp = _congruent_matrix(r, dq.basis)
    alpha = rp[0][0] / dq.diag[0]  # first index is positive since k >= 1
    if _is_proportional(rp, dq.diag, alpha):
        return Proportional(alpha)
    return Counterexample(construct_witness(dq, r))


def _congruent_matrix(r: QuadraticForm, basis):
    bt = linalg.transpose(basis)
    return linalg.mat_mul(linalg.mat_mul(bt, r.matrix), basis)


def _is_proportional(rp, diag, alpha):
    n = len(diag)
    for i in range(n):
        for j in range(n):
            expected = alpha * diag[i] if i == j else Fraction(0)
            if rp[i][j] != expected:
                return False
    return True


def _witness_family(diag, inertia):
    """Null vectors of diag(d) in diagonalizing coordinates, in the fixed
    iteration order (a)..(e), indices lexicographic, sign + before -.

    Every member is exactly null for the diagonal form; jointly their
    r-evaluations determine every entry of the transformed r-matrix, so
    at least one is nonzero whenever r is not proportional to q.
    """
    n = len(diag)
    k, m, z = inertia.k, inertia.m, inertia.z
    pos = range(k)
    neg = range(k, k + m)
    zero = range(k + m, n)

    def vec(entries, t):
        v = [QuadExt(0, 0, t)] * n
        for idx, val in entries:
            v[idx] = val
        return tuple(v)

    # (a) e_p +- sqrt(d_p / -d_n) e_n
    for p in pos:
        for ng in neg:
            t = diag[p] / (-diag[ng])
            for sign in (1, -1):
                yield vec([(p, QuadExt(1, 0, t)), (ng, QuadExt(0, sign, t))], t)
    # (b) e_z
    for zi in zero:
        yield vec([(zi, QuadExt(1))], Fraction(1))
    # (c) +-e_p + sqrt(d_p / -d_n) e_n + e_z
    for p in pos:
        for ng in neg:
            t = diag[p] / (-diag[ng])
            for zi in zero:
                for sign in (1, -1):
                    yield vec(
                        [
                            (p, QuadExt(sign, 0, t)),
                            (ng, QuadExt(0, 1, t)),
                            (zi, QuadExt(1, 0, t)),
                        ],
                        t,
                    )
    # (d) e_z +- e_z'
    for i, zi in enumerate(zero):
        for zj in list(zero)[i + 1 :]:
            for sign in (1, -1):
                yield vec([(zi, QuadExt(1)), (zj, QuadExt(sign))], Fraction(1))
    # (e) sigma1 e_p + sigma2 e_p' + sqrt((d_p + d_p') / -d_n) e_n,
    #     and the mirror construction for pairs of negative indices
    for i, p in enumerate(pos):
        for p2 in list(pos)[i + 1 :]:
            for ng in neg:
                t = (diag[p] + diag[p2]) / (-diag[ng])
                for s1 in (1, -1):
                    for s2 in (1, -1):
                        yield vec(
                            [
                                (p, QuadExt(s1, 0, t)),
                                (p2, QuadExt(s2, 0, t)),
                                (ng, QuadExt(0, 1, t)),
                            ],
                            t,
                        )
    for i, ng in enumerate(neg):
        for ng2 in list(neg)[i + 1 :]:
            for p in pos:
                t = (-diag[ng] - diag[ng2]) / diag[p]
                for s1 in (1, -1):
                    for s2 in (1, -1):
                        yield vec(
                            [
                                (ng, QuadExt(s1, 0, t)),
                                (ng2, QuadExt(s2, 0, t)),
                                (p, QuadExt(0, 1, t)),
                            ],
                            t,
                        )


def construct_witness(
    diag_q: CongruenceDiagonalization, r: QuadraticForm
) -> WitnessVector:
    """First member of the witness family on which r is exactly nonzero,
    mapped back to original coordinates.  Unreachable failure when r is
    genuinely non-proportional."""
    basis = diag_q.basis
    for v in _witness_family(diag_q.diag, diag_q.inertia):
        coords = linalg.mat_vec(basis, v)
        r_val = evaluate(r, coords)
        if not r_val.is_zero():
            # q(Bv) = v^T diag(d) v, zero by construction of the family
            q_val = _diag_eval(diag_q.diag, v)
            return WitnessVector(coords=tuple(coords), q_value=q_val, r_value=r_val)
    raise NoWitnessFound(
        "no family member separates r from q; r is proportional to q"
    )


def _diag_eval(diag, v):
    total = QuadExt(0, 0, v[0].t if v else 1)
    for d, x in zip(diag, v):
        total = total + d * x * x
    return total


def verify_witness(q: QuadraticForm, r: QuadraticForm, w: WitnessVector) -> bool:
    """Independent certificate check: recompute both values exactly."""
    if q.dim != r.dim or len(w.coords) != q.dim:
        raise DimensionMismatch("witness length does not match form dimension")
    q_val = evaluate(q, w.coords)
    r_val = evaluate(r, w.coords)
    return q_val.is_zero() and not r_val.is_zero()
