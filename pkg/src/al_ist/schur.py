"""Schur's algorithm on rational Schur-class functions.

A Schur function maps the open unit disk into its closure; the algorithm
peels off the value at the origin,

    z F_next(z) = (F(z) - F(0)) / (1 - conj(F(0)) F(z)),

producing the recurrence coefficients gamma_k = F_k(0).  The Szego product
eta = prod (1 - |gamma_k|^2) measures how far the function stays from the
unimodular boundary, and the stability constant C(eta, r) controls how fast
perturbations of F can grow along the iteration in L2(r T).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .errors import ValidationError
from .laurent import CircleGrid, LaurentPoly, lp_eval_grid

# |gamma| at or above this is treated as a terminal unimodular constant
# (finite Blaschke product); continuing would divide by ~0 everywhere.
STOP_THRESHOLD = 1.0 - 1e-12

WITNESS_GRID = 1024


class SchurStop(Exception):
    """Iteration reached a (numerically) unimodular constant."""

    def __init__(self, gamma: complex):
        super().__init__(f"Schur iteration stopped at |gamma| = {abs(gamma):.17g}")
        self.gamma = gamma


@dataclass(frozen=True)
class RationalSchur:
    """Ratio num/den of Laurent polynomials representing a Schur function.

    num has only nonnegative exponents and den has den(0) != 0, so the
    ratio is analytic at the origin.  Schur-class membership (|num| <= |den|
    on the unit circle) is a property of the inputs we accept; validate()
    checks it on a fixed grid and is called at pipeline entry points rather
    than on every intermediate iterate.
    """

    num: LaurentPoly
    den: LaurentPoly = field(default=None)  # type: ignore[assignment]

    def __post_init__(self):
        if self.den is None:
            object.__setattr__(self, "den", LaurentPoly(0, [1.0]))
        if self.num.min_deg < 0:
            raise ValidationError("numerator must have min_deg >= 0")
        if self.den.min_deg != 0:
            raise ValidationError("denominator must have min_deg = 0 and den(0) != 0")

    def value_at_zero(self) -> complex:
        return self.num.coefficient(0) / self.den.coefficient(0)

    def grid_values(self, g: CircleGrid) -> np.ndarray:
        return lp_eval_grid(self.num, g) / lp_eval_grid(self.den, g)

    def validate(self) -> "RationalSchur":
        """Schur-class witness: |num| <= |den| + 1e-9 max|den| on 1024 nodes."""
        g = CircleGrid(WITNESS_GRID)
        pv = np.abs(lp_eval_grid(self.num, g))
        qv = np.abs(lp_eval_grid(self.den, g))
        tol = 1e-9 * float(np.max(qv))
        if float(np.max(pv - qv)) > tol:
            raise ValidationError("not a Schur-class function: |num| > |den| on the circle")
        return self


@dataclass(frozen=True)
class SchurCoeffs:
    """Recurrence coefficients, plus the terminal unimodular value if the
    iteration stopped at a finite Blaschke product."""

    gammas: np.ndarray
    terminal: complex | None = None

    def __post_init__(self):
        arr = np.asarray(self.gammas, dtype=np.complex128)
        if arr.size and np.max(np.abs(arr)) >= 1.0:
            raise ValidationError("recurrence coefficients must have modulus < 1")
        arr = arr.copy()
        arr.setflags(write=False)
        object.__setattr__(self, "gammas", arr)

    def __len__(self) -> int:
        return len(self.gammas)


def schur_step(f: RationalSchur) -> tuple[complex, RationalSchur]:
    """One step of Schur's algorithm.

    gamma = f(0); the next iterate is (P - gamma Q) / (z (Q - conj(gamma) P)),
    renormalized so the new denominator has value 1 at the origin.  The
    constant term of P - gamma Q cancels by construction, so it is dropped
    rather than divided out.
    """
    P, Q = f.num, f.den
    q0 = Q.coefficient(0)
    gamma = P.coefficient(0) / q0
    if abs(gamma) >= STOP_THRESHOLD:
        raise SchurStop(gamma)
    width = max(P.max_deg, Q.max_deg) + 1
    p = np.zeros(width, dtype=np.complex128)
    if not P.is_zero:
        p[P.min_deg : P.min_deg + len(P.coeffs)] = P.coeffs
    q = np.zeros(width, dtype=np.complex128)
    q[: len(Q.coeffs)] = Q.coeffs
    den = q - np.conj(gamma) * p
    d0 = den[0]  # q0 (1 - |gamma|^2), bounded away from 0 by the stop check
    num = (p - gamma * q)[1:] / d0
    den = den / d0
    return gamma, RationalSchur(LaurentPoly(0, num), LaurentPoly(0, den))


def schur_coeffs(f: RationalSchur, m: int) -> SchurCoeffs:
    """First m recurrence coefficients of f by repeated schur_step.

    If the iteration terminates at step k < m, the k collected coefficients
    are returned and the terminating unimodular gamma is flagged separately.
    """
    if m < 0:
        raise ValidationError("coefficient count must be nonnegative")
    gammas = np.zeros(m, dtype=np.complex128)
    cur = f
    for k in range(m):
        try:
            gammas[k], cur = schur_step(cur)
        except SchurStop as stop:
            return SchurCoeffs(gammas[:k], terminal=stop.gamma)
    return SchurCoeffs(gammas)


def eta(c: SchurCoeffs) -> float:
    """Szego product prod (1 - |gamma_k|^2), accumulated in log space."""
    if len(c.gammas) == 0:
        return 1.0
    return float(math.exp(np.sum(np.log1p(-np.abs(c.gammas) ** 2))))


class StabilityConstant(NamedTuple):
    value: float
    log: float


def stability_constant(eta_value: float, r: float) -> StabilityConstant:
    """C(eta, r) = exp(log(1/eta) (2 + 1/(1 - sqrt(1 - eta))) (4/(1-r)^2 + 1)).

    Returned together with its natural log, since the value itself overflows
    to inf for small eta.
    """
    if not (0.0 < eta_value <= 1.0):
        raise ValidationError("eta must lie in (0, 1]")
    if not (0.0 < r < 1.0):
        raise ValidationError("r must lie in (0, 1)")
    if eta_value == 1.0:
        return StabilityConstant(1.0, 0.0)
    log_c = (
        math.log(1.0 / eta_value)
        * (2.0 + 1.0 / (1.0 - math.sqrt(1.0 - eta_value)))
        * (4.0 / (1.0 - r) ** 2 + 1.0)
    )
    return StabilityConstant(exp_or_inf(log_c), log_c)


def exp_or_inf(log_value: float) -> float:
    """exp saturating to +inf instead of raising OverflowError."""
    if log_value > 709.0:
        return math.inf
    return math.exp(log_value)


def l2_norm_circle(f: RationalSchur, r: float, M: int) -> float:
    """sqrt of the mean of |f|^2 over M equispaced nodes on the circle of
    radius r; the equispaced mean is the exact trapezoid rule there."""
    if not (0.0 < r < 1.0):
        raise ValidationError("r must lie in (0, 1)")
    vals = f.grid_values(CircleGrid(M, r))
    return float(np.sqrt(np.mean(np.abs(vals) ** 2)))


def iterate_energy_bound_check(f: RationalSchur, r: float, m: int) -> tuple[float, float]:
    """Sum of squared sup-norms of the first m iterates on rT against the
    Szego-energy bound (4/(1-r)^2) log(1/eta_m).

    Returns (lhs, rhs); callers assert lhs <= rhs + tol.
    """
    g = CircleGrid(WITNESS_GRID, r)
    lhs = 0.0
    cur = f
    gammas = []
    for _ in range(m):
        lhs += float(np.max(np.abs(cur.grid_values(g)))) ** 2
        gamma, cur = schur_step(cur)
        gammas.append(gamma)
    eta_m = eta(SchurCoeffs(np.asarray(gammas)))
    rhs = (4.0 / (1.0 - r) ** 2) * math.log(1.0 / eta_m)
    return lhs, rhs
