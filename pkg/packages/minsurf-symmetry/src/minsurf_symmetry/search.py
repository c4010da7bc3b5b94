"""Derivative-free search for self-CPG curves in coefficient families."""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import TYPE_CHECKING

import numpy as np
from minsurf_analytic import ZERO, AnalyticError, AnalyticExpr, Variable, add, constant, mul, power
from minsurf_bjorling import AnalyticCurve, BjorlingError, evaluate_patch, make_planar_strip
from minsurf_logging import get_logger
from scipy.optimize import minimize

from minsurf_symmetry.cpg import self_cpg_test
from minsurf_symmetry.exceptions import SearchError, SymmetryError

if TYPE_CHECKING:
    from collections.abc import Sequence

    from minsurf_bjorling import DomainGrid
    from numpy.typing import NDArray

logger = get_logger("symmetry.search")

DEGENERACY_EPSILON = 1e-10
DEFAULT_BOUND = 10.0
OBJECTIVE_RESOLUTION = 3


def _monomials(powers: Sequence[int], coefficients: Sequence[float]) -> AnalyticExpr:
    t = Variable()
    total: AnalyticExpr = ZERO
    for exponent, coefficient in zip(powers, coefficients, strict=True):
        total = add(total, mul(constant(coefficient), power(t, exponent)))
    return total


@dataclass(frozen=True)
class CurveFamily:
    """Curves ``(Σ a_i t^{p_i}, Σ b_j t^{q_j}, 0)`` with even ``p_i`` and odd ``q_j``.

    Every member is perpendicular symmetric about the X-axis with its vertex
    at ``t = 0``. ``theta`` lists the x coefficients, then the y coefficients.
    A family built with :meth:`fixed` has no free coefficients.
    """

    x_powers: tuple[int, ...] = ()
    y_powers: tuple[int, ...] = ()
    initial: tuple[float, ...] = ()
    lower: tuple[float, ...] = ()
    upper: tuple[float, ...] = ()
    fixed_curve: AnalyticCurve | None = field(default=None, repr=False)

    def __post_init__(self) -> None:
        """Check parities, lengths and bounds.

        Raises:
            ValueError: If the family is malformed.

        """
        if any(p < 0 or p % 2 for p in self.x_powers):
            msg = f"x powers must be even and non-negative, got {self.x_powers}"
            raise ValueError(msg)
        if any(q < 0 or q % 2 == 0 for q in self.y_powers):
            msg = f"y powers must be odd and positive, got {self.y_powers}"
            raise ValueError(msg)
        size = self.dimension
        if not (len(self.initial) == len(self.lower) == len(self.upper) == size):
            msg = f"initial values and bounds need {size} entries each"
            raise ValueError(msg)
        if any(low > high for low, high in zip(self.lower, self.upper, strict=True)):
            msg = "lower bounds must not exceed upper bounds"
            raise ValueError(msg)
        if self.fixed_curve is not None and size:
            msg = "a fixed family has no free coefficients"
            raise ValueError(msg)

    @classmethod
    def polynomial(
        cls,
        x_powers: Sequence[int],
        y_powers: Sequence[int],
        initial: Sequence[float],
        lower: Sequence[float] | None = None,
        upper: Sequence[float] | None = None,
    ) -> CurveFamily:
        """Polynomial family; bounds default to ``[-10, 10]`` for every coefficient."""
        start = tuple(float(value) for value in initial)
        return cls(
            x_powers=tuple(x_powers),
            y_powers=tuple(y_powers),
            initial=start,
            lower=tuple(lower) if lower is not None else tuple(-DEFAULT_BOUND for _ in start),
            upper=tuple(upper) if upper is not None else tuple(DEFAULT_BOUND for _ in start),
        )

    @classmethod
    def fixed(cls, curve: AnalyticCurve) -> CurveFamily:
        return cls(fixed_curve=curve)

    @property
    def dimension(self) -> int:
        return len(self.x_powers) + len(self.y_powers)

    def instantiate(self, theta: Sequence[float]) -> AnalyticCurve:
        if self.fixed_curve is not None:
            return self.fixed_curve
        split = len(self.x_powers)
        return AnalyticCurve(
            _monomials(self.x_powers, theta[:split]),
            _monomials(self.y_powers, theta[split:]),
            ZERO,
        )


def self_cpg_objective(
    curve: AnalyticCurve,
    grid: DomainGrid,
    *,
    quad_tol: float = 1e-10,
    samples: int = 21,
) -> float:
    """Scaled self-CPG residual of the Björling surface of ``curve`` with ``phi = pi/2``.

    The patch is evaluated on the corners and midpoints of ``grid`` only.
    Irregular or degenerate vertices and numerical failures give ``inf``.
    """
    velocity = curve.velocity(0.0).real
    acceleration = curve.acceleration(0.0).real
    speed = float(np.linalg.norm(velocity))
    bending = abs(velocity[1] * acceleration[0] - velocity[0] * acceleration[1])
    if speed <= DEGENERACY_EPSILON or bending <= DEGENERACY_EPSILON * max(speed, 1.0):
        return math.inf
    try:
        strip = make_planar_strip(curve)
        coarse = grid.with_resolution(OBJECTIVE_RESOLUTION, OBJECTIVE_RESOLUTION)
        patch = evaluate_patch(strip, coarse, quad_tol=quad_tol)
        residual = self_cpg_test(patch, samples=samples).residual
    except (AnalyticError, BjorlingError, SymmetryError, FloatingPointError) as exc:
        logger.debug("Objective failed: %r", exc)
        return math.inf
    return residual if math.isfinite(residual) else math.inf


@dataclass(frozen=True)
class SearchResult:
    """Best coefficients found, with the objective history of every restart in order."""

    best_theta: tuple[float, ...]
    residual: float
    history: tuple[tuple[int, float], ...]
    restart: int
    evaluations: int

    def as_record(self) -> dict[str, object]:
        return {
            "name": "self_cpg_search",
            "best_theta": list(self.best_theta),
            "residual": self.residual,
            "restart": self.restart,
            "evaluations": self.evaluations,
            "history": [[index, value] for index, value in self.history],
        }


@dataclass(frozen=True)
class _Restart:
    index: int
    theta: tuple[float, ...]
    residual: float
    history: tuple[float, ...]


def _starts(family: CurveFamily, restarts: int, seed: int) -> list[NDArray[np.float64]]:
    lower = np.asarray(family.lower, dtype=float)
    upper = np.asarray(family.upper, dtype=float)
    rng = np.random.default_rng(seed)
    starts = [np.clip(np.asarray(family.initial, dtype=float), lower, upper)]
    starts.extend(rng.uniform(lower, upper) for _ in range(restarts - 1))
    return starts


def self_cpg_search(  # noqa: PLR0913
    family: CurveFamily,
    budget: int,
    grid: DomainGrid,
    tol: float = 1e-8,
    *,
    restarts: int = 5,
    seed: int = 0,
    workers: int = 1,
    quad_tol: float = 1e-10,
) -> SearchResult:
    """Minimize :func:`self_cpg_objective` over ``family`` with Nelder-Mead.

    Restart 0 starts from the family's initial coefficients and the others
    from uniform draws inside the bounds; ``budget`` evaluations are shared
    evenly between restarts. Restarts may run on ``workers`` threads; the
    result depends only on the seed. Ties are broken by restart index.

    Raises:
        SearchError: If no evaluation produced a finite residual.

    """
    if budget < 1 or restarts < 1:
        msg = "budget and restarts must be positive"
        raise SearchError(msg, budget=budget, restarts=restarts)

    if family.dimension == 0:
        value = self_cpg_objective(family.instantiate(()), grid, quad_tol=quad_tol)
        if not math.isfinite(value):
            msg = "fixed curve has no finite self-CPG residual"
            raise SearchError(msg)
        return SearchResult(
            best_theta=(), residual=value, history=((0, value),), restart=0, evaluations=1
        )

    per_restart = max(1, budget // restarts)
    bounds = list(zip(family.lower, family.upper, strict=True))

    def run(index: int, start: NDArray[np.float64]) -> _Restart:
        history: list[float] = []
        points: list[tuple[float, ...]] = []

        def objective(theta: NDArray[np.float64]) -> float:
            value = self_cpg_objective(
                family.instantiate(theta.tolist()), grid, quad_tol=quad_tol
            )
            points.append(tuple(theta.tolist()))
            history.append(value)
            return value

        minimize(
            objective,
            start,
            method="Nelder-Mead",
            bounds=bounds,
            options={
                "maxfev": per_restart,
                "xatol": 1e-12,
                "fatol": 1e-14,
                "adaptive": True,
            },
        )
        best = int(np.argmin(history)) if history else -1
        if best < 0 or not math.isfinite(history[best]):
            return _Restart(index, tuple(start.tolist()), math.inf, tuple(history))
        logger.info(
            "Restart %d: residual %.3e after %d evaluations", index, history[best], len(history)
        )
        return _Restart(index, points[best], history[best], tuple(history))

    starts = _starts(family, restarts, seed)
    with ThreadPoolExecutor(max_workers=max(1, workers)) as executor:
        outcomes = list(executor.map(run, range(restarts), starts))

    history: list[tuple[int, float]] = []
    for outcome in outcomes:
        history.extend((len(history), value) for value in outcome.history)
    finite = [outcome for outcome in outcomes if math.isfinite(outcome.residual)]
    if not finite:
        msg = "no evaluation produced a finite self-CPG residual"
        raise SearchError(msg, evaluations=len(history))
    winner = min(finite, key=lambda outcome: (outcome.residual, outcome.index))
    if winner.residual > tol:
        logger.info("Best residual %.3e is above tolerance %g", winner.residual, tol)
    return SearchResult(
        best_theta=winner.theta,
        residual=winner.residual,
        history=tuple(history),
        restart=winner.index,
        evaluations=len(history),
    )
