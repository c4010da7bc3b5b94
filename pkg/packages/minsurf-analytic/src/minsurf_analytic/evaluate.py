"""Vectorized evaluation of expression trees at complex points.

Evaluation points are numpy arrays. Square roots are continued along the last
axis of the array by a :class:`BranchTracker`, so callers lay out each
integration path along that axis and batch independent paths in front of it.
"""

from __future__ import annotations

import copy
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, overload

import numpy as np
from minsurf_logging import get_logger

from minsurf_analytic.exceptions import (
    AnalyticDivisionError,
    BranchPointError,
    BranchTrackingRequiredError,
)
from minsurf_analytic.nodes import (
    AnalyticExpr,
    Call,
    Constant,
    Difference,
    Negation,
    Power,
    Product,
    Quotient,
    Sum,
    Variable,
)

if TYPE_CHECKING:
    from collections.abc import Hashable, Sequence

    from numpy.typing import ArrayLike, NDArray

logger = get_logger("analytic.evaluate")

DIVISION_EPSILON = 1e-300

_FUNCTIONS = {
    "sin": np.sin,
    "cos": np.cos,
    "sinh": np.sinh,
    "cosh": np.cosh,
    "exp": np.exp,
}


@dataclass
class BranchTracker:
    """Continuity state for square roots along sampled paths.

    Each ``sqrt`` node has its own state, keyed by the node. For every path the
    root closest to the previous value is chosen; the first sample of a path is
    compared with the stored state, or with ``last_value`` when the node has not
    been seen yet.
    """

    last_value: complex = 1 + 0j
    epsilon_branch: float = 1e-12
    _states: dict[Hashable, NDArray[np.complex128]] = field(default_factory=dict, repr=False)
    _trails: dict[Hashable, NDArray[np.complex128]] = field(default_factory=dict, repr=False)

    def continue_sqrt(self, key: Hashable, radicand: ArrayLike) -> NDArray[np.complex128]:
        """Return the continued square root of ``radicand`` along its last axis.

        Raises:
            BranchPointError: If any radicand is closer than ``epsilon_branch`` to 0.

        """
        values = np.asarray(radicand, dtype=np.complex128)
        magnitudes = np.abs(values)
        if magnitudes.size and magnitudes.min() < self.epsilon_branch:
            worst = complex(values.flat[int(np.argmin(magnitudes))])
            raise BranchPointError(worst, self.epsilon_branch)

        path = np.atleast_1d(values)
        roots = np.sqrt(path)
        previous = self._states.get(key, np.asarray(self.last_value, dtype=np.complex128))
        previous = np.broadcast_to(previous, roots.shape[:-1])

        first = np.where((roots[..., 0] * np.conj(previous)).real < 0, -1.0, 1.0)
        steps = np.where((roots[..., 1:] * np.conj(roots[..., :-1])).real < 0, -1.0, 1.0)
        signs = first[..., None] * np.concatenate(
            [np.ones((*roots.shape[:-1], 1)), np.cumprod(steps, axis=-1)], axis=-1
        )
        continued = roots * signs

        self._states[key] = continued[..., -1].copy()
        self._trails[key] = continued
        return continued.reshape(values.shape)

    def fork(self) -> BranchTracker:
        """Return an independent copy of the current states without trails."""
        return BranchTracker(
            last_value=self.last_value,
            epsilon_branch=self.epsilon_branch,
            _states=copy.deepcopy(self._states),
        )

    def subsample(self, indices: ArrayLike) -> BranchTracker:
        """Return a copy whose recorded trails keep only the given path positions."""
        positions = np.asarray(indices, dtype=np.intp)
        tracker = self.fork()
        tracker._trails = {key: trail[..., positions] for key, trail in self._trails.items()}  # noqa: SLF001
        return tracker

    def restart_at(self, indices: ArrayLike) -> BranchTracker:
        """Seed a tracker from the last recorded trails.

        The selected path positions become a new trailing batch axis, so every
        recorded sample can start a path of its own.
        """
        positions = np.asarray(indices, dtype=np.intp)
        states = {key: trail[..., positions].copy() for key, trail in self._trails.items()}
        logger.debug("Restarting %d sqrt branches at %d positions", len(states), positions.size)
        return BranchTracker(
            last_value=self.last_value,
            epsilon_branch=self.epsilon_branch,
            _states=states,
        )

    @classmethod
    def concatenate(cls, trackers: Sequence[BranchTracker]) -> BranchTracker:
        """Join trackers produced by :meth:`restart_at` along their batch axis."""
        head = trackers[0]
        keys = set().union(*(tracker._states.keys() for tracker in trackers))  # noqa: SLF001
        states = {
            key: np.concatenate(
                [np.atleast_1d(tracker._states[key]) for tracker in trackers],  # noqa: SLF001
                axis=-1,
            )
            for key in keys
        }
        return cls(last_value=head.last_value, epsilon_branch=head.epsilon_branch, _states=states)


class _Evaluator:
    def __init__(self, points: NDArray[np.complex128], tracker: BranchTracker | None) -> None:
        self._points = points
        self._tracker = tracker
        self._memo: dict[AnalyticExpr, NDArray[np.complex128]] = {}

    def __call__(self, node: AnalyticExpr) -> NDArray[np.complex128]:
        cached = self._memo.get(node)
        if cached is None:
            cached = self._compute(node)
            self._memo[node] = cached
        return cached

    def _compute(self, node: AnalyticExpr) -> NDArray[np.complex128]:  # noqa: PLR0911
        match node:
            case Constant(value=value):
                return np.full(self._points.shape, value, dtype=np.complex128)
            case Variable():
                return self._points
            case Sum(left=left, right=right):
                return self(left) + self(right)
            case Difference(left=left, right=right):
                return self(left) - self(right)
            case Product(left=left, right=right):
                return self(left) * self(right)
            case Quotient(numerator=numerator, denominator=denominator):
                den = self(denominator)
                magnitudes = np.abs(den)
                if magnitudes.size and magnitudes.min() < DIVISION_EPSILON:
                    raise AnalyticDivisionError(complex(den.flat[int(np.argmin(magnitudes))]))
                return self(numerator) / den
            case Power(base=base, exponent=exponent):
                return self(base) ** exponent
            case Negation(operand=operand):
                return -self(operand)
            case Call(function="sqrt", argument=argument):
                if self._tracker is None:
                    raise BranchTrackingRequiredError
                return self._tracker.continue_sqrt(node, self(argument))
            case Call(function=function, argument=argument):
                return _FUNCTIONS[function](self(argument))


@overload
def evaluate(
    expr: AnalyticExpr, w: complex, branch: BranchTracker | None = None
) -> complex: ...


@overload
def evaluate(
    expr: AnalyticExpr,
    w: NDArray[np.complexfloating] | NDArray[np.floating],
    branch: BranchTracker | None = None,
) -> NDArray[np.complex128]: ...


def evaluate(
    expr: AnalyticExpr,
    w: complex | NDArray[np.complexfloating] | NDArray[np.floating],
    branch: BranchTracker | None = None,
) -> complex | NDArray[np.complex128]:
    """Evaluate the holomorphic extension of ``expr`` at ``w``.

    Args:
        expr: Expression tree.
        w: A complex number or an array of points. For arrays, square roots are
            continued along the last axis.
        branch: Tracker required when ``expr`` contains ``sqrt``.

    Returns:
        A complex number for scalar input, otherwise an array shaped like ``w``.

    Raises:
        AnalyticDivisionError: If a denominator is below 1e-300 in magnitude.
        BranchTrackingRequiredError: If a sqrt is met without a tracker.
        BranchPointError: If a sqrt radicand is too close to zero.

    """
    points = np.asarray(w, dtype=np.complex128)
    result = _Evaluator(points, branch)(expr)
    if points.ndim == 0:
        return complex(result)
    return result


def evaluate_many(
    exprs: Sequence[AnalyticExpr],
    w: complex | NDArray[np.complexfloating] | NDArray[np.floating],
    branch: BranchTracker | None = None,
) -> NDArray[np.complex128]:
    """Evaluate several expressions sharing one memo; results are stacked on axis 0.

    Subtrees shared between the expressions are computed once, so each distinct
    square root advances ``branch`` exactly once per call.
    """
    points = np.asarray(w, dtype=np.complex128)
    evaluator = _Evaluator(points, branch)
    return np.stack([evaluator(expr) for expr in exprs])
