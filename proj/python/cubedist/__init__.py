"""Exact distance-matrix computations on subsets of the Hamming cube."""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Sequence

from . import _core
from ._core import (
    BudgetExceededError,
    CapExceededError,
    DegenerateMetricError,
    DependenceError,
    InvalidTreeError,
    SingularMatrixError,
)

__all__ = [
    "BudgetExceededError",
    "CapExceededError",
    "DegenerateMetricError",
    "DependenceError",
    "InvalidTreeError",
    "SingularMatrixError",
    "affinely_independent",
    "dinv_ones",
    "gram_quad",
    "is_p_negative_type",
    "negtype",
    "probe",
    "report",
    "search",
    "tree_report",
    "verify",
]


def _points(points: Iterable[str]) -> list[str]:
    return [str(p) for p in points]


def report(points: Iterable[str]) -> dict:
    """Determinants, inverse and Gram data for a point set. Rationals stay strings."""
    return json.loads(_core.report(_points(points)))


def dinv_ones(points: Iterable[str]) -> Fraction:
    return Fraction(_core.dinv_ones(_points(points)))


def gram_quad(points: Iterable[str]) -> Fraction:
    return Fraction(_core.gram_quad(_points(points)))


def affinely_independent(points: Iterable[str]) -> bool:
    return _core.affinely_independent(_points(points))


def tree_report(vertices: int, edges: Sequence[tuple[int, int]]) -> dict:
    return json.loads(_core.tree_report(vertices, [tuple(e) for e in edges]))


def negtype(points: Iterable[str], cap: float = 16.0, tol: float = 1e-9, grid: float = 0.125) -> dict:
    return json.loads(_core.negtype(_points(points), cap, tol, grid))


def is_p_negative_type(points: Iterable[str], p: float, tol: float = 1e-9) -> bool:
    return _core.is_p_negative_type(_points(points), p, tol)


def search(n: int, m: int, workers: int = 1, budget: int = 100_000_000) -> dict:
    return json.loads(_core.search(n, m, workers, budget))


def probe(n: int, m: int, trials: int, seed: int, workers: int = 1) -> dict:
    return json.loads(_core.probe(n, m, trials, seed, workers))


def verify(n_cap: int = 3, random_n_max: int = 4, samples: int = 100, seed: int = 20240101, tree_cap: int = 6) -> dict:
    return json.loads(_core.verify(n_cap, random_n_max, samples, seed, tree_cap))
