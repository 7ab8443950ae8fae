"""Separability criteria: the generalized reduction trace-norm test over all
transposition subsets, plus the classical PPT, reduction and realignment
checks used as independent oracles."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .gptops import GptOpSet, all_subsets, gpt_transform, partial_transpose, realign
from .matlin import (
    DensityState,
    hermitian_eigenvalues,
    kron,
    partial_trace,
    trace_norm,
)

# Two orders above solver residual, far below the smallest violation any of
# the named example families produces (2/3 for the Werner family).
TOL_VERDICT = 1e-8

# (a, b) values exercised by soundness tests and the compare workflow.
AB_TEST_GRID = (-1.0, -1.0 / 3.0, 0.0, 0.5, 2.0 / 3.0, 1.0)


@dataclass(frozen=True)
class ReductionParams:
    """The pair of complex scalars (a, b) parameterizing the map."""

    a: complex
    b: complex

    def __post_init__(self) -> None:
        a, b = complex(self.a), complex(self.b)
        if not (math.isfinite(a.real) and math.isfinite(a.imag)
                and math.isfinite(b.real) and math.isfinite(b.imag)):
            raise ValueError(f"parameters must be finite, got a={self.a}, b={self.b}")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)


@dataclass(frozen=True)
class BoundPair:
    """The two non-negative factors whose product bounds the trace norm."""

    h_a: float
    h_b: float

    @property
    def product(self) -> float:
        return self.h_a * self.h_b


@dataclass(frozen=True)
class CriterionVerdict:
    """One criterion evaluation: statistic, bound, violation and the flag.

    For norm-type criteria the statistic is a trace norm, violation is
    max(statistic - bound, 0) and the state is flagged when the violation
    exceeds TOL_VERDICT.  For eigenvalue-type criteria (ppt, reduction) the
    statistic is a minimum eigenvalue, the bound is 0 and the state is
    flagged when the statistic drops below -TOL_VERDICT.
    """

    criterion: str
    params: ReductionParams | None
    yset: GptOpSet | None
    statistic: float
    bound: float
    violation: float
    entangled: bool


def generalized_reduction_map(rho: DensityState, p: ReductionParams) -> np.ndarray:
    """Map rho to ab*I - a*(I kron rho_B) - b*(rho_A kron I) + rho.

    The output has the same shape as rho and is Hermitian whenever a and b
    are real.
    """
    m, n = rho.dims.m, rho.dims.n
    rho_a = partial_trace(rho, "B")
    rho_b = partial_trace(rho, "A")
    a, b = complex(p.a), complex(p.b)
    return (a * b * np.eye(m * n)
            - a * kron(np.eye(m), rho_b)
            - b * kron(rho_a, np.eye(n))
            + rho.mat)


def h_factor(x: complex, dim: int, row_in: bool, col_in: bool) -> float:
    """Per-subsystem bound factor for parameter x on a dim-dimensional factor.

    With both transposition flags present or both absent the factor is
    |x-1| + (dim-1)|x|; with exactly one flag it is
    sqrt(|x-1|^2 + (dim-1)|x|^2).
    """
    x = complex(x)
    if row_in == col_in:
        return abs(x - 1.0) + (dim - 1) * abs(x)
    return math.sqrt(abs(x - 1.0) ** 2 + (dim - 1) * abs(x) ** 2)


def bound_for(p: ReductionParams, dims, y: GptOpSet) -> BoundPair:
    """Both bound factors for the given parameters and transposition subset."""
    return BoundPair(
        h_a=h_factor(p.a, dims.m, y.rA, y.cA),
        h_b=h_factor(p.b, dims.n, y.rB, y.cB),
    )


def evaluate(rho: DensityState, p: ReductionParams, y: GptOpSet) -> CriterionVerdict:
    """Generalized reduction criterion for one (a, b) pair and one subset y."""
    tilde = generalized_reduction_map(rho, p)
    statistic = trace_norm(gpt_transform(tilde, rho.dims, y))
    bound = bound_for(p, rho.dims, y).product
    violation = max(statistic - bound, 0.0)
    return CriterionVerdict(
        criterion="generalized-reduction",
        params=p,
        yset=y,
        statistic=statistic,
        bound=bound,
        violation=violation,
        entangled=violation > TOL_VERDICT,
    )


def evaluate_all_Y(rho: DensityState, p: ReductionParams) -> tuple[CriterionVerdict, ...]:
    """One verdict per flag subset, in canonical counter order; the state is
    flagged overall when any individual verdict flags it."""
    return tuple(evaluate(rho, p, y) for y in all_subsets())


def ppt_check(rho: DensityState) -> CriterionVerdict:
    """Positivity of the partial transpose, taken on subsystem A.

    The B-side transpose has the same spectrum for Hermitian rho (global
    transpose similarity), so one side suffices.
    """
    pt = partial_transpose(rho.mat, rho.dims, "A")
    statistic = float(hermitian_eigenvalues(pt)[0])
    return CriterionVerdict(
        criterion="ppt",
        params=None,
        yset=None,
        statistic=statistic,
        bound=0.0,
        violation=max(-statistic, 0.0),
        entangled=statistic < -TOL_VERDICT,
    )


def reduction_check(rho: DensityState) -> CriterionVerdict:
    """Positivity of I kron rho_B - rho and rho_A kron I - rho, jointly."""
    m, n = rho.dims.m, rho.dims.n
    rho_a = partial_trace(rho, "B")
    rho_b = partial_trace(rho, "A")
    lo_b = float(hermitian_eigenvalues(kron(np.eye(m), rho_b) - rho.mat)[0])
    lo_a = float(hermitian_eigenvalues(kron(rho_a, np.eye(n)) - rho.mat)[0])
    statistic = min(lo_a, lo_b)
    return CriterionVerdict(
        criterion="reduction",
        params=None,
        yset=None,
        statistic=statistic,
        bound=0.0,
        violation=max(-statistic, 0.0),
        entangled=statistic < -TOL_VERDICT,
    )


def realignment_check(rho: DensityState) -> CriterionVerdict:
    """Trace norm of the realigned matrix against the separable bound 1."""
    statistic = trace_norm(realign(rho.mat, rho.dims))
    violation = max(statistic - 1.0, 0.0)
    return CriterionVerdict(
        criterion="realignment",
        params=None,
        yset=GptOpSet(cA=True, rB=True),
        statistic=statistic,
        bound=1.0,
        violation=violation,
        entangled=violation > TOL_VERDICT,
    )
