"""Canonical reformulation: y as Hamiltonian time, plus the Ermakov-Lewis invariant.

The wave equation in first-order form, q' = p and p' = -Q(y) q, is a
non-autonomous linear flow; pairing a trajectory with a Pinney amplitude
(same Q, right-hand constant q_const) conserves

    I = (1/2) [ q_const (q/rho)**2 + (rho p - rho' q)**2 ].

Because Q depends on y, the oscillator pseudo-energy p**2/2 + Q q**2/2 is
*not* conserved; :func:`oscillator_energy` exists so tests can assert the
drift.  Conservation checks must integrate flow and amplitude as one
augmented system (separate integrations interpolate differently and mask
the invariant).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from . import backend
from .coulomb_wave import CoulombParams, effective_potential
from .errors import AbscissaMismatchError, DomainError
from .milne import MilneSample


@dataclass(frozen=True)
class PhaseState:
    """Canonical state at Hamiltonian time y: coordinate q = phi, momentum p = phi'."""

    y: float
    q: float
    p: float

    def __post_init__(self):
        if not (math.isfinite(self.y) and self.y > 0.0):
            raise DomainError(f"y must be positive, got {self.y!r}")


def _eval_grid(y0: float, y_end: float, y_eval, default_count: int = 200) -> np.ndarray:
    if y_eval is None:
        return np.linspace(y0, y_end, default_count)
    grid = np.asarray(y_eval, dtype=float)
    if grid.size == 0:
        raise DomainError("y_eval must be nonempty")
    lo, hi = (y0, y_end) if y_end >= y0 else (y_end, y0)
    if np.any(grid < lo) or np.any(grid > hi):
        raise DomainError("y_eval must lie within the integration interval")
    diffs = np.diff(grid)
    if grid.size > 1 and not (np.all(diffs > 0) if y_end >= y0 else np.all(diffs < 0)):
        raise DomainError("y_eval must run monotonically from y0 towards y_end")
    return grid


def hamiltonian_flow(
    initial: PhaseState,
    params: CoulombParams,
    y_end: float,
    rtol: float = 1e-10,
    atol: float = 1e-12,
    y_eval: Optional[Sequence[float]] = None,
    potential=None,
) -> list[PhaseState]:
    """Integrate the non-autonomous linear flow from ``initial`` to y_end.

    y_end may be smaller than initial.y; the flow then runs backwards,
    which is what the time-reversal checks use.
    """
    y_end = float(y_end)
    if not (math.isfinite(y_end) and y_end > 0.0):
        raise DomainError(f"y_end must be positive, got {y_end!r}")
    if y_end == initial.y:
        raise DomainError("y_end coincides with the initial time")
    grid = _eval_grid(initial.y, y_end, y_eval)
    states = backend.integrate_system(
        backend.SYSTEM_WAVE, params.eps, params.k, 0.0,
        np.array([initial.q, initial.p]), initial.y, y_end, rtol, atol, grid,
        potential=potential,
    )
    return [
        PhaseState(y=float(gy), q=float(s[0]), p=float(s[1]))
        for gy, s in zip(grid, states)
    ]


def integrate_coupled(
    initial: PhaseState,
    rho0: float,
    drho0: float,
    params: CoulombParams,
    y_end: float,
    q_const: Optional[float] = None,
    rtol: float = 1e-10,
    atol: float = 1e-12,
    y_eval: Optional[Sequence[float]] = None,
    potential=None,
) -> list[tuple[PhaseState, MilneSample]]:
    """Flow and Pinney amplitude integrated as one augmented system."""
    y_end = float(y_end)
    if not (math.isfinite(y_end) and y_end > 0.0):
        raise DomainError(f"y_end must be positive, got {y_end!r}")
    if y_end == initial.y:
        raise DomainError("y_end coincides with the initial time")
    if not (math.isfinite(rho0) and rho0 > 0.0):
        raise DomainError(f"rho0 must be positive, got {rho0!r}")
    q = params.k * params.k if q_const is None else float(q_const)
    grid = _eval_grid(initial.y, y_end, y_eval)
    states = backend.integrate_system(
        backend.SYSTEM_COUPLED, params.eps, params.k, q,
        np.array([initial.q, initial.p, rho0, drho0]),
        initial.y, y_end, rtol, atol, grid,
        potential=potential,
    )
    out = []
    for gy, s in zip(grid, states):
        gy = float(gy)
        out.append(
            (
                PhaseState(y=gy, q=float(s[0]), p=float(s[1])),
                MilneSample(
                    y=gy, rho=float(s[2]), drho=float(s[3]),
                    n_m=1.0 / float(s[2]) ** 2,
                ),
            )
        )
    return out


def ermakov_lewis_invariant(state: PhaseState, amp: MilneSample, q_const: float) -> float:
    """I = (1/2)[q_const (q/rho)**2 + (rho p - rho' q)**2] at a shared time."""
    if state.y != amp.y:
        raise AbscissaMismatchError(
            f"state at y={state.y!r} but amplitude at y={amp.y!r}"
        )
    ratio = state.q / amp.rho
    cross = amp.rho * state.p - amp.drho * state.q
    return 0.5 * (float(q_const) * ratio * ratio + cross * cross)


def oscillator_energy(state: PhaseState, params: CoulombParams, potential=None) -> float:
    """Pseudo-energy p**2/2 + Q(y) q**2/2; drifts whenever Q depends on y."""
    q_of_y = (
        effective_potential(state.y, params) if potential is None else potential(state.y)
    )
    return 0.5 * state.p * state.p + 0.5 * q_of_y * state.q * state.q
