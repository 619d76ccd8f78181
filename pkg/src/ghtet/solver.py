"""Inverse problem: edge lengths from target dihedral angles.

Damped Newton iteration on ``angles(x) - target`` using the analytic
Jacobian.  Each step is the minimum-norm least-squares solution, which
copes with the exact kernel introduced by ideal vertices (shifting the
three edges at an ideal vertex moves its horoball and changes no angle).
This is a local method: there is no global convergence guarantee.
"""

import logging
from dataclasses import dataclass

import numpy as np

from .errors import GeometryError, InadmissibleError, SolverError
from .jacobian import ideal_kernel_vectors, jacobian_analytic
from .tetra import TetConfig, admissible, angles_cofactor, is_admissible

log = logging.getLogger(__name__)

RANK_RTOL = 1e-10
MIN_STEP = 2.0 ** -20
# Smallest length an ideal-incident edge is lifted to when regauging.
GAUGE_FLOOR = 0.1


@dataclass
class SolveResult:
    lengths: np.ndarray
    residual: float
    iterations: int
    rank_deficient: bool
    rank: int = 6


def numerical_rank(jac, rtol=RANK_RTOL):
    sv = np.linalg.svd(jac, compute_uv=False)
    return int(np.sum(sv > rtol * sv[0])) if sv[0] > 0 else 0


def regauge(types, lengths, floor=GAUGE_FLOOR):
    """Shift horoballs so every edge at an ideal vertex is at least ``floor``.

    Moving the horoball at an ideal vertex adds the same amount to its three
    edges and changes no angle, so this only picks another representative.
    Edges between two non-ideal vertices are left alone.
    """
    x = np.array(lengths, dtype=float)
    if np.all(x > 0):
        return x
    for vec in ideal_kernel_vectors(types):
        deficit = np.max(np.where(vec > 0, floor - x, -np.inf))
        if deficit > 0:
            x += deficit * vec
    return x


def solve(types, target, initial_lengths=None, tolerance=1e-10, max_iterations=100):
    """Find lengths whose dihedral angles match ``target`` to ``tolerance`` (max-norm)."""
    target = np.asarray(target, dtype=float).reshape(-1)
    if target.shape != (6,):
        raise ValueError("target must hold six angles")
    if not np.all((target > 0) & (target < np.pi)):
        raise ValueError("target angles must lie in (0, pi)")
    if not tolerance > 0:
        raise ValueError("tolerance must be positive")

    x = np.full(6, 1.0) if initial_lengths is None else np.asarray(initial_lengths, dtype=float)
    cfg = TetConfig(types, x)
    report = admissible(cfg)
    if not report.ok:
        raise InadmissibleError(f"initial point inadmissible: {cfg!r}", report)

    residual = float(np.max(np.abs(angles_cofactor(cfg, check=False) - target)))
    for it in range(max_iterations + 1):
        if residual <= tolerance:
            rank = numerical_rank(jacobian_analytic(cfg))
            return SolveResult(cfg.lengths.copy(), residual, it, rank < 6, rank)
        if it == max_iterations:
            break
        try:
            jac = jacobian_analytic(cfg)
        except GeometryError as exc:
            raise SolverError(f"Jacobian failed at iteration {it}: {exc}", residual, cfg.lengths.copy(), it) from exc
        err = angles_cofactor(cfg, check=False) - target
        step, *_ = np.linalg.lstsq(jac, -err, rcond=RANK_RTOL)
        lam = 1.0
        while lam >= MIN_STEP:
            trial = cfg.with_lengths(regauge(cfg.types, cfg.lengths + lam * step))
            if is_admissible(trial):
                trial_res = float(np.max(np.abs(angles_cofactor(trial, check=False) - target)))
                if trial_res < residual:
                    cfg, residual = trial, trial_res
                    break
            lam *= 0.5
        else:
            raise SolverError(
                f"line search stalled at iteration {it} with residual {residual:.3e}",
                residual, cfg.lengths.copy(), it,
            )
        log.debug("iteration %d: step %g, residual %.3e", it, lam, residual)
    raise SolverError(
        f"max iterations ({max_iterations}) exceeded with residual {residual:.3e}",
        residual, cfg.lengths.copy(), max_iterations,
    )
