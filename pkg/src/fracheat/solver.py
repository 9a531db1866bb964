"""Implicit time-stepping engines for the 1-D time-fractional diffusion equation.

Two schemes share the same skeleton: at each level the nonlocal time
operator contributes ``rho * c_0`` on the new layer plus a history sum over
all previous layers, and the spatial operator makes the implicit matrix
tridiagonal.  The first layer cannot use the quadratic-interpolation
weights (they need three time points), so it is bootstrapped by the L1
scheme on a refined subgrid of [0, tau].
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .kernel import AlphaParam, a_coeff, c_weights
from .problem import Coefficients, DiffusionProblem, GridSpec

__all__ = [
    "SchemeKind",
    "SolutionHistory",
    "TridiagonalSystem",
    "apply_compact_H",
    "apply_lambda",
    "bootstrap_first_layer",
    "solve",
    "step_compact",
    "step_order2",
    "thomas_solve",
]


class SchemeKind(str, enum.Enum):
    ORDER2 = "order2"  # second order in space, k = k(x,t)
    COMPACT4 = "compact4"  # fourth order in space, needs k = k(t)


@dataclass(frozen=True)
class TridiagonalSystem:
    """A x = rhs with A tridiagonal (lower/upper of length n-1, diag of length n)."""

    lower: np.ndarray
    diag: np.ndarray
    upper: np.ndarray
    rhs: np.ndarray

    def __post_init__(self) -> None:
        n = self.diag.size
        if n < 1:
            raise ValueError("empty system")
        if self.lower.size != n - 1 or self.upper.size != n - 1 or self.rhs.size != n:
            raise ValueError(
                f"inconsistent sizes: diag {n}, lower {self.lower.size}, "
                f"upper {self.upper.size}, rhs {self.rhs.size}"
            )

    def residual_inf(self, x: np.ndarray) -> float:
        ax = self.diag * x
        ax[:-1] += self.upper * x[1:]
        ax[1:] += self.lower * x[:-1]
        return float(np.max(np.abs(ax - self.rhs)))


def thomas_solve(sys: TridiagonalSystem) -> np.ndarray:
    """Forward elimination / back substitution for a tridiagonal system.

    Raises on a (near-)zero pivot, which for the systems assembled here
    signals loss of diagonal dominance rather than an expected state.
    """
    n = sys.diag.size
    lower = sys.lower.tolist()
    diag = sys.diag.tolist()
    upper = sys.upper.tolist()
    rhs = sys.rhs.tolist()
    scale = max(abs(v) for v in diag)
    cp = [0.0] * (n - 1)
    dp = [0.0] * n
    piv = diag[0]
    if abs(piv) <= 1e-300 + 1e-15 * scale:
        raise ZeroDivisionError("zero pivot in tridiagonal elimination (row 0)")
    if n > 1:
        cp[0] = upper[0] / piv
    dp[0] = rhs[0] / piv
    for i in range(1, n):
        piv = diag[i] - lower[i - 1] * cp[i - 1]
        if abs(piv) <= 1e-300 + 1e-15 * scale:
            raise ZeroDivisionError(f"zero pivot in tridiagonal elimination (row {i})")
        if i < n - 1:
            cp[i] = upper[i] / piv
        dp[i] = (rhs[i] - lower[i - 1] * dp[i - 1]) / piv
    x = dp
    for i in range(n - 2, -1, -1):
        x[i] -= cp[i] * x[i + 1]
    return np.asarray(x)


def apply_lambda(y: np.ndarray, j: int, problem: DiffusionProblem, grid: GridSpec) -> np.ndarray:
    """Second-order spatial operator at time level j+1.

    Interior entries are (a_{i+1} y_{i+1} - (a_{i+1} + a_i) y_i + a_i y_{i-1}) / h^2
    - d_i y_i with a_i = k(x_{i-1/2}, t_{j+1}) and d_i = q(x_i, t_{j+1});
    boundary entries are zero.
    """
    y = np.asarray(y, dtype=float)
    if y.size != grid.N + 1:
        raise ValueError(f"expected {grid.N + 1} nodal values, got {y.size}")
    t_new = (j + 1) * grid.tau
    a_half = np.asarray(problem.k(grid.x_half_nodes(), t_new), dtype=float)
    d = np.asarray(problem.q(grid.x_nodes()[1:-1], t_new), dtype=float)
    out = np.zeros_like(y)
    h2 = grid.h * grid.h
    out[1:-1] = (a_half[1:] * y[2:] - (a_half[1:] + a_half[:-1]) * y[1:-1] + a_half[:-1] * y[:-2]) / h2
    out[1:-1] -= d * y[1:-1]
    return out


def apply_compact_H(v: np.ndarray, grid: GridSpec) -> np.ndarray:
    """Fourth-order averaging operator, v_i + (v_{i+1} - 2 v_i + v_{i-1})/12.

    Endpoints pass through unchanged; downstream they only ever multiply
    homogeneous boundary values.
    """
    v = np.asarray(v, dtype=float)
    if v.size != grid.N + 1:
        raise ValueError(f"expected {grid.N + 1} nodal values, got {v.size}")
    out = v.copy()
    out[1:-1] += (v[2:] - 2.0 * v[1:-1] + v[:-2]) / 12.0
    return out


@dataclass(frozen=True)
class SolutionHistory:
    """All computed layers; layers[j, i] = y_i^j.  The nonlocal time operator
    needs every previous layer, so nothing is discarded."""

    layers: np.ndarray
    grid: GridSpec
    alpha: AlphaParam


def _history_term(layers: np.ndarray, j: int, weights: np.ndarray) -> np.ndarray:
    """w_0 * y^j - sum_{s=0}^{j-1} w_{j-s} (y^{s+1} - y^s), rows 0..j of layers."""
    acc = weights[0] * layers[j]
    if j > 0:
        du = np.diff(layers[: j + 1], axis=0)
        acc = acc - np.tensordot(weights[1 : j + 1][::-1], du, axes=(0, 0))
    return acc


def _solve_order2_level(
    problem: DiffusionProblem, grid: GridSpec, t_new: float, coef: float, rhs_interior: np.ndarray
) -> np.ndarray:
    """Solve (coef * I - Lambda(t_new)) y = rhs on the interior, zero boundaries."""
    a_half = np.asarray(problem.k(grid.x_half_nodes(), t_new), dtype=float)
    d = np.asarray(problem.q(grid.x_nodes()[1:-1], t_new), dtype=float)
    h2 = grid.h * grid.h
    diag = coef + (a_half[1:] + a_half[:-1]) / h2 + d
    off = -a_half[1:-1] / h2
    sol = thomas_solve(TridiagonalSystem(lower=off, diag=diag, upper=off, rhs=rhs_interior))
    y = np.zeros(grid.N + 1)
    y[1:-1] = sol
    return y


def _scalar_coefficient(field, grid: GridSpec, t: float) -> float:
    vals = np.asarray(field(grid.x_half_nodes(), t), dtype=float)
    return float(vals.flat[0])


def _solve_compact_level(
    problem: DiffusionProblem, grid: GridSpec, t_new: float, coef: float, rhs_interior: np.ndarray
) -> np.ndarray:
    """Solve ((coef + d) H - a D2) y = rhs on the interior, zero boundaries.

    The averaging operator couples neighbours, so the implicit matrix mixes
    the H and second-difference stencils but stays tridiagonal (and with
    constant entries, since the compact scheme has k = k(t), q = q(t)).
    """
    a = _scalar_coefficient(problem.k, grid, t_new)
    d = _scalar_coefficient(problem.q, grid, t_new)
    h2 = grid.h * grid.h
    w = coef + d
    n = grid.N - 1
    diag = np.full(n, w * 10.0 / 12.0 + 2.0 * a / h2)
    off = np.full(n - 1, w / 12.0 - a / h2)
    sol = thomas_solve(TridiagonalSystem(lower=off, diag=diag, upper=off, rhs=rhs_interior))
    y = np.zeros(grid.N + 1)
    y[1:-1] = sol
    return y


def bootstrap_first_layer(
    problem: DiffusionProblem, grid: GridSpec, alpha: AlphaParam, scheme: SchemeKind = SchemeKind.ORDER2
) -> np.ndarray:
    """First layer y^1 by the implicit L1 scheme on a refined subgrid of [0, tau].

    The subgrid has M1 = ceil(tau^(-1/(2-alpha))) uniform substeps, i.e. a
    substep tau/M1 = O(tau^((3-alpha)/(2-alpha))), which lifts the L1
    order 2-alpha back to the 3-alpha accuracy the main scheme needs from
    its starting value.  Each substep solves the same spatial operator as
    the main scheme.
    """
    scheme = SchemeKind(scheme)
    tau = grid.tau
    m1 = max(1, math.ceil((1.0 / tau) ** (1.0 / (2.0 - alpha.alpha))))
    tau1 = tau / m1
    rho1 = tau1 ** (-alpha.alpha) / alpha.gamma_2ma
    x = grid.x_nodes()
    compact = scheme is SchemeKind.COMPACT4

    sub = np.zeros((m1 + 1, grid.N + 1))
    sub[0] = problem.u0(x)
    sub[0, 0] = 0.0
    sub[0, -1] = 0.0
    hist_layers = np.zeros_like(sub)
    hist_layers[0] = apply_compact_H(sub[0], grid) if compact else sub[0]

    a_l1 = a_coeff(np.arange(m1), alpha)
    for m in range(m1):
        t_new = (m + 1) * tau1
        hist = _history_term(hist_layers, m, a_l1)
        phi = np.asarray(problem.f(x, t_new), dtype=float)
        if compact:
            rhs = (apply_compact_H(phi, grid) + rho1 * hist)[1:-1]
            sub[m + 1] = _solve_compact_level(problem, grid, t_new, rho1, rhs)
            hist_layers[m + 1] = apply_compact_H(sub[m + 1], grid)
        else:
            rhs = phi[1:-1] + rho1 * hist[1:-1]
            sub[m + 1] = _solve_order2_level(problem, grid, t_new, rho1, rhs)
            hist_layers[m + 1] = sub[m + 1]
    return sub[m1]


def step_order2(
    history: SolutionHistory, j: int, problem: DiffusionProblem, grid: GridSpec
) -> np.ndarray:
    """Advance the second-order scheme from layers 0..j to layer j+1 (j >= 1)."""
    if j < 1:
        raise ValueError("the main scheme starts at j >= 1; layer 1 comes from the bootstrap")
    alpha = history.alpha
    rho = grid.tau ** (-alpha.alpha) / alpha.gamma_2ma
    c = c_weights(j, alpha).c
    hist = _history_term(history.layers, j, c)
    t_new = (j + 1) * grid.tau
    phi = np.asarray(problem.f(grid.x_nodes(), t_new), dtype=float)
    rhs = phi[1:-1] + rho * hist[1:-1]
    return _solve_order2_level(problem, grid, t_new, rho * c[0], rhs)


def step_compact(
    history: SolutionHistory, j: int, problem: DiffusionProblem, grid: GridSpec
) -> np.ndarray:
    """Advance the compact fourth-order scheme to layer j+1 (j >= 1).

    Rejects problems whose coefficients vary in x; the compact factorization
    only holds for k = k(t), q = q(t).
    """
    if problem.coefficients is not Coefficients.TIME_ONLY:
        raise ValueError("the compact scheme requires time-only coefficients k(t), q(t)")
    if j < 1:
        raise ValueError("the main scheme starts at j >= 1; layer 1 comes from the bootstrap")
    alpha = history.alpha
    rho = grid.tau ** (-alpha.alpha) / alpha.gamma_2ma
    c = c_weights(j, alpha).c
    hy = history.layers[: j + 1].copy()
    hy[:, 1:-1] += (history.layers[: j + 1, 2:] - 2.0 * history.layers[: j + 1, 1:-1]
                    + history.layers[: j + 1, :-2]) / 12.0
    hist = _history_term(hy, j, c)
    t_new = (j + 1) * grid.tau
    phi = np.asarray(problem.f(grid.x_nodes(), t_new), dtype=float)
    rhs = (apply_compact_H(phi, grid) + rho * hist)[1:-1]
    return _solve_compact_level(problem, grid, t_new, rho * c[0], rhs)


def solve(
    problem: DiffusionProblem,
    grid: GridSpec,
    alpha: AlphaParam,
    scheme: SchemeKind = SchemeKind.ORDER2,
) -> SolutionHistory:
    """Run a full solve: layer 0 from u0, layer 1 from the bootstrap, then steps."""
    scheme = SchemeKind(scheme)
    if scheme is SchemeKind.COMPACT4 and problem.coefficients is not Coefficients.TIME_ONLY:
        raise ValueError("the compact scheme requires time-only coefficients k(t), q(t)")
    problem.validate_on_grid(grid)
    layers = np.zeros((grid.M + 1, grid.N + 1))
    layers[0] = problem.u0(grid.x_nodes())
    layers[0, 0] = 0.0
    layers[0, -1] = 0.0
    layers[1] = bootstrap_first_layer(problem, grid, alpha, scheme)
    history = SolutionHistory(layers=layers, grid=grid, alpha=alpha)
    step = step_compact if scheme is SchemeKind.COMPACT4 else step_order2
    for j in range(1, grid.M):
        layers[j + 1] = step(history, j, problem, grid)
    return history
