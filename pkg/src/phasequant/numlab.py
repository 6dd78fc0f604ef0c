"""Floating-point experiments: Wigner functions, spin quasi-probabilities,
a sphere residue integral, and an exact-winding loop integral.

All quadrature is Gauss-Legendre on truncated domains; the truncation radii
are chosen so the Gaussian tails are far below the requested tolerances.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence, Tuple

import numpy as np
from numpy.polynomial.hermite import hermval
from numpy.polynomial.legendre import leggauss

MAX_HERMITE = 20


def hermite_wavefunction(n: int, hbar: float = 1.0) -> Callable[[np.ndarray], np.ndarray]:
    """Normalized harmonic oscillator eigenfunction psi_n for m = omega = 1.

    psi_n(x) = (pi*hbar)^(-1/4) (2^n n!)^(-1/2) H_n(x/sqrt(hbar)) e^(-x^2/(2 hbar)).
    """
    if not 0 <= n <= MAX_HERMITE:
        raise ValueError(f"n must be between 0 and {MAX_HERMITE}")
    if hbar <= 0:
        raise ValueError("hbar must be positive")
    norm = (math.pi * hbar) ** -0.25 / math.sqrt(2.0**n * math.factorial(n))
    coeffs = np.zeros(n + 1)
    coeffs[n] = 1.0

    def psi(x):
        x = np.asarray(x, dtype=np.float64)
        u = x / math.sqrt(hbar)
        return norm * hermval(u, coeffs) * np.exp(-0.5 * u * u)

    return psi


def wigner_transform(
    psi: Callable[[np.ndarray], np.ndarray],
    x: np.ndarray,
    p: np.ndarray,
    hbar: float = 1.0,
    half_width: float = 10.0,
    order: int = 200,
) -> np.ndarray:
    """Wigner function F(x, p) = (1/pi hbar) int psi*(x+y) psi(x-y) e^{2ipy/hbar} dy.

    ``x`` and ``p`` are broadcast against each other; real wavefunctions are
    assumed real-valued but complex ones are handled too.  The y-integral runs
    over [-half_width, half_width] with an ``order``-point Gauss-Legendre rule.
    """
    x = np.asarray(x, dtype=np.float64)
    p = np.asarray(p, dtype=np.float64)
    nodes, weights = leggauss(order)
    y = nodes * half_width
    w = weights * half_width
    xs = x[..., None]
    ps = p[..., None]
    integrand = np.conj(psi(xs + y)) * psi(xs - y) * np.exp(2j * ps * y / hbar)
    return np.real(np.sum(integrand * w, axis=-1)) / (math.pi * hbar)


def wigner_grid(
    psi, xs: np.ndarray, ps: np.ndarray, hbar: float = 1.0, **kw
) -> np.ndarray:
    """F on the outer grid of 1-d arrays xs, ps; shape (len(xs), len(ps))."""
    X, P = np.meshgrid(np.asarray(xs), np.asarray(ps), indexing="ij")
    return wigner_transform(psi, X, P, hbar=hbar, **kw)


def marginal_check(
    psi, hbar: float = 1.0, half_width: float = 8.0, order: int = 240
) -> Tuple[float, float]:
    """Max defects of the two Wigner marginals against |psi|^2 and total mass 1.

    Returns (position_marginal_defect, normalization_defect): integrating F
    over p should recover |psi(x)|^2, and over both variables should give 1.
    """
    nodes, weights = leggauss(order)
    xs = nodes * half_width
    wx = weights * half_width
    F = wigner_grid(psi, xs, xs, hbar=hbar, half_width=half_width, order=order)
    marg = F @ wx
    target = np.abs(psi(xs)) ** 2
    pos_defect = float(np.max(np.abs(marg - target)))
    total = float(wx @ marg)
    return pos_defect, abs(total - 1.0)


def wigner_origin_values(hbar: float = 1.0) -> Tuple[float, float]:
    """Exact central values (F_0(0,0), F_1(0,0)) = (1, -1)/(pi hbar)."""
    return 1.0 / (math.pi * hbar), -1.0 / (math.pi * hbar)


# ---------------------------------------------------------------------------
# Spin-1/2 coherent-state quasi-probability


def bloch_state(theta: float, phi: float) -> np.ndarray:
    """Spin coherent state (cos(theta/2), e^{i phi} sin(theta/2))."""
    return np.array(
        [math.cos(theta / 2.0), math.sin(theta / 2.0) * np.exp(1j * phi)],
        dtype=np.complex128,
    )


def stora_distribution(rho: np.ndarray, alpha: np.ndarray, beta: np.ndarray) -> float:
    """F(alpha, beta) = Re(<alpha|beta><beta|rho|alpha>).

    Summing over an orthonormal beta-basis gives the diagonal expectation
    <alpha|rho|alpha>, so rows sum to genuine (nonnegative) probabilities,
    while individual entries can be negative.
    """
    rho = np.asarray(rho, dtype=np.complex128)
    overlap = np.vdot(alpha, beta)
    matrix_el = np.vdot(beta, rho @ alpha)
    return float(np.real(overlap * matrix_el))


def stora_table(rho: np.ndarray, alphas: Sequence[np.ndarray], betas: Sequence[np.ndarray]) -> np.ndarray:
    return np.array(
        [[stora_distribution(rho, a, b) for b in betas] for a in alphas]
    )


@dataclass(frozen=True)
class StoraScan:
    min_value: float
    theta: float
    phi: float
    row_sum_defect: float


def stora_negativity_scan(
    rho: np.ndarray, n_theta: int = 60, n_phi: int = 60
) -> StoraScan:
    """Grid scan over Bloch angles for the most negative F(alpha, beta).

    beta runs over the computational basis (an orthonormal pair), alpha over
    the (theta, phi) grid; the row-sum defect |sum_b F - <alpha|rho|alpha>|
    is tracked as an exactness witness.
    """
    rho = np.asarray(rho, dtype=np.complex128)
    betas = [np.array([1.0, 0.0], dtype=np.complex128),
             np.array([0.0, 1.0], dtype=np.complex128)]
    best = math.inf
    best_angles = (0.0, 0.0)
    worst_defect = 0.0
    for theta in np.linspace(0.0, math.pi, n_theta):
        for phi in np.linspace(0.0, 2.0 * math.pi, n_phi, endpoint=False):
            alpha = bloch_state(theta, phi)
            vals = [stora_distribution(rho, alpha, b) for b in betas]
            row = sum(vals)
            expect = float(np.real(np.vdot(alpha, rho @ alpha)))
            worst_defect = max(worst_defect, abs(row - expect))
            m = min(vals)
            if m < best:
                best, best_angles = m, (float(theta), float(phi))
    return StoraScan(best, best_angles[0], best_angles[1], worst_defect)


# ---------------------------------------------------------------------------
# Sphere residue integral


def sphere_residue_integral(
    n_level: float,
    hbar: float = 1.0,
    n_theta: int = 64,
    n_phi: int = 64,
    halved: bool = False,
) -> float:
    """Integral of the residue 2-form over the sphere |xi|^2 = 2*hbar*N.

    In spherical coordinates the form restricts to hbar*N sin(theta)
    dtheta^dphi (or half that with ``halved=True``, the convention in which
    the xi_3 > 0 and xi_3 < 0 charts are averaged rather than summed); the
    result is normalized by 4*pi*hbar so the full-sphere value is N.
    """
    t_nodes, t_weights = leggauss(n_theta)
    theta = 0.5 * math.pi * (t_nodes + 1.0)
    tw = t_weights * 0.5 * math.pi
    phi_weight = 2.0 * math.pi / n_phi  # exact for periodic smooth integrands
    density = hbar * n_level * np.sin(theta)
    if halved:
        density = 0.5 * density
    total = float(np.sum(density * tw)) * n_phi * phi_weight
    return total / (4.0 * math.pi * hbar)


def sphere_residue_convergence(
    n_level: float, hbar: float = 1.0, doublings: int = 4
) -> list:
    """Values at resolutions (16, 32, 64, ...) doubled ``doublings`` times."""
    out = []
    res = 16
    for _ in range(doublings):
        out.append(sphere_residue_integral(n_level, hbar, res, res))
        res *= 2
    return out


# ---------------------------------------------------------------------------
# Loop integral of the angular form eta_1 = (x dy - y dx) / (x^2 + y^2)


def loop_integral_eta1(
    vertices: Sequence[Tuple[float, float]], margin: float = 1e-9
) -> float:
    """Exact line integral of (x dy - y dx)/(x^2+y^2) around a closed polyline.

    Each straight segment contributes its signed subtended angle at the
    origin (atan2 of cross and dot products), so the result is exactly
    2*pi times the winding number up to roundoff.  Raises if any segment
    passes within ``margin`` of the origin.
    """
    pts = [np.asarray(v, dtype=np.float64) for v in vertices]
    if len(pts) < 3:
        raise ValueError("need at least three vertices")
    if not np.allclose(pts[0], pts[-1]):
        pts = pts + [pts[0]]
    total = 0.0
    for a, b in zip(pts[:-1], pts[1:]):
        if _segment_origin_distance(a, b) < margin:
            raise ValueError("segment passes too close to the origin")
        cross = a[0] * b[1] - a[1] * b[0]
        dot = a[0] * b[0] + a[1] * b[1]
        total += math.atan2(cross, dot)
    return total


def _segment_origin_distance(a: np.ndarray, b: np.ndarray) -> float:
    d = b - a
    dd = float(d @ d)
    if dd == 0.0:
        return float(np.hypot(*a))
    t = float(np.clip(-(a @ d) / dd, 0.0, 1.0))
    closest = a + t * d
    return float(np.hypot(*closest))


def winding_number(vertices: Sequence[Tuple[float, float]], margin: float = 1e-9) -> int:
    return round(loop_integral_eta1(vertices, margin=margin) / (2.0 * math.pi))


def regular_polygon(
    n_sides: int, radius: float = 1.0, center: Tuple[float, float] = (0.0, 0.0), turns: int = 1
) -> list:
    """Vertex list of a regular polygon traversed ``turns`` times (sign = orientation)."""
    cx, cy = center
    total = n_sides * abs(turns)
    sign = 1.0 if turns >= 0 else -1.0
    return [
        (
            cx + radius * math.cos(sign * 2.0 * math.pi * k / n_sides),
            cy + radius * math.sin(sign * 2.0 * math.pi * k / n_sides),
        )
        for k in range(total)
    ]
