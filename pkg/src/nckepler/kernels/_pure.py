"""Pure numpy backend for the hot kernels.

Same recurrences and the same loop nesting as the compiled backend, so
the two agree to rounding and each is deterministic run-to-run.
"""

import numpy as np

TWO_PI = 2.0 * np.pi


def jacobi_values(n, alpha, beta, x):
    """P_n^(alpha,beta) evaluated elementwise on an array."""
    x = np.asarray(x, dtype=float)
    prev = np.ones_like(x)
    if n == 0:
        return prev
    cur = (alpha + 1.0) + (alpha + beta + 2.0) * 0.5 * (x - 1.0)
    ab = alpha + beta
    for k in range(2, n + 1):
        c1 = 2.0 * k * (k + ab) * (2.0 * k + ab - 2.0)
        c2 = (2.0 * k + ab - 1.0) * (2.0 * k + ab) * (2.0 * k + ab - 2.0)
        c3 = (2.0 * k + ab - 1.0) * (alpha * alpha - beta * beta)
        c4 = 2.0 * (k + alpha - 1.0) * (k + beta - 1.0) * (2.0 * k + ab)
        prev, cur = cur, ((c2 * x + c3) * cur - c4 * prev) / c1
    return cur


def laguerre_values(n, alpha, u):
    """L_n^alpha evaluated elementwise on an array."""
    u = np.asarray(u, dtype=float)
    prev = np.ones_like(u)
    if n == 0:
        return prev
    cur = (1.0 + alpha) - u
    for k in range(1, n):
        prev, cur = cur, (((2.0 * k + 1.0 + alpha) - u) * cur - (k + alpha) * prev) / (k + 1.0)
    return cur


def gegenbauer2_values(n, x):
    """C_n^2 evaluated elementwise on an array."""
    x = np.asarray(x, dtype=float)
    prev = np.ones_like(x)
    if n == 0:
        return prev
    cur = 4.0 * x
    for k in range(2, n + 1):
        prev, cur = cur, (2.0 * (k + 1.0) * x * cur - (k + 2.0) * prev) / k
    return cur


def oscillatory_power_sum(c1, c2, c3, rho, s1, s2, s3, n):
    """Trapezoid sum of base^(-5/2 - i rho) times the channel phases.

    base = 1 - c1 cos(a1) - c2 cos(a2) - c3 cos(a3) over the n^3 grid
    a_j = 2 pi k / n; the phase factor is exp(-i (s1 a1 + s2 a2 + s3 a3)).
    Includes the (2 pi / n)^3 weight.  Raises ValueError when the base
    is not strictly positive somewhere on the grid.
    """
    if 1.0 - (abs(c1) + abs(c2) + abs(c3)) <= 0.0:
        raise ValueError("power-sum base not positive on the grid")
    ang = TWO_PI * np.arange(n) / n
    ca = np.cos(ang)
    e1 = np.exp(-1j * s1 * ang)
    e2 = np.exp(-1j * s2 * ang)
    e3 = np.exp(-1j * s3 * ang)
    expo = -2.5 - 1j * rho
    acc = 0.0 + 0.0j
    col = c2 * ca[:, None]
    row = c3 * ca[None, :]
    for i in range(n):
        base = (1.0 - c1 * ca[i]) - col - row
        acc += e1[i] * (e2 @ np.exp(expo * np.log(base)) @ e3)
    return acc * (TWO_PI / n) ** 3
