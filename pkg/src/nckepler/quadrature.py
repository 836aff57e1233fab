"""Gaussian quadrature rules and a regularized endpoint integrator.

Two rule families are built from scratch:

* ``finite_legendre`` -- Gauss-Legendre on (-1, 1), unit weight.
* ``halfline_laguerre`` -- Gauss-Laguerre on (0, inf) against e^(-u);
  the weights integrate f against e^(-u), so sum(weights) = 1.

Nodes are found by Newton iteration on the three-term recurrences.
Legendre starts from the classical cosine guesses; Laguerre is seeded
from the eigenvalues of its symmetric Jacobi matrix (Golub-Welsch),
which stays well separated up to the order cap.  The Laguerre Newton
step runs on the exponentially scaled polynomials L_k(x) e^(-x/2) so
nothing overflows at large nodes; beyond order ~185 the most extreme
weights underflow double precision (they are dropped as exact zeros,
which is below any tolerance used here).

``integrate_endpoint_regularized`` evaluates

    I(g) = integral_{-1}^{1} g(x) (1 - x)^(-1 - i rho) dx

in the analytic-continuation sense: the smooth part g - g(1) is
integrated on panels graded geometrically into the endpoint, and the
subtracted constant contributes the closed form g(1) 2^(-i rho)/(-i rho)
obtained by continuing integral (1-x)^(s-1) dx = 2^s / s to s = -i rho.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import CapacityError, DomainError, EvaluationError

__all__ = [
    "QuadratureRule",
    "build_rule",
    "integrate_nd",
    "integrate_endpoint_regularized",
]

FAMILIES = ("finite_legendre", "halfline_laguerre")
DEFAULT_MAX_ORDER = 512


@dataclass(frozen=True)
class QuadratureRule:
    """Nodes and weights of a Gauss rule; arrays are read-only."""

    family: str
    order: int
    nodes: np.ndarray
    weights: np.ndarray


_rule_cache = {}


def _legendre_value_and_derivative(n, x):
    """(P_n(x), P_n'(x)) on an array, by recurrence."""
    p_prev = np.ones_like(x)
    p = x.copy()
    for k in range(2, n + 1):
        p_prev, p = p, ((2.0 * k - 1.0) * x * p - (k - 1.0) * p_prev) / k
    dp = n * (x * p - p_prev) / (x * x - 1.0)
    return p, dp


def _legendre_rule(n):
    # classical cosine initial guesses, Newton in extended precision so
    # the double-rounded nodes are correct to the last ulp
    if n == 1:
        return np.array([0.0]), np.array([2.0])
    k = np.arange(1, n + 1)
    x = np.cos(np.pi * (k - 0.25) / (n + 0.5)).astype(np.longdouble)
    err = np.inf
    for _ in range(60):
        p, dp = _legendre_value_and_derivative(n, x)
        dx = p / dp
        x -= dx
        prev_err, err = err, float(np.max(np.abs(dx)))
        if err < 1e-18 or err >= prev_err:
            break
    p, dp = _legendre_value_and_derivative(n, x)
    w = 2.0 / ((1.0 - x * x) * dp * dp)
    return x[::-1].astype(float), w[::-1].astype(float)


def _laguerre_scaled(n, x):
    """(L_n(x) e^(-x/2), L_n'(x) e^(-x/2)) on an array.

    The scaled values obey the same recurrence (it is linear), and stay
    of polynomial size inside the oscillatory region, so no overflow.
    """
    s = np.exp(-0.5 * x)
    p_prev = s.copy()
    p = (1.0 - x) * s
    for k in range(1, n):
        p_prev, p = p, ((2.0 * k + 1.0 - x) * p - k * p_prev) / (k + 1.0)
    # L_n' = n (L_n - L_{n-1}) / x
    dp = n * (p - p_prev) / x
    return p, dp, p_prev


def _laguerre_rule(n):
    if n == 1:
        return np.array([1.0]), np.array([1.0])
    # Golub-Welsch seed: symmetric tridiagonal with diag 2k+1, offdiag k;
    # Newton then polishes in extended precision
    diag = 2.0 * np.arange(n) + 1.0
    off = np.arange(1.0, n)
    jac = np.diag(diag) + np.diag(off, 1) + np.diag(off, -1)
    x = np.linalg.eigvalsh(jac).astype(np.longdouble)
    err = np.inf
    for _ in range(60):
        p, dp, _ = _laguerre_scaled(n, x)
        dx = p / dp
        x -= dx
        prev_err, err = err, float(np.max(np.abs(dx / x)))
        if err < 1e-18 or err >= prev_err:
            break
    # w_i = x_i / ((n+1)^2 L_{n+1}(x_i)^2); with the scaled values
    # L~ = L e^(-x/2) this is x e^(-x) / ((n+1)^2 L~^2), which underflows
    # gracefully for the extreme nodes of very large rules
    pn1 = _laguerre_scaled(n + 1, x)[0]
    w = x * np.exp(-x) / ((n + 1.0) ** 2 * pn1 * pn1)
    return x.astype(float), w.astype(float)


def build_rule(family: str, order: int, max_order: int = DEFAULT_MAX_ORDER) -> QuadratureRule:
    """Construct (and cache) a Gauss rule of the given family and order."""
    if family not in FAMILIES:
        raise DomainError(f"unknown quadrature family {family!r}; choose from {FAMILIES}")
    if not isinstance(order, int) or order < 1:
        raise DomainError(f"order must be a positive integer, got {order!r}")
    if order > max_order:
        raise CapacityError(f"order {order} exceeds cap {max_order}")
    key = (family, order)
    rule = _rule_cache.get(key)
    if rule is not None:
        return rule
    if family == "finite_legendre":
        x, w = _legendre_rule(order)
    else:
        x, w = _laguerre_rule(order)
    x.setflags(write=False)
    w.setflags(write=False)
    rule = QuadratureRule(family=family, order=order, nodes=x, weights=w)
    _rule_cache[key] = rule
    return rule


def _mapped_axis(rule, interval):
    """Nodes/weights of a rule mapped onto one axis interval."""
    if rule.family == "finite_legendre":
        if interval is None:
            raise DomainError("finite_legendre axis needs a finite interval")
        a, b = float(interval[0]), float(interval[1])
        if not (math.isfinite(a) and math.isfinite(b) and b > a):
            raise DomainError(f"bad finite interval {interval!r}")
        half = 0.5 * (b - a)
        return half * rule.nodes + 0.5 * (a + b), half * rule.weights
    # half-line rule: used as-is; interval, when given, must be (0, inf)
    if interval is not None:
        a, b = interval
        if a != 0.0 or not (b is None or math.isinf(b)):
            raise DomainError("halfline_laguerre axis interval must be (0, inf)")
    return rule.nodes, rule.weights


def integrate_nd(f, rules, box):
    """Tensor-product quadrature of f over a box.

    ``f`` is called with one positional float per axis; finite axes are
    affine-mapped onto their interval, half-line axes integrate against
    the e^(-u) weight.  Nodes are visited in ascending nested order and
    summed pairwise (np.sum), so the result is deterministic.  A
    non-finite integrand value raises EvaluationError carrying the node.
    """
    if len(rules) != len(box):
        raise DomainError("rules and box must have one entry per axis")
    axes = [_mapped_axis(rule, interval) for rule, interval in zip(rules, box)]
    shape = tuple(len(x) for x, _ in axes)
    vals = np.empty(shape, dtype=complex)
    for idx in np.ndindex(shape):
        point = tuple(axes[d][0][i] for d, i in enumerate(idx))
        v = f(*point)
        if not (math.isfinite(v.real if isinstance(v, complex) else v)
                and math.isfinite(v.imag if isinstance(v, complex) else 0.0)):
            raise EvaluationError(f"integrand non-finite at node {point}", node=point)
        vals[idx] = v
    for d in range(len(axes) - 1, -1, -1):
        w = axes[d][1]
        vals = np.sum(vals * w, axis=d) if vals.ndim > 1 else np.sum(vals * w)
    out = complex(vals)
    return out


# graded-panel parameters for the regularized endpoint integral: panels
# [1 - 2^-k, 1 - 2^-(k+1)] resolve the bounded oscillation of
# (1-x)^(-i rho) uniformly in log(1-x); the dropped sliver beyond
# 2^-_PANEL_DEPTH contributes O(|g'| 2^-depth).
_PANEL_DEPTH = 46
_PANEL_ORDER = 24


def integrate_endpoint_regularized(g, rho: float, panel_order: int = _PANEL_ORDER,
                                   depth: int = _PANEL_DEPTH) -> complex:
    """Regularized integral of g(x) (1-x)^(-1-i rho) over (-1, 1).

    Returns the analytic continuation
        integral [g(x) - g(1)] (1-x)^(-1-i rho) dx  +  g(1) 2^(-i rho)/(-i rho)
    for rho != 0; g must be continuously differentiable near x = 1 and
    accept numpy arrays of abscissas.
    """
    if rho == 0.0:
        raise DomainError("rho = 0 is a pole of the analytic continuation")
    rule = build_rule("finite_legendre", panel_order)
    g1 = complex(np.asarray(g(np.ones(1)), dtype=complex).reshape(-1)[0])
    edges = [-1.0]
    t = 2.0
    for _ in range(depth):
        t *= 0.5
        edges.append(1.0 - t)
    expo = -1.0 - 1j * rho
    total = 0.0 + 0.0j
    for a, b in zip(edges[:-1], edges[1:]):
        half = 0.5 * (b - a)
        xs = half * rule.nodes + 0.5 * (a + b)
        ws = half * rule.weights
        vals = (np.asarray(g(xs), dtype=complex) - g1) * np.exp(expo * np.log1p(-xs))
        if not np.all(np.isfinite(vals)):
            bad = xs[~np.isfinite(vals)][0]
            raise EvaluationError(f"integrand non-finite at node {bad}", node=bad)
        total += np.sum(vals * ws)
    return total + g1 * 2.0 ** (-1j * rho) / (-1j * rho)
