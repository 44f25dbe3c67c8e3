"""Adaptive integration engine for the slab-kernel computations.

A single embedded Gauss-Kronrod (7, 15) rule drives every integral in the
package: semi-infinite integrals with exponential or power-law tails, finite
integrals with inverse-square-root endpoint singularities, and the split
Lorentzian frequency transform.

The engine evaluates integrands on batched node arrays (one call per panel
generation), supports vector-valued integrands (shape ``(n_nodes, m)``) so a
family of integrals sharing one variable can be refined together, and is
strictly deterministic: identical inputs produce bitwise-identical results.
"""
from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

__all__ = [
    "QuadratureSpec",
    "QuadratureResult",
    "NonConvergenceError",
    "integrate_adaptive",
    "modular_split",
]

# 15-point Kronrod nodes on [-1, 1] (ascending) with the embedded 7-point
# Gauss rule on the odd-index nodes.
_HALF_NODES = np.array([
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898,
])
_HALF_WGK = np.array([
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298,
])
_XGK = np.concatenate([-_HALF_NODES, [0.0], _HALF_NODES[::-1]])
_WGK = np.concatenate([_HALF_WGK, [0.209482141084728], _HALF_WGK[::-1]])
_WG = np.zeros(15)
_WG[1] = _WG[13] = 0.129484966168870
_WG[3] = _WG[11] = 0.279705391489277
_WG[5] = _WG[9] = 0.381830050505119
_WG[7] = 0.417959183673469


class NonConvergenceError(RuntimeError):
    """Raised when a caller escalates a non-converged quadrature result."""


@dataclass(frozen=True)
class QuadratureSpec:
    """Tolerances and policies for the adaptive engine.

    tail_policy selects how semi-infinite upper limits are truncated:
    ``"exponential-bound"`` probes the integrand at doubling points and bounds
    the tail by the product of the last sample and the fitted decay length;
    ``"power-bound"`` bounds the tail by a C/x^2 majorant (C supplied via
    ``tail_coefficient`` or estimated from probes).

    epsilon_split is the split point of the Lorentzian frequency transform
    (see :func:`modular_split`); results must not depend on it.
    """

    rel_tol: float = 1e-9
    abs_tol: float = 1e-12
    max_subdivisions: int = 2000
    tail_policy: str = "exponential-bound"
    epsilon_split: float = 1.0
    tail_coefficient: float | None = None

    def __post_init__(self) -> None:
        if not (self.rel_tol > 0.0 and self.abs_tol > 0.0):
            raise ValueError("tolerances must be positive")
        if self.max_subdivisions < 10:
            raise ValueError("max_subdivisions must be >= 10")
        if self.tail_policy not in ("exponential-bound", "power-bound"):
            raise ValueError(f"unknown tail_policy {self.tail_policy!r}")
        if not self.epsilon_split > 0.0:
            raise ValueError("epsilon_split must be positive")


@dataclass(frozen=True)
class QuadratureResult:
    """Outcome of one adaptive integration.

    ``value`` and ``error_estimate`` are floats for scalar integrands and
    arrays for vector-valued integrands.
    """

    value: float | np.ndarray
    error_estimate: float | np.ndarray
    evaluations: int
    converged: bool


def _as_batch(f: Callable, xs: np.ndarray) -> np.ndarray:
    """Evaluate ``f`` on a 1-D node array, returning (n,) or (n, m)."""
    out = np.asarray(f(xs), dtype=float)
    if out.shape[: 1] != xs.shape:
        raise ValueError(
            f"integrand returned shape {out.shape} for input shape {xs.shape}; "
            "it must be vectorized over its first axis"
        )
    return out


def _panel_eval(f: Callable, edges: np.ndarray) -> tuple[np.ndarray, np.ndarray, int]:
    """Evaluate the (7, 15) pair on each [edges[i], edges[i+1]] panel.

    Returns (K15 per panel, per-panel error, evaluation count); K15 has shape
    ``(n_panels,)`` or ``(n_panels, m)``.
    """
    centers = 0.5 * (edges[:-1] + edges[1:])
    halfw = 0.5 * (edges[1:] - edges[:-1])
    xs = (centers[:, None] + halfw[:, None] * _XGK[None, :]).ravel()
    fv = _as_batch(f, xs)
    fv = fv.reshape((len(centers), 15) + fv.shape[1:])
    if fv.ndim == 2:
        k15 = halfw * (fv @ _WGK)
        g7 = halfw * (fv @ _WG)
    else:
        k15 = halfw[:, None] * np.einsum("pnm,n->pm", fv, _WGK)
        g7 = halfw[:, None] * np.einsum("pnm,n->pm", fv, _WG)
    err = np.abs(k15 - g7)
    return k15, err, xs.size


def _tail_truncation(
    f: Callable, a: float, spec: QuadratureSpec
) -> tuple[float, float, bool, int]:
    """Choose a finite truncation point for an infinite upper limit.

    Returns (T, tail_bound, ok, evaluations).
    """
    target = spec.abs_tol / 10.0
    T = max(1.0, 2.0 * abs(a) + 1.0)
    evals = 0
    fT = float(np.max(np.abs(_as_batch(f, np.array([T])))))
    evals += 1
    for _ in range(64):
        T2 = 2.0 * T
        fT2 = float(np.max(np.abs(_as_batch(f, np.array([T2])))))
        evals += 1
        if spec.tail_policy == "exponential-bound":
            if fT2 == 0.0:
                return T2, 0.0, True, evals
            if 0.0 < fT2 < fT:
                decay_length = (T2 - T) / math.log(fT / fT2)
                bound = fT2 * decay_length
                if bound < target:
                    return T2, bound, True, evals
        else:  # power-bound: C/x^2 majorant => tail <= C/T
            C = spec.tail_coefficient
            if C is None:
                C = fT2 * T2 * T2
            bound = C / T2
            if bound < target:
                return T2, bound, True, evals
        T, fT = T2, fT2
    return T, fT * T, False, evals


def _geometric_edges(a: float, b: float, first: float) -> list[float]:
    """Panel edges [a, ..., b] doubling in width from ``first``."""
    edges = [a]
    step = first
    while edges[-1] + step < b:
        edges.append(edges[-1] + step)
        step *= 2.0
    edges.append(b)
    return edges


def integrate_adaptive(
    f: Callable[[np.ndarray], np.ndarray],
    a: float,
    b: float,
    spec: QuadratureSpec | None = None,
    singular_endpoints: tuple[bool, bool] = (False, False),
    breakpoints: Sequence[float] | None = None,
) -> QuadratureResult:
    """Adaptively integrate ``f`` over [a, b] (b may be ``math.inf``).

    ``f`` must accept a 1-D array of abscissae and return either a matching
    1-D array or an ``(n, m)`` array of m simultaneous integrands sharing the
    variable; in the latter case all components are refined together and the
    result fields are length-m arrays.

    Endpoints flagged in ``singular_endpoints`` may carry an integrable
    inverse-square-root divergence; they are removed exactly by the
    substitution t = s**2 before any subdivision.  ``breakpoints`` seeds the
    initial panel edges (useful for known scale changes).
    """
    spec = spec or QuadratureSpec()
    left_sing, right_sing = singular_endpoints
    tail_bound = 0.0
    tail_ok = True
    pre_evals = 0

    if math.isinf(b):
        if right_sing:
            raise ValueError("cannot flag a singular endpoint at infinity")
        T, tail_bound, tail_ok, pre_evals = _tail_truncation(f, a, spec)
        inner_breaks = [p for p in (breakpoints or []) if a < p < T]
        tail_edges = [e for e in _geometric_edges(a, T, max(1.0, abs(a)))
                      if e > (inner_breaks[-1] if inner_breaks else a)]
        res = integrate_adaptive(
            f, a, T, spec,
            singular_endpoints=(left_sing, False),
            breakpoints=inner_breaks + tail_edges[:-1],
        )
        err = res.error_estimate + tail_bound
        return QuadratureResult(res.value, err, res.evaluations + pre_evals,
                                res.converged and tail_ok)

    if left_sing and right_sing:
        mid = 0.5 * (a + b)
        r1 = integrate_adaptive(f, a, mid, spec, (True, False), breakpoints)
        r2 = integrate_adaptive(f, mid, b, spec, (False, True), breakpoints)
        return QuadratureResult(
            r1.value + r2.value,
            r1.error_estimate + r2.error_estimate,
            r1.evaluations + r2.evaluations,
            r1.converged and r2.converged,
        )
    if left_sing:
        span = b - a

        def g(s: np.ndarray) -> np.ndarray:
            vals = _as_batch(f, a + s * s)
            w = 2.0 * s
            return vals * (w if vals.ndim == 1 else w[:, None])

        mapped = sorted({math.sqrt(p - a) for p in (breakpoints or []) if a < p < b})
        return integrate_adaptive(g, 0.0, math.sqrt(span), spec, (False, False), mapped)
    if right_sing:
        span = b - a

        def g(s: np.ndarray) -> np.ndarray:
            vals = _as_batch(f, b - s * s)
            w = 2.0 * s
            return vals * (w if vals.ndim == 1 else w[:, None])

        mapped = sorted({math.sqrt(b - p) for p in (breakpoints or []) if a < p < b})
        return integrate_adaptive(g, 0.0, math.sqrt(span), spec, (False, False), mapped)

    edges = [a] + sorted({p for p in (breakpoints or []) if a < p < b}) + [b]
    k15, errs, evals = _panel_eval(f, np.asarray(edges, dtype=float))

    # Panel store: index -> (lo, hi, value, error); heap orders by worst error.
    panels: dict[int, tuple[float, float, np.ndarray, np.ndarray]] = {}
    heap: list[tuple[float, int]] = []
    counter = 0
    for i in range(len(edges) - 1):
        panels[counter] = (edges[i], edges[i + 1], k15[i], errs[i])
        heapq.heappush(heap, (-float(np.max(errs[i])), counter))
        counter += 1

    def totals() -> tuple[np.ndarray, np.ndarray]:
        order = sorted(panels, key=lambda i: panels[i][0])
        val = sum(panels[i][2] for i in order)
        err = sum(panels[i][3] for i in order)
        return np.asarray(val, dtype=float), np.asarray(err, dtype=float)

    def converged_now(val: np.ndarray, err: np.ndarray) -> bool:
        tol = np.maximum(spec.rel_tol * np.abs(val), spec.abs_tol)
        return bool(np.all(err <= tol))

    subdivisions = 0
    val, err = totals()
    while not converged_now(val, err) and subdivisions < spec.max_subdivisions:
        worst = None
        while heap:
            _, idx = heapq.heappop(heap)
            if idx in panels:
                worst = idx
                break
        if worst is None:
            break
        lo, hi, kv, ev = panels.pop(worst)
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:  # interval at floating-point resolution
            panels[worst] = (lo, hi, kv, ev)
            break
        child_k, child_e, n = _panel_eval(f, np.array([lo, mid, hi]))
        evals += n
        for j in range(2):
            panels[counter] = ((lo, mid)[j], (mid, hi)[j], child_k[j], child_e[j])
            heapq.heappush(heap, (-float(np.max(child_e[j])), counter))
            counter += 1
        subdivisions += 1
        val, err = totals()

    ok = converged_now(val, err)
    if val.ndim == 0:
        return QuadratureResult(float(val), float(err), evals + pre_evals, ok)
    return QuadratureResult(val, err, evals + pre_evals, ok)


def modular_split(
    F: Callable[[np.ndarray], np.ndarray],
    omega: float,
    epsilon_split: float | None = None,
    spec: QuadratureSpec | None = None,
) -> float | np.ndarray:
    """Lorentzian frequency transform (omega/pi) * int_0^inf F(w)/(omega^2+w^2) dw.

    Evaluated in the split form
    (1/pi) [ int_0^eps F(omega*t)/(1+t^2) dt + int_0^{1/eps} F(omega/t)/(1+t^2) dt ],
    whose value is independent of the split point ``eps``.  ``F`` may be
    vector-valued; the result is then an array.

    Raises
    ------
    NonConvergenceError
        If either part fails to converge within the spec budget.
    """
    if not omega > 0.0:
        raise ValueError(f"omega must be > 0, got {omega}")
    spec = spec or QuadratureSpec()
    eps = spec.epsilon_split if epsilon_split is None else float(epsilon_split)
    if not eps > 0.0:
        raise ValueError("epsilon_split must be positive")

    def low(t: np.ndarray) -> np.ndarray:
        vals = _as_batch(F, omega * t)
        w = 1.0 / (1.0 + t * t)
        return vals * (w if vals.ndim == 1 else w[:, None])

    def high(t: np.ndarray) -> np.ndarray:
        vals = _as_batch(F, omega / t)
        w = 1.0 / (1.0 + t * t)
        return vals * (w if vals.ndim == 1 else w[:, None])

    r1 = integrate_adaptive(low, 0.0, eps, spec)
    r2 = integrate_adaptive(high, 0.0, 1.0 / eps, spec)
    if not (r1.converged and r2.converged):
        achieved = np.max(r1.error_estimate + r2.error_estimate)
        raise NonConvergenceError(
            f"Lorentzian transform did not converge (error estimate {achieved:.3e})"
        )
    return (r1.value + r2.value) / math.pi
