"""Catalog of coefficient-positive kernels for the starlike/convex classes.

Each kernel is an analytic map phi of the unit disk with phi(0) = 1 whose
Taylor coefficients B_n drive the extremal-function machinery. The catalog
stores, per kernel: the closed coefficient rule, a closed-form evaluator of
phi on (-1, 1), parameter validation, and (where one exists) closed forms for
the extremal value h(r) and the boundary value h(-1). Closed forms are the
cross-check path for the generic series constructions, never the only path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Mapping

import numpy as np

from .errors import DomainError, ParamOutOfRange
from .quadrature import adaptive_simpson
from .series import TruncatedSeries

KERNEL_NAMES = ("halfplane", "janowski", "exponential", "cardioid",
                "rational", "booth", "lens", "ucv")

# Order used when certifying coefficient nonnegativity.
CERTIFY_ORDER = 1024

RATIONAL_K = 1.0 + math.sqrt(2.0)
LENS_S_MAX = 1.0 / math.sqrt(2.0)


@dataclass(frozen=True)
class PhiSpec:
    """An immutable, hashable handle on a catalog kernel plus parameters."""

    name: str
    params: tuple[tuple[str, float], ...] = ()

    def param(self, key: str) -> float:
        for k, v in self.params:
            if k == key:
                return v
        raise KeyError(key)

    @property
    def params_dict(self) -> dict[str, float]:
        return dict(self.params)

    @property
    def positivity_certified(self) -> bool:
        """True when no coefficient up to CERTIFY_ORDER is negative (and the
        leading one is strictly positive). Cached; PhiSpec stays immutable."""
        return validate_positivity(self, CERTIFY_ORDER)

    def label(self) -> str:
        if not self.params:
            return self.name
        inner = ";".join(f"{k}={v:g}" for k, v in self.params)
        return f"{self.name}({inner})"


@dataclass(frozen=True)
class _KernelDef:
    defaults: Mapping[str, float]
    validate: Callable[[Mapping[str, float]], None]
    coeffs: Callable[[Mapping[str, float], int], np.ndarray]  # B_1..B_order
    phi: Callable[[Mapping[str, float], float], float]        # on [-1, 1)
    closed_h: Callable[[Mapping[str, float], float], float] | None = None
    closed_h_minus1: Callable[[Mapping[str, float]], float] | None = None


def _no_params(params: Mapping[str, float]) -> None:
    pass


# ---------------------------------------------------------------------------
# half-plane kernel (1+z)/(1-z): B_n = 2
# ---------------------------------------------------------------------------

def _halfplane_coeffs(_p, order):
    return np.full(order, 2.0)


def _halfplane_phi(_p, x):
    return (1.0 + x) / (1.0 - x)


def _halfplane_h(_p, r):
    return r / (1.0 - r) ** 2


# ---------------------------------------------------------------------------
# Janowski kernel (1+Az)/(1+Bz): B_1 = A-B, B_n = (A-B)(-B)^(n-1)
# ---------------------------------------------------------------------------

def _janowski_validate(p):
    a, b = p["A"], p["B"]
    if not (-1.0 <= b < a <= 1.0):
        raise ParamOutOfRange(
            f"janowski requires -1 <= B < A <= 1, got A={a!r}, B={b!r}")


def _janowski_coeffs(p, order):
    a, b = p["A"], p["B"]
    return (a - b) * (-b) ** np.arange(order, dtype=float)


def _janowski_phi(p, x):
    a, b = p["A"], p["B"]
    return (1.0 + a * x) / (1.0 + b * x)


def _janowski_h(p, r):
    a, b = p["A"], p["B"]
    if b == 0.0:
        # removable singularity in the exponent (A-B)/B as B -> 0
        return r * math.exp(a * r)
    return r * (1.0 + b * r) ** ((a - b) / b)


def _janowski_h_minus1(p):
    a, b = p["A"], p["B"]
    if b == 0.0:
        return -math.exp(-a)
    return -((1.0 - b) ** ((a - b) / b))


# ---------------------------------------------------------------------------
# exponential kernel alpha + (1-alpha) e^z: B_n = (1-alpha)/n!
# ---------------------------------------------------------------------------

def _alpha_validate(name):
    def check(p):
        a = p["alpha"]
        if not (0.0 <= a < 1.0):
            raise ParamOutOfRange(
                f"{name} requires 0 <= alpha < 1, got alpha={a!r}")
    return check


def _exponential_coeffs(p, order):
    inv_fact = 1.0 / np.cumprod(np.arange(1, order + 1, dtype=float))
    return (1.0 - p["alpha"]) * inv_fact


def _exponential_phi(p, x):
    a = p["alpha"]
    return a + (1.0 - a) * math.exp(x)


@lru_cache(maxsize=4096)
def _expm1_over_t_integral(x: float) -> float:
    """integral of (e^t - 1)/t from 0 to x; Taylor-patched near t = 0."""
    def integrand(t: float) -> float:
        if abs(t) < 1e-4:
            return 1.0 + t / 2.0 + t * t / 6.0
        return math.expm1(t) / t
    return adaptive_simpson(integrand, 0.0, x, tol=1e-13)


def _exponential_h(p, r):
    return r * math.exp((1.0 - p["alpha"]) * _expm1_over_t_integral(r))


def _exponential_h_minus1(p):
    return -math.exp((1.0 - p["alpha"]) * _expm1_over_t_integral(-1.0))


# ---------------------------------------------------------------------------
# cardioid kernel 1 + 4z/3 + 2z^2/3
# ---------------------------------------------------------------------------

def _cardioid_coeffs(_p, order):
    out = np.zeros(order)
    out[0] = 4.0 / 3.0
    if order >= 2:
        out[1] = 2.0 / 3.0
    return out


def _cardioid_phi(_p, x):
    return 1.0 + 4.0 * x / 3.0 + 2.0 * x * x / 3.0


def _cardioid_h(_p, r):
    return r * math.exp(4.0 * r / 3.0 + r * r / 3.0)


def _cardioid_h_minus1(_p):
    return -math.exp(-1.0)


# ---------------------------------------------------------------------------
# rational kernel 1 + (z/k)(k+z)/(k-z), k = sqrt(2)+1:
# B_1 = 1/k, B_n = 2/k^n for n >= 2; h(r) = r e^(-r/k) (k/(k-r))^2
# ---------------------------------------------------------------------------

def _rational_coeffs(_p, order):
    out = 2.0 / RATIONAL_K ** np.arange(1, order + 1, dtype=float)
    out[0] = 1.0 / RATIONAL_K
    return out


def _rational_phi(_p, x):
    k = RATIONAL_K
    return 1.0 + (x / k) * (k + x) / (k - x)


def _rational_h(_p, r):
    k = RATIONAL_K
    return r * math.exp(-r / k) * (k / (k - r)) ** 2


def _rational_h_minus1(_p):
    k = RATIONAL_K
    return -math.exp(1.0 / k) * (k / (k + 1.0)) ** 2


# ---------------------------------------------------------------------------
# Booth kernel 1 + z/(1 - alpha z^2): B_(2m+1) = alpha^m, even ones vanish
# ---------------------------------------------------------------------------

def _booth_coeffs(p, order):
    a = p["alpha"]
    out = np.zeros(order)
    m = np.arange((order + 1) // 2, dtype=float)
    out[0::2] = a ** m
    return out


def _booth_phi(p, x):
    return 1.0 + x / (1.0 - p["alpha"] * x * x)


def _booth_h(p, r):
    a = p["alpha"]
    if a == 0.0:
        return r * math.exp(r)
    sa = math.sqrt(a)
    return r * ((1.0 + sa * r) / (1.0 - sa * r)) ** (1.0 / (2.0 * sa))


def _booth_h_minus1(p):
    a = p["alpha"]
    if a == 0.0:
        return -math.exp(-1.0)
    sa = math.sqrt(a)
    return -(((1.0 - sa) / (1.0 + sa)) ** (1.0 / (2.0 * sa)))


# ---------------------------------------------------------------------------
# lens kernel (1+sz)^2: B_1 = 2s, B_2 = s^2
# ---------------------------------------------------------------------------

def _lens_validate(p):
    s = p["s"]
    if not (0.0 < s <= LENS_S_MAX):
        raise ParamOutOfRange(
            f"lens requires 0 < s <= 1/sqrt(2) ~= {LENS_S_MAX:.12g}, got s={s!r}")


def _lens_coeffs(p, order):
    s = p["s"]
    out = np.zeros(order)
    out[0] = 2.0 * s
    if order >= 2:
        out[1] = s * s
    return out


def _lens_phi(p, x):
    return (1.0 + p["s"] * x) ** 2


def _lens_h(p, r):
    s = p["s"]
    return r * math.exp(2.0 * s * r + s * s * r * r / 2.0)


def _lens_h_minus1(p):
    s = p["s"]
    return -math.exp(-2.0 * s + s * s / 2.0)


# ---------------------------------------------------------------------------
# uniformly-convex kernel 1 + (2/pi^2) log^2((1+sqrt z)/(1-sqrt z)):
# coefficients from the Cauchy square of the odd artanh series in w = sqrt z.
# No closed extremal form; the generic series/quadrature paths handle it.
# ---------------------------------------------------------------------------

def _ucv_coeffs(_p, order):
    w = np.zeros(2 * order + 2)
    w[1::2] = 2.0 / np.arange(1, 2 * order + 2, 2, dtype=float)
    sq = np.convolve(w, w)[: 2 * order + 1]
    return (2.0 / math.pi**2) * sq[2::2]


def _ucv_phi(_p, x):
    if x == 0.0:
        return 1.0
    if x > 0.0:
        w = math.sqrt(x)
        return 1.0 + (2.0 / math.pi**2) * math.log((1.0 + w) / (1.0 - w)) ** 2
    # on the negative axis the square root is imaginary and the log squared
    # becomes -4 atan^2(sqrt(-x)), keeping phi real
    return 1.0 - (8.0 / math.pi**2) * math.atan(math.sqrt(-x)) ** 2


_CATALOG: dict[str, _KernelDef] = {
    "halfplane": _KernelDef({}, _no_params, _halfplane_coeffs, _halfplane_phi,
                            _halfplane_h, lambda _p: -0.25),
    "janowski": _KernelDef({"A": 0.5, "B": -0.5}, _janowski_validate,
                           _janowski_coeffs, _janowski_phi,
                           _janowski_h, _janowski_h_minus1),
    "exponential": _KernelDef({"alpha": 0.0}, _alpha_validate("exponential"),
                              _exponential_coeffs, _exponential_phi,
                              _exponential_h, _exponential_h_minus1),
    "cardioid": _KernelDef({}, _no_params, _cardioid_coeffs, _cardioid_phi,
                           _cardioid_h, _cardioid_h_minus1),
    "rational": _KernelDef({}, _no_params, _rational_coeffs, _rational_phi,
                           _rational_h, _rational_h_minus1),
    "booth": _KernelDef({"alpha": 0.5}, _alpha_validate("booth"),
                        _booth_coeffs, _booth_phi, _booth_h, _booth_h_minus1),
    "lens": _KernelDef({"s": 0.5}, _lens_validate, _lens_coeffs, _lens_phi,
                       _lens_h, _lens_h_minus1),
    "ucv": _KernelDef({}, _no_params, _ucv_coeffs, _ucv_phi),
}


def make_spec(name: str, **params: float) -> PhiSpec:
    """Build a validated PhiSpec; unknown names or parameters are rejected."""
    if name not in _CATALOG:
        raise ParamOutOfRange(
            f"unknown kernel {name!r}; known: {', '.join(KERNEL_NAMES)}")
    defn = _CATALOG[name]
    merged = dict(defn.defaults)
    for key, value in params.items():
        if key not in merged:
            raise ParamOutOfRange(
                f"kernel {name!r} takes parameters {sorted(merged) or 'none'}, "
                f"got {key!r}")
        merged[key] = float(value)
    defn.validate(merged)
    return PhiSpec(name, tuple(sorted(merged.items())))


def starlike_order_alpha_spec(alpha: float) -> PhiSpec:
    """Kernel whose class is 'starlike of order alpha': (1+(1-2a)z)/(1-z)."""
    if not (0.0 <= alpha < 1.0):
        raise ParamOutOfRange(f"order must satisfy 0 <= alpha < 1, got {alpha!r}")
    return make_spec("janowski", A=1.0 - 2.0 * alpha, B=-1.0)


def _defn(spec: PhiSpec) -> _KernelDef:
    try:
        return _CATALOG[spec.name]
    except KeyError:
        raise ParamOutOfRange(f"unknown kernel {spec.name!r}") from None


@lru_cache(maxsize=512)
def _coeff_array(spec: PhiSpec, order: int) -> np.ndarray:
    defn = _defn(spec)
    p = spec.params_dict
    defn.validate(p)
    arr = defn.coeffs(p, order)
    arr.flags.writeable = False
    return arr


def phi_coefficients(spec: PhiSpec, order: int) -> TruncatedSeries:
    """The truncation 1 + sum_{n=1..order} B_n z^n of the kernel."""
    if order < 1:
        raise ParamOutOfRange(f"order must be >= 1, got {order!r}")
    return TruncatedSeries(np.concatenate(([1.0], _coeff_array(spec, order))))


def phi_eval(spec: PhiSpec, x: float) -> float:
    """Closed-form value of the kernel at x in (-1, 1)."""
    if not -1.0 < x < 1.0:
        raise DomainError(f"kernel evaluation point {x!r} outside (-1, 1)")
    return _phi_raw(spec, x)


def _phi_raw(spec: PhiSpec, x: float) -> float:
    """Kernel value on the closed interval [-1, 1); internal quadratures need
    the endpoint x = -1."""
    return _defn(spec).phi(spec.params_dict, x)


@lru_cache(maxsize=4096)
def validate_positivity(spec: PhiSpec, order: int) -> bool:
    """True iff no coefficient B_1..B_order is negative and B_1 > 0."""
    if order < 1:
        raise ParamOutOfRange(f"order must be >= 1, got {order!r}")
    b = _coeff_array(spec, order)
    return bool(b[0] > 0.0 and np.all(b >= 0.0))


def has_closed_h(spec: PhiSpec) -> bool:
    return _defn(spec).closed_h is not None


def closed_h(spec: PhiSpec, r: float) -> float:
    """Closed-form h(r) on [-1, 1); ValueError when the kernel has none."""
    defn = _defn(spec)
    if defn.closed_h is None:
        raise ValueError(f"kernel {spec.name!r} has no closed extremal form")
    return defn.closed_h(spec.params_dict, r)


def has_closed_h_minus1(spec: PhiSpec) -> bool:
    return _defn(spec).closed_h_minus1 is not None


def closed_h_minus1(spec: PhiSpec) -> float:
    defn = _defn(spec)
    if defn.closed_h_minus1 is None:
        raise ValueError(f"kernel {spec.name!r} has no closed h(-1)")
    return defn.closed_h_minus1(spec.params_dict)


def h2_tail(spec: PhiSpec, start: int = 513, end: int = 1024) -> float:
    """Diagnostic: sum of B_n^2 over start <= n <= end. Small only for
    kernels with geometric or factorial coefficient decay."""
    b = _coeff_array(spec, end)
    return float(np.sum(b[start - 1 :] ** 2))
