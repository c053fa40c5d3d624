"""Truncated real power series.

A series is a finite coefficient vector c_0..c_N for sum c_n z^n, exact up to
degree N. All arithmetic between two series truncates to the smaller order,
so results are exact to that degree. Everything here is pure and immutable.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    DomainError,
    NonunitConstantTerm,
    NonzeroConstantTerm,
    TailTooLarge,
)

# Default truncation for extremal-function work; evaluation doubles the order
# adaptively up to MAX_ORDER until the geometric tail estimate drops below
# TAIL_TOL at the evaluation point.
DEFAULT_ORDER = 64
MAX_ORDER = 1024
TAIL_TOL = 1e-13


@dataclass(frozen=True, eq=False)
class TruncatedSeries:
    """Coefficients of a power series truncated at a fixed degree."""

    coeffs: np.ndarray

    def __post_init__(self) -> None:
        arr = np.array(self.coeffs, dtype=float)
        if arr.ndim != 1 or arr.size < 1:
            raise ValueError("coefficients must form a non-empty 1-d sequence")
        if not np.all(np.isfinite(arr)):
            raise ValueError("coefficients must all be finite")
        arr.flags.writeable = False
        object.__setattr__(self, "coeffs", arr)

    @property
    def order(self) -> int:
        return self.coeffs.size - 1

    def __getitem__(self, n: int) -> float:
        return float(self.coeffs[n])

    def __len__(self) -> int:
        return self.coeffs.size

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(self.order, other.order)
        return TruncatedSeries(self.coeffs[: n + 1] + other.coeffs[: n + 1])

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(self.order, other.order)
        return TruncatedSeries(self.coeffs[: n + 1] - other.coeffs[: n + 1])

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return cauchy_mul(self, other)

    def __call__(self, x: float, tail_bound: float | None = None) -> float:
        return evaluate(self, x, tail_bound)

    def __repr__(self) -> str:  # keep reprs short for large orders
        head = np.array2string(self.coeffs[:6], precision=6, separator=", ")
        tail = ", ..." if self.order > 5 else ""
        return f"TruncatedSeries(order={self.order}, coeffs={head[:-1]}{tail}])"


def cauchy_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Product series: coefficient n is sum_{j<=n} a_j b_{n-j}, n <= min order."""
    n = min(a.order, b.order)
    prod = np.convolve(a.coeffs[: n + 1], b.coeffs[: n + 1])[: n + 1]
    return TruncatedSeries(prod)


def series_exp(a: TruncatedSeries) -> TruncatedSeries:
    """exp of a series with zero constant term.

    Uses the differential recursion e_0 = 1, e_n = (1/n) sum_{j=1..n} j a_j e_{n-j},
    which is numerically stable at the orders used here (<= MAX_ORDER).
    """
    if a.coeffs[0] != 0.0:
        raise NonzeroConstantTerm("series_exp requires constant term 0, got "
                                  f"{a.coeffs[0]!r}")
    n = a.order
    e = np.zeros(n + 1)
    e[0] = 1.0
    ja = a.coeffs * np.arange(n + 1)
    for m in range(1, n + 1):
        e[m] = np.dot(ja[1 : m + 1], e[m - 1 :: -1]) / m
    return TruncatedSeries(e)


def series_log(a: TruncatedSeries) -> TruncatedSeries:
    """log of a series with constant term 1; inverse of series_exp."""
    if a.coeffs[0] != 1.0:
        raise NonunitConstantTerm("series_log requires constant term 1, got "
                                  f"{a.coeffs[0]!r}")
    n = a.order
    out = np.zeros(n + 1)
    for m in range(1, n + 1):
        if m == 1:
            out[1] = a.coeffs[1]
            continue
        # l_m = a_m - (1/m) sum_{j=1..m-1} j l_j a_{m-j}
        conv = np.dot(np.arange(1, m) * out[1:m], a.coeffs[m - 1 : 0 : -1])
        out[m] = a.coeffs[m] - conv / m
    return TruncatedSeries(out)


def integrate_term_over_t(b: TruncatedSeries) -> TruncatedSeries:
    """Map sum_{n>=1} b_n t^n, divided by t and integrated from 0, to
    sum_{n>=1} b_n z^n / n. Requires b_0 = 0."""
    if b.coeffs[0] != 0.0:
        raise NonzeroConstantTerm("integrand must vanish at 0, got constant "
                                  f"term {b.coeffs[0]!r}")
    out = np.zeros_like(b.coeffs)
    if b.order >= 1:
        out[1:] = b.coeffs[1:] / np.arange(1, b.order + 1)
    return TruncatedSeries(out)


def differentiate(a: TruncatedSeries) -> TruncatedSeries:
    """Term-wise derivative; drops one order."""
    if a.order == 0:
        return TruncatedSeries(np.zeros(1))
    return TruncatedSeries(a.coeffs[1:] * np.arange(1, a.order + 1))


def majorant(a: TruncatedSeries) -> TruncatedSeries:
    """Coefficient-wise absolute value."""
    return TruncatedSeries(np.abs(a.coeffs))


def geometric_tail(a: TruncatedSeries, x: float) -> float:
    """Tail estimate |c_N| |x|^N / (1-|x|) for the discarded part of the sum.

    Heuristic: assumes the coefficients beyond N do not grow; adequate for
    the coefficient families used here, whose terms eventually decay."""
    ax = abs(x)
    if ax >= 1.0:
        return np.inf
    return abs(float(a.coeffs[-1])) * ax**a.order / (1.0 - ax)


def evaluate(a: TruncatedSeries, x: float, tail_bound: float | None = None) -> float:
    """Horner evaluation of the truncated sum at x in [-1, 1].

    The value is exact for the truncation. If tail_bound is given, the
    geometric tail estimate must not exceed it (TailTooLarge otherwise)."""
    if abs(x) > 1.0:
        raise DomainError(f"evaluation point {x!r} outside [-1, 1]")
    if tail_bound is not None:
        est = geometric_tail(a, x)
        if not est <= tail_bound:
            raise TailTooLarge(
                f"tail estimate {est:.3e} exceeds bound {tail_bound:.3e} "
                f"at x={x!r}, order {a.order}")
    return float(np.polynomial.polynomial.polyval(x, a.coeffs))


def compose(outer: TruncatedSeries, inner: TruncatedSeries) -> TruncatedSeries:
    """Substitute inner (which must vanish at 0) into outer, truncated to the
    smaller order. Horner scheme with truncated Cauchy products."""
    if inner.coeffs[0] != 0.0:
        raise NonzeroConstantTerm("composition needs inner constant term 0")
    n = min(outer.order, inner.order)
    w = inner.coeffs[: n + 1]
    acc = np.zeros(n + 1)
    acc[0] = outer.coeffs[n]
    for j in range(n - 1, -1, -1):
        acc = np.convolve(acc, w)[: n + 1]
        acc[0] += outer.coeffs[j]
    return TruncatedSeries(acc)
