"""Parsable positive test functions with analytic derivatives.

Five families cover the integral test surface: polynomials, exponentials
e^{kt}, powers t^p, affine maps, and exponentials of polynomials.  Every
family evaluates elementwise on numpy arrays and knows its derivative in
closed form; positivity or monotonicity on a concrete interval is validated
by dense sampling at the point of use.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import DomainError, ParameterError

__all__ = ["FunctionFamily", "FunctionSpec", "parse_function",
           "validate_positive", "validate_nonneg_derivative"]


class FunctionFamily(Enum):
    POLY = "poly"
    EXP = "exp"
    POWER = "pow"
    AFFINE = "affine"
    EXP_OF_POLY = "exppoly"


@dataclass(frozen=True)
class FunctionSpec:
    family: FunctionFamily
    coeffs: tuple

    def __post_init__(self):
        if not self.coeffs:
            raise ParameterError("function spec needs at least one coefficient")
        if self.family in (FunctionFamily.EXP, FunctionFamily.POWER) and len(self.coeffs) != 1:
            raise ParameterError(f"{self.family.value} takes exactly one parameter")
        if self.family is FunctionFamily.AFFINE and len(self.coeffs) != 2:
            raise ParameterError("affine takes exactly two coefficients c0,c1")

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        f = self.family
        if f is FunctionFamily.POLY or f is FunctionFamily.AFFINE:
            return np.polynomial.polynomial.polyval(t, self.coeffs)
        if f is FunctionFamily.EXP:
            return np.exp(self.coeffs[0] * t)
        if f is FunctionFamily.POWER:
            return t ** self.coeffs[0]
        return np.exp(np.polynomial.polynomial.polyval(t, self.coeffs))

    def derivative(self, t):
        t = np.asarray(t, dtype=float)
        f = self.family
        if f is FunctionFamily.POLY or f is FunctionFamily.AFFINE:
            dcoef = tuple(i * c for i, c in enumerate(self.coeffs))[1:] or (0.0,)
            return np.polynomial.polynomial.polyval(t, dcoef)
        if f is FunctionFamily.EXP:
            k = self.coeffs[0]
            return k * np.exp(k * t)
        if f is FunctionFamily.POWER:
            p = self.coeffs[0]
            return p * t ** (p - 1.0)
        dcoef = tuple(i * c for i, c in enumerate(self.coeffs))[1:] or (0.0,)
        return np.polynomial.polynomial.polyval(t, dcoef) * self(t)

    def sup_on_unit(self) -> float:
        """Upper bound for |f| on (0, 1]; DomainError if unbounded there."""
        f = self.family
        if f is FunctionFamily.POLY or f is FunctionFamily.AFFINE:
            return sum(abs(c) for c in self.coeffs)
        if f is FunctionFamily.EXP:
            return math.exp(max(self.coeffs[0], 0.0))
        if f is FunctionFamily.POWER:
            if self.coeffs[0] < 0:
                raise DomainError("t^p is unbounded on (0, 1] for p < 0")
            return 1.0
        return math.exp(sum(abs(c) for c in self.coeffs))

    def to_string(self) -> str:
        params = ",".join("%g" % c for c in self.coeffs)
        return f"{self.family.value}:{params}"

    def __str__(self) -> str:
        return self.to_string()


def parse_function(text: str) -> FunctionSpec:
    """Parse ``poly:c0,c1,...``, ``exp:k``, ``pow:p``, ``affine:c0,c1``,
    ``exppoly:c0,c1,...`` (case-insensitive)."""
    s = text.strip().lower()
    head, _, rest = s.partition(":")
    try:
        family = FunctionFamily(head)
    except ValueError:
        raise ParameterError(f"unknown function family {head!r} in {text!r}") from None
    if not rest:
        raise ParameterError(f"function spec {text!r} is missing coefficients")
    coeffs = []
    for tok in rest.split(","):
        try:
            coeffs.append(float(tok))
        except ValueError:
            raise ParameterError(f"cannot parse coefficient {tok!r} in {text!r}") from None
    return FunctionSpec(family, tuple(coeffs))


_VALIDATION_POINTS = 513


def validate_positive(f, a: float, b: float, name: str = "f") -> None:
    """Require f >= 0 on [a, b] and f > 0 away from the endpoints.

    Zeros at the interval endpoints are tolerated (the conjugate-mean limit
    there is 0), interior zeros or sign changes are not.
    """
    ts = np.linspace(a, b, _VALIDATION_POINTS)
    vals = np.asarray(f(ts), dtype=float)
    if not np.all(np.isfinite(vals)):
        raise DomainError(f"{name} is not finite on [{a}, {b}]")
    if np.any(vals < 0):
        raise DomainError(f"{name} is negative on [{a}, {b}]")
    if np.any(vals[1:-1] <= 0):
        raise DomainError(f"{name} vanishes inside [{a}, {b}]")


def validate_nonneg_derivative(f: FunctionSpec, a: float, b: float, name: str = "f") -> None:
    ts = np.linspace(a, b, _VALIDATION_POINTS)
    dv = np.asarray(f.derivative(ts), dtype=float)
    if not np.all(np.isfinite(dv)):
        raise DomainError(f"{name}' is not finite on [{a}, {b}]")
    if np.any(dv < 0):
        raise DomainError(f"{name} must be nondecreasing on [{a}, {b}]")
