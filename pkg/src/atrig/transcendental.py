"""Exponential, generalized trigonometric components, modulus, logarithm
with branch choice, argument, and generalized polar form.

The logarithm dispatches on the presentation: nilpotent generators get the
finite alternating series (exact inverse of the exponential), semisimple
moduli go through the component isomorphism with a per-pair branch of the
complex logarithm.  Anything in between is refused.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import core
from .core import AlgebraElement, PrincipalPresentation
from .errors import (
    InvalidPower,
    NoConvergence,
    NonPositivePythagorean,
    OutsideLogDomain,
    PresentationMismatch,
    ShapeMismatch,
    UnsupportedAlgebra,
)
from .spectral import ComponentVector, SpectralDecomposition, find_roots, from_components, to_components


@dataclass(frozen=True)
class SeriesPolicy:
    """Truncation policy for the exponential series."""

    tolerance: float = 1e-15
    max_terms: int = 200
    squaring_threshold: float = 0.5

    def __post_init__(self):
        if self.tolerance <= 0:
            raise ValueError("tolerance must be positive")
        if self.max_terms < 1:
            raise ValueError("max_terms must be at least 1")


@dataclass(frozen=True)
class BranchSpec:
    """Per conjugate pair integer b shifting the complex log by 2*pi*b.

    ``None`` means the principal branch for every pair.
    """

    branch_indices: tuple[int, ...] | None = None

    def indices_for(self, count: int) -> tuple[int, ...]:
        if self.branch_indices is None:
            return (0,) * count
        if len(self.branch_indices) != count:
            raise ShapeMismatch(
                f"{len(self.branch_indices)} branch indices for {count} complex pairs"
            )
        return self.branch_indices


@dataclass(frozen=True)
class PolarForm:
    """z = rho * exp(arg) with rho > 0 and arg having zero real part."""

    rho: float
    arg: AlgebraElement

    def recombine(self, policy: SeriesPolicy | None = None) -> AlgebraElement:
        coords = np.array(self.arg.coords)
        coords[0] += math.log(self.rho)
        return exp(AlgebraElement(self.arg.presentation, coords), policy)

    def to_json_dict(self) -> dict:
        return {"rho": self.rho, "arg": self.arg.coords.tolist()}


_DEFAULT_POLICY = SeriesPolicy()


def exp(z: AlgebraElement, policy: SeriesPolicy | None = None) -> AlgebraElement:
    """Power series exponential with scaling and squaring.

    The argument is halved until its sup-norm drops below the squaring
    threshold, the series is summed until a term falls below the relative
    tolerance, and the result is squared back up.
    """
    pol = policy if policy is not None else _DEFAULT_POLICY
    coords = z.coords
    if not np.all(np.isfinite(coords)):
        raise ValueError("exp requires finite coordinates")
    pres = z.presentation
    n = pres.degree
    c = core._coeff_array(pres)

    norm = float(np.max(np.abs(coords)))
    squarings = 0
    while norm > pol.squaring_threshold * (2.0 ** squarings):
        squarings += 1
    scaled = coords / (2.0 ** squarings)

    rep = core._rep_from_coords(scaled, c)
    acc = np.zeros(n)
    acc[0] = 1.0
    term = acc.copy()
    for m in range(1, pol.max_terms + 1):
        term = rep @ term / m
        acc = acc + term
        if float(np.max(np.abs(term))) <= pol.tolerance * float(np.max(np.abs(acc))):
            break
    else:
        raise NoConvergence(
            f"series did not reach {pol.tolerance:g} within {pol.max_terms} terms"
        )
    for _ in range(squarings):
        acc = core._mul_coords(acc, acc, c)
    return AlgebraElement(pres, acc)


def trig_components(pres: PrincipalPresentation, m: int, theta: float) -> np.ndarray:
    """Coordinates s_1(theta), ..., s_n(theta) of exp(k^m * theta).

    For m = 1 these are the generalized trigonometric functions of the
    algebra (cosh/sinh-like for k^n = 1, cos/sin-like for k^n = -1).
    """
    if not 1 <= m <= pres.degree - 1:
        raise InvalidPower(f"m must lie in [1, {pres.degree - 1}], got {m}")
    coords = np.zeros(pres.degree)
    coords[m] = float(theta)
    return exp(AlgebraElement(pres, coords)).coords


def modulus(z: AlgebraElement) -> float:
    """The unique positive rho with F(z) = rho^n, for pure-power algebras."""
    pres = z.presentation
    if not pres.is_pure_power():
        raise UnsupportedAlgebra(
            f"modulus is defined only for pure-power presentations, not {pres}"
        )
    value = core.pythagorean(z)
    if value <= 0.0:
        raise NonPositivePythagorean(f"Pythagorean value {value:.3e} is not positive")
    return value ** (1.0 / pres.degree)


@lru_cache(maxsize=128)
def _cached_decomposition(pres: PrincipalPresentation) -> SpectralDecomposition:
    return find_roots(pres)


def _principal_angle(w: complex) -> float:
    """Argument normalized to (-pi, pi]."""
    a = math.atan2(w.imag, w.real)
    if a <= -math.pi:
        a = math.pi
    return a


def _log_nil(z: AlgebraElement) -> AlgebraElement:
    coords = z.coords
    x1 = float(coords[0])
    if x1 <= 0.0:
        raise OutsideLogDomain(f"leading coordinate {x1} must be positive")
    pres = z.presentation
    n = pres.degree
    c = core._coeff_array(pres)
    nilpotent = np.array(coords) / x1
    nilpotent[0] = 0.0
    out = np.zeros(n)
    power = nilpotent.copy()
    for m in range(1, n):
        out += ((-1.0) ** (m + 1) / m) * power
        if m < n - 1:
            power = core._mul_coords(power, nilpotent, c)
    out[0] = math.log(x1)
    return AlgebraElement(pres, out)


def log(
    z: AlgebraElement,
    branch: BranchSpec | None = None,
    dec: SpectralDecomposition | None = None,
) -> AlgebraElement:
    """Inverse of the exponential on the logarithmic domain.

    Nil presentations (k^n = 0) require a positive leading coordinate and
    use the finite alternating series.  Semisimple presentations require
    positive real components and nonzero complex components; the branch
    spec picks the 2*pi offset applied to each conjugate pair.
    """
    pres = z.presentation
    spec = branch if branch is not None else BranchSpec()
    if pres.is_nil():
        spec.indices_for(0)
        return _log_nil(z)

    if dec is None:
        dec = _cached_decomposition(pres)
    elif not dec.presentation.same_algebra(pres):
        raise PresentationMismatch("decomposition belongs to a different algebra")

    comp = to_components(z, dec)
    indices = spec.indices_for(dec.complex_count)
    log_reals = []
    for r in comp.real_parts:
        if r <= 0.0:
            raise OutsideLogDomain(f"real component {r:.6g} is not positive")
        log_reals.append(math.log(r))
    log_cplx = []
    for w, b in zip(comp.complex_parts, indices):
        if w == 0:
            raise OutsideLogDomain("zero complex component")
        theta = _principal_angle(w) + 2.0 * math.pi * b
        log_cplx.append(complex(math.log(abs(w)), theta))
    return from_components(ComponentVector(tuple(log_reals), tuple(log_cplx)), dec)


def arg(z: AlgebraElement, branch: BranchSpec | None = None) -> AlgebraElement:
    """Logarithm with the real part removed: k*theta_1 + ... + k^{n-1}*theta_{n-1}."""
    value = log(z, branch)
    coords = np.array(value.coords)
    coords[0] = 0.0
    return AlgebraElement(z.presentation, coords)


def polar(z: AlgebraElement, branch: BranchSpec | None = None) -> PolarForm:
    """Generalized polar form z = rho * exp(arg) on pure-power algebras."""
    rho = modulus(z)
    return PolarForm(rho=rho, arg=arg(z, branch))
