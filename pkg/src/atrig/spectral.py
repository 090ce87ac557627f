"""Numerical factorization of the modulus polynomial and the concrete
isomorphism onto R^r x C^c given by evaluation at its roots.

The root finder is a self-contained Aberth-Ehrlich simultaneous iteration
polished by Newton steps.  Multiple (or numerically near-multiple) roots are
refused rather than approximated: the component logarithm degrades badly
there, so the decomposition certifies semisimplicity up front.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import AlgebraElement, PrincipalPresentation, _coeff_array
from .errors import IllConditioned, NoConvergence, NonSemisimple, PresentationMismatch, ShapeMismatch

DEFAULT_ROOT_TOLERANCE = 1e-10
#: |Im xi| <= REAL_SNAP_FACTOR * max(1, |xi|) classifies a root as real.
REAL_SNAP_FACTOR = 1e-8
#: Minimum pairwise root distance, relative to max(1, max |xi|).
SEPARATION_FACTOR = 1e-7
ABERTH_MAX_ITER = 200
ABERTH_STEP_TOL = 1e-13
#: Interpolation residual bound, relative to max(1, ||values||_inf).
INTERPOLATION_RESIDUAL_FACTOR = 1e-6


@dataclass(frozen=True)
class SpectralDecomposition:
    """Distinct roots of the modulus, split into real and conjugate pairs.

    ``complex_roots`` stores one representative per conjugate pair, with
    strictly positive imaginary part.  r + 2c = degree.
    """

    presentation: PrincipalPresentation
    real_roots: tuple[float, ...]
    complex_roots: tuple[complex, ...]
    root_tolerance: float

    @property
    def real_count(self) -> int:
        return len(self.real_roots)

    @property
    def complex_count(self) -> int:
        return len(self.complex_roots)

    def to_json_dict(self) -> dict:
        return {
            "real_roots": list(self.real_roots),
            "complex_roots": [[z.real, z.imag] for z in self.complex_roots],
        }


@dataclass(frozen=True)
class ComponentVector:
    """Image of an element under evaluation at the decomposition's roots."""

    real_parts: tuple[float, ...]
    complex_parts: tuple[complex, ...]


def _horner_pair(full_asc: np.ndarray, z: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Evaluate p and p' at once; full_asc holds [c0, ..., c_{n-1}, 1]."""
    p = np.full_like(z, full_asc[-1])
    dp = np.zeros_like(z)
    for c in full_asc[-2::-1]:
        dp = dp * z + p
        p = p * z + c
    return p, dp


def _aberth(full_asc: np.ndarray) -> tuple[np.ndarray, bool]:
    """Simultaneous iteration for all roots of a monic polynomial.

    Returns the approximations and whether the step criterion was met;
    the caller decides between NonSemisimple and NoConvergence.
    """
    n = len(full_asc) - 1
    if n == 1:
        return np.array([-full_asc[0]], dtype=complex), True

    # Scaled circular initialization: Cauchy bound radius, phase offset to
    # avoid locking onto the real axis or root symmetries.
    radius = 1.0 + float(np.max(np.abs(full_asc[:-1])))
    angles = 2.0 * np.pi * np.arange(n) / n + 0.5 + 0.4 / n
    z = radius * np.exp(1j * angles)

    converged = False
    for _ in range(ABERTH_MAX_ITER):
        p, dp = _horner_pair(full_asc, z)
        dp = np.where(dp == 0, 1e-300, dp)
        w = p / dp
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, np.inf)
        s = np.sum(1.0 / diff, axis=1)
        denom = 1.0 - w * s
        denom = np.where(denom == 0, 1.0, denom)
        delta = w / denom
        z = z - delta
        scale = max(1.0, float(np.max(np.abs(z))))
        if float(np.max(np.abs(delta))) <= ABERTH_STEP_TOL * scale:
            converged = True
            break
    return z, converged


def _newton_polish(full_asc: np.ndarray, z: np.ndarray, steps: int = 3) -> np.ndarray:
    for _ in range(steps):
        p, dp = _horner_pair(full_asc, z)
        dp = np.where(dp == 0, 1e-300, dp)
        z = z - p / dp
    return z


def find_roots(
    pres: PrincipalPresentation, tol: float = DEFAULT_ROOT_TOLERANCE
) -> SpectralDecomposition:
    """All roots of the monic modulus, certified distinct and accurate.

    Raises NonSemisimple when the minimum pairwise separation falls below
    the threshold (repeated or clustered roots, e.g. nil presentations),
    and NoConvergence when the iteration stalls on separated roots or a
    residual certificate fails.
    """
    n = pres.degree
    full = np.append(_coeff_array(pres), 1.0)
    roots, converged = _aberth(full)

    scale = max(1.0, float(np.max(np.abs(roots))))
    if n > 1:
        diff = np.abs(roots[:, None] - roots[None, :])
        np.fill_diagonal(diff, np.inf)
        if float(diff.min()) <= SEPARATION_FACTOR * scale:
            raise NonSemisimple(
                f"root separation {diff.min():.3e} below threshold for {pres}"
            )
    if not converged:
        raise NoConvergence(f"root iteration hit {ABERTH_MAX_ITER} steps for {pres}")

    roots = _newton_polish(full, roots)

    snap = REAL_SNAP_FACTOR * np.maximum(1.0, np.abs(roots))
    is_real = np.abs(roots.imag) <= snap
    real_roots = sorted(float(r) for r in roots[is_real].real)
    pos = sorted(
        (complex(r) for r in roots[~is_real] if r.imag > 0),
        key=lambda w: (w.real, w.imag),
    )
    neg_conj = sorted(
        (complex(r).conjugate() for r in roots[~is_real] if r.imag < 0),
        key=lambda w: (w.real, w.imag),
    )
    if len(pos) != len(neg_conj):
        raise NoConvergence(f"conjugate pairing failed for {pres}")
    pairs = []
    for a, b in zip(pos, neg_conj):
        if abs(a - b) > 0.5 * SEPARATION_FACTOR * scale:
            raise NoConvergence(f"conjugate pairing failed for {pres}")
        pairs.append(0.5 * (a + b))

    for xi in list(real_roots) + pairs:
        residual = abs(np.polyval(full[::-1], xi))
        bound = tol * max(1.0, abs(xi) ** n)
        if residual > bound:
            raise NoConvergence(
                f"root residual {residual:.3e} exceeds {bound:.3e} for {pres}"
            )

    return SpectralDecomposition(
        presentation=pres,
        real_roots=tuple(real_roots),
        complex_roots=tuple(pairs),
        root_tolerance=tol,
    )


def _evaluate(coords: np.ndarray, points: np.ndarray) -> np.ndarray:
    """Horner evaluation of the coordinate polynomial at arbitrary points."""
    out = np.full_like(points, coords[-1])
    for c in coords[-2::-1]:
        out = out * points + c
    return out


def to_components(z: AlgebraElement, dec: SpectralDecomposition) -> ComponentVector:
    """Evaluate the coordinate polynomial at every root (the forward map)."""
    if not z.presentation.same_algebra(dec.presentation):
        raise PresentationMismatch("element and decomposition use different algebras")
    reals = tuple(float(v) for v in _evaluate(z.coords, np.array(dec.real_roots)))
    if dec.complex_roots:
        cplx = tuple(complex(v) for v in _evaluate(z.coords, np.array(dec.complex_roots)))
    else:
        cplx = ()
    return ComponentVector(reals, cplx)


def from_components(v: ComponentVector, dec: SpectralDecomposition) -> AlgebraElement:
    """Interpolate prescribed component values back to real coordinates.

    Solves the complex Vandermonde system over all n roots (conjugate values
    at conjugate roots) and projects onto real coordinates.
    """
    if len(v.real_parts) != dec.real_count or len(v.complex_parts) != dec.complex_count:
        raise ShapeMismatch(
            f"component shape ({len(v.real_parts)}, {len(v.complex_parts)}) does not "
            f"match decomposition ({dec.real_count}, {dec.complex_count})"
        )
    nodes = list(dec.real_roots)
    values = [complex(x) for x in v.real_parts]
    for xi, w in zip(dec.complex_roots, v.complex_parts):
        nodes.extend([xi, xi.conjugate()])
        values.extend([complex(w), complex(w).conjugate()])
    nodes_arr = np.array(nodes, dtype=complex)
    values_arr = np.array(values, dtype=complex)
    vander = np.vander(nodes_arr, N=dec.presentation.degree, increasing=True)
    try:
        coeffs = np.linalg.solve(vander, values_arr)
    except np.linalg.LinAlgError as exc:
        raise IllConditioned(f"singular interpolation system: {exc}") from None
    residual = float(np.max(np.abs(vander @ coeffs - values_arr)))
    bound = INTERPOLATION_RESIDUAL_FACTOR * max(1.0, float(np.max(np.abs(values_arr))))
    if not residual <= bound:  # also catches the NaNs of a singular solve
        raise IllConditioned(f"interpolation residual {residual:.3e} too large")
    return AlgebraElement(dec.presentation, coeffs.real)
