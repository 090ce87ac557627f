"""Principal real algebras R[k]/<p(k)>: presentations, elements, and the
regular representation.

Elements are coordinate vectors over the power basis {1, k, ..., k^{n-1}}.
Products reduce modulo the monic modulus polynomial by iterated degree
lowering (k^n = -c_{n-1} k^{n-1} - ... - c_0), exact in structure and
O(n^2) per product.  Everything here is immutable and safe to share.
"""

from __future__ import annotations

import math
import numbers
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import (
    EmptyCoefficients,
    InvalidDegree,
    InvalidKind,
    NonFiniteCoefficient,
    NotAUnit,
    PresentationMismatch,
)

#: Scale-aware invertibility guard: z is treated as a unit iff
#: |F(z)| > UNIT_TOLERANCE * max(1, ||z||_inf ** n).
UNIT_TOLERANCE = 1e-12

PRESET_KINDS = ("hyperbolic", "complicated", "nil")


@dataclass(frozen=True)
class PrincipalPresentation:
    """The algebra R[k]/<p(k)> for a monic modulus p.

    ``modulus_coeffs[i]`` is the coefficient of k^i, so
    p(k) = k^n + c_{n-1} k^{n-1} + ... + c_1 k + c_0.  The leading
    coefficient is implicit and always 1.
    """

    modulus_coeffs: tuple[float, ...]
    label: str | None = None

    @property
    def degree(self) -> int:
        return len(self.modulus_coeffs)

    def is_depressed(self) -> bool:
        """True iff the coefficient of k^{n-1} is exactly zero."""
        return self.modulus_coeffs[-1] == 0.0

    def is_pure_power(self) -> bool:
        """True iff k^n = -c_0, i.e. every intermediate coefficient is zero."""
        return all(c == 0.0 for c in self.modulus_coeffs[1:])

    def is_nil(self) -> bool:
        """True iff p(k) = k^n, so the generator is nilpotent."""
        return all(c == 0.0 for c in self.modulus_coeffs)

    def same_algebra(self, other: "PrincipalPresentation") -> bool:
        return self.modulus_coeffs == other.modulus_coeffs

    # -- element constructors ------------------------------------------------

    def element(self, coords) -> "AlgebraElement":
        return AlgebraElement(self, coords)

    def zero(self) -> "AlgebraElement":
        return AlgebraElement(self, np.zeros(self.degree))

    def one(self) -> "AlgebraElement":
        coords = np.zeros(self.degree)
        coords[0] = 1.0
        return AlgebraElement(self, coords)

    def generator(self, power: int = 1) -> "AlgebraElement":
        """The basis element k^power for 0 <= power < n."""
        if not 0 <= power < self.degree:
            raise ValueError(f"power must lie in [0, {self.degree - 1}]")
        coords = np.zeros(self.degree)
        coords[power] = 1.0
        return AlgebraElement(self, coords)

    # -- serialization -------------------------------------------------------

    def to_json_dict(self) -> dict:
        out: dict = {"coeffs": list(self.modulus_coeffs)}
        if self.label is not None:
            out["label"] = self.label
        return out

    @staticmethod
    def from_json_dict(data: dict) -> "PrincipalPresentation":
        return make_presentation(data["coeffs"], label=data.get("label"))

    def __str__(self) -> str:
        return self.label or f"R[k]/<p>, coeffs={list(self.modulus_coeffs)}"


def make_presentation(coeffs, label: str | None = None) -> PrincipalPresentation:
    """Build a presentation from the non-leading coefficients [c0, ..., c_{n-1}]."""
    values = tuple(float(c) for c in coeffs)
    if not values:
        raise EmptyCoefficients("at least one modulus coefficient is required")
    for c in values:
        if not math.isfinite(c):
            raise NonFiniteCoefficient(f"coefficient {c!r} is not finite")
    return PrincipalPresentation(values, label)


def preset(kind: str, n: int) -> PrincipalPresentation:
    """Standard families: hyperbolic k^n = 1, complicated k^n = -1, nil k^n = 0."""
    if kind not in PRESET_KINDS:
        raise InvalidKind(f"kind must be one of {PRESET_KINDS}, got {kind!r}")
    if not isinstance(n, numbers.Integral) or n < 1:
        raise InvalidDegree(f"degree must be a positive integer, got {n!r}")
    n = int(n)
    coeffs = [0.0] * n
    if kind == "hyperbolic":
        coeffs[0] = -1.0
        label = f"H{n}"
    elif kind == "complicated":
        coeffs[0] = 1.0
        label = f"C{n}"
    else:
        label = f"Gamma{n}"
    return PrincipalPresentation(tuple(coeffs), label)


class AlgebraElement:
    """x1*1 + x2*k + ... + xn*k^{n-1}, tied to a presentation; immutable."""

    __slots__ = ("presentation", "_coords")

    def __init__(self, presentation: PrincipalPresentation, coords):
        arr = np.array(coords, dtype=float)
        if arr.ndim != 1 or arr.size != presentation.degree:
            raise ValueError(
                f"expected {presentation.degree} coordinates, got shape {arr.shape}"
            )
        arr.setflags(write=False)
        self.presentation = presentation
        self._coords = arr

    @property
    def coords(self) -> np.ndarray:
        """Read-only coordinate vector over {1, k, ..., k^{n-1}}."""
        return self._coords

    def _require_same(self, other: "AlgebraElement") -> None:
        if not isinstance(other, AlgebraElement):
            raise TypeError(f"expected AlgebraElement, got {type(other).__name__}")
        if not self.presentation.same_algebra(other.presentation):
            raise PresentationMismatch(
                f"operands live in different algebras: "
                f"{self.presentation} vs {other.presentation}"
            )

    def __add__(self, other):
        self._require_same(other)
        return AlgebraElement(self.presentation, self._coords + other._coords)

    def __sub__(self, other):
        self._require_same(other)
        return AlgebraElement(self.presentation, self._coords - other._coords)

    def __neg__(self):
        return AlgebraElement(self.presentation, -self._coords)

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return mul(self, other)
        if isinstance(other, numbers.Real):
            return AlgebraElement(self.presentation, self._coords * float(other))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, numbers.Real):
            return AlgebraElement(self.presentation, self._coords * float(other))
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, numbers.Real):
            return AlgebraElement(self.presentation, self._coords / float(other))
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.presentation.same_algebra(other.presentation) and np.array_equal(
            self._coords, other._coords
        )

    __hash__ = None  # mutable-feeling numeric payload; compare, don't hash

    def __repr__(self):
        return f"AlgebraElement({self.presentation}, {self._coords.tolist()})"


# -- low-level kernels shared with the transcendental module -----------------


@lru_cache(maxsize=512)
def _coeff_array(pres: PrincipalPresentation) -> np.ndarray:
    arr = np.array(pres.modulus_coeffs, dtype=float)
    arr.setflags(write=False)
    return arr


def _times_k(coords: np.ndarray, c: np.ndarray) -> np.ndarray:
    """Coordinates of k * z: shift one power up, fold k^n back down."""
    top = coords[-1]
    out = np.empty_like(coords)
    out[0] = -c[0] * top
    out[1:] = coords[:-1] - c[1:] * top
    return out


def _rep_from_coords(coords: np.ndarray, c: np.ndarray) -> np.ndarray:
    """Left-multiplication matrix; column j holds z * k^j."""
    n = coords.size
    cols = np.empty((n, n))
    col = np.array(coords, dtype=float)
    cols[:, 0] = col
    for j in range(1, n):
        col = _times_k(col, c)
        cols[:, j] = col
    return cols


def _mul_coords(a: np.ndarray, b: np.ndarray, c: np.ndarray) -> np.ndarray:
    return _rep_from_coords(a, c) @ b


# -- public operations --------------------------------------------------------


def rep_matrix(z: AlgebraElement) -> np.ndarray:
    """Matrix of left-multiplication by z in the power basis.

    Column j (0-based) equals the coordinates of z * k^j, so the first
    column is z itself and rep_matrix(1) is the identity.
    """
    return _rep_from_coords(z.coords, _coeff_array(z.presentation))


def mul(z: AlgebraElement, w: AlgebraElement) -> AlgebraElement:
    """Product in the algebra, reduced modulo the modulus polynomial."""
    z._require_same(w)
    return AlgebraElement(z.presentation, rep_matrix(z) @ w.coords)


def pythagorean(z: AlgebraElement) -> float:
    """Determinant of the regular representation (LU with partial pivoting)."""
    return float(np.linalg.det(rep_matrix(z)))


def invert(z: AlgebraElement) -> AlgebraElement:
    """Multiplicative inverse, solving M(z) w = e1."""
    matrix = rep_matrix(z)
    det = float(np.linalg.det(matrix))
    n = z.presentation.degree
    scale = max(1.0, float(np.max(np.abs(z.coords))) ** n)
    if abs(det) <= UNIT_TOLERANCE * scale:
        raise NotAUnit(f"Pythagorean value {det:.3e} is below the unit tolerance")
    rhs = np.zeros(n)
    rhs[0] = 1.0
    return AlgebraElement(z.presentation, np.linalg.solve(matrix, rhs))


def _taylor_shift(values: np.ndarray, shift: float) -> np.ndarray:
    """Coefficients of q(t) = sum_i values[i] (t + shift)^i, same length."""
    out = np.zeros_like(values, dtype=float)
    for v in values[::-1]:
        # out <- out * (t + shift) + v; the top coefficient is zero before
        # the final multiply, so the degree never overflows the buffer.
        out[1:] = out[:-1] + shift * out[1:]
        out[0] = shift * out[0] + v
    return out


def depress(pres: PrincipalPresentation) -> tuple[PrincipalPresentation, float]:
    """Shift the generator so the k^{n-1} coefficient vanishes.

    Returns the new presentation together with the shift s such that
    ``shift_element(z, s, new)`` rewrites coordinates (old k maps to k + s).
    Already-depressed input comes back unchanged with shift 0.
    """
    n = pres.degree
    shift = -pres.modulus_coeffs[-1] / n
    if shift == 0.0:
        return pres, 0.0
    full = np.append(_coeff_array(pres), 1.0)
    shifted = _taylor_shift(full, shift)
    coeffs = list(shifted[:n])
    coeffs[-1] = 0.0  # zero analytically; kill the shift's round-off residue
    label = f"{pres.label}-depressed" if pres.label else None
    return PrincipalPresentation(tuple(float(c) for c in coeffs), label), shift


def shift_element(
    z: AlgebraElement, shift: float, target: PrincipalPresentation
) -> AlgebraElement:
    """Re-express z under the substitution k -> k + shift."""
    if target.degree != z.presentation.degree:
        raise PresentationMismatch(
            f"target degree {target.degree} != element degree {z.presentation.degree}"
        )
    return AlgebraElement(target, _taylor_shift(z.coords, shift))


# -- wire formats --------------------------------------------------------------


def parse_element(pres: PrincipalPresentation, text: str) -> AlgebraElement:
    """Parse the literal "x1,x2,...,xn" (ascending powers of k)."""
    parts = [p.strip() for p in text.split(",")]
    try:
        coords = [float(p) for p in parts]
    except ValueError as exc:
        raise ValueError(f"bad element literal {text!r}: {exc}") from None
    if len(coords) != pres.degree:
        raise ValueError(
            f"element literal has {len(coords)} coordinates, expected {pres.degree}"
        )
    return AlgebraElement(pres, coords)


def element_literal(z: AlgebraElement) -> str:
    return ",".join(repr(float(x)) for x in z.coords)
