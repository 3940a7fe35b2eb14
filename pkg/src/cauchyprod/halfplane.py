"""Upper-half-plane parameterization of Cauchy laws and the Moebius group action.

A Cauchy distribution with location ``u`` and scale ``v > 0`` is encoded as the
point ``u + v*i`` of the open upper half-plane.  This module provides:

  * ``UHPoint`` / ``MoebiusMap`` / ``CanonicalForm`` -- immutable value types,
  * ``chi`` -- the scale-normalized squared parameter distance; it is invariant
    under the determinant-one fractional linear action and separates its orbits
    on pairs,
  * ``act`` / ``act_pair`` -- the action itself,
  * ``canonical_lambda`` / ``reduce_to_canonical`` -- the unique representative
    ``(lambda*i, i)`` with ``lambda >= 1`` of a pair's orbit, together with an
    explicit map reaching it.

Everything here is a pure function of immutable data and safe to call from
multiple threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "UHPoint",
    "MoebiusMap",
    "CanonicalForm",
    "chi",
    "act",
    "act_pair",
    "canonical_lambda",
    "reduce_to_canonical",
    "DET_TOL",
    "DEGENERATE_CHI",
]

# Determinant slack accepted by MoebiusMap, measured against the size of the
# products a*d and b*c (their rounding noise is what limits how precisely the
# determinant of a valid matrix can be recomputed).  Compositions renormalize,
# so drift never accumulates past this.
DET_TOL = 1e-12

# Below this chi the pair is treated as coincident: lambda is reported as 1
# exactly and no rotation is attempted (the rotation angle is pure noise there).
DEGENERATE_CHI = 1e-14


@dataclass(frozen=True)
class UHPoint:
    """A Cauchy parameter: real location and strictly positive scale."""

    location: float
    scale: float

    def __post_init__(self) -> None:
        loc = float(self.location)
        sc = float(self.scale)
        if not math.isfinite(loc):
            raise ValueError(f"location must be finite, got {self.location!r}")
        if not (math.isfinite(sc) and sc > 0.0):
            raise ValueError(f"scale must be finite and positive, got {self.scale!r}")
        object.__setattr__(self, "location", loc)
        object.__setattr__(self, "scale", sc)

    @classmethod
    def from_complex(cls, value: complex) -> "UHPoint":
        """Build a point from a complex number with positive imaginary part."""
        return cls(value.real, value.imag)

    def as_complex(self) -> complex:
        return complex(self.location, self.scale)


@dataclass(frozen=True)
class MoebiusMap:
    """A real 2x2 matrix (a, b; c, d) with determinant 1.

    Acts on the upper half-plane by z -> (a*z + b) / (c*z + d).  The
    constructor rejects matrices whose determinant strays from 1 by more than
    ``DET_TOL`` relative to the magnitude of the products a*d and b*c; use
    :meth:`normalized` to project a positive-determinant matrix onto
    determinant 1.
    """

    a: float
    b: float
    c: float
    d: float

    def __post_init__(self) -> None:
        for name in ("a", "b", "c", "d"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise ValueError(f"entry {name} must be finite, got {value!r}")
            object.__setattr__(self, name, value)
        ad = self.a * self.d
        bc = self.b * self.c
        det = ad - bc
        if abs(det - 1.0) > DET_TOL * max(1.0, abs(ad) + abs(bc)):
            raise ValueError(f"determinant must be 1 within {DET_TOL:g}, got {det!r}")

    @classmethod
    def identity(cls) -> "MoebiusMap":
        return cls(1.0, 0.0, 0.0, 1.0)

    @classmethod
    def normalized(cls, a: float, b: float, c: float, d: float) -> "MoebiusMap":
        """Rescale (a, b; c, d) by 1/sqrt(det); the determinant must be positive."""
        det = a * d - b * c
        if not (math.isfinite(det) and det > 0.0):
            raise ValueError(f"normalization needs a positive determinant, got {det!r}")
        root = math.sqrt(det)
        return cls(a / root, b / root, c / root, d / root)

    @classmethod
    def translation_scaling(cls, w: UHPoint) -> "MoebiusMap":
        """The upper-triangular map sending ``w = u + v*i`` to ``i``.

        Explicitly (1/sqrt(v), -u/sqrt(v); 0, sqrt(v)): translate the location
        away, then rescale so the image lands on the unit-scale axis point.
        """
        root = math.sqrt(w.scale)
        inv = 1.0 / root
        # b is built as -(u * a) so that a*u + b vanishes exactly in floats.
        return cls(inv, -(w.location * inv), 0.0, root)

    @classmethod
    def rotation(cls, theta: float) -> "MoebiusMap":
        """The stabilizer of ``i``: (cos t, sin t; -sin t, cos t)."""
        return cls(math.cos(theta), math.sin(theta), -math.sin(theta), math.cos(theta))

    def inverse(self) -> "MoebiusMap":
        return MoebiusMap(self.d, -self.b, -self.c, self.a)

    def __matmul__(self, other: "MoebiusMap") -> "MoebiusMap":
        # Renormalize so chained compositions cannot drift off determinant 1.
        return MoebiusMap.normalized(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )


@dataclass(frozen=True)
class CanonicalForm:
    """Result of :func:`reduce_to_canonical`.

    ``map`` sends the original pair to ``(lam*i, i)``; ``lam >= 1`` always.
    """

    lam: float
    map: MoebiusMap

    def __post_init__(self) -> None:
        if not (math.isfinite(self.lam) and self.lam >= 1.0):
            raise ValueError(f"lam must be finite and >= 1, got {self.lam!r}")


def chi(z: UHPoint, w: UHPoint) -> float:
    """Scale-normalized squared distance between two Cauchy parameters.

    ``chi((u1, v1), (u2, v2)) = ((u1 - u2)**2 + (v1 - v2)**2) / (v1 * v2)``.

    Symmetric (exactly, including in floating point), zero precisely when the
    parameters coincide (in floats, also when both differences are so small
    their squares underflow, roughly 1e-154 at unit scales), and invariant
    under :func:`act_pair` with any determinant-one map.  It separates
    orbits: two pairs are related by a common map exactly when their values
    agree.
    """
    dl = z.location - w.location
    ds = z.scale - w.scale
    return (dl * dl + ds * ds) / (z.scale * w.scale)


def act(m: MoebiusMap, z: UHPoint) -> UHPoint:
    """Apply ``(a*z + b) / (c*z + d)`` to a point.

    The image scale is computed directly as ``scale / |c*z + d|**2``, which is
    strictly positive in exact and floating-point arithmetic alike, so the
    result never leaves the parameter space.
    """
    u, v = z.location, z.scale
    den_re = m.c * u + m.d
    den_im = m.c * v
    den2 = den_re * den_re + den_im * den_im
    num_re = m.a * u + m.b
    num_im = m.a * v
    return UHPoint((num_re * den_re + num_im * den_im) / den2, v / den2)


def act_pair(m: MoebiusMap, z: UHPoint, w: UHPoint) -> tuple[UHPoint, UHPoint]:
    """Apply one map to both members of a pair (the orbit motion chi is blind to)."""
    return act(m, z), act(m, w)


def canonical_lambda(t):
    """The unique ``lam >= 1`` with ``(lam - 1)**2 / lam == t``.

    Accepts a scalar or ndarray of non-negative values.  Uses the
    cancellation-free root ``1 + t/2 + sqrt(t*(t + 4))/2``; above ``t = 1e16``
    the root equals ``t + 2`` to double precision (the remaining correction
    ``-1/(t + 2)`` is below one ulp), which also avoids overflow in ``t*(t+4)``.

    Raises:
        ValueError: if any value is negative or not finite.
    """
    arr = np.asarray(t, dtype=float)
    if not np.all(np.isfinite(arr)) or np.any(arr < 0.0):
        raise ValueError("t must be finite and non-negative")
    capped = np.minimum(arr, 1e16)
    lam = np.where(
        arr > 1e16,
        arr + 2.0,
        1.0 + 0.5 * capped + 0.5 * np.sqrt(capped * (capped + 4.0)),
    )
    if arr.ndim == 0:
        return float(lam)
    return lam


def reduce_to_canonical(z: UHPoint, w: UHPoint) -> CanonicalForm:
    """Find a determinant-one map sending ``(z, w)`` to the axis pair ``(lam*i, i)``.

    Built in two stages: :meth:`MoebiusMap.translation_scaling` sends ``w`` to
    ``i``, then a rotation about ``i`` moves the image of ``z`` onto the
    imaginary axis.  Of the two rotations that do so (a quarter turn apart),
    the one whose image scale is >= 1 is selected, so ``lam >= 1`` always.

    The reported ``lam`` is ``canonical_lambda(chi(z, w))``; applying the map
    to the pair reproduces ``(lam*i, i)`` up to roundoff.  Pairs with
    ``chi < DEGENERATE_CHI`` are treated as coincident: ``lam = 1`` with the
    translation-scaling map alone.
    """
    t = chi(z, w)
    base = MoebiusMap.translation_scaling(w)
    if t < DEGENERATE_CHI:
        return CanonicalForm(1.0, base)
    zp = act(base, z)
    x, y = zp.location, zp.scale
    # The rotated image has zero location when tan(2*theta) = 2x/(x^2 + y^2 - 1).
    # atan2 also settles the boundary case x^2 + y^2 = 1, where theta = pi/4.
    theta = 0.5 * math.atan2(2.0 * x, x * x + y * y - 1.0)
    rot = MoebiusMap.rotation(theta)
    if act(rot, zp).scale < 1.0:
        rot = MoebiusMap.rotation(theta + 0.5 * math.pi)
    return CanonicalForm(canonical_lambda(t), rot @ base)
