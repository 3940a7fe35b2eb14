"""Divergences between Cauchy measures: closed forms and pointwise ratios.

Every quantity here depends on a parameter pair only through ``chi`` from
:mod:`cauchyprod.halfplane`, which is what makes the closed forms possible:

  * Kullback-Leibler divergence: ``log(1 + chi/4)``, symmetric in its
    arguments.
  * Hellinger affinity ``integral sqrt(p_z * p_w)``: reducing the pair to the
    canonical axis form ``(lam*i, i)`` turns the integral into a complete
    elliptic integral, which the AGM evaluates; the value is
    ``1 / (sqrt(lam) * agm(1, 1/lam))`` with ``lam = canonical_lambda(chi)``.
  * The Kakutani summand ``-log(affinity)``, computed in log form to keep
    precision when the affinity is close to 1.

These closed forms are cross-validated against adaptive quadrature of the
defining integrals in the test suite; the quadrature route stays available
through :mod:`cauchyprod.numerics` and is never replaced by them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .halfplane import UHPoint, canonical_lambda, chi
from .numerics import agm

__all__ = [
    "DivergencePair",
    "cauchy_pdf",
    "kl_divergence",
    "log_density_ratio",
    "log_ratio_bound",
    "affinity_from_chi",
    "hellinger_affinity",
    "kakutani_from_chi",
    "kakutani_term",
    "SMALL_CHI",
]

# Below this chi the Kakutani summand is reported as chi/8: the true value
# (~ chi/16) cannot be resolved in double precision through the AGM route, and
# chi/8 is a valid upper bound via the divergence chain.
SMALL_CHI = 1e-12

_PAIR_CHI_RTOL = 1e-12


@dataclass(frozen=True)
class DivergencePair:
    """A parameter pair with its chi value cached and validated.

    Construct with :meth:`of`; hand-built instances must carry a ``chi_value``
    within 1e-12 relative of the recomputed one.
    """

    z: UHPoint
    w: UHPoint
    chi_value: float

    def __post_init__(self) -> None:
        actual = chi(self.z, self.w)
        if not abs(self.chi_value - actual) <= _PAIR_CHI_RTOL * max(actual, abs(self.chi_value)):
            raise ValueError(
                f"cached chi {self.chi_value!r} disagrees with recomputed {actual!r}"
            )

    @classmethod
    def of(cls, z: UHPoint, w: UHPoint) -> "DivergencePair":
        return cls(z, w, chi(z, w))

    @property
    def kl(self) -> float:
        return math.log1p(0.25 * self.chi_value)

    @property
    def affinity(self) -> float:
        return affinity_from_chi(self.chi_value)

    @property
    def kakutani(self) -> float:
        return kakutani_from_chi(self.chi_value)


def cauchy_pdf(z: UHPoint, x):
    """Density of the Cauchy law with parameter ``z`` at ``x`` (scalar or ndarray).

    ``scale / (pi * ((x - location)**2 + scale**2))``; at the location of a
    unit-scale law this is 1/pi.
    """
    arr = np.asarray(x, dtype=float)
    dx = arr - z.location
    out = z.scale / (math.pi * (dx * dx + z.scale * z.scale))
    if arr.ndim == 0:
        return float(out)
    return out


def kl_divergence(z: UHPoint, w: UHPoint) -> float:
    """Kullback-Leibler divergence between the laws of ``z`` and ``w``.

    Equal to ``log(1 + chi(z, w)/4)`` and therefore symmetric: swapping the
    arguments returns the identical float.
    """
    return math.log1p(0.25 * chi(z, w))


def log_density_ratio(z: UHPoint, w: UHPoint, x):
    """``log(p_w(x) / p_z(x))`` evaluated stably (scalar or ndarray in ``x``).

    The quadratics are evaluated through ``hypot``, so even ``x`` near the
    float maximum cannot overflow, and coincident parameters give exactly
    zero.  As ``|x| -> infinity`` the value tends to ``log(w.scale/z.scale)``.
    """
    arr = np.asarray(x, dtype=float)
    dz = arr - z.location
    dw = arr - w.location
    out = (
        math.log(w.scale)
        - math.log(z.scale)
        + 2.0 * (np.log(np.hypot(dz, z.scale)) - np.log(np.hypot(dw, w.scale)))
    )
    if arr.ndim == 0:
        return float(out)
    return out


def log_ratio_bound(c1: float) -> float:
    """Uniform bound on the density ratio of any pair with ``chi <= c1``.

    With ``s = ((c1 + 2) + sqrt((c1 + 2)**2 - 4)) / 2`` bounding the scale
    ratio of such a pair, the pointwise density ratio (either direction) lies
    in ``[1/B, B]`` for ``B = 2*s + c1``, uniformly in x.  Consequently every
    log-ratio increment satisfies ``|log ratio| <= log(B)``.

    Returns B, which is 2 at ``c1 = 0`` and increases with ``c1``.
    """
    if not (math.isfinite(c1) and c1 >= 0.0):
        raise ValueError("c1 must be finite and non-negative")
    base = c1 + 2.0
    scale_ratio = 0.5 * (base + math.sqrt(base * base - 4.0))
    return 2.0 * scale_ratio + c1


def affinity_from_chi(t):
    """Hellinger affinity ``integral sqrt(p_z * p_w)`` as a function of chi alone.

    ``1 / (sqrt(lam) * agm(1, 1/lam))`` with ``lam = canonical_lambda(t)``.

    Equals 1 at ``t = 0``, is strictly decreasing, and tends to 0 as
    ``t -> infinity`` (for ``t >= 1e6`` the value is already below 0.05).
    Accepts scalars or ndarrays of non-negative values.
    """
    lam = canonical_lambda(t)
    arr = np.asarray(lam, dtype=float)
    out = 1.0 / (np.sqrt(arr) * agm(np.ones_like(arr), 1.0 / arr))
    if np.asarray(t).ndim == 0:
        return float(out)
    return out


def hellinger_affinity(z: UHPoint, w: UHPoint) -> float:
    """Hellinger affinity of a concrete pair; 1 exactly when the laws coincide."""
    return affinity_from_chi(chi(z, w))


def kakutani_from_chi(t):
    """The summand ``-log(affinity)`` as a function of chi (scalar or ndarray).

    Computed as ``log(lam)/2 + log(agm(1, 1/lam))`` rather than through the
    affinity itself, which would lose all digits once the affinity rounds to 1.
    Below ``SMALL_CHI`` even the log form cannot resolve the true value
    (~ chi/16), so the chain upper bound chi/8 is returned instead; the
    substitution overshoots the true summand by about chi/16 and sits above
    kl/2 by at most chi**2/64 (~ 1e-26 at the threshold).
    """
    arr = np.asarray(t, dtype=float)
    lam = np.asarray(canonical_lambda(arr), dtype=float)
    exact = 0.5 * np.log(lam) + np.log(agm(np.ones_like(lam), 1.0 / lam))
    out = np.where(arr < SMALL_CHI, 0.125 * arr, exact)
    if arr.ndim == 0:
        return float(out)
    return out


def kakutani_term(z: UHPoint, w: UHPoint) -> float:
    """``-log`` of the Hellinger affinity of a pair; the product-measure summand.

    Non-negative, zero exactly at coincident parameters, and dominated by the
    chain ``kakutani_term <= kl/2 <= chi/8`` termwise.
    """
    return kakutani_from_chi(chi(z, w))
