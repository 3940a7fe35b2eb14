"""Tour of the half-plane geometry: the invariant chi and canonical reduction.

A Cauchy law with location u and scale v > 0 is the point z = u + v*i in the
upper half-plane.  Determinant-one real matrices act on these points by
Moebius maps, and the action is transitive; what it cannot change is

    chi(z, w) = ((loc_z - loc_w)**2 + (scale_z - scale_w)**2) / (scale_z * scale_w),

which separates orbits of pairs.  This script moves a pair around with random
maps, watches chi hold still, and then reduces the pair to its canonical axis
form (lam*i, i).

Run:  python3 demos/invariants_tour.py
"""

from __future__ import annotations

import math

import numpy as np

from cauchyprod import (
    MoebiusMap,
    UHPoint,
    act,
    act_pair,
    canonical_lambda,
    chi,
    reduce_to_canonical,
)


def show_invariance(z: UHPoint, w: UHPoint, seed: int = 5) -> None:
    rng = np.random.default_rng(seed)
    base = chi(z, w)
    print(f"pair     z = {z.location:+.4f} + {z.scale:.4f}i,"
          f"  w = {w.location:+.4f} + {w.scale:.4f}i")
    print(f"chi      = {base:.17g}")
    print()
    print("moving the pair with random determinant-one maps:")
    for k in range(5):
        anchor = UHPoint(rng.uniform(-10, 10), 10.0 ** rng.uniform(-1, 1))
        theta = rng.uniform(0.0, math.pi)
        m = MoebiusMap.translation_scaling(anchor) @ MoebiusMap.rotation(theta)
        z2, w2 = act_pair(m, z, w)
        moved = chi(z2, w2)
        print(f"  map {k}: z -> {z2.location:+9.4f} + {z2.scale:9.4f}i"
              f"   chi drift = {abs(moved - base) / base:.2e}")
    print()


def show_reduction(z: UHPoint, w: UHPoint) -> None:
    t = chi(z, w)
    form = reduce_to_canonical(z, w)
    iz = act(form.map, z)
    iw = act(form.map, w)
    print("canonical reduction: one map takes the pair to the imaginary axis")
    print(f"  lambda            = {form.lam:.17g}")
    print(f"  canonical_lambda  = {canonical_lambda(t):.17g}   (from chi alone)")
    print(f"  image of z        = {iz.location:+.2e} + {iz.scale:.12f}i")
    print(f"  image of w        = {iw.location:+.2e} + {iw.scale:.12f}i")
    print(f"  chi after mapping = {chi(iz, iw):.17g}")
    print()
    # The eigenvalue and chi determine each other: (lam - 1)**2 / lam = chi.
    lam = form.lam
    print(f"  round trip (lam - 1)**2 / lam = {(lam - 1.0) ** 2 / lam:.17g}")
    print(f"  original chi                  = {t:.17g}")


def main() -> None:
    z = UHPoint(3.0, 4.0)
    w = UHPoint(1.0, 2.0)
    show_invariance(z, w)
    show_reduction(z, w)


if __name__ == "__main__":
    main()
