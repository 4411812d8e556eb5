"""Frame bounds of finite exponential systems, three ways.

The optimal bounds are the extreme eigenvalues of the weighted Gram matrix.
A randomized Rayleigh-quotient search gives an independent bracket, and a
sliding-window count shows how frequency sets thin out at large scale.
"""
from fractions import Fraction as F

from spectraforge import (
    AtomicMeasure,
    ExponentialSystem,
    beurling_lower_density_proxy,
    find_riesz_spectrum,
    frame_bounds,
    is_riesz_spectrum,
    random_vector_bounds,
    selfsimilar_spectrum,
    SelfSimilarMeasure,
)

# two atoms, unequal weights: still a Riesz basis, no longer orthonormal
measure = AtomicMeasure((F(0), F(1)), (F(1, 3), F(2, 3)))
system = ExponentialSystem(measure, (F(0), F(1, 2)))
fb = frame_bounds(system)
print(f"weights (1/3, 2/3), frequencies (0, 1/2):")
print(f"   bounds = ({fb.lower:.12f}, {fb.upper:.12f})  <- exactly (2/3, 4/3)")
print(f"   condition number {fb.condition_number:.3f},"
      f" riesz: {is_riesz_spectrum(system)}")

lo, hi = random_vector_bounds(system, trials=500, seed=1)
print(f"   random-vector bracket: [{lo:.12f}, {hi:.12f}]")

# add a third frequency: redundancy widens the upper bound, basis is lost
redundant = ExponentialSystem(measure, (F(0), F(1, 3), F(1, 2)))
fb2 = frame_bounds(redundant)
print(f"\nadding frequency 1/3: bounds ({fb2.lower:.4f}, {fb2.upper:.4f}),"
      f" riesz: {is_riesz_spectrum(redundant)}")

# basis search for uniform atoms: deterministic equispaced nodes work
for atoms in ([0, 1], [0, 2], [0, 1, 5]):
    lam = find_riesz_spectrum(atoms)
    print(f"\nriesz frequencies for uniform atoms {atoms}:"
          f" {[str(x) for x in lam]}")

# randomized search with a fixed seed is reproducible
lam = find_riesz_spectrum([0, 3, 7], strategy="random", seed=11)
print(f"random search for (0,3,7): {[str(x) for x in lam]}")

# density: integer-like sets keep density, lacunary towers lose it
print("\nsliding-window lower density (window [0, 256]):")
integers = [F(k) for k in range(257)]
tower = selfsimilar_spectrum(SelfSimilarMeasure((0, 2), 4), 4)
for name, freqs in [("integers", integers), ("depth-4 tower", tower)]:
    rows = beurling_lower_density_proxy(freqs, (0, 256), [16.0, 32.0, 64.0])
    shown = ", ".join(f"h={h:g}: {d:.3f}" for h, d in rows)
    print(f"   {name:13s} {shown}")
print("   (the tower has arbitrarily long gaps: its true lower density is 0)")
