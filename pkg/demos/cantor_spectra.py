"""Spectra of self-similar Cantor-type measures, exactly.

The scale-4 measure with digits {0,2} has an integer orthonormal spectrum
built as a tower of base-4 digits.  The scale-6 analogue admits no integer
spectrum at all: each candidate integer leaves 3/2 orthogonal to everything.
Both facts reduce to membership in an explicit zero set, decided in integer
arithmetic here.
"""
from fractions import Fraction as F

from spectraforge import (
    EvalPolicy,
    SelfSimilarMeasure,
    approximate_atoms,
    ft_selfsimilar,
    jp_scan,
    selfsimilar_spectrum,
    zero_set_descriptor,
    zeroset_membership,
)

mu = SelfSimilarMeasure((0, 2), 4)
print("scale-4 measure, digits {0,2}")

d = zero_set_descriptor(mu)
print(f"   transform zero set: scale^j * ({[str(z) for z in d.base_zeros]} + Z),"
      f" j >= 1  (= 4^j * odd)")
print("   membership: 1 ->", zeroset_membership(d, 1),
      "  2 ->", zeroset_membership(d, 2),
      "  48 ->", zeroset_membership(d, 48))

for J in (1, 2, 3):
    lam = selfsimilar_spectrum(mu, J)
    print(f"   tower depth {J}: {[int(x) for x in lam]}")

# the certified transform: infinite product truncated with an error bound
policy = EvalPolicy(truncation_depth=30)
for xi in (F(1), F(3, 2), F(16)):
    value, err = ft_selfsimilar(mu, xi, policy)
    print(f"   transform at {xi}: {value:.6f} (certified error {err:.1e})")

# orthonormality scan: the level-J atoms against the depth-J tower give
# Q identically 1; scanning the true measure against a finite section dips
# below 1 but never above
grid = [F(k, 128) for k in range(128)]
level = approximate_atoms(mu, 4)
res = jp_scan(level, selfsimilar_spectrum(mu, 4), grid, policy)
print(f"   level-4 atoms vs depth-4 tower: max|Q-1| = {res.max_abs_deviation:.2e}")
res = jp_scan(mu, selfsimilar_spectrum(mu, 4), grid, policy)
print(f"   true measure vs depth-4 tower:  max(Q)-1 = {res.max_above_one:.2e},"
      f" bessel_ok = {res.bessel_ok}")

print("\nscale-6 measure, digits {0,2}")
mu6 = SelfSimilarMeasure((0, 2), 6)
d6 = zero_set_descriptor(mu6)
print("   zero set: 6^j * ({1/4, 3/4} + Z), j >= 1 -- never hits 1/2 mod 1")
print("   3/2 is a zero:", zeroset_membership(d6, F(3, 2)))
lam = 9  # a typical integer zero: 9 = 6^2 / 4
print(f"   {lam} is a zero:", zeroset_membership(d6, lam),
      f"  and 3/2 - {lam} is too:", zeroset_membership(d6, F(3, 2) - lam))
print("   every integer zero lambda leaves 3/2 - lambda inside the zero set,")
print("   so no integer set can be complete: any spectrum must leave Z.")
