"""Which 3- and 4-point measures carry an orthonormal exponential basis?

For uniform weights on small integer atom sets the answer is a pair of
closed-form congruence tests.  This script runs them against a brute-force
search over the mask's unit-circle zeros, found independently with numpy.
"""
import itertools
import math

import numpy as np

from spectraforge import classify_discrete, classify_4, classify_3


def mask_zero_args(atoms):
    """Arguments x in [0,1) with sum_a e^{2 pi i a x} = 0, via root finding."""
    coeffs = [0] * (max(atoms) + 1)
    for a in atoms:
        coeffs[a] = 1
    roots = np.roots(coeffs[::-1])
    return sorted((np.angle(r) / (2 * np.pi)) % 1.0
                  for r in roots if abs(abs(r) - 1) < 1e-8)


def brute_force_has_spectrum(atoms):
    zeros = mask_zero_args(atoms)

    def hit(d):
        d %= 1.0
        return any(abs(d - z) < 1e-7 or abs(d - z - 1) < 1e-7 for z in zeros)

    k = len(atoms) - 1
    for combo in itertools.combinations(zeros, k):
        if all(hit(b - a) for a, b in itertools.combinations(combo, 2)):
            return True
    return False


print("triples {0, c1, c2}, gcd 1, c2 <= 10")
print("   spectral iff c2 = 2*c1 (mod 3); spectrum is then {0, 1/3, 2/3}")
for c1 in range(1, 11):
    for c2 in range(c1 + 1, 11):
        if math.gcd(c1, c2) != 1:
            continue
        ok, lam = classify_3((0, c1, c2))
        assert ok == brute_force_has_spectrum((0, c1, c2))
        if ok:
            print(f"   (0,{c1},{c2}) -> {[str(x) for x in lam]}")

print("\nquadruples: exactly one even nonzero atom, matching 2-adic valuations")
for atoms in [(0, 1, 2, 3), (0, 1, 4, 5), (0, 1, 2, 5), (0, 1, 3, 4), (0, 2, 3, 5)]:
    ok, lam = classify_4(atoms)
    assert ok == brute_force_has_spectrum(atoms)
    desc = [str(x) for x in lam] if ok else "none"
    print(f"   {atoms} -> {desc}")

# classify_discrete dispatches on size and normalizes the gcd for you
print("\ndispatch with gcd normalization:")
for atoms in [(0, 2, 4), (0, 3), (0, 5, 10, 15), (0, 1, 3)]:
    verdict, lam, why = classify_discrete(atoms)
    shown = [str(x) for x in lam] if lam else "-"
    print(f"   {atoms}: {verdict} ({why}) spectrum {shown}")
