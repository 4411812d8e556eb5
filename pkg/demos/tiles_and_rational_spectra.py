"""Integer digit sets that tile {0..n-1}, and their rational spectra.

Walks through the complement search, the two prime-power conditions on the
digit polynomial, and the explicit spectrum built from the cyclotomic
divisors.  Everything here is exact integer/rational arithmetic.
"""
from spectraforge import (
    laba_spectrum,
    long_decomposition,
    prime_power_divisors,
    satisfies_t1,
    satisfies_t2,
    tile_certificate,
    tiling_complement,
)

candidates = [
    ((0, 1, 2, 3), 4),
    ((0, 2), 4),
    ((0, 3), 4),         # does not tile N_4 (it does tile N_6)
    ((0, 3), 6),
    ((0, 1, 4, 5), 8),
    ((0, 1, 8, 9), 16),
    ((0, 2, 4), 9),      # wrong cardinality for the modulus
]

for digits, n in candidates:
    B = tiling_complement(digits, n)
    print(f"A = {digits} vs N_{n}:")
    if B is None:
        print("   no complement exists\n")
        continue
    print(f"   complement B = {B}  (unique: the greedy choice is forced)")
    S = prime_power_divisors(digits)
    print(f"   prime-power cyclotomic divisors of the digit polynomial: {S}")
    print(f"   size condition: {satisfies_t1(digits)},"
          f" product condition: {satisfies_t2(digits)}")
    lam = laba_spectrum(digits)
    print(f"   spectrum from the divisors: {[str(x) for x in lam]}")
    denominators = sorted({x.denominator for x in lam})
    print(f"   spectrum denominators {denominators} all divide n = {n}\n")

# A certificate object bundles all of the above, with the orthogonality of
# the spectrum re-verified pair by pair before it is attached.
cert = tile_certificate((0, 1, 4, 5), 8)
print("certificate for (0,1,4,5) mod 8:")
print("   complement:", cert.complement)
print("   spectrum:", [str(x) for x in cert.spectrum])

# Tiles of N_n decompose: A = m*A' + {0..m-1} against B = m*B', recursively.
m, A2, B2 = long_decomposition((0, 1, 4, 5), (0, 2), 8)
print(f"\n(0,1,4,5) + (0,2) = N_8 peels off m = {m}: A' = {A2}, B' = {B2}")
