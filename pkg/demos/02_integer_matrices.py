"""Exact integer linear algebra: Smith form, minors, cokernels.

Everything runs over arbitrary-precision integers; the minor-gcd
enumeration doubles as an independent oracle for the Smith form.
"""

from trisect import (cokernel, fib_gstep, hadamard_holds, max_abs_minor,
                     minors_gcd_enumerated, snf)

m = [[2, 4, 4], [-6, 6, 12], [10, 4, 16]]
result = snf(m)
print("matrix:", m)
print("invariant factors:", result.invariant_factors, "rank:", result.rank)

print("\ndeterminantal divisors vs factor products:")
for k in (1, 2, 3):
    print(f"  k={k}: gcd of k x k minors = {minors_gcd_enumerated(m, k)}, "
          f"d_1...d_k = {result.factor_product(k)}, "
          f"largest |minor| = {max_abs_minor(m, k)}")

print("\ncokernels as abelian groups, (free rank, torsion):")
for rows in ([[2]], [[2, 0, 0]], [[0], [0]], [[2, 0], [0, 4]]):
    print(f"  {rows} -> {cokernel(rows)}")

print("\nHadamard certificate on a lopsided matrix:",
      hadamard_holds([[3, 1], [2, 2]]))

print("\ng-step Fibonacci prefixes (growth envelopes for walk entries):")
for g in (1, 2, 3, 5):
    print(f"  g={g}:", [fib_gstep(g, n) for n in range(9)])
