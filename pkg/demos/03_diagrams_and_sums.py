"""Building and validating trisection diagrams.

The stock diagrams realize the manifolds with zero-length loops; block
joins give their connected sums, and stabilization trades genus for
signature.  Validation checks that every pairwise intersection matrix
presents the right free abelian group.
"""

from trisect import (connected_sum, spun_lens, stabilize, standard_diagram,
                     validate)

print("Stock diagrams:")
for name in ("S4", "S1xS3", "CP2", "CP2bar", "S2xS2"):
    d = standard_diagram(name)
    print(f"  {name:7s} signature {d.signature.to_json()} "
          f"valid={validate(d).passed}")

cp2 = standard_diagram("CP2")
s2s2 = standard_diagram("S2xS2")
both = connected_sum(cp2, s2s2)
print(f"\nCP2 # S2xS2: signature {both.signature.to_json()}, "
      f"valid={validate(both).passed}")
print("  pairing matrix (alpha, beta):", both.pairing_matrix("alpha_beta"))

print("\nStabilizing CP2 in each slot:")
for which in (1, 2, 3):
    st = stabilize(cp2, which)
    print(f"  slot {which}: {st.signature.to_json()} "
          f"valid={validate(st).passed}")

print("\nSpun lens spaces (genus 3, one dotted curve):")
for p in (2, 3, 5):
    d = spun_lens(p, 1)
    print(f"  p={p}: signature {d.signature.to_json()} "
          f"valid={validate(d).passed}")

print("\nA deliberately wrong signature is caught:")
bad = standard_diagram("CP2")
data = bad.to_json()
data["signature"] = [1, 1, 1, 1]
from trisect import TrisectionDiagram
report = validate(TrisectionDiagram.from_json(data))
for name, detail in report.failures():
    print(f"  FAIL {name}: {detail}")
