"""Tour of the exact surface-homology layer.

The genus-g surface's first homology is Z^{2g} with the standard
symplectic pairing.  Cut systems are Lagrangian bases; two elementary
replacements move between them.
"""

from trisect import (CutSystem, SymplecticSpace, Type0Move, is_cut_system,
                     pairing, type0_move, type1_move)

space = SymplecticSpace(2)
a1, b1, a2, b2 = space.a(0), space.b(0), space.a(1), space.b(1)

print("Pairings in the standard basis:")
print("  <a1, b1> =", pairing(a1, b1))
print("  <b1, a1> =", pairing(b1, a1))
print("  <a1, b2> =", pairing(a1, b2))
print("  <a1 + b2, b1 - a2> =", pairing(a1 + b2, b1 - a2))

print("\nCut system tests (Lagrangian + primitive basis):")
for label, classes in [
        ("(a1, a2)", [a1, a2]),
        ("(a1, a1)", [a1, a1]),
        ("(2a1, b2)", [2 * a1, b2]),
        ("(a1 + b2, a2 + b1)", [a1 + b2, a2 + b1])]:
    cs = CutSystem.from_classes(classes)
    print(f"  {label:22s} ->", is_cut_system(cs))

print("\nA type-0 move keeps the tuple Lagrangian automatically:")
cs = CutSystem.from_classes([a1, a2])
moved = type0_move(cs, Type0Move(1, (1, 1)))
print("  (a1, a2) with eps=(1,1) at index 1 ->",
      [c.coeffs for c in moved], "valid:", is_cut_system(moved))

print("\nA type-1 move swaps in a curve meeting the old one once:")
swapped = type1_move(cs, 0, b1)
print("  replace a1 by b1 ->", [c.coeffs for c in swapped])
