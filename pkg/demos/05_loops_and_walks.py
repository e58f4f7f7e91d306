"""Loops through the three subgraphs, and walk-entry growth bounds.

The stock diagrams admit loops with no moves at all: three blocks of one
vertex each, joined by the forced number of once-meeting replacements.
Walks in a single subgraph grow their pairing-matrix entries at most
like the g-step Fibonacci numbers, which the seeded harness checks on
random traces.
"""

from trisect import (CutSystem, SymplecticSpace, Type0Move, connected_sum,
                     check_entry_bounds, run_entry_bound_trials,
                     standard_diagram, standard_loop, validate_loop,
                     walk_trace)

print("Zero-length loops of the stock diagrams:")
for name in ("CP2", "S2xS2", "S1xS3"):
    d = standard_diagram(name)
    report = validate_loop(d, standard_loop(d))
    print(f"  {name:6s} -> {report.to_json()}")

d = connected_sum(standard_diagram("CP2"), standard_diagram("S2xS2"))
print("CP2 # S2xS2 ->", validate_loop(d, standard_loop(d)).to_json())

print("\nA short walk and its pairing matrices:")
space = SymplecticSpace(2)
start = CutSystem.from_classes([space.a(0), space.a(1)])
reference = CutSystem.from_classes([space.b(0), space.b(1)])
trace = walk_trace(start, reference, [Type0Move(1, (1, 1)),
                                      Type0Move(0, (1, 1)),
                                      Type0Move(1, (-1, 1))])
for h, rows in enumerate(trace.matrices):
    print(f"  step {h}: {rows}  last touch {trace.rho[h]}")
print("  entry bounds hold:", check_entry_bounds(trace))

print("\nSeeded harness, 2000 random traces:")
print(" ", run_entry_bound_trials(5, 8, 2000, seed=7))
