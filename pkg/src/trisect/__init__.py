"""Exact homological calculator for trisection diagrams of 4-manifolds.

The package models diagrams at the level of first homology of the
central surface: cut systems are Lagrangian bases, the two elementary
replacements act on them, annotated diagrams yield dotted/framed linking
data, explicit loops through the three subgraphs are validated edge by
edge, and finite homology orders translate into lower bounds on the
minimal loop length.
"""

from .bounds import (BoundReport, case2_closed_form, homology_lower_bound,
                     structural_lower_bound)
from .diagram import (GeomIntersections, PairAnnotation, TrisectionDiagram,
                      TrisectionSignature, ValidationReport, connected_sum,
                      good_pair_check, load_diagram, save_diagram, spun_lens,
                      stabilize, standard_diagram, validate)
from .errors import (BadEdge, BadJunction, BadSegment, InvalidInput,
                     MissingAnnotation, MissingGeometry, NoNegativeSubarc,
                     NotGood, NotPrimitive, TrisectError, ViolatedD,
                     ViolatedLagrangian)
from .homology import (CutSystem, HomologyClass, SymplecticSpace, Type0Move,
                       canonical_form, is_cut_system, pairing, type0_move,
                       type1_move)
from .kirby import (CaseCertificate, KirbySkeleton, Pi1Report, build_skeleton,
                    classify_low_alpha, find_canceling_pairs, homology_order,
                    pi1_from_epsilons)
from .loops import (LengthReport, LoopEdge, LoopSpec, LoopVertex, load_loop,
                    spun_lens_witness_loop, standard_loop, validate_loop)
from .signwords import subarc_profile, wave_reduce
from .walks import (WalkTrace, check_entry_bounds, run_entry_bound_trials,
                    verify_row_stability, walk_trace)
from .zmatrix import (FibGStep, IntMatrix, SnfResult, cokernel, fib_gstep,
                      hadamard_holds, max_abs_minor, minors_gcd,
                      minors_gcd_enumerated, snf)

__version__ = "0.1.0"
