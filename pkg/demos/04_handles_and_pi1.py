"""From an annotated diagram to handle data and group conclusions.

Alpha curves parallel to their beta partners become dotted circles;
their pairings against gamma form the linking matrix presenting the
first homology.  The relation-word classifier reproduces the structural
verdicts available when at most one move happens on the alpha side.
"""

from trisect import (build_skeleton, classify_low_alpha, connected_sum,
                     find_canceling_pairs, homology_order, pi1_from_epsilons,
                     spun_lens, standard_diagram)

print("Skeletons and homology orders:")
for label, d in [("S1xS3", standard_diagram("S1xS3")),
                 ("CP2", standard_diagram("CP2")),
                 ("S(L(2,1))", spun_lens(2, 1)),
                 ("S(L(3,1))", spun_lens(3, 1)),
                 ("S(L(2,1)) # S(L(3,1))",
                  connected_sum(spun_lens(2, 1), spun_lens(3, 1)))]:
    sk = build_skeleton(d)
    order = homology_order(sk)
    print(f"  {label:22s} dotted {sk.dotted} "
          f"linking {sk.linking.tolist()} |H1| = "
          f"{'infinite' if order is None else order}")

print("\nCanceling pairs of the spun lens diagram (no geometry given):")
print(" ", find_canceling_pairs(spun_lens(2, 1)))

print("\nVerdicts from relation words (beta ~ alpha [~ alpha'] ~ gamma):")
for words, eps in [(["PP", "DD"], None),
                   (["PD", "DD"], None),
                   (["PPD", "DNP"], None),
                   (["PPD", "DPP", "PNP"], None),
                   (["DPD", "PNP"], [1, None]),
                   (["DPD", "PNP"], [0, None])]:
    result = classify_low_alpha(words, eps=eps)
    print(f"  {str(words):28s} eps={eps} -> {result}")

print("\nOne-generator groups from relator exponents:")
for eps, canceled in [([1, 0], ()), ([0, 0], ()), ([1, -1, 0], {0, 1})]:
    print(f"  eps={eps}, canceled={set(canceled)} ->",
          pi1_from_epsilons(eps, canceled).kind)
