"""Handle-diagram data extracted from an annotated trisection diagram.

Every alpha curve parallel to its beta partner becomes a dotted
(1-handle) circle; every gamma curve is a framed (2-handle) knot.  The
package records only the linking data between the two families, which is
the pairing submatrix on dotted rows; that is all the first-homology and
fundamental-group arguments consume.  Framing integers depend on a
surface embedding and are deliberately not modelled.
"""

from dataclasses import dataclass
from math import gcd

from .errors import InvalidInput, MissingAnnotation, MissingGeometry
from .diagram import PARALLEL, good_pair_check
from .homology import pairing
from .zmatrix import IntMatrix, snf

TRIVIAL = "trivial"
INFINITE_CYCLIC = "infinite_cyclic"
FINITE_CYCLIC = "finite_cyclic"
UNKNOWN = "unknown"

SUMMAND_S1XS3 = "s1xs3_summand"
GEOM_SIMPLY_CONNECTED = "geom_simply_connected"
NO_CONCLUSION = "no_conclusion"


@dataclass(frozen=True)
class KirbySkeleton:
    """Dotted-circle indices plus the dotted-vs-framed linking matrix."""

    genus: int
    dotted: tuple
    linking: IntMatrix

    @property
    def framed(self):
        return tuple(range(self.genus))

    def to_json(self):
        return {"genus": self.genus,
                "dotted": list(self.dotted),
                "linking": self.linking.to_json()}


@dataclass(frozen=True)
class Pi1Report:
    """A one-generator description of the fundamental group."""

    kind: str
    order: int = None
    presentation: str = None

    def __post_init__(self):
        if self.kind not in (TRIVIAL, INFINITE_CYCLIC, FINITE_CYCLIC, UNKNOWN):
            raise InvalidInput(f"unknown pi1 kind {self.kind!r}")
        if self.kind == FINITE_CYCLIC and (self.order is None or self.order < 2):
            raise InvalidInput("finite cyclic reports need order >= 2")

    def to_json(self):
        out = {"kind": self.kind}
        if self.order is not None:
            out["order"] = self.order
        if self.presentation is not None:
            out["presentation"] = self.presentation
        return out


@dataclass(frozen=True)
class CaseCertificate:
    """Which structural conclusion fired, with the witnessing indices."""

    verdict: str
    witness: str
    indices: tuple = ()

    def to_json(self):
        return {"verdict": self.verdict, "witness": self.witness,
                "indices": list(self.indices)}


def _checked_alpha_beta(diagram):
    ann = diagram.annotation("alpha_beta")
    if ann is None:
        raise MissingAnnotation("diagram carries no (alpha, beta) annotation")
    if not good_pair_check(diagram.alpha, diagram.beta, ann):
        raise InvalidInput("(alpha, beta) annotation fails its invariants")
    return ann


def build_skeleton(diagram):
    """Extract the dotted/framed linking data from an annotated diagram.

    The dotted rows are exactly the alpha indices labelled parallel in
    the (alpha, beta) annotation; entry (i, j) is the pairing of that
    alpha curve with the j-th gamma curve.
    """
    ann = _checked_alpha_beta(diagram)
    g = diagram.space.genus
    dotted = tuple(i for i in range(g) if ann.labels[i] == PARALLEL)
    rows = [[pairing(diagram.alpha[i], diagram.gamma[j]) for j in range(g)]
            for i in dotted]
    linking = (IntMatrix.from_rows(rows) if dotted
               else IntMatrix.zero(0, g))
    return KirbySkeleton(genus=g, dotted=dotted, linking=linking)


def homology_order(skeleton):
    """|H_1| presented by the linking matrix, or None when infinite.

    The linking matrix acts Z^g -> Z^k; the order is the product of its
    invariant factors when the rank is full, and 1 for k = 0.
    """
    k = len(skeleton.dotted)
    if k == 0:
        return 1
    result = snf(skeleton.linking)
    if result.rank < k:
        return None
    order = 1
    for d in result.invariant_factors:
        order *= d
    return order


def find_canceling_pairs(diagram, require_independence=False):
    """All (dotted index, framed index) pairs linking exactly once.

    The third component tells whether the cancellation is independent of
    the remaining components: the dotted curve must meet no gamma curve
    geometrically except its partner, exactly once.  That needs the
    (gamma, alpha) count matrix; without it the flag is None, or
    MissingGeometry is raised when ``require_independence`` is set.
    """
    ann = _checked_alpha_beta(diagram)
    g = diagram.space.genus
    geom = diagram.geom.matrix("gamma_alpha") if diagram.geom else None
    if require_independence and geom is None:
        raise MissingGeometry("independence needs (gamma, alpha) counts")
    pairs = []
    for i in range(g):
        if ann.labels[i] != PARALLEL:
            continue
        for j in range(g):
            if abs(pairing(diagram.alpha[i], diagram.gamma[j])) != 1:
                continue
            if geom is None:
                independent = None
            else:
                independent = all(
                    geom[jj][i] == (1 if jj == j else 0) for jj in range(g))
            pairs.append((i, j, independent))
    return pairs


def pi1_from_epsilons(eps, canceled=()):
    """Group presented by one generator x with relators x**e.

    Relators at canceled indices are dropped.  The result is the cyclic
    group of order gcd of the surviving exponents: trivial for gcd 1,
    infinite cyclic for gcd 0 (all surviving exponents vanish, or none
    survive).

    >>> pi1_from_epsilons([1, 0]).kind
    'trivial'
    >>> pi1_from_epsilons([1, -1, 0], canceled={0, 1}).kind
    'infinite_cyclic'
    """
    canceled = set(canceled)
    survivors = [int(e) for i, e in enumerate(eps) if i not in canceled]
    order = 0
    for e in survivors:
        order = gcd(order, e)
    relators = ", ".join(f"x^{e}" for e in survivors) or "(no relators)"
    presentation = f"<x | {relators}>"
    if order == 0:
        return Pi1Report(INFINITE_CYCLIC, presentation=presentation)
    if order == 1:
        return Pi1Report(TRIVIAL, presentation=presentation)
    return Pi1Report(FINITE_CYCLIC, order=order, presentation=presentation)


def _parse_words(words):
    words = [str(w).upper() for w in words]
    if not words:
        raise InvalidInput("need at least one relation word")
    lengths = {len(w) for w in words}
    if lengths == {2}:
        for w in words:
            if any(c not in "PD" for c in w):
                raise InvalidInput(f"bad two-letter word {w!r}")
        return 0, words, None
    if lengths != {3}:
        raise InvalidInput("words must be uniformly two or three letters")
    moved = [i for i, w in enumerate(words) if w[1] == "N"]
    for w in words:
        if w[0] not in "PD" or w[2] not in "PD" or w[1] not in "PN":
            raise InvalidInput(f"bad three-letter word {w!r}")
    if len(moved) != 1:
        raise InvalidInput("exactly one index must carry the moved slot")
    return 1, words, moved[0]


def classify_low_alpha(words, eps=None):
    """Decision table for loops with at most one move on the alpha side.

    Each index contributes a relation word read along beta ~ alpha [~
    alpha'] ~ gamma: two letters from {P, D} when the alpha side is a
    single vertex, three letters with 'N' in the middle slot at exactly
    the moved index otherwise.  Returns a CaseCertificate naming the
    structural conclusion, or a Pi1Report when only the fundamental
    group can be pinned down; in that last case ``eps`` supplies the
    pairing of the moved alpha curve with each gamma curve.
    """
    length, words, moved = _parse_words(words)
    if length == 0:
        hits = [i for i, w in enumerate(words) if w == "PP"]
        if hits:
            return CaseCertificate(
                SUMMAND_S1XS3, "splittable dotted circle", tuple(hits))
        dotted = tuple(i for i, w in enumerate(words) if w == "PD")
        if dotted:
            return CaseCertificate(
                GEOM_SIMPLY_CONNECTED,
                "all dotted circles cancel independently", dotted)
        return CaseCertificate(
            GEOM_SIMPLY_CONNECTED, "no dotted circles", ())

    hits = [i for i, w in enumerate(words) if i != moved and w == "PPP"]
    if hits:
        return CaseCertificate(
            SUMMAND_S1XS3, "splittable dotted circle", tuple(hits))
    end_word = words[moved]
    if end_word == "DNP":
        return CaseCertificate(
            GEOM_SIMPLY_CONNECTED,
            "all dotted circles cancel independently", (moved,))
    if end_word == "PND":
        return CaseCertificate(
            GEOM_SIMPLY_CONNECTED,
            "cancellation after cyclically relabelling the systems", (moved,))
    if end_word == "DND":
        return CaseCertificate(
            GEOM_SIMPLY_CONNECTED,
            "cancellations that may drag the last framed knot", (moved,))
    # end word PNP
    others = [w for i, w in enumerate(words) if i != moved]
    if all(w in ("PPD", "DPP") for w in others):
        return CaseCertificate(
            SUMMAND_S1XS3,
            "last dotted circle splits after independent cancellations",
            (moved,))
    canceled = {i for i, w in enumerate(words) if i != moved and w == "PPD"}
    relators = []
    for i, w in enumerate(words):
        supplied = None if eps is None else eps[i]
        if supplied is not None and int(supplied) not in (-1, 0, 1):
            raise InvalidInput("eps entries must lie in {-1, 0, 1}")
        if w[2] == "P" or i == moved:
            # a parallel gamma partner pairs to zero with the moved curve
            if supplied is not None and int(supplied) != 0:
                raise InvalidInput(
                    f"index {i}: nonzero eps contradicts its parallel label")
            relators.append(0)
        elif i in canceled:
            relators.append(0)
        else:
            if supplied is None:
                return Pi1Report(UNKNOWN)
            relators.append(int(supplied))
    return pi1_from_epsilons(relators, canceled)
