"""Trisection diagrams at the homological/annotation level.

A diagram is three cut systems on one surface together with the
(g; k1, k2, k3) signature.  Validation checks the homological necessary
conditions: each pairwise intersection matrix must present Z^k for the
matching k.  Matched-pair annotations (which curves are parallel, which
meet once) are caller-supplied and checked for consistency, never
inferred: parallelism is an isotopy statement that homology alone cannot
decide.
"""

import json
from dataclasses import dataclass, field
from math import gcd

from .errors import InvalidInput
from .homology import CutSystem, SymplecticSpace, is_cut_system, pairing
from .zmatrix import cokernel

PARALLEL = "P"
DUAL = "D"

#: pair key -> (first system, second system, index into signature ks)
PAIRS = {
    "alpha_beta": ("alpha", "beta", 0),
    "beta_gamma": ("beta", "gamma", 1),
    "gamma_alpha": ("gamma", "alpha", 2),
}


@dataclass(frozen=True)
class TrisectionSignature:
    g: int
    k1: int
    k2: int
    k3: int

    def __post_init__(self):
        if min(self.g, self.k1, self.k2, self.k3) < 0:
            raise InvalidInput("signature entries must be >= 0")
        if max(self.k1, self.k2, self.k3) > self.g:
            raise InvalidInput("each k must be at most the genus")

    @property
    def ks(self):
        return (self.k1, self.k2, self.k3)

    def to_json(self):
        return [self.g, self.k1, self.k2, self.k3]


@dataclass(frozen=True)
class PairAnnotation:
    """How two cut systems match curve by curve.

    ``sigma`` sends index i of the first system to its partner in the
    second; ``labels[i]`` says whether the matched curves are parallel
    (P) or meet exactly once (D); ``signs[i]`` gives the homology sign of
    a P match and is ignored at D indices.
    """

    sigma: tuple
    labels: tuple
    signs: tuple

    def __post_init__(self):
        g = len(self.sigma)
        if sorted(self.sigma) != list(range(g)):
            raise InvalidInput("sigma is not a permutation")
        if len(self.labels) != g or len(self.signs) != g:
            raise InvalidInput("labels/signs length disagrees with sigma")
        if any(l not in (PARALLEL, DUAL) for l in self.labels):
            raise InvalidInput("labels must be 'P' or 'D'")
        if any(s not in (-1, 1) for s in self.signs):
            raise InvalidInput("signs must be +-1")

    @property
    def parallel_count(self):
        return sum(1 for l in self.labels if l == PARALLEL)

    def to_json(self):
        return {
            "sigma": list(self.sigma),
            "labels": list(self.labels),
            "signs": list(self.signs),
        }

    @classmethod
    def from_json(cls, data):
        return cls(tuple(int(i) for i in data["sigma"]),
                   tuple(data["labels"]),
                   tuple(int(s) for s in data["signs"]))

    @classmethod
    def identity(cls, labels, signs=None):
        labels = tuple(labels)
        g = len(labels)
        if signs is None:
            signs = (1,) * g
        return cls(tuple(range(g)), labels, tuple(signs))


@dataclass(frozen=True)
class GeomIntersections:
    """Optional geometric intersection counts for the three pairs.

    Each matrix is g x g with entry (i, j) the number of intersection
    points of curve i of the first system with curve j of the second.
    Absent matrices mean "unknown"; operations that need them fail loudly
    rather than guess.
    """

    alpha_beta: tuple = None
    beta_gamma: tuple = None
    gamma_alpha: tuple = None

    def matrix(self, pair_key):
        return getattr(self, pair_key)

    def to_json(self):
        out = {}
        for key in PAIRS:
            m = getattr(self, key)
            if m is not None:
                out[key] = [list(row) for row in m]
        return out

    @classmethod
    def from_json(cls, data):
        kwargs = {}
        for key in PAIRS:
            if key in data and data[key] is not None:
                kwargs[key] = tuple(tuple(int(x) for x in row)
                                    for row in data[key])
        return cls(**kwargs)


@dataclass(frozen=True)
class TrisectionDiagram:
    space: SymplecticSpace
    alpha: CutSystem
    beta: CutSystem
    gamma: CutSystem
    signature: TrisectionSignature
    annotations: dict = field(default_factory=dict)
    geom: GeomIntersections = None
    name: str = ""

    def system(self, which):
        return getattr(self, which)

    def annotation(self, pair_key):
        return self.annotations.get(pair_key)

    def pairing_matrix(self, pair_key):
        first, second, _ = PAIRS[pair_key]
        cs1, cs2 = self.system(first), self.system(second)
        return [[pairing(x, y) for y in cs2] for x in cs1]

    def to_json(self):
        data = {
            "genus": self.space.genus,
            "signature": self.signature.to_json(),
            "alpha": self.alpha.to_json(),
            "beta": self.beta.to_json(),
            "gamma": self.gamma.to_json(),
            "name": self.name,
        }
        if self.annotations:
            data["annotations"] = {k: v.to_json()
                                   for k, v in self.annotations.items()
                                   if v is not None}
        if self.geom is not None:
            data["geom"] = self.geom.to_json()
        return data

    @classmethod
    def from_json(cls, data):
        space = SymplecticSpace(int(data["genus"]))
        sig = TrisectionSignature(*(int(x) for x in data["signature"]))
        if sig.g != space.genus:
            raise InvalidInput("signature genus disagrees with diagram genus")
        systems = {}
        for which in ("alpha", "beta", "gamma"):
            systems[which] = CutSystem.from_json(space, data[which])
        annotations = {}
        for key, ann in (data.get("annotations") or {}).items():
            if key not in PAIRS:
                raise InvalidInput(f"unknown annotation key {key!r}")
            annotations[key] = PairAnnotation.from_json(ann)
        geom = None
        if data.get("geom"):
            geom = GeomIntersections.from_json(data["geom"])
        return cls(space=space, signature=sig, annotations=annotations,
                   geom=geom, name=data.get("name", ""), **systems)


def load_diagram(path):
    with open(path, "r", encoding="utf-8") as fp:
        return TrisectionDiagram.from_json(json.load(fp))


def save_diagram(diagram, path):
    with open(path, "w", encoding="utf-8") as fp:
        json.dump(diagram.to_json(), fp, indent=2, sort_keys=True)
        fp.write("\n")


def good_pair_check(cs1, cs2, ann, geom=None):
    """Whether an annotation consistently matches two cut systems.

    Checks, for every index i: a P label forces the partner class to be
    the signed copy of cs1[i]; a D label forces the matched classes to
    pair to a unit; and all cross pairs must pair to zero.  When a
    geometric count matrix is supplied it must vanish on cross pairs and
    P pairs and be exactly 1 on D pairs.
    """
    g = len(cs1.classes)
    if len(cs2.classes) != g or len(ann.sigma) != g:
        return False
    for i in range(g):
        partner = cs2.classes[ann.sigma[i]]
        if ann.labels[i] == PARALLEL:
            if partner != ann.signs[i] * cs1.classes[i]:
                return False
        else:
            if abs(pairing(cs1.classes[i], partner)) != 1:
                return False
        for j in range(g):
            if j != i and pairing(cs1.classes[i], cs2.classes[ann.sigma[j]]) != 0:
                return False
    if geom is not None:
        for i in range(g):
            for j in range(g):
                count = geom[i][ann.sigma[j]]
                if i != j:
                    expected = 0
                else:
                    expected = 0 if ann.labels[i] == PARALLEL else 1
                if count != expected:
                    return False
    return True


@dataclass
class ValidationReport:
    """Named pass/fail results for one diagram."""

    checks: list = field(default_factory=list)

    def add(self, name, passed, detail=""):
        self.checks.append((name, bool(passed), detail))

    @property
    def passed(self):
        return all(ok for _, ok, _ in self.checks)

    def failures(self):
        return [(name, detail) for name, ok, detail in self.checks if not ok]

    def to_json(self):
        return {
            "passed": self.passed,
            "checks": [{"name": n, "passed": ok, "detail": d}
                       for n, ok, d in self.checks],
        }


def validate(diagram):
    """Run every homological necessary condition and annotation check.

    For each pair of cut systems the g x g intersection matrix must have
    cokernel Z^k for the k attached to that pair; annotations, when
    present, must pass :func:`good_pair_check` with a P count equal to
    that same k, and geometric matrices must dominate the algebraic
    pairings entry by entry with matching parity.
    """
    report = ValidationReport()
    sig = diagram.signature
    g = diagram.space.genus
    report.add("signature", sig.g == g,
               f"signature genus {sig.g}, diagram genus {g}")
    for which in ("alpha", "beta", "gamma"):
        cs = diagram.system(which)
        report.add(f"{which}_cut_system", is_cut_system(cs),
                   "Lagrangian primitive basis test")
    for pair_key, (first, second, k_pos) in PAIRS.items():
        k = sig.ks[k_pos]
        matrix = diagram.pairing_matrix(pair_key)
        free, torsion = cokernel(matrix) if g else (0, [])
        ok = free == k and not torsion
        report.add(f"{pair_key}_homology", ok,
                   f"cokernel Z^{free} + torsion {torsion}, expected Z^{k}")
        ann = diagram.annotation(pair_key)
        if ann is not None:
            geom_m = diagram.geom.matrix(pair_key) if diagram.geom else None
            ok = (good_pair_check(diagram.system(first),
                                  diagram.system(second), ann, geom_m)
                  and ann.parallel_count == k)
            report.add(f"{pair_key}_annotation", ok,
                       f"{ann.parallel_count} parallel labels, expected {k}")
    if diagram.geom is not None:
        for pair_key in PAIRS:
            geom_m = diagram.geom.matrix(pair_key)
            if geom_m is None:
                continue
            matrix = diagram.pairing_matrix(pair_key)
            ok = all(
                geom_m[i][j] >= abs(matrix[i][j])
                and (geom_m[i][j] - abs(matrix[i][j])) % 2 == 0
                for i in range(g) for j in range(g))
            report.add(f"{pair_key}_geometric", ok,
                       "counts dominate |pairing| with equal parity")
    return report


def _shift(space, cls_, offset):
    coeffs = [0] * space.dim
    for pos, x in enumerate(cls_.coeffs):
        coeffs[pos + offset] = x
    return space.from_coeffs(coeffs)


def _merge_annotation(a1, a2, g1):
    sigma = tuple(a1.sigma) + tuple(i + g1 for i in a2.sigma)
    return PairAnnotation(sigma, a1.labels + a2.labels, a1.signs + a2.signs)


def _merge_geom(m1, m2, g1, g2):
    g = g1 + g2
    out = [[0] * g for _ in range(g)]
    for i in range(g1):
        for j in range(g1):
            out[i][j] = m1[i][j]
    for i in range(g2):
        for j in range(g2):
            out[g1 + i][g1 + j] = m2[i][j]
    return tuple(tuple(row) for row in out)


def connected_sum(d1, d2):
    """Block-diagonal join of two diagrams.

    The genus and each k add; the second diagram's handles are shifted
    past the first's, so cut systems concatenate with disjoint bases and
    annotations merge blockwise.
    """
    g1, g2 = d1.space.genus, d2.space.genus
    space = SymplecticSpace(g1 + g2)
    systems = {}
    for which in ("alpha", "beta", "gamma"):
        classes = [_shift(space, c, 0) for c in d1.system(which)]
        classes += [_shift(space, c, 2 * g1) for c in d2.system(which)]
        systems[which] = CutSystem(space, tuple(classes))
    sig = TrisectionSignature(
        g1 + g2,
        d1.signature.k1 + d2.signature.k1,
        d1.signature.k2 + d2.signature.k2,
        d1.signature.k3 + d2.signature.k3,
    )
    annotations = {}
    for key in PAIRS:
        a1, a2 = d1.annotation(key), d2.annotation(key)
        if a1 is not None and a2 is not None:
            annotations[key] = _merge_annotation(a1, a2, g1)
    geom = None
    if d1.geom is not None and d2.geom is not None:
        kwargs = {}
        for key in PAIRS:
            m1, m2 = d1.geom.matrix(key), d2.geom.matrix(key)
            if m1 is not None and m2 is not None:
                kwargs[key] = _merge_geom(m1, m2, g1, g2)
        geom = GeomIntersections(**kwargs)
    name = " # ".join(n for n in (d1.name, d2.name) if n) or ""
    return TrisectionDiagram(space=space, signature=sig,
                             annotations=annotations, geom=geom,
                             name=name, **systems)


#: which systems receive the parallel pair of new curves per stabilized k
_STAB_PARALLEL = {1: ("alpha", "beta"), 2: ("beta", "gamma"),
                  3: ("gamma", "alpha")}


def stabilize(diagram, which):
    """Add one handle realizing the standard stabilization pattern.

    The pair of systems attached to ``which`` (1, 2 or 3) both gain the
    new a-curve, the remaining system gains the new b-curve, so the new
    index is one P match for that pair and a D match for the other two.
    The signature gains one at position ``which``.
    """
    if which not in (1, 2, 3):
        raise InvalidInput("which must be 1, 2 or 3")
    g = diagram.space.genus
    space = SymplecticSpace(g + 1)
    parallel = _STAB_PARALLEL[which]
    new_class = {
        name: space.a(g) if name in parallel else space.b(g)
        for name in ("alpha", "beta", "gamma")
    }
    systems = {}
    for name in ("alpha", "beta", "gamma"):
        classes = [_shift(space, c, 0) for c in diagram.system(name)]
        classes.append(new_class[name])
        systems[name] = CutSystem(space, tuple(classes))
    ks = list(diagram.signature.ks)
    ks[which - 1] += 1
    sig = TrisectionSignature(g + 1, *ks)
    annotations = {}
    for key, (first, second, k_pos) in PAIRS.items():
        ann = diagram.annotation(key)
        if ann is None:
            continue
        label = PARALLEL if k_pos == which - 1 else DUAL
        annotations[key] = PairAnnotation(
            ann.sigma + (g,), ann.labels + (label,), ann.signs + (1,))
    geom = None
    if diagram.geom is not None:
        kwargs = {}
        for key, (first, second, k_pos) in PAIRS.items():
            m = diagram.geom.matrix(key)
            if m is None:
                continue
            count = 0 if k_pos == which - 1 else 1
            block = [[0] for _ in range(1)]
            block[0][0] = count
            kwargs[key] = _merge_geom(m, block, g, 1)
        geom = GeomIntersections(**kwargs)
    return TrisectionDiagram(space=space, signature=sig,
                             annotations=annotations, geom=geom,
                             name=diagram.name, **systems)


def _full_annotations(labels_by_pair, signs=None):
    return {key: PairAnnotation.identity(labels, signs)
            for key, labels in labels_by_pair.items()}


def standard_diagram(name):
    """One of the stock diagrams: S4, S1xS3, CP2, CP2bar or S2xS2.

    These are exactly the homological models of the connected summands
    realizable with zero-length loops, with all three pair annotations
    and geometric counts filled in.
    """
    if name == "S4":
        space = SymplecticSpace(0)
        empty = CutSystem(space, ())
        return TrisectionDiagram(
            space=space, alpha=empty, beta=empty, gamma=empty,
            signature=TrisectionSignature(0, 0, 0, 0),
            annotations=_full_annotations(
                {k: () for k in PAIRS}),
            geom=GeomIntersections(alpha_beta=(), beta_gamma=(),
                                   gamma_alpha=()),
            name="S4")
    if name == "S1xS3":
        space = SymplecticSpace(1)
        a = CutSystem.from_classes([space.a(0)])
        return TrisectionDiagram(
            space=space, alpha=a, beta=a, gamma=a,
            signature=TrisectionSignature(1, 1, 1, 1),
            annotations=_full_annotations({k: (PARALLEL,) for k in PAIRS}),
            geom=GeomIntersections(alpha_beta=((0,),), beta_gamma=((0,),),
                                   gamma_alpha=((0,),)),
            name="S1xS3")
    if name in ("CP2", "CP2bar"):
        space = SymplecticSpace(1)
        sign = 1 if name == "CP2" else -1
        alpha = CutSystem.from_classes([space.a(0)])
        beta = CutSystem.from_classes([space.b(0)])
        gamma = CutSystem.from_classes([space.a(0) + sign * space.b(0)])
        return TrisectionDiagram(
            space=space, alpha=alpha, beta=beta, gamma=gamma,
            signature=TrisectionSignature(1, 0, 0, 0),
            annotations=_full_annotations({k: (DUAL,) for k in PAIRS}),
            geom=GeomIntersections(alpha_beta=((1,),), beta_gamma=((1,),),
                                   gamma_alpha=((1,),)),
            name=name)
    if name == "S2xS2":
        space = SymplecticSpace(2)
        alpha = CutSystem.from_classes([space.a(0), space.a(1)])
        beta = CutSystem.from_classes([space.b(0), space.b(1)])
        gamma = CutSystem.from_classes([space.a(0) + space.b(1),
                                        space.a(1) + space.b(0)])
        swap = PairAnnotation((1, 0), (DUAL, DUAL), (1, 1))
        return TrisectionDiagram(
            space=space, alpha=alpha, beta=beta, gamma=gamma,
            signature=TrisectionSignature(2, 0, 0, 0),
            annotations={
                "alpha_beta": PairAnnotation.identity((DUAL, DUAL)),
                "beta_gamma": PairAnnotation.identity((DUAL, DUAL)),
                "gamma_alpha": swap,
            },
            geom=GeomIntersections(alpha_beta=((1, 0), (0, 1)),
                                   beta_gamma=((1, 0), (0, 1)),
                                   gamma_alpha=((0, 1), (1, 0))),
            name="S2xS2")
    raise InvalidInput(f"unknown standard diagram {name!r}")


STANDARD_NAMES = ("S4", "S1xS3", "CP2", "CP2bar", "S2xS2")


def spun_lens(p, q=1):
    """A genus-3 diagram of the spin of the (p, q) lens space.

    The homological model keeps the structure of the known genus-3
    trisection: signature (3; 1, 1, 1), a single dotted curve, and a
    surgery curve wrapping p times over it, so the presented first
    homology is Z/p.  Curve data beyond homology classes is not claimed.
    """
    p, q = int(p), int(q)
    if p < 2:
        raise InvalidInput("p must be >= 2")
    if gcd(p, q) != 1:
        raise InvalidInput("p and q must be coprime")
    space = SymplecticSpace(3)
    a1, b1 = space.a(0), space.b(0)
    a2, b2 = space.a(1), space.b(1)
    a3, b3 = space.a(2), space.b(2)
    alpha = CutSystem.from_classes([a1, a2, a3])
    beta = CutSystem.from_classes([a1, b2, b3])
    gamma = CutSystem.from_classes([
        q * a1 + p * b1 + a2 + b3,   # the lens surgery curve
        b2 + a3,
        a1 - p * a3,
    ])
    return TrisectionDiagram(
        space=space, alpha=alpha, beta=beta, gamma=gamma,
        signature=TrisectionSignature(3, 1, 1, 1),
        annotations={
            "alpha_beta": PairAnnotation.identity((PARALLEL, DUAL, DUAL)),
        },
        name=f"S(L({p},{q}))")
