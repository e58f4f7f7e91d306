"""Closed walks through the three subgraphs attached to a diagram.

A loop visits three blocks of vertices, one per cut-system family, in
some cyclic order.  Edges inside a block replace one curve by a disjoint
one (carrying the signed-sum move data); edges between blocks replace
one curve by a curve meeting it once.  The two block endpoints facing
each other across a junction must form a matched pair certified by an
annotation, and the number of once-meeting replacements between them is
forced by the signature.  Validation walks the explicit edge data and
reports the block lengths; it never searches for loops.
"""

import json
from dataclasses import dataclass

from .errors import (BadEdge, BadJunction, BadSegment, InvalidInput,
                     TrisectError)
from .diagram import PAIRS, PairAnnotation, good_pair_check
from .homology import (CutSystem, Type0Move, canonical_form, is_cut_system,
                       spans_same_lattice, type0_move, type1_move)

BLOCK_TAGS = ("alpha", "beta", "gamma")
JUNCTION_TAG = "junction"

#: unordered block pair -> the annotation key and signature slot it uses
_PAIR_OF = {frozenset(("alpha", "beta")): "alpha_beta",
            frozenset(("beta", "gamma")): "beta_gamma",
            frozenset(("gamma", "alpha")): "gamma_alpha"}

MARKER_NAMES = ("alpha_beta", "alpha_gamma", "beta_alpha",
                "beta_gamma", "gamma_alpha", "gamma_beta")


@dataclass(frozen=True)
class LoopVertex:
    tag: str
    system: CutSystem

    def __post_init__(self):
        if self.tag not in BLOCK_TAGS + (JUNCTION_TAG,):
            raise InvalidInput(f"unknown vertex tag {self.tag!r}")


@dataclass(frozen=True)
class LoopEdge:
    kind: str                     # "type0" | "type1" | "junction"
    move: Type0Move = None
    index: int = None
    new_class: object = None

    def __post_init__(self):
        if self.kind == "type0":
            if self.move is None:
                raise InvalidInput("type0 edges carry move data")
        elif self.kind == "type1":
            if self.index is None or self.new_class is None:
                raise InvalidInput("type1 edges carry an index and a class")
        elif self.kind != "junction":
            raise InvalidInput(f"unknown edge kind {self.kind!r}")


@dataclass(frozen=True)
class LoopSpec:
    """Cyclic vertex/edge data; edge i joins vertex i to vertex i+1."""

    vertices: tuple
    edges: tuple
    markers: dict
    annotations: dict

    def __post_init__(self):
        if set(self.markers) != set(MARKER_NAMES):
            raise InvalidInput("markers must name all six block endpoints")

    def to_json(self):
        verts = []
        for v in self.vertices:
            verts.append({"tag": v.tag, "classes": v.system.to_json()})
        edges = []
        for e in self.edges:
            if e.kind == "type0":
                edges.append({"kind": "type0", **e.move.to_json()})
            elif e.kind == "type1":
                edges.append({"kind": "type1", "index": e.index,
                              "new": e.new_class.to_json()})
            else:
                edges.append({"kind": "junction"})
        return {
            "vertices": verts,
            "edges": edges,
            "markers": dict(self.markers),
            "annotations": {k: a.to_json()
                            for k, a in self.annotations.items()},
        }

    @classmethod
    def from_json(cls, space, data):
        vertices = tuple(
            LoopVertex(v["tag"], CutSystem.from_json(space, v["classes"]))
            for v in data["vertices"])
        edges = []
        for e in data["edges"]:
            kind = e["kind"]
            if kind == "type0":
                edges.append(LoopEdge("type0", move=Type0Move.from_json(e)))
            elif kind == "type1":
                edges.append(LoopEdge("type1", index=int(e["index"]),
                                      new_class=space.from_coeffs(
                                          [int(x) for x in e["new"]])))
            else:
                edges.append(LoopEdge("junction"))
        markers = {k: int(v) for k, v in data["markers"].items()}
        annotations = {k: PairAnnotation.from_json(a)
                       for k, a in (data.get("annotations") or {}).items()}
        return cls(tuple(vertices), tuple(edges), markers, annotations)


def load_loop(path, space):
    with open(path, "r", encoding="utf-8") as fp:
        return LoopSpec.from_json(space, json.load(fp))


@dataclass(frozen=True)
class LengthReport:
    """Edge counts of an accepted loop.

    ``L`` counts the in-block moves, ``total_l`` every edge; their
    difference is forced to be (g-k1) + (g-k2) + (g-k3).
    """

    l_alpha: int
    l_beta: int
    l_gamma: int
    total_l: int

    @property
    def L(self):
        return self.l_alpha + self.l_beta + self.l_gamma

    def to_json(self):
        return {"l_alpha": self.l_alpha, "l_beta": self.l_beta,
                "l_gamma": self.l_gamma, "L": self.L,
                "total_l": self.total_l}


def _cyclic_blocks(vertices):
    """Positions of each block, verifying cyclic contiguity."""
    n = len(vertices)
    blocks = {}
    for tag in BLOCK_TAGS:
        positions = [i for i, v in enumerate(vertices) if v.tag == tag]
        if not positions:
            raise BadSegment(tag, "the loop never visits this subgraph")
        starts = [p for p in positions
                  if vertices[(p - 1) % n].tag != tag]
        if len(starts) != 1:
            raise BadSegment(tag, "block is not a contiguous cyclic arc")
        start = starts[0]
        arc = [start]
        while vertices[(arc[-1] + 1) % n].tag == tag:
            arc.append((arc[-1] + 1) % n)
        if len(arc) != len(positions):
            raise BadSegment(tag, "block is not a contiguous cyclic arc")
        blocks[tag] = arc
    return blocks


def validate_loop(diagram, loop):
    """Check every edge, segment and junction of a loop; report lengths.

    Vertices are compared up to reordering and reorientation of their
    classes, which is the equality the walk actually lives in.  The
    first violation is raised as BadEdge, BadSegment or BadJunction.
    """
    g = diagram.space.genus
    sig = diagram.signature
    vertices, edges = loop.vertices, loop.edges
    n = len(vertices)
    if n < 3:
        raise InvalidInput("a loop needs at least three tagged vertices")
    if len(edges) != n:
        raise InvalidInput("a cyclic loop needs exactly one edge per vertex")
    for i, v in enumerate(vertices):
        if v.system.space != diagram.space:
            raise InvalidInput(f"vertex {i} lives on the wrong surface")

    blocks = _cyclic_blocks(vertices)
    in_block = {}
    for tag, arc in blocks.items():
        for p in arc[:-1]:
            in_block[p] = tag

    # transitions between cyclically consecutive blocks
    order = sorted(BLOCK_TAGS, key=lambda t: blocks[t][0])
    transitions = []
    pair_of_edge = {}
    for pos, tag in enumerate(order):
        nxt = order[(pos + 1) % 3]
        end = blocks[tag][-1]
        start = blocks[nxt][0]
        pair_key = _PAIR_OF[frozenset((tag, nxt))]
        span = (start - end) % n
        positions = [(end + off) % n for off in range(span)]
        transitions.append((tag, nxt, end, start, pair_key, positions))
        for p in positions:
            pair_of_edge[p] = pair_key

    # one positional pass over the edges; the source of each edge covers
    # every vertex exactly once
    lengths = dict.fromkeys(BLOCK_TAGS, 0)
    for p in range(n):
        edge = edges[p]
        src = vertices[p].system
        dst = vertices[(p + 1) % n].system
        if not is_cut_system(src):
            raise BadEdge(p, "source vertex is not a cut system")
        if p in in_block:
            tag = in_block[p]
            if edge.kind != "type0":
                raise BadSegment(
                    tag, f"edge {p} inside the block is not a type-0 move")
            if len(edge.move.epsilons) != g:
                raise BadEdge(p, "move length disagrees with the genus")
            expected = type0_move(src, edge.move)
            if canonical_form(expected) != canonical_form(dst):
                raise BadEdge(p, "move data does not produce the next vertex")
            lengths[tag] += 1
        elif edge.kind == "type1":
            try:
                expected = type1_move(src, edge.index, edge.new_class)
            except TrisectError as exc:
                raise BadEdge(p, f"type-1 move rejected: {exc}") from exc
            if canonical_form(expected) != canonical_form(dst):
                raise BadEdge(p, "move data does not produce the next vertex")
        elif edge.kind == "junction":
            if canonical_form(src) != canonical_form(dst):
                raise BadJunction(pair_of_edge[p],
                                  "zero-move junction endpoints differ")
        else:
            raise BadJunction(pair_of_edge[p],
                              "transition contains a type-0 move")

    # every block vertex must span the lattice of the diagram's own
    # system: the spanned lattice is invariant along type-0 edges, so
    # this pins each block to the right move-connected component
    for tag, arc in blocks.items():
        for p in arc:
            if not spans_same_lattice(vertices[p].system,
                                      diagram.system(tag)):
                raise BadSegment(
                    tag, f"vertex {p} spans a different sublattice than "
                         f"the diagram's {tag} system")

    # junction-level checks: edge counts, markers, pair certificates
    type1_total = 0
    for tag, nxt, end, start, pair_key, positions in transitions:
        k = sig.ks[PAIRS[pair_key][2]]
        kinds = [edges[p].kind for p in positions]
        if "junction" in kinds:
            if kinds != ["junction"]:
                raise BadJunction(pair_key, "transition mixes edge kinds")
            count = 0
        else:
            count = len(positions)
        if count != g - k:
            raise BadJunction(
                pair_key,
                f"{count} type-1 edges between blocks, expected {g - k}")
        type1_total += count

        first, second, _ = PAIRS[pair_key]
        marker_out = loop.markers[f"{tag}_{nxt}"]
        marker_in = loop.markers[f"{nxt}_{tag}"]
        if marker_out != end or marker_in != start:
            raise BadJunction(pair_key, "markers are not the block endpoints")
        endpoints = {tag: vertices[end].system, nxt: vertices[start].system}
        ann = loop.annotations.get(pair_key)
        if ann is None:
            raise BadJunction(pair_key, "no matched-pair certificate")
        if not good_pair_check(endpoints[first], endpoints[second], ann):
            raise BadJunction(pair_key, "matched-pair certificate fails")
        if ann.parallel_count != k:
            raise BadJunction(
                pair_key,
                f"{ann.parallel_count} parallel labels, expected {k}")

    report = LengthReport(
        l_alpha=lengths["alpha"], l_beta=lengths["beta"],
        l_gamma=lengths["gamma"],
        total_l=lengths["alpha"] + lengths["beta"] + lengths["gamma"]
        + type1_total)
    deficit = sum(g - k for k in sig.ks)
    assert report.total_l == report.L + deficit
    return report


def spun_lens_witness_loop(p, q=1):
    """An explicit loop of length 3p for the spun lens diagram.

    Each block walks p disjoint-replacement moves: the alpha side drags
    a1 to a1 - p*a3 (the generator of the sublattice shared with the
    gamma span), the gamma side accumulates the b2 + a3 curve onto it,
    and the beta side unwinds the resulting a1 + p*b2.  All three
    junction pairs then match with one parallel and two once-meeting
    indices.  For p = 2 this witnesses the known minimal length 6 from
    above; the homology order bound meets it from below.
    """
    from .diagram import spun_lens

    diagram = spun_lens(p, q)
    space = diagram.space
    a1, a2, a3 = space.a(0), space.a(1), space.a(2)
    b2, b3 = space.b(1), space.b(2)
    gamma1, gamma2, gamma3 = diagram.gamma.classes

    def tuples(*classes):
        return CutSystem.from_classes(classes, space=space)

    vertices = []
    edges = []

    def block(tag, systems, move):
        start = len(vertices)
        vertices.extend(LoopVertex(tag, s) for s in systems)
        edges.extend(LoopEdge("type0", move=move) for _ in systems[:-1])
        return start, len(vertices) - 1

    def junction(interior, replacements):
        for index, new_class in replacements[:-1]:
            edges.append(LoopEdge("type1", index=index, new_class=new_class))
            vertices.append(LoopVertex(JUNCTION_TAG, interior))
        index, new_class = replacements[-1]
        edges.append(LoopEdge("type1", index=index, new_class=new_class))

    drop_a3 = Type0Move(0, (1, 0, -1))
    add_gamma2 = Type0Move(0, (1, 1, 0))
    drop_b2 = Type0Move(0, (1, 0, -1))

    alpha_first, alpha_last = block(
        "alpha", [tuples(a1 - j * a3, a2, a3) for j in range(p + 1)],
        drop_a3)
    junction(tuples(a1 - p * a3, gamma2, a3),
             [(1, gamma2), (2, gamma1)])
    gamma_first, gamma_last = block(
        "gamma", [tuples(gamma3 + j * gamma2, gamma2, gamma1)
                  for j in range(p + 1)],
        add_gamma2)
    junction(tuples(a1 + p * b2, gamma2, b2),
             [(2, b2), (1, b3)])
    beta_first, beta_last = block(
        "beta", [tuples(a1 + (p - j) * b2, b3, b2) for j in range(p + 1)],
        drop_b2)
    junction(tuples(a1, a3, b2),
             [(1, a3), (2, a2)])

    markers = {
        "alpha_beta": alpha_first, "alpha_gamma": alpha_last,
        "gamma_alpha": gamma_first, "gamma_beta": gamma_last,
        "beta_gamma": beta_first, "beta_alpha": beta_last,
    }
    annotations = {
        "alpha_beta": PairAnnotation((0, 2, 1), ("P", "D", "D"), (1, 1, 1)),
        "beta_gamma": PairAnnotation((0, 1, 2), ("P", "D", "D"), (1, 1, 1)),
        "gamma_alpha": PairAnnotation((0, 1, 2), ("P", "D", "D"), (1, 1, 1)),
    }
    return LoopSpec(tuple(vertices), tuple(edges), markers, annotations)


def standard_loop(diagram):
    """The zero-length loop of a diagram whose three pairs are all matched.

    Requires annotations for all three pairs (as the stock diagrams and
    their connected sums provide).  Each block is a single vertex; each
    junction replaces the once-meeting partners one index at a time.
    """
    for key in PAIRS:
        if diagram.annotation(key) is None:
            raise InvalidInput(f"needs a {key} annotation")

    systems = {tag: diagram.system(tag) for tag in BLOCK_TAGS}
    vertices = []
    edges = []
    markers = {}
    order = ("alpha", "gamma", "beta")
    block_pos = {}
    for pos, tag in enumerate(order):
        nxt = order[(pos + 1) % 3]
        if not vertices or vertices[-1].tag != tag:
            block_pos[tag] = len(vertices)
            vertices.append(LoopVertex(tag, systems[tag]))
        start = systems[tag]
        target = systems[nxt]
        pair_key = _PAIR_OF[frozenset((tag, nxt))]
        ann = diagram.annotation(pair_key)
        first = PAIRS[pair_key][0]
        # replace the once-meeting partners of the pair, one at a time
        steps = []
        if first == nxt:
            # sigma sends target indices into slots of the current tuple
            for i in range(len(ann.sigma)):
                if ann.labels[i] == "D":
                    steps.append((ann.sigma[i], target[i]))
        else:
            # sigma sends current indices to target partners
            for i in range(len(ann.sigma)):
                if ann.labels[i] == "D":
                    steps.append((i, target[ann.sigma[i]]))
        current = start
        if not steps:
            edges.append(LoopEdge("junction"))
            continue
        for step, (slot, new_class) in enumerate(steps):
            current = type1_move(current, slot, new_class)
            edges.append(LoopEdge("type1", index=slot, new_class=new_class))
            last = step == len(steps) - 1
            if not last:
                vertices.append(LoopVertex(JUNCTION_TAG, current))
    for tag in BLOCK_TAGS:
        if tag not in block_pos:
            raise InvalidInput("degenerate block layout")
    for pos, tag in enumerate(order):
        nxt = order[(pos + 1) % 3]
        markers[f"{tag}_{nxt}"] = block_pos[tag]
        markers[f"{nxt}_{tag}"] = block_pos[nxt]
    annotations = {key: diagram.annotation(key) for key in PAIRS}
    return LoopSpec(tuple(vertices), tuple(edges), markers, annotations)
