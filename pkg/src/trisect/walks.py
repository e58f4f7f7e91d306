"""Walks in the disjointness subgraph and their intersection matrices.

Starting from a cut system matched against a fixed reference system,
each move replaces one tuple entry by a signed sum of the others.  The
trace records the g x g matrix of pairings against the reference after
every step, together with which step last touched each row.  Entries of
row i after step h are bounded by the g-step Fibonacci number indexed by
the last touch of that row, and by the corresponding power of two.
"""

import random
from dataclasses import dataclass

from .errors import NotGood
from .homology import CutSystem, SymplecticSpace, Type0Move, pairing, type0_move
from .zmatrix import FibGStep, IntMatrix


@dataclass(frozen=True)
class WalkTrace:
    genus: int
    matrices: tuple          # pairing matrices, one per step, as row tuples
    rho: tuple               # per step, the last-touch map as a g-tuple
    move_indices: tuple
    systems: tuple           # the walked cut systems, one per step

    @property
    def steps(self):
        return len(self.move_indices)

    def matrix(self, h):
        return IntMatrix.from_rows(self.matrices[h])

    def to_json(self):
        return {
            "genus": self.genus,
            "move_indices": list(self.move_indices),
            "rho": [list(r) for r in self.rho],
            "matrices": [[[str(x) for x in row] for row in m]
                         for m in self.matrices],
        }


def _pairing_rows(system, reference):
    return tuple(tuple(pairing(c, r) for r in reference) for c in system)


def _is_matched_start(rows):
    # at most one entry per row and per column, each equal to 1
    cols_seen = set()
    for row in rows:
        hot = [j for j, v in enumerate(row) if v]
        if len(hot) > 1 or any(row[j] != 1 for j in hot):
            return False
        if hot:
            if hot[0] in cols_seen:
                return False
            cols_seen.add(hot[0])
    return True


def walk_trace(start, reference, moves):
    """Apply moves to ``start`` and trace pairings against ``reference``.

    The start must be matched with the reference: every pairing is 0 or
    1 with at most one hit per row and per column (orientations are
    assumed normalized to make the unit pairings positive).  Moves whose
    unit coefficient is -1 are replaced by the sign-flipped move, which
    describes the same replacement curve with the opposite orientation.

    Each step updates exactly one matrix row; the update computed from
    the previous rows is checked against a fresh pairing computation of
    the moved class, so the bilinear row bookkeeping is verified rather
    than assumed.
    """
    g = start.space.genus
    rows0 = _pairing_rows(start, reference)
    if len(reference.classes) != g or not _is_matched_start(rows0):
        raise NotGood("start and reference systems are not matched")
    matrices = [rows0]
    rho = [(0,) * g]
    systems = [start]
    move_indices = []
    current = start
    for h, move in enumerate(moves, start=1):
        if move.epsilons[move.index] == -1:
            move = Type0Move(move.index,
                             tuple(-e for e in move.epsilons))
        current = type0_move(current, move)
        prev = matrices[-1]
        updated = tuple(
            sum(e * v for e, v in zip(move.epsilons, col) if e)
            for col in zip(*prev))
        direct = tuple(pairing(current[move.index], r)
                       for r in reference.classes)
        if updated != direct:
            raise AssertionError("row update disagrees with direct pairing")
        rows = tuple(updated if i == move.index else prev[i]
                     for i in range(g))
        last = tuple(h if i == move.index else rho[-1][i] for i in range(g))
        # untouched rows must still equal their last-touch snapshot
        for i in range(g):
            if i != move.index and rows[i] != matrices[last[i]][i]:
                raise AssertionError("a row changed without being moved")
        matrices.append(rows)
        rho.append(last)
        systems.append(current)
        move_indices.append(move.index)
    return WalkTrace(genus=g, matrices=tuple(matrices), rho=tuple(rho),
                     move_indices=tuple(move_indices), systems=tuple(systems))


def check_entry_bounds(trace):
    """Whether every trace entry obeys the last-touch growth bounds.

    Rows never touched must look like a matched start row (zeros and at
    most a single 1); a row last touched at step r must have entries of
    absolute value at most min(F_r, 2**(r-1)) with F the g-step
    Fibonacci sequence.
    """
    fib = FibGStep(max(trace.genus, 1))
    for rows, last in zip(trace.matrices, trace.rho):
        for i, row in enumerate(rows):
            r = last[i]
            if r == 0:
                hot = [v for v in row if v]
                if len(hot) > 1 or any(v != 1 for v in hot):
                    return False
            else:
                bound = min(fib.value(r), 2 ** (r - 1))
                if any(abs(v) > bound for v in row):
                    return False
    return True


def verify_row_stability(trace):
    """Re-check that each row agrees with its last-touch snapshot everywhere."""
    for h in range(trace.steps + 1):
        for i in range(trace.genus):
            r = trace.rho[h][i]
            for hp in range(r, h + 1):
                if trace.matrices[hp][i] != trace.matrices[r][i]:
                    return False
    return True


def random_matched_pair(g, rng):
    """A random matched (start, reference) pair of cut systems."""
    space = SymplecticSpace(g)
    start = CutSystem.from_classes([space.a(i) for i in range(g)],
                                   space=space)
    perm = list(range(g))
    rng.shuffle(perm)
    reference = CutSystem.from_classes(
        [space.b(i) if rng.random() < 0.5 else space.a(i) for i in perm],
        space=space)
    return start, reference


def random_moves(g, m, rng):
    moves = []
    for _ in range(m):
        eps = [rng.choice((-1, 0, 1)) for _ in range(g)]
        index = rng.randrange(g)
        eps[index] = rng.choice((-1, 1))
        moves.append(Type0Move(index, tuple(eps)))
    return moves


def run_entry_bound_trials(max_genus, max_moves, trials, seed):
    """Seeded harness: random walks must all satisfy the entry bounds.

    Trial t uses its own generator derived from (seed, t), so results do
    not depend on execution order.
    """
    failures = []
    for t in range(trials):
        rng = random.Random(seed * 1_000_003 + t)
        g = rng.randint(1, max_genus)
        m = rng.randint(0, max_moves)
        start, reference = random_matched_pair(g, rng)
        trace = walk_trace(start, reference, random_moves(g, m, rng))
        if not check_entry_bounds(trace):
            failures.append(t)
    return {
        "trials": trials,
        "max_genus": max_genus,
        "max_moves": max_moves,
        "seed": seed,
        "passed": trials - len(failures),
        "failed": len(failures),
        "failing_trials": failures[:10],
    }
