"""First homology of a closed oriented surface, with exact arithmetic.

H_1 of the genus-g surface is modelled as Z^{2g} with the standard
symplectic intersection form: the basis is interleaved as
a_1, b_1, ..., a_g, b_g and the form pairs <a_i, b_i> = 1.  Cut systems
live here as Lagrangian g-tuples spanning a primitive sublattice, and
the two elementary moves on them act by the corresponding change of one
tuple entry.  Curve orientation is carried only as the overall sign of a
class; all values are immutable and every operation is a pure function.
"""

from dataclasses import dataclass

from .errors import InvalidInput, NotPrimitive, ViolatedD, ViolatedLagrangian
from .zmatrix import snf


@dataclass(frozen=True)
class SymplecticSpace:
    """H_1 of the genus-g surface together with its intersection form."""

    genus: int

    def __post_init__(self):
        if self.genus < 0:
            raise InvalidInput("genus must be >= 0")

    @property
    def dim(self):
        return 2 * self.genus

    def zero(self):
        return HomologyClass(self, (0,) * self.dim)

    def from_coeffs(self, coeffs):
        coeffs = tuple(int(x) for x in coeffs)
        if len(coeffs) != self.dim:
            raise InvalidInput(
                f"expected {self.dim} coefficients, got {len(coeffs)}")
        return HomologyClass(self, coeffs)

    def a(self, i):
        """The i-th handle's first basis class (0-based index)."""
        return self._basis(2 * i)

    def b(self, i):
        """The i-th handle's second basis class, with <a_i, b_i> = 1."""
        return self._basis(2 * i + 1)

    def _basis(self, pos):
        if not 0 <= pos < self.dim:
            raise InvalidInput("basis index out of range")
        coeffs = [0] * self.dim
        coeffs[pos] = 1
        return HomologyClass(self, tuple(coeffs))


@dataclass(frozen=True)
class HomologyClass:
    """An integer homology class; reversing orientation negates it."""

    space: SymplecticSpace
    coeffs: tuple

    def __add__(self, other):
        self._require_same_space(other)
        return HomologyClass(
            self.space, tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        self._require_same_space(other)
        return HomologyClass(
            self.space, tuple(x - y for x, y in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return HomologyClass(self.space, tuple(-x for x in self.coeffs))

    def __mul__(self, scalar):
        return HomologyClass(self.space,
                             tuple(int(scalar) * x for x in self.coeffs))

    __rmul__ = __mul__

    def is_zero(self):
        return not any(self.coeffs)

    def _require_same_space(self, other):
        if not isinstance(other, HomologyClass) or other.space != self.space:
            raise InvalidInput("classes live in different spaces")

    def to_json(self):
        return [str(x) for x in self.coeffs]


def pairing(x, y):
    """Algebraic intersection number of two classes.

    The form is block diagonal over the handles, so the pairing is a sum
    of local 2x2 determinants.

    >>> s = SymplecticSpace(2)
    >>> pairing(s.a(0), s.b(0))
    1
    >>> pairing(s.b(0), s.a(0))
    -1
    >>> pairing(s.a(0), s.a(0))
    0
    """
    x._require_same_space(y)
    u, v = x.coeffs, y.coeffs
    return sum(u[k] * v[k + 1] - u[k + 1] * v[k] for k in range(0, len(u), 2))


@dataclass(frozen=True)
class CutSystem:
    """The homological shadow of a cut system: an ordered g-tuple of classes.

    Construction is lenient; :func:`is_cut_system` decides whether the
    tuple is a Lagrangian primitive basis.
    """

    space: SymplecticSpace
    classes: tuple

    @classmethod
    def from_classes(cls, classes, space=None):
        classes = tuple(classes)
        if space is None:
            if not classes:
                raise InvalidInput("empty tuple needs an explicit space")
            space = classes[0].space
        for c in classes:
            if c.space != space:
                raise InvalidInput("classes live in different spaces")
        return cls(space, classes)

    @property
    def genus(self):
        return self.space.genus

    def __len__(self):
        return len(self.classes)

    def __getitem__(self, i):
        return self.classes[i]

    def __iter__(self):
        return iter(self.classes)

    def replace(self, index, new_class):
        if not 0 <= index < len(self.classes):
            raise InvalidInput("index out of range")
        if new_class.space != self.space:
            raise InvalidInput("replacement lives in a different space")
        classes = list(self.classes)
        classes[index] = new_class
        return CutSystem(self.space, tuple(classes))

    def coefficient_matrix(self):
        return [list(c.coeffs) for c in self.classes]

    def to_json(self):
        return [c.to_json() for c in self.classes]

    @classmethod
    def from_json(cls, space, data):
        return cls(space,
                   tuple(space.from_coeffs(row) for row in data))


def is_cut_system(cs, space=None):
    """Whether a tuple of classes is the shadow of a cut system.

    True iff the tuple has exactly g entries in the genus-g space, all
    pairwise pairings vanish, and the g x 2g coefficient matrix has every
    invariant factor equal to 1 (so the span is a primitive Lagrangian
    that extends to a basis).

    >>> s = SymplecticSpace(2)
    >>> is_cut_system(CutSystem.from_classes([s.a(0), s.a(1)]))
    True
    >>> is_cut_system(CutSystem.from_classes([s.a(0), s.a(0)]))
    False
    """
    if not isinstance(cs, CutSystem):
        cs = CutSystem.from_classes(cs, space=space)
    g = cs.space.genus
    if len(cs.classes) != g:
        return False
    if g == 0:
        return True
    classes = cs.classes
    for i in range(g):
        for j in range(i + 1, g):
            if pairing(classes[i], classes[j]) != 0:
                return False
    result = snf(cs.coefficient_matrix())
    return result.rank == g and all(d == 1 for d in result.invariant_factors)


@dataclass(frozen=True)
class Type0Move:
    """Replace the class at ``index`` by the signed sum of the tuple.

    The new class is sum_l epsilons[l] * cs[l]; the coefficient at the
    moved index must be a unit, the others lie in {-1, 0, 1}.
    """

    index: int
    epsilons: tuple

    def __post_init__(self):
        object.__setattr__(self, "epsilons",
                           tuple(int(e) for e in self.epsilons))
        if not 0 <= self.index < len(self.epsilons):
            raise InvalidInput("move index out of range")
        if any(e not in (-1, 0, 1) for e in self.epsilons):
            raise InvalidInput("epsilons must lie in {-1, 0, 1}")
        if self.epsilons[self.index] == 0:
            raise InvalidInput("the moved index needs a unit coefficient")

    def to_json(self):
        return {"index": self.index, "epsilons": list(self.epsilons)}

    @classmethod
    def from_json(cls, data):
        return cls(int(data["index"]), tuple(int(e) for e in data["epsilons"]))


def type0_move(cs, move):
    """Apply a disjoint-replacement move to a cut system.

    The result is again a cut system whenever the input is: the new class
    pairs to zero with every kept class because the input tuple is
    Lagrangian, and the coefficient matrix changes by a unimodular row
    operation.
    """
    if len(move.epsilons) != len(cs.classes):
        raise InvalidInput("move length disagrees with the cut system")
    new = cs.space.zero()
    for eps, c in zip(move.epsilons, cs.classes):
        if eps:
            new = new + eps * c
    return cs.replace(move.index, new)


def type1_move(cs, index, new_class):
    """Replace one class by a class meeting it exactly once.

    Raises ViolatedD unless the old and new classes pair to a unit,
    ViolatedLagrangian if the new class pairs nontrivially with any other
    entry, and NotPrimitive if the replacement fails the basis test.
    """
    if not 0 <= index < len(cs.classes):
        raise InvalidInput("index out of range")
    if abs(pairing(cs.classes[index], new_class)) != 1:
        raise ViolatedD("replacement must meet the old class exactly once")
    for j, c in enumerate(cs.classes):
        if j != index and pairing(c, new_class) != 0:
            raise ViolatedLagrangian(
                f"replacement pairs nontrivially with entry {j}")
    out = cs.replace(index, new_class)
    if not is_cut_system(out):
        raise NotPrimitive("replacement is not a primitive Lagrangian basis")
    return out


def canonical_form(cs):
    """Order- and orientation-free normal form of a cut system.

    Two tuples describe the same vertex of the cut complex (at the
    homological level) iff their canonical forms agree.
    """
    normalized = []
    for c in cs.classes:
        coeffs = c.coeffs
        lead = next((x for x in coeffs if x), 0)
        if lead < 0:
            coeffs = tuple(-x for x in coeffs)
        normalized.append(coeffs)
    return tuple(sorted(normalized))


def spans_same_lattice(cs1, cs2):
    """Whether two cut systems generate the same sublattice of H_1.

    The spanned lattice is unchanged by disjoint-replacement moves (the
    new class is an integer combination of the old ones, with a unit
    coefficient at the replaced spot), so this is the homological
    invariant separating the move-connected components.  For primitive
    lattices of full tuple rank, one-sided membership already forces
    equality.
    """
    if cs1.space != cs2.space or len(cs1.classes) != len(cs2.classes):
        return False
    if not cs1.classes:
        return True
    base = cs1.coefficient_matrix()
    reference = snf(base)
    for c in cs2.classes:
        stacked = snf(base + [list(c.coeffs)])
        if (stacked.rank != reference.rank
                or stacked.invariant_factors != reference.invariant_factors):
            return False
    return True
