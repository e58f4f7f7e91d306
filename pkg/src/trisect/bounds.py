"""Lower bounds on the minimal loop length of a 4-manifold.

Two mechanisms are implemented.  The structural bound turns
connected-summand and fundamental-group certificates into the constants
4 and 6.  The homology bound turns the order p of a finite first
homology group into a bound on the number m of in-block moves on the
shortest side of a loop, via two exhaustive regimes: either more dotted
curves than moves (then 2**(m*m) > p exactly), or at most as many (then
a convex one-parameter family of inequalities binds m).  The reported
bound is the minimum over both regimes, tripled, since three times the
shortest side bounds the total length from below.
"""

from dataclasses import dataclass
from math import ceil, log2, sqrt

from .errors import InvalidInput

#: snapping tolerance: float values this close to an integer are treated
#: as that integer, and rounding always favors the weaker bound
_SNAP = 1e-9

LOG2_E = log2(2.718281828459045235360287471352662497757247)


def _ceil_snapped(value):
    nearest = round(value)
    if abs(value - nearest) < _SNAP:
        return int(nearest)
    return ceil(value)


@dataclass(frozen=True)
class BoundReport:
    p: int
    case1_m: int
    case2_m: int
    case2_k_argmin: int
    m_lower: int
    L_lower: int

    def to_json(self):
        return {"p": self.p, "case1_m": self.case1_m,
                "case2_m": self.case2_m,
                "case2_k_argmin": self.case2_k_argmin,
                "m_lower": self.m_lower, "L_lower": self.L_lower}


def _case1_m(p):
    # smallest integer m with sqrt(log2 p) < m, computed without floats:
    # m > sqrt(log2 p)  <=>  2**(m*m) > p
    m = 1
    while 2 ** (m * m) <= p:
        m += 1
    return m


def _case2_value(p, k):
    return 0.5 * ((2.0 / k) * log2(p) + k - log2(k) + 1.0)


def case2_minimizer(p):
    """Real minimizer of the one-parameter bound family."""
    return 0.5 * (LOG2_E + sqrt(LOG2_E ** 2 + 8.0 * log2(p)))


def case2_closed_form(p):
    """Value of the bound family at its real minimizer."""
    s = sqrt(LOG2_E ** 2 + 8.0 * log2(p))
    return 0.5 * s - 0.5 * log2(LOG2_E + s) + 1.0


def homology_lower_bound(p):
    """Lower bound 3*m <= L forced by |H_1| = p (finite, p >= 2).

    The first regime gives the smallest integer m with 2**(m*m) > p.
    The second minimizes ceil of the bound family over integer k; the
    family is convex in k, so scanning up to a little past the real
    minimizer is exhaustive.  Integer minimization is the authority; the
    closed form at the real minimizer is only a cross-check.

    >>> homology_lower_bound(2).L_lower
    6
    """
    p = int(p)
    if p < 2:
        raise InvalidInput("the homology order must be at least 2")
    case1 = _case1_m(p)
    k_top = ceil(case2_minimizer(p)) + 2
    best = None
    for k in range(1, k_top + 1):
        raw = _case2_value(p, k)
        candidate = (_ceil_snapped(raw), raw, k)
        if best is None or candidate < best:
            best = candidate
    case2, _, argmin = best
    m_lower = min(case1, case2)
    return BoundReport(p=p, case1_m=case1, case2_m=case2,
                       case2_k_argmin=argmin, m_lower=m_lower,
                       L_lower=3 * m_lower)


PI1_CLASSES = ("trivial", "infinite_cyclic", "other", "unknown")


def structural_lower_bound(gsc_known_false, no_s1s3_summand, pi1_class):
    """Constant bounds from caller-certified hypotheses.

    Returns 6 when there is no S1 x S3 summand and the fundamental group
    is neither trivial nor infinite cyclic; 4 when there is no such
    summand and the manifold is known not to be geometrically simply
    connected; 0 otherwise.  The hypotheses are not decidable from a
    diagram, so they are trusted inputs.

    >>> structural_lower_bound(True, True, "other")
    6
    >>> structural_lower_bound(True, True, "unknown")
    4
    """
    if pi1_class not in PI1_CLASSES:
        raise InvalidInput(f"unknown pi1 class {pi1_class!r}")
    if no_s1s3_summand and pi1_class == "other":
        return 6
    if no_s1s3_summand and gsc_known_false:
        return 4
    return 0
