"""Compilers from a graph and clique size k to hard point-set instances.

Every instance lives in dimension 2k: coordinates 2i-2 and 2i-1 form the
i-th coordinate plane, and a point "in plane i" has zeros elsewhere.  The
common scheme: per-plane scaffold points encode choosing one vertex per
plane, and kill points placed in the product of two planes forbid a pair
of per-plane choices whenever the corresponding vertices are not adjacent
(including equal vertices, so no vertex can be picked twice).  A range
achieving the instance's expected value must therefore select k pairwise
adjacent vertices, and conversely any k-clique yields such a range.

Each builder packages the point set together with all derived constants
(k, n, N, mu, C, V, eps) and the expected optimum, so tests and the
verification pipeline can check the equivalences instead of trusting the
construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .geometry import BLUE, ONE, RED, ZERO, Point, PointSet, WeightedPoint
from .numerics import rational_pow

HALF = Fraction(1, 2)

PROBLEMS = (
    "bichromatic-box",
    "redblue-disc",
    "empty-star",
    "star-disc",
    "empty-box",
    "box-disc",
    "halfspace-bichromatic",
    "net-halfspace",
    "net-box",
)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 1..n."""

    n: int
    edges: frozenset

    @staticmethod
    def make(n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n < 1:
            raise ValueError("graph needs at least one vertex")
        norm = set()
        for u, v in edges:
            if u == v:
                raise ValueError("loops forbidden (graph is simple)")
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"vertex out of range: ({u}, {v})")
            norm.add((min(u, v), max(u, v)))
        return Graph(n, frozenset(norm))

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges


@dataclass(frozen=True)
class GadgetParams:
    k: int
    n: int
    N: int
    mu: Optional[Fraction] = None
    t: Optional[int] = None
    C: Optional[Fraction] = None
    V: Optional[Fraction] = None
    eps: Optional[Fraction] = None


@dataclass(frozen=True)
class GadgetInstance:
    params: GadgetParams
    points: PointSet
    problem: str
    expected_positive: object  # Fraction for continuous problems, int otherwise
    expected_negative: Optional[Fraction] = None

    def __post_init__(self) -> None:
        if self.problem not in PROBLEMS:
            raise ValueError(f"unknown problem: {self.problem}")


def _check_reduction_size(g: Graph, k: int) -> None:
    if k < 2 or g.n < 2:
        raise ValueError("degenerate reduction")


def _embed(k: int, plane: int, x: Fraction, y: Fraction) -> Point:
    coords = [ZERO] * (2 * k)
    coords[2 * plane - 2] = Fraction(x)
    coords[2 * plane - 1] = Fraction(y)
    return tuple(coords)


def _vec_add(a: Point, b: Point) -> Point:
    return tuple(x + y for x, y in zip(a, b))


def _bad_vertex_pairs(g: Graph):
    """Ordered vertex pairs that may not be chosen together: equal vertices
    (a vertex cannot be picked in two planes) and non-adjacent pairs."""
    return [
        (u, v)
        for u in range(1, g.n + 1)
        for v in range(1, g.n + 1)
        if u == v or not g.has_edge(u, v)
    ]


# ---------------------------------------------------------------------------
# Box reductions on the diagonal scaffold.


def _diagonal_blue(k: int, n: int, i: int, v: int) -> Point:
    return _embed(k, i, Fraction(v), Fraction(n + 1 - v))


def _box_reduction_points(g: Graph, k: int):
    n = g.n
    blues = [(ZERO,) * (2 * k)]
    for i in range(1, k + 1):
        for v in range(1, n + 1):
            blues.append(_diagonal_blue(k, n, i, v))
    reds = []
    for i in range(1, k + 1):
        for v in range(1, n):
            reds.append(_embed(k, i, Fraction(v) + HALF, Fraction(n + 1 - v) - HALF))
    kills = set()
    bad = _bad_vertex_pairs(g)
    for i in range(1, k + 1):
        for j in range(1, k + 1):
            if i == j:
                continue
            for u, v in bad:
                kills.add(_vec_add(_diagonal_blue(k, n, i, u), _diagonal_blue(k, n, j, v)))
    return blues, reds + sorted(kills)


def _scale_points(points: list[Point], factor: Fraction) -> list[Point]:
    return [tuple(c * factor for c in p) for p in points]


def build_bichromatic_gadget(g: Graph, k: int, normalize: bool = True) -> GadgetInstance:
    """Points whose largest red-free box holds k+1 blues iff G has a k-clique.

    With `normalize` the raw integer/half-integer coordinates are divided by
    n+1 so the set lies in the unit cube; that map is a per-dimension order
    isomorphism, so every combinatorial value is unchanged.
    """
    _check_reduction_size(g, k)
    blues, reds = _box_reduction_points(g, k)
    if normalize:
        factor = Fraction(1, g.n + 1)
        blues = _scale_points(blues, factor)
        reds = _scale_points(reds, factor)
    pts = tuple(
        [WeightedPoint(p, BLUE, 1) for p in blues]
        + [WeightedPoint(p, RED, 1) for p in reds]
    )
    points = PointSet(2 * k, pts)
    params = GadgetParams(k=k, n=g.n, N=points.total_weight)
    return GadgetInstance(params, points, "bichromatic-box", expected_positive=k + 1)


def build_redblue_gadget(g: Graph, k: int, normalize: bool = True) -> GadgetInstance:
    """Bichromatic instance with the blue origin fattened to N copies.

    N is the point count of the plain bichromatic construction.  In any box
    the scaffold blues and reds of one plane differ by at most one, so the
    discrepancy reaches N + k exactly when a red-free box with the origin
    and one blue per plane exists, i.e. iff G has a k-clique.
    """
    base = build_bichromatic_gadget(g, k, normalize=normalize)
    n_copies = base.params.N
    pts = tuple(
        WeightedPoint(p.coords, p.color, n_copies if all(c == 0 for c in p.coords) else p.weight)
        for p in base.points.points
    )
    points = PointSet(2 * k, pts)
    params = GadgetParams(k=k, n=g.n, N=points.total_weight)
    return GadgetInstance(params, points, "redblue-disc", expected_positive=n_copies + k)


# ---------------------------------------------------------------------------
# Hyperbolic scaffold for the continuous problems.


def _hyperbola_scaffold(g: Graph, k: int, mu: Fraction):
    """Scaffold and kill points for the empty-star family.

    C = 1/mu^(n-1).  Plane scaffold points sit just below the area-C
    hyperbola at (C mu^(u-1), mu^-u) for u = 0..n, so every maximal empty
    anchored rectangle has its corner at one of the n area-C choices
    (C mu^(u-1), mu^-(u-1)).  Kill points pair the shifted per-plane corner
    (C mu^(u-2), mu^-u) across two planes for forbidden vertex pairs.
    """
    n = g.n
    C = Fraction(1) / rational_pow(mu, n - 1)
    scaffold = []
    for i in range(1, k + 1):
        for u in range(0, n + 1):
            scaffold.append(_embed(k, i, C * mu ** (u - 1), mu ** (-u)))
    kills = set()
    bad = _bad_vertex_pairs(g)
    for i in range(1, k + 1):
        for j in range(1, k + 1):
            if i == j:
                continue
            for u, v in bad:
                a = _embed(k, i, C * mu ** (u - 2), mu ** (-u))
                b = _embed(k, j, C * mu ** (v - 2), mu ** (-v))
                kills.add(_vec_add(a, b))
    return C, scaffold + sorted(kills)


def build_empty_star_gadget(g: Graph, k: int, mu: Fraction) -> GadgetInstance:
    """Uncolored set whose largest empty star has volume C^k iff G has a
    k-clique, and exactly C^k/mu otherwise."""
    _check_reduction_size(g, k)
    mu = Fraction(mu)
    if mu <= 1:
        raise ValueError("mu must exceed 1")
    C, coords = _hyperbola_scaffold(g, k, mu)
    points = PointSet(2 * k, tuple(WeightedPoint(p, None, 1) for p in coords))
    V = rational_pow(C, k)
    params = GadgetParams(k=k, n=g.n, N=points.total_weight, mu=mu, C=C, V=V)
    return GadgetInstance(
        params, points, "empty-star", expected_positive=V, expected_negative=V / mu
    )


def choose_mu(k: int, n: int, N: int) -> tuple[int, Fraction]:
    """The canonical gap parameter t = 2knN, mu = 1 + 1/t.

    Guarantees mu^(k(n-1)) < N/(N-1), i.e. C^k > (N-1)/N, so that on the
    discrepancy gadgets the count side of any anchored box can never beat a
    volume-C^k empty star.  The bound is asserted in exact arithmetic."""
    if k < 2 or n < 2 or N < 2:
        raise ValueError("parameters too small for the gap bound")
    t = 2 * k * n * N
    mu = 1 + Fraction(1, t)
    if not rational_pow(mu, k * (n - 1)) < Fraction(N, N - 1):
        raise RuntimeError("gap bound violated; construction is inconsistent")
    return t, mu


def _star_count(g: Graph, k: int) -> int:
    """Point count of the hyperbolic construction (independent of mu)."""
    _, coords = _hyperbola_scaffold(g, k, Fraction(2))
    return len(coords)


def build_star_discrepancy_gadget(g: Graph, k: int) -> GadgetInstance:
    """Hyperbolic set with mu tuned so star discrepancy equals C^k iff G has
    a k-clique: C^k > (N-1)/N caps the excess side below the empty-star
    deficit."""
    _check_reduction_size(g, k)
    n_points = _star_count(g, k)
    t, mu = choose_mu(k, g.n, n_points)
    base = build_empty_star_gadget(g, k, mu)
    C = base.params.C
    V = base.params.V
    if not V > Fraction(n_points - 1, n_points):
        raise RuntimeError("expected C^k > (N-1)/N")
    params = GadgetParams(k=k, n=g.n, N=n_points, mu=mu, t=t, C=C, V=V)
    return GadgetInstance(params, base.points, "star-disc", expected_positive=V)


def lift_points(ps: PointSet) -> PointSet:
    """Replace every zero coordinate by 1/2.

    Any box of volume at least 2/3 spans (1/2, 1/2) in every coordinate
    plane, so after lifting such a box contains a point iff its projection
    onto the point's own plane(s) contains the projection of the point;
    large empty boxes then reduce to products of per-plane choices exactly
    as in the anchored case.
    """
    pts = tuple(
        WeightedPoint(
            tuple(HALF if c == 0 else c for c in p.coords), p.color, p.weight, p.in_s
        )
        for p in ps.points
    )
    return PointSet(ps.dim, pts)


def build_empty_box_gadget(g: Graph, k: int) -> GadgetInstance:
    """Lifted hyperbolic set: the largest empty box has volume C^k iff G has
    a k-clique.  The rational mu from choose_mu keeps C^k above both 2/3
    (the lifting threshold) and (N-1)/N."""
    _check_reduction_size(g, k)
    n_points = _star_count(g, k)
    t, mu = choose_mu(k, g.n, n_points)
    base = build_empty_star_gadget(g, k, mu)
    V = base.params.V
    if not V > Fraction(2, 3):
        raise RuntimeError("expected C^k > 2/3")
    if not V > Fraction(n_points - 1, n_points):
        raise RuntimeError("expected C^k > (N-1)/N")
    params = GadgetParams(k=k, n=g.n, N=n_points, mu=mu, t=t, C=base.params.C, V=V)
    return GadgetInstance(
        params,
        lift_points(base.points),
        "empty-box",
        expected_positive=V,
        expected_negative=V / mu,
    )


def build_box_discrepancy_gadget(g: Graph, k: int) -> GadgetInstance:
    """Lifted hyperbolic set plus the two cube corners.

    The corner points pin every all-point box to volume 1, so the excess
    side stays below (N-1)/N < C^k and the optimum is the empty-box deficit
    C^k iff G has a k-clique.  N counts the two extra points before mu is
    chosen.  The origin is left unlifted; open boxes never contain either
    corner point."""
    _check_reduction_size(g, k)
    n_points = _star_count(g, k) + 2
    t, mu = choose_mu(k, g.n, n_points)
    base = build_empty_star_gadget(g, k, mu)
    lifted = lift_points(base.points)
    d = 2 * k
    pts = (
        (WeightedPoint((ZERO,) * d, None, 1),)
        + lifted.points
        + (WeightedPoint((ONE,) * d, None, 1),)
    )
    points = PointSet(d, pts)
    V = base.params.V
    if not V > Fraction(n_points - 1, n_points):
        raise RuntimeError("expected C^k > (N-1)/N")
    params = GadgetParams(k=k, n=g.n, N=n_points, mu=mu, t=t, C=base.params.C, V=V)
    return GadgetInstance(params, points, "box-disc", expected_positive=V)


# ---------------------------------------------------------------------------
# Half-space reduction on the rational unit circle.


def circle_point(t: Fraction) -> tuple[Fraction, Fraction]:
    """Rational parametrization of the unit circle; t in [0,1] walks the
    quarter arc from (1,0) to (0,1)."""
    t = Fraction(t)
    den = 1 + t * t
    return ((1 - t * t) / den, 2 * t / den)


def build_halfspace_gadget(g: Graph, k: int) -> GadgetInstance:
    """Convex-position variant for half-space ranges.

    Per plane, the n blue points sit on the unit circle at parameters
    v/(n+1); red separators sit on the arc between consecutive blues and a
    red guard beyond each end, at parameters (2v+1)/(2(n+1)).  A closed
    half-space meets the circle in one arc, so a red-free half-space sees
    at most one blue per plane; red midpoints of forbidden cross-plane blue
    pairs enforce adjacency by convexity.  The expected red-free optimum on
    a positive instance is k (one blue per plane).

    The blue origin from the box reduction is kept in the point set, but a
    half-space containing the circle's center cuts the circle in an arc of
    at least a semicircle, so it cannot separate any blue from both of its
    red neighbors: the origin never joins an optimal selection, and the
    k+1 target of the box reduction is unattainable for half-spaces.
    """
    _check_reduction_size(g, k)
    n = g.n
    blues = [(ZERO,) * (2 * k)]
    blue_of = {}
    for i in range(1, k + 1):
        for v in range(1, n + 1):
            x, y = circle_point(Fraction(v, n + 1))
            blue_of[(i, v)] = _embed(k, i, x, y)
            blues.append(blue_of[(i, v)])
    reds = []
    for i in range(1, k + 1):
        for v in range(0, n + 1):
            x, y = circle_point(Fraction(2 * v + 1, 2 * (n + 1)))
            reds.append(_embed(k, i, x, y))
    kills = set()
    bad = _bad_vertex_pairs(g)
    for i in range(1, k + 1):
        for j in range(1, k + 1):
            if i == j:
                continue
            for u, v in bad:
                mid = tuple(
                    (a + b) / 2 for a, b in zip(blue_of[(i, u)], blue_of[(j, v)])
                )
                kills.add(mid)
    pts = tuple(
        [WeightedPoint(p, BLUE, 1) for p in blues]
        + [WeightedPoint(p, RED, 1) for p in reds + sorted(kills)]
    )
    points = PointSet(2 * k, pts)
    params = GadgetParams(k=k, n=g.n, N=points.total_weight)
    return GadgetInstance(params, points, "halfspace-bichromatic", expected_positive=k)


def build_net_instance(g: Graph, k: int, family: str) -> GadgetInstance:
    """Net-verification instance: P is the full gadget point set, S its red
    points, and eps = m/|P| where m is the family's red-free blue target
    (k for half-spaces, k+1 for boxes, where the origin joins the box).
    S fails to be an eps-net exactly when G has a k-clique."""
    if family == "halfspace":
        base = build_halfspace_gadget(g, k)
        m = k
        problem = "net-halfspace"
    elif family == "box":
        base = build_bichromatic_gadget(g, k)
        m = k + 1
        problem = "net-box"
    else:
        raise ValueError(f"unknown range family: {family}")
    total = base.points.total_weight
    eps = Fraction(m, total)
    pts = tuple(
        WeightedPoint(p.coords, p.color, p.weight, in_s=(p.color == RED))
        for p in base.points.points
    )
    points = PointSet(base.points.dim, pts)
    params = GadgetParams(k=k, n=g.n, N=total, eps=eps)
    return GadgetInstance(params, points, problem, expected_positive=m)
