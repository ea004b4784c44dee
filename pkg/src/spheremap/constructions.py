"""Generators for labeled sphere triangulations of prescribed degree.

Every generator returns a ConstructionCertificate: the labeled sphere, the
degree and vertex count it claims (both re-verified by the degree engine at
build time), and a replayable recipe of the steps that produced it.

The two composable moves are:

* one_point_suspension: raises the dimension by 1, adds exactly 1 vertex,
  keeps the degree.
* insertion_step: same dimension, adds n+2 vertices, raises the degree by n.
  It subdivides a facet that maps positively onto the target facet colored
  {1..n+1}, colors the new center n+2, and then subdivides each of the n+1
  new facets once more to restore a positively-mapped copy of each color.

construct(n, d) composes these from small seeds so that the vertex count
stays within ((n+2)/n)*|d| + 2n+2, and hits the known exact minima for
|d| <= 1 and for d in {2,3,4} with n >= d-1 (n+d+3 vertices).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .complexes import (
    Complex,
    Facet,
    OrientedComplex,
    build_complex,
    orient,
    stellar_subdivide_oriented,
)
from .degree import (
    LabeledSphere,
    degree,
    facet_sign,
    labeled_sphere,
    relabel,
    reverse_orientation,
)
from .errors import (
    BadFacetColors,
    BadFacetSign,
    FacetNotFound,
    InvalidDimension,
    PivotNotFound,
    SpheremapError,
    ZeroDegree,
)

__all__ = [
    "ConstructionCertificate",
    "boundary_simplex",
    "cyclic_circle",
    "degree_zero_sphere",
    "one_point_suspension",
    "insertion_step",
    "degree_four_witness",
    "construct",
    "replay",
    "vertex_bound",
]

RecipeStep = tuple
Recipe = tuple[RecipeStep, ...]


@dataclass(frozen=True)
class ConstructionCertificate:
    """Self-verifying witness: labeled sphere + claims + replayable recipe."""

    labeled: LabeledSphere
    claimed_degree: int
    claimed_vertex_count: int
    recipe: Recipe

    @property
    def vertex_count(self) -> int:
        return len(self.labeled.oriented.vertices)

    @property
    def dimension(self) -> int:
        return self.labeled.dimension


def _certify(ls: LabeledSphere, recipe: Recipe) -> ConstructionCertificate:
    d = degree(ls).degree
    return ConstructionCertificate(
        labeled=ls,
        claimed_degree=d,
        claimed_vertex_count=len(ls.oriented.vertices),
        recipe=recipe,
    )


def _as_labeled(x) -> tuple[LabeledSphere, Recipe]:
    """Accept a LabeledSphere or a certificate; synthesize a literal seed
    recipe for bare spheres so composed recipes stay replayable."""
    if isinstance(x, ConstructionCertificate):
        return x.labeled, x.recipe
    if isinstance(x, LabeledSphere):
        seed = (
            "literal",
            {
                "dimension": x.dimension,
                "facets": [list(f) for f in x.complex.facets],
                "labels": dict(x.labels),
                "orientation": [
                    [s, *f] for f, s in zip(x.complex.facets, x.oriented.signs)
                ],
            },
        )
        return x, (seed,)
    raise TypeError(f"expected LabeledSphere or ConstructionCertificate, got {type(x)!r}")


def boundary_simplex(n: int) -> ConstructionCertificate:
    """Boundary of the (n+1)-simplex on vertices 1..n+2, identity coloring.

    Degree +1 with the minimum possible n+2 vertices.
    """
    if n < 1:
        raise InvalidDimension(f"boundary_simplex needs n >= 1, got {n}")
    complex = build_complex(combinations(range(1, n + 3), n + 1))
    ls = labeled_sphere(orient(complex), {v: v for v in range(1, n + 3)})
    return _certify(ls, (("boundary_simplex", n),))


def cyclic_circle(d: int) -> ConstructionCertificate:
    """Circle on 3|d| vertices colored 1,2,3 repeating cyclically: degree d."""
    if d == 0:
        raise ZeroDegree("cyclic_circle needs d != 0")
    m = 3 * abs(d)
    complex = build_complex([(i, i % m + 1) for i in range(1, m + 1)])
    ls = labeled_sphere(orient(complex), {v: (v - 1) % 3 + 1 for v in range(1, m + 1)})
    if d < 0:
        ls = reverse_orientation(ls)
    return _certify(ls, (("cyclic_circle", d),))


def degree_zero_sphere(n: int) -> ConstructionCertificate:
    """Boundary simplex with two vertices sharing a color: degree 0, n+2 vertices."""
    if n < 1:
        raise InvalidDimension(f"degree_zero_sphere needs n >= 1, got {n}")
    complex = build_complex(combinations(range(1, n + 3), n + 1))
    labels = {v: v for v in range(1, n + 2)}
    labels[n + 2] = n + 1  # color n+2 unused, so every target sum is 0
    ls = labeled_sphere(orient(complex), labels)
    return _certify(ls, (("degree_zero", n),))


def one_point_suspension(x, pivot: int | None = None) -> ConstructionCertificate:
    """Suspension with a single new vertex: dimension +1, degree unchanged.

    The new apex x joins every facet; the pivot vertex v doubles as the
    second suspension point, joining exactly the facets that avoid it.
    Orientation: a facet sigma of the input yields sigma+{x} with sign
    -eps_sigma, and (when v not in tau) tau+{v} with sign
    eps_tau * (-1)**(n+1-p) where p is v's sorted position; this keeps the
    result coherent and the degree equal to the input's.  The apex gets the
    fresh color n+3.
    """
    ls, recipe = _as_labeled(x)
    verts = ls.oriented.vertices
    if pivot is None:
        pivot = min(verts)
    elif pivot not in ls.labels:
        raise PivotNotFound(f"pivot {pivot} is not a vertex")
    n = ls.dimension
    apex = max(verts) + 1
    pairs: list[tuple[Facet, int]] = []
    for facet, eps in zip(ls.complex.facets, ls.oriented.signs):
        pairs.append((facet + (apex,), -eps))
        if pivot not in facet:
            g = tuple(sorted(facet + (pivot,)))
            p = g.index(pivot)
            pairs.append((g, eps * (-1 if (n + 1 - p) % 2 else 1)))
    pairs.sort()
    base = Complex(n + 1, tuple(f for f, _ in pairs))
    oriented = OrientedComplex(base, tuple(s for _, s in pairs))
    labels = dict(ls.labels)
    labels[apex] = n + 3
    out = labeled_sphere(oriented, labels)
    cert = _certify(out, recipe + (("suspend", pivot),))
    if cert.claimed_degree != degree(ls).degree:
        raise SpheremapError("suspension changed the degree")  # pragma: no cover
    return cert


def _qualifying_facets(ls: LabeledSphere) -> list[Facet]:
    """Facets mapping with sign +1 onto the target facet colored {1..n+1}."""
    rep = degree(ls)
    return sorted(f for f, s in rep.per_target_facet[ls.dimension + 2] if s == 1)


def insertion_step(x, facet: Facet | None = None) -> ConstructionCertificate:
    """Degree +n at the price of n+2 vertices, in place on one facet.

    The facet must carry map sign +1 and the colors {1..n+1}.  When no facet
    is given, the lexicographically smallest qualifying one is used.
    """
    ls, recipe = _as_labeled(x)
    n = ls.dimension
    want = set(range(1, n + 2))
    if facet is None:
        candidates = _qualifying_facets(ls)
        if not candidates:
            raise FacetNotFound("no facet with sign +1 and colors {1..n+1}")
        facet = candidates[0]
    else:
        facet = tuple(sorted(facet))
        if facet not in ls.complex.facet_set:
            raise FacetNotFound(f"{facet} is not a facet of the complex")
        cols = {ls.labels[v] for v in facet}
        if cols != want:
            raise BadFacetColors(f"facet colors {sorted(cols)} != {sorted(want)}")
        s, _ = facet_sign(ls, facet)
        if s != 1:
            raise BadFacetSign(f"facet {facet} has map sign {s}, need +1")

    labels = dict(ls.labels)
    oriented = ls.oriented
    w = max(ls.oriented.vertices) + 1
    oriented, _ = stellar_subdivide_oriented(oriented, facet, w)
    labels[w] = n + 2
    for u in facet:  # sorted order: deterministic ids for the second round
        a = tuple(sorted(tuple(z for z in facet if z != u) + (w,)))
        wi = max(oriented.vertices) + 1
        oriented, _ = stellar_subdivide_oriented(oriented, a, wi)
        labels[wi] = ls.labels[u]
    out = labeled_sphere(oriented, labels)
    cert = _certify(out, recipe + (("insert", tuple(facet)),))
    if cert.claimed_degree != degree(ls).degree + n:
        raise SpheremapError("insertion step did not add n to the degree")  # pragma: no cover
    return cert


def degree_four_witness(raw: bool = False) -> ConstructionCertificate:
    """Ten-vertex 3-sphere of degree 4 (the minimum vertex count for it).

    Start from the boundary 4-simplex on u_1..u_5 and subdivide the facet
    opposite u_i by a new vertex w_i colored i, for i = 1..5; u_j keeps
    color j.  All 20 facets then map with sign -1 (degree -4); a final
    swap of colors 1 and 2 makes the degree +4.  ``raw=True`` skips the
    final swap.
    """
    complex = build_complex(combinations(range(1, 6), 4))
    oriented = orient(complex)
    labels = {v: v for v in range(1, 6)}
    for i in range(1, 6):
        opposite = tuple(v for v in range(1, 6) if v != i)
        wi = 5 + i
        oriented, _ = stellar_subdivide_oriented(oriented, opposite, wi)
        labels[wi] = i
    ls = labeled_sphere(oriented, labels)
    if raw:
        return _certify(ls, (("degree_four_witness_raw",),))
    swap = {c: c for c in range(1, 6)}
    swap[1], swap[2] = 2, 1
    return _certify(relabel(ls, swap), (("degree_four_witness",),))


def vertex_bound(n: int, d: int) -> int:
    """Guaranteed vertex budget for construct: floor(((n+2)/n)*|d|) + 2n+2."""
    return ((n + 2) * abs(d)) // n + 2 * n + 2


def construct(n: int, d: int) -> ConstructionCertificate:
    """Labeled n-sphere of degree d within the guaranteed vertex budget.

    n=1 uses the cyclic circle (3|d| vertices, the exact minimum).  For
    n >= 2, write |d| = k*n + l with 1 <= l <= n: a degree-l seed in
    dimension l-1 (boundary simplex for l=1, else one insertion into
    the boundary simplex of dimension l-1), suspended up to dimension n,
    then k insertion steps.  Negative d reverses the final orientation.
    """
    if n < 1:
        raise InvalidDimension(f"construct needs n >= 1, got {n}")
    if n == 1:
        return degree_zero_sphere(1) if d == 0 else cyclic_circle(d)
    if d == 0:
        return degree_zero_sphere(n)
    a = abs(d)
    if a == 1:
        cert = boundary_simplex(n)
    else:
        k, l = divmod(a, n)
        if l == 0:
            k, l = k - 1, n
        if l == 1:
            cert = boundary_simplex(n)
        else:
            cert = insertion_step(boundary_simplex(l - 1))
            for _ in range(n - l + 1):
                cert = one_point_suspension(cert)
        for _ in range(k):
            cert = insertion_step(cert)
    if d < 0:
        cert = _reverse_certificate(cert)
    return cert


def _reverse_certificate(cert: ConstructionCertificate) -> ConstructionCertificate:
    return _certify(reverse_orientation(cert.labeled), cert.recipe + (("reverse",),))


def replay(recipe) -> ConstructionCertificate:
    """Re-run a recipe; reproduces the certificate's facet list exactly."""
    cert: ConstructionCertificate | None = None
    for step in recipe:
        op, *args = step
        if op == "boundary_simplex":
            cert = boundary_simplex(int(args[0]))
        elif op == "cyclic_circle":
            cert = cyclic_circle(int(args[0]))
        elif op == "degree_zero":
            cert = degree_zero_sphere(int(args[0]))
        elif op == "degree_four_witness":
            cert = degree_four_witness()
        elif op == "degree_four_witness_raw":
            cert = degree_four_witness(raw=True)
        elif op == "literal":
            cert = _literal_certificate(args[0])
        elif op == "suspend":
            cert = one_point_suspension(cert, int(args[0]))
        elif op == "insert":
            cert = insertion_step(cert, tuple(int(v) for v in args[0]))
        elif op == "reverse":
            cert = _reverse_certificate(cert)
        else:
            raise SpheremapError(f"unknown recipe step {op!r}")
    if cert is None:
        raise SpheremapError("empty recipe")
    return cert


def _literal_certificate(core: dict) -> ConstructionCertificate:
    complex = build_complex(core["facets"])
    signs_by_facet: dict[Facet, int] = {}
    for entry in core["orientation"]:
        sign, *verts = entry
        signs_by_facet[tuple(sorted(int(v) for v in verts))] = int(sign)
    oriented = OrientedComplex(
        complex, tuple(signs_by_facet[f] for f in complex.facets)
    )
    labels = {int(v): int(c) for v, c in core["labels"].items()}
    ls = labeled_sphere(oriented, labels)
    seed = (
        "literal",
        {
            "dimension": ls.dimension,
            "facets": [list(f) for f in complex.facets],
            "labels": dict(labels),
            "orientation": [[s, *f] for f, s in zip(complex.facets, oriented.signs)],
        },
    )
    return _certify(ls, (seed,))
