"""Degree of the simplicial map induced by a vertex coloring.

A coloring of an oriented n-sphere triangulation by colors {1..n+2} induces
a simplicial map onto the boundary of the (n+1)-simplex whose vertices are
the colors.  The degree is the signed count of preimage facets over any one
target facet; for a closed coherently oriented domain all n+2 counts agree,
and the engine verifies that on every call.

Sign of a nondegenerate facet t:

    sign(t) = eps_t * sigma_t * rho_i

* eps_t: stored orientation sign of t (relative to sorted vertex order),
* sigma_t: parity of the color sequence read along t's sorted vertices,
  relative to increasing color order,
* rho_i = (-1)**(n+i): reference sign of the target facet omitting color i,
  written in increasing color order.  This normalization is exactly the one
  `orient` produces on the boundary simplex (the facet omitting the top
  color is positive), so the identity coloring of the boundary simplex has
  degree +1 in every dimension.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .complexes import (
    Complex,
    Facet,
    OrientedComplex,
    SphereStatus,
    is_sphere,
    parity_to_sorted,
)
from .errors import (
    BadLabeling,
    FacetNotFound,
    InconsistentDegree,
    InvalidDimension,
    InvalidLink,
    NotAPermutation,
    NotSingletonColor,
    UnknownVertex,
)

Labeling = dict[int, int]

__all__ = [
    "Labeling",
    "LabeledSphere",
    "DegreeReport",
    "labeled_sphere",
    "facet_sign",
    "degree",
    "relabel",
    "reverse_orientation",
    "link_reduction",
    "singleton_colors",
    "permutation_sign",
]


@dataclass(frozen=True)
class LabeledSphere:
    """Oriented complex plus a coloring of its vertices by {1..n+2}."""

    oriented: OrientedComplex
    labels: Labeling

    @property
    def dimension(self) -> int:
        return self.oriented.dimension

    @property
    def complex(self) -> Complex:
        return self.oriented.base

    @property
    def color_count(self) -> int:
        return self.dimension + 2

    @cached_property
    def color_classes(self) -> dict[int, tuple[int, ...]]:
        out: dict[int, list[int]] = {}
        for v, c in self.labels.items():
            out.setdefault(c, []).append(v)
        return {c: tuple(sorted(vs)) for c, vs in out.items()}


def labeled_sphere(oriented: OrientedComplex, labels: Labeling) -> LabeledSphere:
    """Validated constructor: labels cover the vertex set, colors in range."""
    verts = set(oriented.vertices)
    if set(labels) != verts:
        missing = sorted(verts - set(labels))[:5]
        extra = sorted(set(labels) - verts)[:5]
        raise BadLabeling(f"label domain mismatch (missing {missing}, extra {extra})")
    top = oriented.dimension + 2
    for v, c in labels.items():
        if not isinstance(c, int) or isinstance(c, bool) or not 1 <= c <= top:
            raise BadLabeling(f"vertex {v} has color {c!r}, expected 1..{top}")
    return LabeledSphere(oriented, dict(labels))


def _facet_sign(labels: Labeling, full_colors: int, eps: int, facet: Facet):
    """(sign, omitted color) for one facet; (0, None) when degenerate."""
    cols = [labels[v] for v in facet]
    if len(set(cols)) != len(cols):
        return 0, None
    omitted = full_colors * (full_colors + 1) // 2 - sum(cols)
    sigma = parity_to_sorted(cols)
    n = full_colors - 2
    rho = -1 if (n + omitted) % 2 else 1
    return eps * sigma * rho, omitted


def facet_sign(ls: LabeledSphere, facet) -> tuple[int, int | None]:
    """Sign in {-1, 0, +1} and the omitted color naming the target facet.

    0 (with target None) means two vertices of the facet share a color, so
    the image is degenerate.
    """
    facet = tuple(sorted(facet))
    for v in facet:
        if v not in ls.labels:
            raise UnknownVertex(f"vertex {v} has no label")
    if facet not in ls.complex.facet_set:
        raise FacetNotFound(f"{facet} is not a facet of the complex")
    return _facet_sign(ls.labels, ls.color_count, ls.oriented.sign_of(facet), facet)


@dataclass(frozen=True)
class DegreeReport:
    """Per-target preimage lists with signs, plus the common signed sum."""

    degree: int | None
    per_target_facet: dict[int, tuple[tuple[Facet, int], ...]]
    consistent: bool

    @cached_property
    def per_target_sums(self) -> dict[int, int]:
        return {
            i: sum(s for _, s in entries)
            for i, entries in self.per_target_facet.items()
        }

    @property
    def degenerate_facet_count(self) -> int:
        return self._degenerate

    _degenerate: int = 0


def degree(ls: LabeledSphere) -> DegreeReport:
    """Signed preimage count, computed for all n+2 target facets.

    All sums are computed and compared; disagreement raises
    InconsistentDegree (with the report attached), which indicates a
    corrupted complex or orientation, never a valid input.
    """
    full = ls.color_count
    labels = ls.labels
    per: dict[int, list[tuple[Facet, int]]] = {i: [] for i in range(1, full + 1)}
    degenerate = 0
    for facet, eps in zip(ls.complex.facets, ls.oriented.signs):
        s, omitted = _facet_sign(labels, full, eps, facet)
        if s == 0:
            degenerate += 1
        else:
            per[omitted].append((facet, s))
    report = DegreeReport(
        degree=None,
        per_target_facet={i: tuple(entries) for i, entries in per.items()},
        consistent=False,
        _degenerate=degenerate,
    )
    sums = set(report.per_target_sums.values())
    if len(sums) != 1:
        raise InconsistentDegree(
            f"per-target signed sums disagree: {report.per_target_sums}", report
        )
    common = sums.pop()
    return DegreeReport(
        degree=common,
        per_target_facet=report.per_target_facet,
        consistent=True,
        _degenerate=degenerate,
    )


def permutation_sign(perm: dict[int, int]) -> int:
    """Sign of a color permutation given as a dict on {1..k}."""
    seq = [perm[i] for i in sorted(perm)]
    return parity_to_sorted(seq)


def relabel(ls: LabeledSphere, perm: dict[int, int]) -> LabeledSphere:
    """Compose the coloring with a permutation of {1..n+2}.

    Multiplies the degree by the sign of the permutation.
    """
    full = ls.color_count
    domain = set(range(1, full + 1))
    if set(perm.keys()) != domain or set(perm.values()) != domain:
        raise NotAPermutation(f"expected a bijection on 1..{full}")
    return LabeledSphere(ls.oriented, {v: perm[c] for v, c in ls.labels.items()})


def reverse_orientation(ls: LabeledSphere) -> LabeledSphere:
    """Flip every facet sign; negates the degree."""
    return LabeledSphere(ls.oriented.reversed(), dict(ls.labels))


def singleton_colors(ls: LabeledSphere) -> dict[int, int]:
    """Colors with exactly one preimage vertex, as color -> vertex."""
    return {c: vs[0] for c, vs in ls.color_classes.items() if len(vs) == 1}


def link_reduction(ls: LabeledSphere, v: int) -> LabeledSphere:
    """Cut out the unique vertex of its color; dimension and colors drop by 1.

    The link of v inherits the orientation of the facets around v and the
    coloring loses color c = label(v), with the remaining colors collapsed
    order-preservingly onto {1..n+1}.  The sign bookkeeping (below) is
    chosen so the degree is preserved exactly, which the test suite checks.

    Stored sign of the link facet t \\ {v}:

        kappa * (-1)**p * eps_t,  p = index of v in sorted t,
        kappa = (-1)**(c+1).
    """
    if v not in ls.labels:
        raise UnknownVertex(f"vertex {v} is not in the complex")
    n = ls.dimension
    if n < 1:
        raise InvalidDimension("link reduction needs dimension >= 1")
    c = ls.labels[v]
    if len(ls.color_classes[c]) != 1:
        raise NotSingletonColor(
            f"color {c} has preimages {ls.color_classes[c]}, expected just {v}"
        )
    kappa = 1 if c % 2 else -1
    pairs = []
    for facet in ls.complex.facets_at[v]:
        eps = ls.oriented.sign_of(facet)
        p = facet.index(v)
        link_facet = facet[:p] + facet[p + 1:]
        pairs.append((link_facet, kappa * eps * (-1 if p % 2 else 1)))
    pairs.sort()
    base = Complex(n - 1, tuple(f for f, _ in pairs))
    oriented = OrientedComplex(base, tuple(s for _, s in pairs))

    verdict = is_sphere(base)
    if verdict.status is SphereStatus.NOT_SPHERE:
        failing = [name for name, ok in verdict.checks if not ok]
        raise InvalidLink(f"link of {v} fails sphere checks: {failing}")

    labels = {
        u: (col if col < c else col - 1)
        for u, col in ls.labels.items()
        if u != v
    }
    return LabeledSphere(oriented, labels)
