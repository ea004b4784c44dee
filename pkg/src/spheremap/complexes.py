"""Pure simplicial complexes: validation, orientation, links, subdivision,
sphere checks, and isomorphism canonicalization.

Conventions used throughout the package:

* A facet is a tuple of distinct integer vertex ids, sorted increasingly.
  A complex stores its facets as a lexicographically sorted tuple of such
  tuples, so structurally equal complexes compare equal.
* An orientation assigns each facet a sign in {+1, -1}, read relative to
  the facet's sorted vertex order.  Facets f and g sharing a ridge are
  coherently oriented when sign(g) = -sign(f) * (-1)**(p_f + p_g), where
  p_f is the index (in the sorted tuple f) of the vertex of f that is not
  in the ridge.  This is the usual "induced orientations on the common
  ridge are opposite" condition written in sign-and-position form.
* New vertex ids are always allocated as max(existing ids) + 1.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from .errors import (
    DegenerateFacet,
    DuplicateFacet,
    FacetNotFound,
    InvalidDimension,
    NonOrientable,
    NonPure,
    NotClosed,
    UnknownVertex,
    VertexAlreadyPresent,
)

Facet = tuple[int, ...]

__all__ = [
    "Facet",
    "Complex",
    "OrientedComplex",
    "ClosednessReport",
    "SphereStatus",
    "SphereVerdict",
    "CanonicalForm",
    "build_complex",
    "check_closed_pseudomanifold",
    "orient",
    "euler_characteristic",
    "vertex_link",
    "is_sphere",
    "stellar_subdivide_facet",
    "stellar_subdivide_oriented",
    "canonical_form",
    "parity_to_sorted",
]


def parity_to_sorted(seq) -> int:
    """Sign of the permutation that sorts ``seq`` (entries must be distinct)."""
    inv = 0
    n = len(seq)
    for i in range(n):
        for j in range(i + 1, n):
            if seq[i] > seq[j]:
                inv += 1
    return -1 if inv % 2 else 1


@dataclass(frozen=True)
class Complex:
    """Pure n-dimensional simplicial complex given by its facet list."""

    dimension: int
    facets: tuple[Facet, ...]

    @cached_property
    def vertices(self) -> tuple[int, ...]:
        seen: set[int] = set()
        for f in self.facets:
            seen.update(f)
        return tuple(sorted(seen))

    @cached_property
    def facet_set(self) -> frozenset[Facet]:
        return frozenset(self.facets)

    @cached_property
    def facets_at(self) -> dict[int, tuple[Facet, ...]]:
        """Vertex id -> facets containing it."""
        out: dict[int, list[Facet]] = {}
        for f in self.facets:
            for v in f:
                out.setdefault(v, []).append(f)
        return {v: tuple(fs) for v, fs in out.items()}

    @cached_property
    def ridge_entries(self) -> dict[Facet, tuple[tuple[Facet, int], ...]]:
        """Ridge -> ((facet, position of the off-ridge vertex), ...).

        For dimension 0 the unique ridge is the empty tuple, shared by all
        facets; the closedness and coherence rules below then specialize to
        "exactly two points with opposite signs" with no extra casing.
        """
        out: dict[Facet, list[tuple[Facet, int]]] = {}
        for f in self.facets:
            for i in range(len(f)):
                out.setdefault(f[:i] + f[i + 1:], []).append((f, i))
        return {r: tuple(es) for r, es in out.items()}


def build_complex(facet_list) -> Complex:
    """Validate a raw facet list and return a Complex.

    Raises NonPure for mixed cardinalities, DegenerateFacet for a repeated
    vertex inside a facet, DuplicateFacet for a repeated facet.
    """
    raw = [tuple(f) for f in facet_list]
    if not raw:
        raise InvalidDimension("a complex needs at least one facet")
    size = len(raw[0])
    if size == 0:
        raise NonPure("facets must be non-empty")
    normalized: list[Facet] = []
    for f in raw:
        if len(f) != size:
            raise NonPure(f"facet {f} has {len(f)} vertices, expected {size}")
        if len(set(f)) != len(f):
            raise DegenerateFacet(f"facet {f} repeats a vertex")
        normalized.append(tuple(sorted(f)))
    if len(set(normalized)) != len(normalized):
        seen: set[Facet] = set()
        for f in normalized:
            if f in seen:
                raise DuplicateFacet(f"facet {f} appears more than once")
            seen.add(f)
    return Complex(dimension=size - 1, facets=tuple(sorted(normalized)))


@dataclass(frozen=True)
class ClosednessReport:
    """Result of the closed-pseudomanifold check."""

    passed: bool
    bad_ridges: tuple[tuple[Facet, int], ...]  # (ridge, facet multiplicity != 2)
    connected: bool


def check_closed_pseudomanifold(complex: Complex) -> ClosednessReport:
    """Every ridge in exactly two facets, facet adjacency graph connected."""
    bad = tuple(
        (r, len(es))
        for r, es in sorted(complex.ridge_entries.items())
        if len(es) != 2
    )
    connected = _facet_graph_connected(complex)
    return ClosednessReport(passed=not bad and connected, bad_ridges=bad, connected=connected)


def _facet_graph_connected(complex: Complex) -> bool:
    facets = complex.facets
    if len(facets) <= 1:
        return True
    index = {f: i for i, f in enumerate(facets)}
    adj: list[list[int]] = [[] for _ in facets]
    for entries in complex.ridge_entries.values():
        ids = [index[f] for f, _ in entries]
        for a in ids:
            for b in ids:
                if a != b:
                    adj[a].append(b)
    seen = {0}
    stack = [0]
    while stack:
        for b in adj[stack.pop()]:
            if b not in seen:
                seen.add(b)
                stack.append(b)
    return len(seen) == len(facets)


@dataclass(frozen=True)
class OrientedComplex:
    """Complex plus a coherent orientation sign per facet.

    ``signs[i]`` belongs to ``base.facets[i]`` and is read relative to that
    facet's sorted vertex order.
    """

    base: Complex
    signs: tuple[int, ...]

    @property
    def dimension(self) -> int:
        return self.base.dimension

    @property
    def facets(self) -> tuple[Facet, ...]:
        return self.base.facets

    @property
    def vertices(self) -> tuple[int, ...]:
        return self.base.vertices

    @cached_property
    def sign_by_facet(self) -> dict[Facet, int]:
        return dict(zip(self.base.facets, self.signs))

    def sign_of(self, facet: Facet) -> int:
        try:
            return self.sign_by_facet[facet]
        except KeyError:
            raise FacetNotFound(f"{facet} is not a facet of this complex") from None

    def reversed(self) -> "OrientedComplex":
        return OrientedComplex(self.base, tuple(-s for s in self.signs))


def orient(complex: Complex) -> OrientedComplex:
    """Assign a coherent orientation, or raise NonOrientable.

    Deterministic: breadth-first propagation seeded with sign +1 on the
    lexicographically smallest facet.  Requires a closed pseudomanifold.
    """
    report = check_closed_pseudomanifold(complex)
    if not report.passed:
        detail = "disconnected facet graph" if not report.connected else (
            f"ridges with multiplicity != 2: {[r for r, _ in report.bad_ridges][:5]}"
        )
        raise NotClosed(f"cannot orient: {detail}")

    position: dict[tuple[Facet, Facet], tuple[int, int]] = {}
    neighbors: dict[Facet, list[Facet]] = {f: [] for f in complex.facets}
    for entries in complex.ridge_entries.values():
        (f, pf), (g, pg) = entries
        neighbors[f].append(g)
        neighbors[g].append(f)
        position[(f, g)] = (pf, pg)
        position[(g, f)] = (pg, pf)

    signs: dict[Facet, int] = {}
    seed = complex.facets[0]
    signs[seed] = 1
    queue = [seed]
    while queue:
        f = queue.pop(0)
        sf = signs[f]
        for g in neighbors[f]:
            pf, pg = position[(f, g)]
            expected = -sf if (pf + pg) % 2 == 0 else sf
            if g in signs:
                if signs[g] != expected:
                    raise NonOrientable(
                        f"conflicting signs at facet {g} (ridge shared with {f})"
                    )
            else:
                signs[g] = expected
                queue.append(g)
    return OrientedComplex(complex, tuple(signs[f] for f in complex.facets))


def coherence_failures(oriented: OrientedComplex) -> tuple[Facet, ...]:
    """Ridges where the two incident facets are not coherently oriented."""
    sign = oriented.sign_by_facet
    bad = []
    for ridge, entries in oriented.base.ridge_entries.items():
        if len(entries) != 2:
            bad.append(ridge)
            continue
        (f, pf), (g, pg) = entries
        expected = -sign[f] if (pf + pg) % 2 == 0 else sign[f]
        if sign[g] != expected:
            bad.append(ridge)
    return tuple(sorted(bad))


def euler_characteristic(complex: Complex) -> int:
    """Alternating sum of face counts across all dimensions 0..n."""
    faces: list[set[Facet]] = [set() for _ in range(complex.dimension + 1)]
    for f in complex.facets:
        for k in range(1, len(f) + 1):
            faces[k - 1].update(combinations(f, k))
    chi = 0
    for k, level in enumerate(faces):
        chi += len(level) if k % 2 == 0 else -len(level)
    return chi


def vertex_link(complex: Complex, v: int) -> Complex:
    """Complex of facets {f \\ {v}} over facets f containing v."""
    if v not in complex.facets_at:
        raise UnknownVertex(f"vertex {v} is not in the complex")
    if complex.dimension < 1:
        raise InvalidDimension("links are defined for dimension >= 1")
    link_facets = tuple(
        sorted(tuple(u for u in f if u != v) for f in complex.facets_at[v])
    )
    return Complex(dimension=complex.dimension - 1, facets=link_facets)


class SphereStatus(enum.Enum):
    SPHERE = "Sphere"
    NOT_SPHERE = "NotSphere"
    NECESSARY_CONDITIONS_ONLY = "NecessaryConditionsOnly"


@dataclass(frozen=True)
class SphereVerdict:
    status: SphereStatus
    checks: tuple[tuple[str, bool], ...]

    @property
    def passed(self) -> bool:
        return self.status is not SphereStatus.NOT_SPHERE


def is_sphere(complex: Complex) -> SphereVerdict:
    """Sphere recognition where it is decidable, necessary checks beyond.

    Exact for dimension <= 2 (closed + connected + orientable + Euler
    characteristic + all vertex links single cycles pins down the sphere by
    surface classification).  For dimension >= 3 the same battery of checks
    is applied, with links tested recursively, but a passing verdict is only
    NecessaryConditionsOnly: no full sphere recognition is attempted.
    """
    n = complex.dimension
    checks: list[tuple[str, bool]] = []

    report = check_closed_pseudomanifold(complex)
    checks.append(("closed_pseudomanifold", not report.bad_ridges))
    checks.append(("connected", report.connected))
    if not report.passed:
        return SphereVerdict(SphereStatus.NOT_SPHERE, tuple(checks))

    try:
        orient(complex)
        orientable = True
    except NonOrientable:
        orientable = False
    checks.append(("orientable", orientable))

    chi_ok = euler_characteristic(complex) == 1 + (-1) ** n
    checks.append(("euler_characteristic", chi_ok))

    links_ok = True
    if n >= 1:
        for v in complex.vertices:
            verdict = is_sphere(vertex_link(complex, v))
            if n <= 3:
                # links live in dimension <= 2 where the test is exact
                links_ok = verdict.status is SphereStatus.SPHERE
            else:
                links_ok = verdict.status is not SphereStatus.NOT_SPHERE
            if not links_ok:
                break
        checks.append(("vertex_links", links_ok))

    if not (orientable and chi_ok and links_ok):
        return SphereVerdict(SphereStatus.NOT_SPHERE, tuple(checks))
    if n <= 2:
        return SphereVerdict(SphereStatus.SPHERE, tuple(checks))
    return SphereVerdict(SphereStatus.NECESSARY_CONDITIONS_ONLY, tuple(checks))


def _check_subdivision_args(complex: Complex, facet, new_vertex) -> tuple[Facet, int]:
    facet = tuple(sorted(facet))
    if facet not in complex.facet_set:
        raise FacetNotFound(f"{facet} is not a facet of the complex")
    if new_vertex is None:
        new_vertex = max(complex.vertices) + 1
    elif new_vertex in complex.facets_at:
        raise VertexAlreadyPresent(f"vertex {new_vertex} already exists")
    return facet, new_vertex


def stellar_subdivide_facet(complex: Complex, facet, new_vertex: int | None = None) -> Complex:
    """Replace facet sigma by the n+1 facets (sigma \\ {x}) + {w} for x in sigma.

    ``new_vertex`` defaults to max(existing ids) + 1.
    """
    facet, w = _check_subdivision_args(complex, facet, new_vertex)
    out = [f for f in complex.facets if f != facet]
    for i in range(len(facet)):
        out.append(tuple(sorted(facet[:i] + facet[i + 1:] + (w,))))
    return Complex(complex.dimension, tuple(sorted(out)))


def stellar_subdivide_oriented(
    oriented: OrientedComplex, facet, new_vertex: int | None = None
) -> tuple[OrientedComplex, int]:
    """Stellar subdivision carrying the orientation through.

    The facet obtained by substituting w for the vertex at sorted position i
    keeps the old facet's sign relative to that substituted order; moving w
    to its sorted slot (w is larger than every existing id, so the end)
    contributes a factor (-1)**(m-1-i) for a facet of m vertices.  The
    result is coherent whenever the input is.
    """
    facet, w = _check_subdivision_args(oriented.base, facet, new_vertex)
    eps = oriented.sign_of(facet)
    m = len(facet)
    pairs = [
        (f, s) for f, s in zip(oriented.base.facets, oriented.signs) if f != facet
    ]
    for i in range(m):
        sub = tuple(sorted(facet[:i] + facet[i + 1:] + (w,)))
        pairs.append((sub, eps * (-1 if (m - 1 - i) % 2 else 1)))
    pairs.sort()
    base = Complex(oriented.base.dimension, tuple(f for f, _ in pairs))
    return OrientedComplex(base, tuple(s for _, s in pairs)), w


@dataclass(frozen=True)
class CanonicalForm:
    """Isomorphism-invariant key plus a relabeling realizing it."""

    key: bytes
    relabeling: dict[int, int]  # original vertex id -> canonical id (1-based)
    canonical: Complex


def canonical_form(complex: Complex) -> CanonicalForm:
    """Canonical key under vertex relabeling bijections.

    Invariant-refined backtracking: vertices are partitioned by iterated
    structural signatures, then non-singleton classes are split by
    individualizing each member in turn; the key is the lexicographically
    smallest relabeled facet list over all resulting discrete orderings.
    Two complexes get equal keys iff they differ by a vertex bijection.
    """
    verts = complex.vertices
    index = {v: i for i, v in enumerate(verts)}
    facets_idx = [tuple(index[v] for v in f) for f in complex.facets]
    incident: list[list[int]] = [[] for _ in verts]
    for fi, f in enumerate(facets_idx):
        for vi in f:
            incident[vi].append(fi)

    nv = len(verts)

    def refine(colors: list[int]) -> list[int]:
        while True:
            sigs = []
            for vi in range(nv):
                rows = sorted(
                    tuple(sorted(colors[u] for u in facets_idx[fi] if u != vi))
                    for fi in incident[vi]
                )
                sigs.append((colors[vi], tuple(rows)))
            rank = {s: r for r, s in enumerate(sorted(set(sigs)))}
            new = [rank[s] for s in sigs]
            if new == colors:
                return colors
            colors = new

    best: list[tuple[tuple[Facet, ...], list[int]]] = []

    def descend(colors: list[int]) -> None:
        colors = refine(colors)
        classes: dict[int, list[int]] = {}
        for vi, c in enumerate(colors):
            classes.setdefault(c, []).append(vi)
        target = None
        for c in sorted(classes):
            if len(classes[c]) > 1:
                target = classes[c]
                break
        if target is None:
            relabeled = tuple(
                sorted(tuple(sorted(colors[vi] + 1 for vi in f)) for f in facets_idx)
            )
            if not best or relabeled < best[0][0]:
                best[:] = [(relabeled, colors)]
            return
        for vi in target:
            child = list(colors)
            child[vi] = nv  # fresh color above every current rank
            descend(child)

    descend([len(incident[vi]) for vi in range(nv)])
    relabeled, colors = best[0]
    key = (
        f"{complex.dimension};{nv};"
        + "|".join(",".join(map(str, f)) for f in relabeled)
    ).encode()
    relabeling = {verts[vi]: colors[vi] + 1 for vi in range(nv)}
    return CanonicalForm(
        key=key,
        relabeling=relabeling,
        canonical=Complex(complex.dimension, relabeled),
    )
