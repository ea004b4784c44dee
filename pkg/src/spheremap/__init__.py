"""Labeled sphere triangulations, simplicial map degrees, and
vertex-minimality search."""

from .complexes import (
    CanonicalForm,
    ClosednessReport,
    Complex,
    Facet,
    OrientedComplex,
    SphereStatus,
    SphereVerdict,
    build_complex,
    canonical_form,
    check_closed_pseudomanifold,
    coherence_failures,
    euler_characteristic,
    is_sphere,
    orient,
    parity_to_sorted,
    stellar_subdivide_facet,
    stellar_subdivide_oriented,
    vertex_link,
)
from .constructions import (
    ConstructionCertificate,
    boundary_simplex,
    construct,
    cyclic_circle,
    degree_four_witness,
    degree_zero_sphere,
    insertion_step,
    one_point_suspension,
    replay,
    vertex_bound,
)
from .degree import (
    DegreeReport,
    LabeledSphere,
    Labeling,
    degree,
    facet_sign,
    labeled_sphere,
    link_reduction,
    permutation_sign,
    relabel,
    reverse_orientation,
    singleton_colors,
)
from .documents import (
    FORMAT_VERSION,
    load_certificate,
    parse,
    parse_with_metadata,
    serialize,
)
from .errors import (
    BadFacetColors,
    BadFacetSign,
    BadLabeling,
    BudgetExceeded,
    DegenerateFacet,
    DegreeMismatch,
    DocumentSyntaxError,
    DuplicateFacet,
    FacetNotFound,
    InconsistentDegree,
    InvalidDimension,
    InvalidLink,
    NonOrientable,
    NonPure,
    NotAPermutation,
    NotClosed,
    NotSingletonColor,
    PivotNotFound,
    SpheremapError,
    UnknownVertex,
    UnsupportedDimension,
    ValidationError,
    VertexAlreadyPresent,
    ZeroDegree,
)
from .search import (
    LambdaResult,
    LambdaRow,
    LambdaTable,
    MAX_SPLIT_VERTICES,
    enumerate_spheres,
    exists_labeling,
    known_lambda,
    lambda_search,
    lambda_table,
)

__version__ = "0.1.0"
