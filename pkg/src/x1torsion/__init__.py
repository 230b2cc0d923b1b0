"""Exact arithmetic for torsion points on Tate normal form elliptic curves.

Modules cover four layers: field arithmetic over Q, F_p and their
extensions (fields, polys), the curve group law and order certification
(curves), exhaustive finite-field enumeration (scan), and the fixture
verification pipeline plus CLI (fixtures, cli).
"""

from .curves import (
    Curve,
    CurveError,
    CurveInvariants,
    CurvePoint,
    DegenerateCoordinatesError,
    OrderCertificate,
    PointNotOnCurveError,
    SingularCurveError,
    TateParams,
    add_points,
    curve_invariants,
    negate,
    prime_factors,
    scalar_mul,
    sutherland_to_tate,
    tate_curve,
    verify_order,
)
from .fields import (
    DescriptorMismatchError,
    FieldDescriptor,
    FieldElement,
    FieldError,
    FieldZeroDivision,
    Generator,
    ShapeError,
    ZeroDivisorError,
    element_from_text,
    element_to_text,
    is_prime,
)
from .fixtures import (
    Fixture,
    FixtureCheck,
    FixtureError,
    VerificationReport,
    load_fixture,
    parse_fixture,
    report_record,
    serialize_fixture,
    shipped_fixture_paths,
    verify_fixture,
    verify_fixtures,
)
from .polys import (
    Poly,
    PolyDomainError,
    certify_irreducible_over_q,
    find_irreducible,
    is_irreducible_mod_p,
    poly_gcd,
    powmod,
)
from .scan import (
    DEFAULT_GONALITIES,
    BudgetError,
    GonalityTable,
    ScanHit,
    format_hit_line,
    hit_record,
    low_degree_filter,
    place_degree,
    point_count,
    scan_fp,
    summary_record,
)

__all__ = [
    "BudgetError",
    "DEFAULT_GONALITIES",
    "Curve",
    "CurveError",
    "CurveInvariants",
    "CurvePoint",
    "DegenerateCoordinatesError",
    "DescriptorMismatchError",
    "FieldDescriptor",
    "FieldElement",
    "FieldError",
    "FieldZeroDivision",
    "Fixture",
    "FixtureCheck",
    "FixtureError",
    "Generator",
    "GonalityTable",
    "OrderCertificate",
    "PointNotOnCurveError",
    "Poly",
    "PolyDomainError",
    "ScanHit",
    "ShapeError",
    "SingularCurveError",
    "TateParams",
    "VerificationReport",
    "ZeroDivisorError",
    "add_points",
    "certify_irreducible_over_q",
    "curve_invariants",
    "element_from_text",
    "element_to_text",
    "find_irreducible",
    "format_hit_line",
    "hit_record",
    "is_irreducible_mod_p",
    "is_prime",
    "load_fixture",
    "low_degree_filter",
    "negate",
    "parse_fixture",
    "place_degree",
    "point_count",
    "poly_gcd",
    "powmod",
    "prime_factors",
    "report_record",
    "scalar_mul",
    "scan_fp",
    "serialize_fixture",
    "shipped_fixture_paths",
    "summary_record",
    "sutherland_to_tate",
    "tate_curve",
    "verify_fixture",
    "verify_fixtures",
    "verify_order",
]
