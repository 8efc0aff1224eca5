"""Exact polyhedral toolkit for toric schemes over rank-one valuation rings."""

from .admissible import (
    AdmissibleCone,
    GeneratorSet,
    HeightResult,
    SemigroupElement,
    SlicePolyhedron,
    algebra_generators,
    bad_slice_vertices,
    is_finite_type,
    make_admissible,
    minimal_height,
    semigroup_membership,
    slice_at_one,
)
from .classify import (
    RationalRepresentation,
    RoundTripReport,
    Witness,
    cone_from_generators,
    rationalize,
    round_trip,
    saturation_check,
)
from .errors import (
    BoundTooSmall,
    ConstantNotInGamma,
    ContainsLine,
    DimensionMismatch,
    DimensionTooHigh,
    FieldMismatch,
    HeightUnboundedBelow,
    MathematicalNo,
    NotAFan,
    NotFiniteType,
    NotInCone,
    RankDeficient,
    SchemaError,
    ToricValError,
    ValueNotInGamma,
)
from .fans import (
    Fan,
    RationalFan,
    SliceComplex,
    fan_finite_type,
    fan_from_cones,
    product_fan,
    rational_fan_from_cones,
    recession_fan,
    slice_complex,
)
from .ordfield import (
    RATIONALS,
    FieldDescriptor,
    FieldElement,
    ValueGroup,
    as_fe,
    fe,
    fe_sign,
    gamma_contains,
    gamma_is_discrete,
    sqrtd,
)
from .polyhedra import Cone, HalfSpace, dd_convert, dual_cone
from .projtoric import (
    HeightedConfig,
    OrbitDescriptor,
    Subdivision,
    heights_from_valuations,
    orbit_correspondence,
    weight_polytope,
    weight_subdivision,
)
from .svg import render_svg

__all__ = [
    "AdmissibleCone",
    "BoundTooSmall",
    "Cone",
    "ConstantNotInGamma",
    "ContainsLine",
    "DimensionMismatch",
    "DimensionTooHigh",
    "Fan",
    "FieldDescriptor",
    "FieldElement",
    "FieldMismatch",
    "GeneratorSet",
    "HalfSpace",
    "HeightResult",
    "HeightUnboundedBelow",
    "HeightedConfig",
    "MathematicalNo",
    "NotAFan",
    "NotFiniteType",
    "NotInCone",
    "OrbitDescriptor",
    "RATIONALS",
    "RankDeficient",
    "RationalFan",
    "RationalRepresentation",
    "RoundTripReport",
    "SchemaError",
    "SemigroupElement",
    "SliceComplex",
    "SlicePolyhedron",
    "Subdivision",
    "ToricValError",
    "ValueGroup",
    "ValueNotInGamma",
    "Witness",
    "algebra_generators",
    "as_fe",
    "bad_slice_vertices",
    "cone_from_generators",
    "dd_convert",
    "dual_cone",
    "fan_finite_type",
    "fan_from_cones",
    "fe",
    "fe_sign",
    "gamma_contains",
    "gamma_is_discrete",
    "heights_from_valuations",
    "is_finite_type",
    "make_admissible",
    "minimal_height",
    "orbit_correspondence",
    "product_fan",
    "rational_fan_from_cones",
    "rationalize",
    "recession_fan",
    "render_svg",
    "round_trip",
    "saturation_check",
    "semigroup_membership",
    "slice_at_one",
    "slice_complex",
    "sqrtd",
    "weight_polytope",
    "weight_subdivision",
]
