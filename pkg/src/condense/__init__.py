"""Exact-arithmetic deciders and certificates for condensedness
properties of integral domains and the D + X*L[X] construction."""

from .exactnum import (
    NFElement,
    NumberField,
    QPoly,
    Rational,
    linearly_independent,
    nf_inverse,
    nf_mul,
    rational_roots,
)
from .ideals import (
    ExplicitGenerators,
    FractionalIdeal,
    MonomialIdeal,
    comaximal,
    ideal_colon,
    ideal_intersect,
    ideal_product,
    ideal_sum,
    is_principal,
    membership,
    v_closure,
    v_coprime,
)
from .rings import (
    QQ,
    ZZ,
    CondensedStatus,
    FieldDomain,
    IntegerRing,
    QuadInt,
    QuadraticOrder,
    SemigroupRing,
    SgElement,
    condensed_status,
    divides,
    enumerate_elements,
    is_atom,
    is_unit,
)
from .verdicts import (
    InternalConsistencyError,
    ParseError,
    PreconditionError,
    Verdict,
)

__version__ = "0.1.0"

__all__ = [
    "CondensedStatus",
    "ExplicitGenerators",
    "FieldDomain",
    "FractionalIdeal",
    "IntegerRing",
    "InternalConsistencyError",
    "MonomialIdeal",
    "NFElement",
    "NumberField",
    "ParseError",
    "PreconditionError",
    "QPoly",
    "QQ",
    "QuadInt",
    "QuadraticOrder",
    "Rational",
    "SemigroupRing",
    "SgElement",
    "Verdict",
    "ZZ",
    "comaximal",
    "condensed_status",
    "divides",
    "enumerate_elements",
    "ideal_colon",
    "ideal_intersect",
    "ideal_product",
    "ideal_sum",
    "is_atom",
    "is_principal",
    "is_unit",
    "linearly_independent",
    "membership",
    "nf_inverse",
    "nf_mul",
    "rational_roots",
    "v_closure",
    "v_coprime",
]
