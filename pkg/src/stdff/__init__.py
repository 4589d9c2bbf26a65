"""Standard finite fields.

Canonical, reproducible constructions of every finite field GF(p^n):
standard defining polynomials, Steinitz numbers for elements, compatible
embeddings between subfields, and standard generators of the cyclic
subgroups of GF(p^n)^x.

>>> from stdff import standard_field
>>> F = standard_field(2, 4)
>>> F.from_steinitz(5) * F.from_steinitz(7)
<GF(2^4) element, Steinitz 13>
"""
from .base_arith import Factorization, PrimeField, is_prime, prime_field
from .conway_bridge import (
    ConwayTable,
    conway_generator,
    lift_log_small_order,
    load_conway_table,
    roots_in_field,
    steinitz_pair_conway_generator,
)
from .cyclic import (
    LiftValue,
    element_order,
    pohlig_hellman_log,
    r_multiplicity_closed_form,
    rth_root_steinitz_smallest,
    standard_cyclic_generator_prime_power,
    standard_generator,
)
from .errors import (
    DomainError,
    FactorizationError,
    IncompatibleFieldsError,
    IntegrityError,
    MissingDataError,
    NoSolutionError,
    NotInvertibleError,
    ResourceError,
    StdFFError,
    TableFormatError,
)
from .factor_db import FactorTable, factor_pn_minus_1, factorize, load_factor_table
from .poly import DensePoly, is_irreducible, poly_gcd
from .steinitz import SteinitzPair, standard_affine_shift, steinitz_pair
from .stdfield import (
    FieldElement,
    StandardField,
    embed,
    element_degree,
    minimal_polynomial,
    standard_field,
    tower_degree_list,
)
from .stdpoly import find_irreducible_polynomial, standard_prime_degree_poly

__version__ = "0.1.0"
