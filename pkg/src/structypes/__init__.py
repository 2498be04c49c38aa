"""Combinatorial species, signed species, operators on them, groupoid
cardinality, and Chern classes of smooth projective hypersurfaces."""

from .chern import (
    HypersurfaceSpec,
    adjunction_oracle,
    chern_hypersurface,
    chern_pn,
    euler_char,
    euler_poly,
    integral_skeletal,
    q_binomial,
    skeletal_species,
)
from .intspecies import IntSpecies, embed, icount, iegf, iprod, isum, virtually_equivalent
from .operators import D, MZ, X, apply, commutator, dcycle_bijection, dzpow_bijection, iapply, sti_bijection, vop, xop
from .parse import parse_operator, parse_program, parse_species
from .series import ChernPolynomial, TruncatedSeries, eval_at, reciprocal, theta
from .species import (
    L,
    SpeciesSystem,
    Z,
    count,
    degree_component,
    egf,
    enumerate_structures,
    is_regular,
    regular_decompose,
    transport,
)
