"""Exact and 2-adic computations on associated Legendre functions vanishing
on the zeros of P_2, and on harmonic polynomials divisible by the cone
x^2 + y^2 - 2z^2.
"""

from .errors import (BadModulus, BadRange, DyadicConeError, EvenDenominator, EvenResidue,
                     NotARoot, OddM)
from .exact import (INFINITY, NEG_INFINITY, DyadicResidue, format_rational, parse_rational,
                    reduce_mod, residue_inv, v2)
from .harmonic import (ConeQuadric, TriPoly, divides_cone, harmonic_basis,
                       harmonic_multiplier_space, laplacian, solid_harmonic)
from .holt_ille import HValue, SigmaTable, h_at_minus2, h_mod, sigma, sigma_table
from .legendre import AssocLegendre, UniPoly, assoc_legendre, cos_power_coeff, divides_P2
from .lifting import (DyadicRootApprox, ScanReport, StabilityReport, dyadic_root,
                      exhaustive_verify, lift_step, low_bits, stability_check)

__version__ = "0.1.0"
