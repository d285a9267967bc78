"""prodmin: minimal multiplicative representations of hypergeometric
products over Q(i)(k), with exact verification and a JSON CLI."""

from .numbers import GaussRat, gi_factor, multiplicative_kernel
from .poly import Poly, RatFunc, dispersion_set, gcd_monic, integer_roots
from .lattice import (IntMat, RelationLattice, SnfResult, hnf_row,
                      kernel_basis, kernel_with_congruence, lattice_equal,
                      lattice_member, smith_normal_form)
from .sigmafact import (joint_orbit_decompose, orbit_decompose, radical_solve,
                        sigma_quotient_solve)
from .drring import (LaurentExpr, ProductSpec, RPiExtension, eval_laurent,
                     eval_product, eval_ratfunc, eval_rpi, o_function,
                     product_lower_bound, z_function)
from .pipeline import (MinimalRepresentation, PipelineError, build_mu,
                       compute_kappa, fit_constants, input_to_alphas,
                       minimal_representation, relation_module,
                       special_case_construct, transform_generators)
from .verify import (VerifyReport, check_commutes, check_kernel,
                     check_relation_candidate)
from .cli import parse_expr, render_ratfunc

__version__ = "0.1.0"
