"""Interleaved subspace and Gabidulin codes with Kötter-style interpolation
and fast root finding.

Field elements are plain ints holding the canonical encoding sum(c_i q^i).
The hot kernels (Kötter iteration, elimination) run in a compiled
extension when it is available and in pure Python otherwise; set
ISCODES_PURE_PYTHON=1 to force the fallback.
"""

from iscodes._backend import NATIVE_AVAILABLE, default_backend
from iscodes.channels import OperatorChannelConfig, error_rank, operator_channel, rank_error_channel
from iscodes.codes import (CodeError, CodeParams, InterleavedMessage, SubspaceBasis, code_rate,
                           decodable, decoding_radius, encode_gabidulin, encode_subspace,
                           intersection_dim, kernel_dim_bound, make_code, min_subspace_distance,
                           subspace_distance, unique_decodable, unique_radius_gabidulin)
from iscodes.decoder import (DecodeOutcome, list_decode, list_decode_gabidulin, unique_decode,
                             unique_decode_gabidulin, verify_candidate)
from iscodes.field import FieldContext, FieldElement, FieldError, MulCounter, make_field
from iscodes.interpolation import (InterpolationInstance, check_success, interpolate_basis,
                                   interpolation_kernel, interpolation_matrix)
from iscodes.linearized import InterpPoly, LinearizedPoly, MonomialKey, weighted_degree
from iscodes.rootfinding import (RootSystem, build_root_system, enumerate_root_space, find_roots,
                                 solve_root_system_unique)
from iscodes.simulate import (ExperimentConfig, ExperimentReport, failure_bound,
                              run_complexity_benchmark, run_failure_experiment)

__version__ = "0.1.0"
