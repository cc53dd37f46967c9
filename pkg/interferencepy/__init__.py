from .combinatorics_main import (
    enumerate_matrices, matrix_class_size, multiplicity, sum_product_brute_force, expanded_sum,
    lemma2_rhs, distributive_sum, distributive_product, dump_matrices
)
from .models_main import (
    inverse_gain, path_gain, fading_pdf, fading_sample, exp_moment, delta_moment, fading_mean, derived_exponents
)
from .models_build import parse_fading, parse_pathloss
from .models_option import PathLossModel, FadingModel
from .quadrature_main import radial_integral, plane_integral
from .quadrature_option import QuadratureOption
from .functionals_main import (
    sum_product_stationary, interference_functional, rayleigh_singular_moment, laplace_moment_check,
    propagation_equivalent_intensity, mean_interference
)
from .functionals_option import NetworkConfig, FunctionalSpec
from .outage_main import (
    success_probability, success_probability_singular, joint_success_probability,
    joint_success_probability_singular, joint_outage, at_least_one, independent_baselines,
    outage_alpha_limit, outage_curve
)
from .outage_option import LinkConfig
from .simulator_main import (
    sample_ppp, interference_realization, estimate_functional, estimate_outage, estimate_joint,
    truncation_bias, choose_window
)
from .simulator_option import SimConfig, MonteCarloEstimate
from .cli_option import SweepSpec
from .cli_verify import verify_suite
from .utils import InterferenceError, AccuracyError, DomainError, load_config

__all__ = [
    'enumerate_matrices', 'matrix_class_size', 'multiplicity', 'sum_product_brute_force', 'expanded_sum',
    'lemma2_rhs', 'distributive_sum', 'distributive_product', 'dump_matrices',
    'inverse_gain', 'path_gain', 'fading_pdf', 'fading_sample', 'exp_moment', 'delta_moment', 'fading_mean',
    'derived_exponents', 'parse_fading', 'parse_pathloss', 'PathLossModel', 'FadingModel',
    'radial_integral', 'plane_integral', 'QuadratureOption',
    'sum_product_stationary', 'interference_functional', 'rayleigh_singular_moment', 'laplace_moment_check',
    'propagation_equivalent_intensity', 'mean_interference', 'NetworkConfig', 'FunctionalSpec',
    'success_probability', 'success_probability_singular', 'joint_success_probability',
    'joint_success_probability_singular', 'joint_outage', 'at_least_one', 'independent_baselines',
    'outage_alpha_limit', 'outage_curve', 'LinkConfig',
    'sample_ppp', 'interference_realization', 'estimate_functional', 'estimate_outage', 'estimate_joint',
    'truncation_bias', 'choose_window', 'SimConfig', 'MonteCarloEstimate',
    'SweepSpec', 'verify_suite',
    'InterferenceError', 'AccuracyError', 'DomainError', 'load_config'
]
