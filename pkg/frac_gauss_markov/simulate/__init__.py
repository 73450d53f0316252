from .TimeGrid import TimeGrid
from .CovMatrix import CovMatrix, CholeskyFactor
from .PathEnsemble import PathEnsemble
from .sampling import (GENERATOR_ID, JITTER_LEVELS, substream, derive_seed, standard_normals, build_cov_matrix, cholesky_factor,
                       sample_paths, mc_cov_estimate, mc_var_profile, mc_mean_profile, ks_normal_statistic,
                       ks_critical_value)
from .pathwise import (product_integration_weights, pathwise_rl_integral, pathwise_fractional_ensemble,
                       simulate_bm, simulate_ou, simulate_sou, simulate_ou_exact)
