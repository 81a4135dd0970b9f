"""Resonance experiments for extreme values of zeta'(rho) at zeta zeros.

Layers, bottom up: integer arithmetic tables (`arith`), zeta and
Hardy-Z evaluation (`zeta`), verified zero scanning (`zeros`),
Dirichlet polynomials and their mean values (`dirichlet`), resonator
coefficients (`resonator`), main-term predictions and the lower-bound
machinery (`mainterms`), experiment drivers plus the acceptance
checklist (`experiments`), and the `zetares` command line (`cli`).
"""

from .arith import (ArithFunctionTable, Factorization, PrimeTable,
                    build_prime_table, dirichlet_convolve, f_shift,
                    f_shift_table, factorize, lambda_k, lambda_k_table,
                    log_power_table, mobius, mobius_table, primes_up_to,
                    sum_over_primes, tau_k, tau_k_table, vonmangoldt_table)
from .dirichlet import DirichletPolynomial, dirichlet_poly_eval, mean_value_check
from .experiments import (ExperimentConfig, FlaggedMultiplicityError,
                          get_zeros, run_large_values, run_small_values,
                          run_verify, verify_criterion, zprimes_at)
from .mainterms import (ConstantSet, Theorem1Bound, beta_cx, constants,
                        mult_sum_check, predict_S1, predict_S2, predict_S3,
                        s1_weights, theorem1_bound)
from .reports import ExtremesReport, PredictionReport, ZeroRow, emit_report
from .resonator import (DegenerateInputError, QuadFormReport, Resonator,
                        ResonatorParams, ResourceLimitError,
                        build_resonator, eigen_optimal_ratio, euler_products,
                        lemma_reso_sums, make_params, quadform,
                        resonator_coeff, weighted_quadform)
from .zeros import (IncompleteScanError, NeedsScanError, ZeroCache,
                    ZeroRecord, cache_dir, find_zeros, good_ordinate,
                    mean_gap, rvm_count)
from .zeta import hardy_Z, hardy_Z_many, theta, zeta_eval, zeta_prime_eval

__version__ = "0.1.0"

__all__ = [
    "ArithFunctionTable", "ConstantSet", "DegenerateInputError",
    "DirichletPolynomial", "ExperimentConfig", "ExtremesReport",
    "Factorization", "FlaggedMultiplicityError", "IncompleteScanError",
    "NeedsScanError", "PredictionReport", "PrimeTable", "QuadFormReport",
    "Resonator", "ResonatorParams", "ResourceLimitError", "Theorem1Bound",
    "ZeroCache", "ZeroRecord", "ZeroRow", "beta_cx", "build_prime_table",
    "build_resonator", "cache_dir", "constants", "dirichlet_convolve",
    "dirichlet_poly_eval", "eigen_optimal_ratio", "emit_report",
    "euler_products", "f_shift", "f_shift_table", "factorize", "find_zeros",
    "get_zeros", "good_ordinate", "hardy_Z", "hardy_Z_many", "lambda_k",
    "lambda_k_table", "lemma_reso_sums", "log_power_table", "make_params",
    "mean_gap", "mean_value_check", "mobius", "mobius_table",
    "mult_sum_check", "predict_S1", "predict_S2", "predict_S3",
    "primes_up_to", "quadform", "resonator_coeff", "run_large_values",
    "run_small_values", "run_verify", "rvm_count", "s1_weights",
    "sum_over_primes", "tau_k", "tau_k_table", "theorem1_bound", "theta",
    "vonmangoldt_table", "weighted_quadform", "verify_criterion",
    "zeta_eval", "zeta_prime_eval", "zprimes_at",
]
