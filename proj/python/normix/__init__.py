"""Adversarial normal-mixture families, Assouad lower bounds, and the
sinc-kernel estimator."""

from ._normix import (
    CRAMER_KAPPA,
    AssouadCertificate,
    CheckResult,
    GaussHermiteForm,
    HellingerFamilyConfig,
    L2FamilyConfig,
    Perturbation,
    QuadratureSpec,
    RateRow,
    Regime,
    RiskReport,
    SampleSet,
    assouad_bound,
    certify,
    cramer_margin,
    gaussian_pdf,
    hellinger_f_alpha,
    hellinger_pi_alpha,
    hellinger_schedule,
    hermite_normalized,
    integrate,
    inverse_fourier_gauss_hermite,
    l2_f_alpha,
    l2_pi_alpha,
    l2_schedule,
    l2_separation,
    make_hellinger_family,
    make_l2_family,
    mise_mc_gaussian,
    rate_table,
    run_verification,
    sample_gaussian_mixture,
    sinc_estimate,
    sinc_kernel,
)

__all__ = [
    "CRAMER_KAPPA",
    "AssouadCertificate",
    "CheckResult",
    "GaussHermiteForm",
    "HellingerFamilyConfig",
    "L2FamilyConfig",
    "Perturbation",
    "QuadratureSpec",
    "RateRow",
    "Regime",
    "RiskReport",
    "SampleSet",
    "assouad_bound",
    "certify",
    "cramer_margin",
    "gaussian_pdf",
    "hellinger_f_alpha",
    "hellinger_pi_alpha",
    "hellinger_schedule",
    "hermite_normalized",
    "integrate",
    "inverse_fourier_gauss_hermite",
    "l2_f_alpha",
    "l2_pi_alpha",
    "l2_schedule",
    "l2_separation",
    "make_hellinger_family",
    "make_l2_family",
    "mise_mc_gaussian",
    "rate_table",
    "run_verification",
    "sample_gaussian_mixture",
    "sinc_estimate",
    "sinc_kernel",
]

__version__ = "0.1.0"
