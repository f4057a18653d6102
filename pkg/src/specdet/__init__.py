"""Zeta-regularized spectral determinants with an explicit branch cut of the logarithm."""

from .branchlog import BranchCut, arg_in_branch, log_branch, pow_branch
from .determinant import (
    DeterminantReport,
    ZetaClosedForm,
    build_zeta,
    compare_cuts,
    determinant,
    eval_zeta,
    eval_zeta_ds,
    zeta_prime_at_zero,
)
from .errors import SpecdetError
from .oracle import OracleConfig, direct_zeta, divergence_witness, exp_blowup_witness, fd_zeta_prime
from .spectrum import (
    Classification,
    ExponentialRay,
    FiniteSet,
    LogarithmicRay,
    PowerRays,
    ShiftedLine,
    Spectrum,
    Tag,
    classify,
    enumerate_eigenvalues,
    rays_crossed,
)
from .zetafuncs import EMParams, bernoulli, hermite_check, hurwitz_zeta, hurwitz_zeta_ds, riemann_zeta

__version__ = "0.1.0"
