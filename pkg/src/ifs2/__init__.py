"""Attractors of second-generation homogeneous affine iterated function systems."""

from .attractor import AttractorResult, iterate_attractor, min_chain_delta, phi2_image, phi2_set
from .certificate import Certificate, certify, minimal_summand_count, truncated_sum_members
from .errors import (CertificatePreconditionError, EmptySetError, IFSError, InconsistencyError,
                     PrecisionError, ValidationError)
from .gaps import (GapReport, compute_n_epsilon, lemma1_sandwich_check, residual_gaps,
                   sandwich_check)
from .intervals import Interval, IntervalSet, normalize
from .model import FirstGenIFS, SecondGenIFS, exact_gaps, refine_bands, validate_first_gen
from .sampler import ChaosRun, chaos_game_samples, empirical_support_check
from .sweep import SweepRow, delta_grid, run_sweep

__version__ = "0.1.0"
