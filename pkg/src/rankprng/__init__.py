"""Pseudo-random generation from rank-metric syndrome computations."""

from .attacks import AttackCost, SecurityReport, check_security, classical_cost, quantum_cost
from .core import (
    GeneratorState,
    ParamSet,
    SystematicParityCheck,
    data_size_bits,
    expand,
    keygen,
    key_from_bytes,
    key_to_bytes,
    preset,
    presets,
    prng_init,
    read_key_file,
    split_syndrome,
    syndrome,
    serialize_syndrome,
    write_key_file,
)
from .field import GF2n, find_irreducible
from .ranklin import (
    BitMatrix,
    Word,
    gaussian_binomial,
    gv_distance_approx,
    gv_distance_exact,
    rank_ball_size,
    rank_f2,
    rank_weight,
    word_to_matrix,
)
from .reduction import Embedding, psi_alpha, sample_independent_alpha
from .stats import StatReport, evaluate_stream, monobit, runs

__version__ = "0.1.0"
