"""Complex-valued adaptive filtering: linear, widely-linear, kernel and
augmented kernel LMS, with nonlinear baselines and a channel-equalization
benchmark harness."""

from .backend import backend_choice
from .baselines import CNGD, ComplexMLP, ctanh
from .channel import (SOFT_CHANNEL, STRONG_CHANNEL, ChannelSpec,
                      EqualizationDataset, add_noise, gen_input,
                      make_equalization_data, soft_channel, strong_channel,
                      window_matrix)
from .core import RegressorWindow, SeededRng, hermitian_dot
from .harness import (AlgorithmConfig, ExperimentConfig, LearningCurve,
                      SummaryRow, emit_csv, emit_summary_csv, load_config,
                      parse_config, run_experiment, serialize_config,
                      steady_state_db)
from .kernel_lms import MODES, KernelLMS, novelty_check
from .kernels import (ComplexGaussian, GaussianRBF, Polynomial,
                      complex_gaussian, complexified_eval, real_gaussian,
                      stack_real)
from .linear import ComplexNLMS, decompose_real_blocks

__version__ = "0.1.0"

__all__ = [
    "AlgorithmConfig", "CNGD", "ChannelSpec", "ComplexGaussian",
    "ComplexMLP", "ComplexNLMS", "EqualizationDataset", "ExperimentConfig",
    "GaussianRBF", "KernelLMS", "LearningCurve", "MODES", "Polynomial",
    "RegressorWindow", "SOFT_CHANNEL", "STRONG_CHANNEL", "SeededRng",
    "SummaryRow", "add_noise", "backend_choice", "complex_gaussian",
    "complexified_eval", "ctanh", "decompose_real_blocks", "emit_csv",
    "emit_summary_csv", "gen_input", "hermitian_dot", "load_config",
    "make_equalization_data", "novelty_check", "parse_config",
    "real_gaussian", "run_experiment", "serialize_config", "soft_channel",
    "stack_real", "steady_state_db", "strong_channel", "window_matrix",
    "__version__",
]
