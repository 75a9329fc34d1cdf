"""Orlicz-space and Weyl-calculus machinery on a discretized 1-D phase
space, with verification suites for the quantitative convolution and
multiplication inequalities of Orlicz Schatten symbol classes."""

from .young import (
    YoungFunction,
    PowerYoung,
    IndicatorYoung,
    ExpYoung,
    ExpMinusOneMinusT,
    QuasiYoungFunction,
    TriYoungCondition,
    MultiYoungCondition,
    conjugate,
    inverse,
    delta2_constant,
    verify_tri_condition,
    verify_multilinear_condition,
    lebesgue_constants,
    appendix_b_checks,
    parse_young,
    format_young,
)
from .orlicz import (
    WeightedMeasure,
    SampledFunction,
    counting_measure,
    luxemburg_norm,
    holder_pairing,
    dual_witness,
    symbol_orlicz_norm,
)
from .phasegrid import (
    GridSpec,
    WaveFunction,
    PhaseSymbol,
    TailReport,
    make_grid,
    hermite,
    fourier,
    translate_modulate,
    dilate,
    convolve,
    pointwise_multiply,
    gaussian_symbol,
    quadrature_l2,
    tail_report,
)
from .weyl import (
    QuantizationIndex,
    OperatorKernel,
    KOHN_NIRENBERG,
    WEYL,
    ANTI_KOHN_NIRENBERG,
    wigner,
    symbol_to_kernel,
    kernel_to_symbol,
    calculi_transform,
    symplectic_fourier,
)
from .schatten import (
    OperatorMatrix,
    SingularSpectrum,
    operator_matrix,
    singular_values,
    schatten_orlicz_norm,
    symbol_schatten_norm,
    trace_pairing,
    holder_composition_check,
    positivity_check,
)
from .toeplitz import (
    WindowPair,
    toeplitz_via_convolution,
    toeplitz_direct_entry,
    toeplitz_orlicz_bound,
)
from .lab import (
    DilationLaw,
    SuiteConfig,
    SuiteReport,
    SUITES,
    run_suite,
)
from .rng import random_test_inputs

__version__ = "0.1.0"
