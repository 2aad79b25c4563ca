"""Desk-scale verification toolkit for subordination of convolution operators.

The package realizes convolution operators on the real line through a
discrete transform pair and verifies, numerically and with explicit
constants, three layers of domination between them:

``fourier_core``
    symmetric grids, the transform pair, norms, convolution.
``testkit``
    named test functions with known transforms and smoothness metadata.
``measures``
    finite measures, measure-norm (Wiener-algebra) estimation, quadrature
    bounds for it.
``comparison``
    multiplier registry and the ratio-based domination of one convolution
    operator by another.
``summability``
    smoothing means ``exp(-|eps y|^alpha)``, their kernels, and error
    subordination between different orders.
``diffops``
    polynomial differential operators, two-cofactor decompositions, and
    mixed-exponent norm domination.
``cli``
    the ``subord`` command-line front end.
"""

from .errors import (
    AllCasesSkippedError,
    AtomOffGridError,
    BandwidthExceededError,
    FillUndefinedError,
    GridMismatchError,
    GridTooSmallError,
    HypothesesViolatedError,
    InadmissibleExponentsError,
    InconsistentLimitError,
    InvalidParameterError,
    KernelUnresolvableError,
    MultiplicityObstructionError,
    NeighborhoodDegenerateError,
    NestedZerosViolatedError,
    NonConvergentError,
    NotApplicableError,
    SubordinationError,
    VerificationFailureError,
)
from .fourier_core import (
    FREQUENCY,
    SPACE,
    GridSpec,
    SampledFunction,
    WraparoundWarning,
    convolve,
    forward_ft,
    inverse_ft,
    lp_norm,
    make_grid,
)
from .testkit import (
    TestFunction,
    bspline,
    bump,
    diffop_suite,
    exp_abs,
    gaussian,
    materialize,
    materialize_transform,
    means_suite,
    modulated_gaussian,
)
from .measures import (
    Measure,
    WienerEstimate,
    carlson_bound,
    convolve_with_measure,
    dirac,
    measure_ft,
    total_variation,
    wiener_norm,
    with_density,
)
from .comparison import (
    ComparisonReport,
    ComparisonSetup,
    Multiplier,
    apply_multiplier,
    constant,
    exp_abs_ft,
    gaussian_ft,
    gw_ratio,
    gw_symbol,
    named_multiplier,
    one_minus_gw_symbol,
    ratio_multiplier,
    setup_comparison,
    verify_comparison,
)
from .summability import (
    GWReport,
    gw_constant,
    gw_error,
    gw_kernel,
    gw_mean,
    gw_verify,
    pinned_constant,
)
from .diffops import (
    HypothesisCheck,
    SubordinationReport,
    SymbolDecomposition,
    apply_diffop,
    construct_decomposition,
    decomposition_hypotheses,
    diffop_subordination,
    partner_exponent,
    poly_label,
    real_roots,
    verify_identity,
)

__version__ = "0.1.0"
