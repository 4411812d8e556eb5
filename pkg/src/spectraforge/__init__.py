"""Exact spectra, Fourier frames, and tilings for singular measures."""

from .certificates import Certificate, jsonify
from .convolution import (
    ConvolutionSpectrum,
    IntegerLatticeGenerator,
    IntervalUnionSpectrum,
    SelfSimilarTowerGenerator,
    factor_spectrum,
    gram_section,
    interval_union_rspectrum,
    nonspectral_certificate,
    riesz_spectrum_convolution,
    spectrum_convolution,
)
from .cyclotomic import (
    IntPolynomial,
    TileCertificate,
    cyclotomic,
    cyclotomic_divisor_orders,
    cyclotomic_free_remainder,
    digit_polynomial,
    divides_cyclotomic,
    euler_phi,
    laba_spectrum,
    long_decomposition,
    prime_power_divisors,
    satisfies_t1,
    satisfies_t2,
    scaled_prime_power_divisors,
    tile_certificate,
    tiling_complement,
    verify_tiling,
)
from .frames import (
    ExponentialSystem,
    FrameBounds,
    beurling_lower_density_proxy,
    find_riesz_spectrum,
    frame_bounds,
    is_riesz_spectrum,
    random_vector_bounds,
    synthesis_matrix,
)
from .measures import (
    AtomicMeasure,
    ConvolutionMeasure,
    EvalPolicy,
    SelfSimilarMeasure,
    UnitIntervalLebesgue,
    approximate_atoms,
    approximate_convolution_atoms,
    ft_convolution,
    ft_lebesgue01,
    ft_measure,
    ft_selfsimilar,
    mask_eval,
    measure_from_dict,
    measure_from_json,
    measure_to_dict,
    measure_to_json,
    tail_deviation_bound,
)
from .rational import as_fraction, format_rational, frac_mod1, parse_rationals, unit_exp
from .spectra import (
    BiZeroCertificate,
    BiZeroFailure,
    JPScanResult,
    ZeroSetDescriptor,
    classify_discrete,
    classify_4,
    classify_3,
    is_bizero,
    jp_scan,
    rational_mask_zeros,
    selfsimilar_spectrum,
    spectral_discrete_check,
    zero_set_descriptor,
    zeroset_membership,
)

__version__ = "0.1.0"

__all__ = [
    "AtomicMeasure",
    "BiZeroCertificate",
    "BiZeroFailure",
    "Certificate",
    "ConvolutionMeasure",
    "ConvolutionSpectrum",
    "EvalPolicy",
    "ExponentialSystem",
    "FrameBounds",
    "IntPolynomial",
    "IntegerLatticeGenerator",
    "IntervalUnionSpectrum",
    "JPScanResult",
    "SelfSimilarMeasure",
    "SelfSimilarTowerGenerator",
    "TileCertificate",
    "UnitIntervalLebesgue",
    "ZeroSetDescriptor",
    "approximate_atoms",
    "approximate_convolution_atoms",
    "as_fraction",
    "beurling_lower_density_proxy",
    "classify_discrete",
    "classify_4",
    "classify_3",
    "cyclotomic",
    "cyclotomic_divisor_orders",
    "cyclotomic_free_remainder",
    "digit_polynomial",
    "divides_cyclotomic",
    "euler_phi",
    "factor_spectrum",
    "find_riesz_spectrum",
    "format_rational",
    "frac_mod1",
    "frame_bounds",
    "ft_convolution",
    "ft_lebesgue01",
    "ft_measure",
    "ft_selfsimilar",
    "gram_section",
    "interval_union_rspectrum",
    "is_bizero",
    "is_riesz_spectrum",
    "jp_scan",
    "jsonify",
    "laba_spectrum",
    "long_decomposition",
    "mask_eval",
    "measure_from_dict",
    "measure_from_json",
    "measure_to_dict",
    "measure_to_json",
    "nonspectral_certificate",
    "parse_rationals",
    "prime_power_divisors",
    "random_vector_bounds",
    "rational_mask_zeros",
    "riesz_spectrum_convolution",
    "satisfies_t1",
    "satisfies_t2",
    "scaled_prime_power_divisors",
    "selfsimilar_spectrum",
    "spectral_discrete_check",
    "spectrum_convolution",
    "synthesis_matrix",
    "tail_deviation_bound",
    "tile_certificate",
    "tiling_complement",
    "unit_exp",
    "verify_tiling",
    "zero_set_descriptor",
    "zeroset_membership",
]
