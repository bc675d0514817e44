"""Regularized numerical differentiation of noisy sampled signals."""

from ._core import (
    DomainError,
    Error,
    InvalidWavelet,
    MetricError,
    ParameterError,
    SizeError,
    SpecError,
    SweepCellError,
    admissibility_constant,
    default_grid,
    differentiate,
    method_kinds,
    rms_error,
    run_sweep,
    sample,
    spectral_filter,
    true_derivative,
    wavelet_plane,
)

__all__ = [
    "DomainError",
    "Error",
    "InvalidWavelet",
    "MetricError",
    "ParameterError",
    "SizeError",
    "SpecError",
    "SweepCellError",
    "admissibility_constant",
    "default_grid",
    "differentiate",
    "method_kinds",
    "rms_error",
    "run_sweep",
    "sample",
    "spectral_filter",
    "true_derivative",
    "wavelet_plane",
]
