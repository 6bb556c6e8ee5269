"""Minimal-length (GUP) harmonic oscillator: eigenstates, Fourier synthesis,
Shannon entropies, and the BBM entropic uncertainty check."""

from ._core import (
    DensityProfiles,
    DensitySample,
    Dispersions,
    EigenState,
    EntropyReport,
    GridSpec,
    GupParams,
    PoleError,
    PositionWave,
    QuadratureError,
    QuadResult,
    WaveMethod,
    WaveSample,
    bbm_report,
    density_profiles,
    dispersions,
    energy,
    lambda_param,
    norm_const,
    ordinary_energy,
    ordinary_phi,
    ordinary_psi,
    ordinary_report,
    psi0_closed,
    psi1_closed,
    psi_numeric,
    sample_wave,
    sp_analytic,
    sp_numeric,
    specfun,
    sx_numeric,
)

__all__ = [
    "DensityProfiles",
    "DensitySample",
    "Dispersions",
    "EigenState",
    "EntropyReport",
    "GridSpec",
    "GupParams",
    "PoleError",
    "PositionWave",
    "QuadratureError",
    "QuadResult",
    "WaveMethod",
    "WaveSample",
    "bbm_report",
    "density_profiles",
    "dispersions",
    "energy",
    "lambda_param",
    "norm_const",
    "ordinary_energy",
    "ordinary_phi",
    "ordinary_psi",
    "ordinary_report",
    "psi0_closed",
    "psi1_closed",
    "psi_numeric",
    "sample_wave",
    "sp_analytic",
    "sp_numeric",
    "specfun",
    "sx_numeric",
]
