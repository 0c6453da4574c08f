"""Quantum reference frame simulations (bindings to the C++ core)."""

from ._core import (
    Error,
    Grid,
    WaveFunction,
    __version__,
    classical_switch,
    entanglement_entropy,
    fidelity,
    figure,
    ho_product,
    reduced_wigner,
    run_config,
    switch_frame,
    switched_ground_entropy,
    wavefunction,
)

__all__ = [
    "Error",
    "Grid",
    "WaveFunction",
    "__version__",
    "classical_switch",
    "entanglement_entropy",
    "fidelity",
    "figure",
    "ho_product",
    "reduced_wigner",
    "run_config",
    "switch_frame",
    "switched_ground_entropy",
    "wavefunction",
]
