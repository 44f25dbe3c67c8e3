"""Casimir-Polder shifts, spin-flip rates, and forces near a planar slab.

Numerical engine for the interaction of a ground-state or excited atom with
a slab of finite or infinite thickness, covering magnetic-moment and
electric-dipole transitions and several material response models (perfect
conductor, plasma, Drude and six-oscillator metals, two-plateau dielectric,
BCS superconductor).
"""
__version__ = "0.1.0"

from .units import (
    CONSTANTS,
    ReducedVariables,
    force_prefactor_electric,
    force_prefactor_magnetic,
    to_angular_frequency,
)
from .quadrature import (
    NonConvergenceError,
    QuadratureResult,
    QuadratureSpec,
    integrate_adaptive,
    modular_split,
)
from .materials import (
    ComplexConductivity,
    Drude,
    MaterialModel,
    PerfectConductor,
    Plasma,
    SixOscillator,
    SuperconductorMB,
    TwoPlateau,
    UnsupportedModelError,
    Vacuum,
    epsilon_imag_axis,
    epsilon_real_axis,
    epsilon_superconductor,
    f_impurity,
    sigma_mb_clean,
    sigma_mb_impure,
)
from .slabgreen import (
    KernelPair,
    SlabGeometry,
    curl_green_real,
    fresnel_imag,
    kernel_batch_imag_axis,
    kernels_imag_axis,
    scatter_coeffs,
)
from .shifts import (
    ShiftResult,
    Transition,
    TransitionSet,
    excited_shift_pc,
    f_pc,
    ground_shift,
    i_rho,
    regime_tag,
    spin_flip_rate,
    tilde_i,
    ww_amplitude,
)
from .forces import (
    F_E,
    F_M,
    F_dimensional,
    ForcePoint,
    force_kernels,
    force_kernels_plasma_form,
    regime_classify,
)

__all__ = [
    "__version__",
    "CONSTANTS",
    "ReducedVariables",
    "force_prefactor_electric",
    "force_prefactor_magnetic",
    "to_angular_frequency",
    "NonConvergenceError",
    "QuadratureResult",
    "QuadratureSpec",
    "integrate_adaptive",
    "modular_split",
    "ComplexConductivity",
    "Drude",
    "MaterialModel",
    "PerfectConductor",
    "Plasma",
    "SixOscillator",
    "SuperconductorMB",
    "TwoPlateau",
    "UnsupportedModelError",
    "Vacuum",
    "epsilon_imag_axis",
    "epsilon_real_axis",
    "epsilon_superconductor",
    "f_impurity",
    "sigma_mb_clean",
    "sigma_mb_impure",
    "KernelPair",
    "SlabGeometry",
    "curl_green_real",
    "fresnel_imag",
    "kernel_batch_imag_axis",
    "kernels_imag_axis",
    "scatter_coeffs",
    "ShiftResult",
    "Transition",
    "TransitionSet",
    "excited_shift_pc",
    "f_pc",
    "ground_shift",
    "i_rho",
    "regime_tag",
    "spin_flip_rate",
    "tilde_i",
    "ww_amplitude",
    "F_E",
    "F_M",
    "F_dimensional",
    "ForcePoint",
    "force_kernels",
    "force_kernels_plasma_form",
    "regime_classify",
]
