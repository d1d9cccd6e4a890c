"""Spin-momentum entanglement of a single spin-1/2 particle under Lorentz boosts."""

from .discrete import (
    DiscreteSpinField,
    asymptotic_entropy,
    delta_pair_field,
    discrete_density,
    four_spin_field,
    merge_fields,
    two_point_entropy,
    two_point_entropy_closed_form,
)
from .engine import (
    BoostScenario,
    EntropyCurve,
    EntropyPoint,
    boosted_spin_density,
    entropy_curve,
    find_peak,
    saturation_level,
)
from .exceptions import ConfigurationError, DegenerateAxisError, DomainError
from .lorentz import (
    BoostPair,
    FourMomentum,
    apply,
    boost_from_rapidity,
    boost_matrix,
    compose,
    gamma,
    polar_decompose,
    rapidity,
    rapidity_for_wigner_angle,
    rotation_axis_angle,
    rotation_matrix,
    wigner_angle,
    wigner_angle_limit,
    wigner_angle_rapidity,
    wigner_axis,
)
from .spin import (
    bloch_vector,
    project,
    rotation_angle_of,
    su2_from_axis_angle,
    von_neumann_entropy,
    wigner_spinor,
)
from .wavepacket import (
    GaussianSpec,
    MomentumGrid,
    WaveFunction,
    build_grid,
    momentum_from_scenario,
    norm,
    x_symmetric_gaussian,
)

__version__ = "0.1.0"
