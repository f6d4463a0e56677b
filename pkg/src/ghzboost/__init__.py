"""Wigner rotations of three-particle GHZ spin correlations seen from a boosted frame."""
from .kinematics import (
    FourMomentum,
    KinematicConfig,
    Particle,
    WignerRotation,
    boost_z,
    four_momentum,
    wigner_angle,
    wigner_axis,
    wigner_rotation,
    wigner_su2,
)
from .mermin import (
    LhvAssignment,
    MerminReport,
    compensated_mermin,
    ghz_contradiction_check,
    lhv_maximum,
    mermin_epsilon,
    mermin_epsilon_closed_form,
    mermin_epsilon_exact,
    zero_violation_surface_check,
)
from .observables import (
    Direction,
    SpinOperator,
    compensated_correlation,
    correlation,
    ghz_correlation,
    rotated_direction,
    spin_operator,
)
from .states import (
    SpinState,
    apply_local_unitaries,
    boosted_ghz,
    ghz_boosted_coefficients,
    ghz_state,
    reduced_density_spectrum,
)

__version__ = "0.1.0"
