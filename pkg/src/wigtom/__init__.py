"""Even-dimensional discrete Wigner phase space toolkit.

Library layout:

  qmat        -- dense complex matrix helpers (tensor, expm, density checks)
  phase_space -- point operators, Wigner transform, marginals, fidelity
  states      -- basis / Bell / spin coherent / harmonic / pseudopure factories
  tomography  -- direct and interferometric (circuit) Wigner readout
  kicked_top  -- two-qubit quantum kicked top and its classical map
  cli         -- `wigtom` command line front end
"""

__version__ = "0.1.0"

from . import errors
from .kicked_top import (
    K_PRESETS,
    POINT_CHAOTIC,
    POINT_REGULAR,
    KickedTopRun,
    KickRecord,
    QKTParams,
    angle_grid,
    classical_step,
    classical_trajectory,
    occupancy,
    phase_portrait,
    qkt_unitaries,
    run_qkt,
)
from .phase_space import (
    PhaseSpaceFrame,
    Reconstruction,
    build_frame,
    expand_full,
    fold_cell,
    fourier_matrix,
    marginals,
    matrix_to_csv,
    phase_matrix,
    quadrant_from_json_dict,
    quadrant_to_json_dict,
    reconstruct,
    reflection_matrix,
    shift_matrix,
    wigner_fidelity,
    wigner_transform,
)
from .qmat import (
    dagger,
    density_matrix,
    expm_hermitian_generator,
    frobenius_inner,
    is_hermitian,
    is_unitary,
    projector,
    tensor,
)
from .states import (
    basis_state,
    bell_state,
    harmonic_state,
    pseudopure,
    randomized_harmonic,
    spin_coherent,
    two_qubit_scs,
)
from .tomography import (
    CellSelection,
    TomographyResult,
    circuit_read,
    direct_read,
    prune,
    sampling_stderr,
    sparsity,
)
