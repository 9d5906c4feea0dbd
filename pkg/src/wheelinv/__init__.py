"""Exact verification of the inverse formula for wheel-graph distance matrices."""

__version__ = "0.1.0"

from .exact import (
    CirculantSpec,
    Matrix,
    SingularMatrixError,
    circ_mul,
    circulant,
    cofactor,
    determinant,
    gauss_jordan_inverse,
    has_tail_symmetry,
    parse_rational,
    rank,
    render_rational,
    shift,
)
from .wheel import (
    WheelModel,
    alternating_sum_identity,
    bfs_distances,
    build_wheel,
    c_vector,
    distance_matrix,
    f_vector,
    q_row_closed_form,
    special_laplacian,
    w_vector,
)
from .theorems import TheoremCheck, closed_form_inverse, pseudo_inverse_from_distance
from .spectra import SpectrumReport, spectrum_report, symmetric_eigenvalues
