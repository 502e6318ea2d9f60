"""Vector-valued Jack polynomials and Calogero-Sutherland wavefunctions.

Exact construction of nonsymmetric and symmetric Jack polynomials taking
values in irreducible symmetric-group modules, their Hermitian norms and
Hamiltonian eigenvalues in rational arithmetic, and the numeric matrix base
state on the torus that assembles them into wavefunctions and densities.
"""

from .combinatorics import (
    Filling,
    RSYT,
    enumerate_rsyt,
    floor_filling,
    hooks_and_dim,
    jack_count,
    root_sink,
    root_tableau,
    row_tableau,
)
from .vvpoly import KappaContext, KappaError, VVPoly
from .yang_baxter import nsjp, nsjp_laurent, spectral_vector
from .hermitian import expand_in_nsjp, form, norm, norm_partition
from .symmetric_jack import (
    SymmetricJack,
    component,
    jack,
    jack_norm,
    minimal_jack,
    minimal_jack_norm,
)
from .torus_wave import TorusContext, TorusPoint, base_point, density, integrate_L

__version__ = "0.1.0"

__all__ = [
    "Filling",
    "RSYT",
    "KappaContext",
    "KappaError",
    "VVPoly",
    "SymmetricJack",
    "TorusContext",
    "TorusPoint",
    "base_point",
    "component",
    "density",
    "enumerate_rsyt",
    "expand_in_nsjp",
    "floor_filling",
    "form",
    "hooks_and_dim",
    "integrate_L",
    "jack",
    "jack_count",
    "jack_norm",
    "minimal_jack",
    "minimal_jack_norm",
    "norm",
    "norm_partition",
    "nsjp",
    "nsjp_laurent",
    "root_sink",
    "root_tableau",
    "row_tableau",
    "spectral_vector",
]
