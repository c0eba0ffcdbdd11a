"""Two readings of abstraction over a finite universe, made computable.

A subset of a universe can stand for the collection of its distinct members
or for one indefinite entity carrying only what the members share. This
package represents both: as boolean incidence matrices with a blob-sum
Boolean algebra and partition sharpening, as exact-rational classical
density matrices, and as complex quantum density matrices with Lüders
measurement. A counting module derives the Maxwell-Boltzmann,
Bose-Einstein, and Fermi-Dirac distributions from the same distinction.
"""

from .classical import (
    ClassicalDensity,
    PointDistribution,
    prob_block,
    project_conditional,
    rho_diag,
    rho_from_incidence,
    rho_paradigm,
    sharpen_classical,
)
from .errors import (
    ExclusionError,
    IncompletePredicatesError,
    NotProductFormError,
    ParadigmError,
    SizeLimitError,
    UndefinedDensityError,
    UniverseMismatchError,
)
from .exact import SqrtRational
from .incidence import (
    IncidenceMatrix,
    blob_sum,
    in_diagonal,
    in_product,
    indit,
    paradigm_meet,
    paradigm_negate,
    permute_conjugate,
    sharpen,
)
from .quantum import (
    AmplitudeVector,
    DistinguishReport,
    Observable,
    QuantumDensity,
    change_basis,
    distinguish,
    hadamard_unitary,
    identity_unitary,
    luders,
    measure_prob,
    rho_decohered,
    rho_pure,
    sample_measurement,
)
from .statistics import (
    Configuration,
    DistributionTable,
    be_distribution,
    fd_distribution,
    mb_distribution,
    orbit_paradigm,
)
from .universe import (
    Attribute,
    DnfFormula,
    Partition,
    Subset,
    Universe,
    UniverseDocument,
    attributes_complete,
    dnf_of_subset,
    inverse_image_partition,
    is_discrete,
    participates,
    partition_join,
    truth_table_universe,
)

__version__ = "0.1.0"

__all__ = [
    "Attribute",
    "AmplitudeVector",
    "ClassicalDensity",
    "Configuration",
    "DistinguishReport",
    "DistributionTable",
    "DnfFormula",
    "ExclusionError",
    "IncidenceMatrix",
    "IncompletePredicatesError",
    "NotProductFormError",
    "Observable",
    "ParadigmError",
    "Partition",
    "PointDistribution",
    "QuantumDensity",
    "SizeLimitError",
    "SqrtRational",
    "Subset",
    "UndefinedDensityError",
    "Universe",
    "UniverseDocument",
    "UniverseMismatchError",
    "attributes_complete",
    "be_distribution",
    "blob_sum",
    "change_basis",
    "distinguish",
    "dnf_of_subset",
    "fd_distribution",
    "hadamard_unitary",
    "identity_unitary",
    "in_diagonal",
    "in_product",
    "indit",
    "inverse_image_partition",
    "is_discrete",
    "luders",
    "mb_distribution",
    "measure_prob",
    "orbit_paradigm",
    "paradigm_meet",
    "paradigm_negate",
    "participates",
    "partition_join",
    "permute_conjugate",
    "prob_block",
    "project_conditional",
    "rho_decohered",
    "rho_diag",
    "rho_from_incidence",
    "rho_paradigm",
    "rho_pure",
    "sample_measurement",
    "sharpen",
    "sharpen_classical",
    "truth_table_universe",
]
