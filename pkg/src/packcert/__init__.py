"""packcert: exact feasibility certification and numerical verification
for antipodal few-distance spherical designs, real equiangular tight
frames and Levenstein-equality line packings."""

from .arith import BigRational, SqrtResult, binomial, cmp_surd, int_sqrt, rational_sqrt
from .bounds import (
    BoundReport,
    best_known,
    dgs_antipodal,
    gerzon_check,
    gerzon_report,
    levenstein_report,
    levenstein_sq,
    nozaki_suda,
    welch_report,
    welch_sq,
    xxy_bound,
)
from .constructions import (
    cross_polytope,
    derived_code,
    e8_roots,
    icosahedron,
    simplex_etf,
)
from .etf import EtfFeasibility, aw_integrality, coro1_classify, etf_report, etf_srg
from .gegenbauer import (
    GegenbauerExpansion,
    Polynomial,
    annihilator,
    gegenbauer_eval,
    gegenbauer_expand,
    gegenbauer_poly,
    harm_dim,
)
from .leven import (
    LevenFeasibility,
    al_integrality,
    alpha_sq,
    antipodal_4_5_sizes,
    embedding_angles,
    enumerate_sizes,
    leven_report,
    leven_srg,
    two_distance_bound_check,
)
from .pointset import (
    DesignProfile,
    MomentVector,
    PointSet,
    angle_set,
    classify,
    coherence,
    design_strength,
    dim_identity,
    gegenbauer_moment,
    half,
    is_antipodal,
    moments,
    tight_frame_check,
    validate,
    verify_annihilator_identity,
    verify_orthogonality,
)
from .srg import QuadSurd, SrgParams, SrgSpectrum, consistency_check, is_conference, krein, spectrum

__version__ = "0.1.0"
