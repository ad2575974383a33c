from src.toi.audits import AuditTolerance, audit_schatten_bounds
from src.toi.evaluators import (
    adjoint_integrand,
    evaluate_rep,
    integrand_table,
    toi_direct,
    toi_haagerup,
    toi_haagerup_like_1,
    toi_haagerup_like_2,
    toi_projective,
)
from src.toi.reps import (
    HaagerupLikeRep1,
    HaagerupLikeRep2,
    HaagerupRep,
    ProjectiveRep,
    TensorRep,
    embed_projective,
    haagerup_norm_of_rep,
)

__all__ = [
    "AuditTolerance",
    "HaagerupLikeRep1",
    "HaagerupLikeRep2",
    "HaagerupRep",
    "ProjectiveRep",
    "TensorRep",
    "adjoint_integrand",
    "audit_schatten_bounds",
    "embed_projective",
    "evaluate_rep",
    "haagerup_norm_of_rep",
    "integrand_table",
    "toi_direct",
    "toi_haagerup",
    "toi_haagerup_like_1",
    "toi_haagerup_like_2",
    "toi_projective",
]
