"""Kinematics of the simplified 6-6 platform (top plate = rotated,
contracted copy of the base): inverse kinematics, the up-to-eight
solution forward problem off the conic, and the one-parameter
self-motion family on conic bases."""

from .errors import (DegenerateBase, DegenerateLeg, DuplicateVertex,
                     Inconsistent, Infeasible, KinematicsError,
                     NoIntersection, NotParameterizable, NotUnit,
                     ParallelPlanes, RankDeficient, SingularBase,
                     ValidationError, WrongRank)
from .fk_nonsingular import (FkSolution, QuaternionCandidates, fk_solve,
                             position_from_w, quaternions_from_w, solve_w)
from .fk_singular import (SingularCurveSample, SingularSystem,
                          build_singular_system, feasible_interval,
                          recover_poses, sweep, w_at, w_at_arc)
from .geometry import (ConicReport, PlatformGeometry, build_q, conic_check,
                       make_circle_base)
from .ik import (Pose, check_lengths, d_from_lengths, leg_lengths,
                 leg_vectors, w_from_pose)
from .linalg import (LUFactorization, det6, lu_factor, null_vector, solve6,
                     solve_rank_deficient)
from .rotation import Quaternion, canonicalize, from_matrix, to_matrix

__version__ = "0.1.0"

__all__ = [
    "ConicReport", "DegenerateBase", "DegenerateLeg", "DuplicateVertex",
    "FkSolution", "Inconsistent", "Infeasible", "KinematicsError",
    "LUFactorization", "NoIntersection", "NotParameterizable", "NotUnit",
    "ParallelPlanes", "PlatformGeometry", "Pose", "Quaternion",
    "QuaternionCandidates", "RankDeficient", "SingularBase",
    "SingularCurveSample", "SingularSystem", "ValidationError", "WrongRank",
    "build_q", "build_singular_system", "canonicalize", "check_lengths",
    "conic_check", "d_from_lengths", "det6", "feasible_interval", "fk_solve",
    "from_matrix", "leg_lengths", "leg_vectors", "lu_factor",
    "make_circle_base", "null_vector", "position_from_w",
    "quaternions_from_w", "recover_poses", "solve6", "solve_rank_deficient",
    "solve_w", "sweep", "to_matrix", "w_at", "w_at_arc", "w_from_pose",
]
