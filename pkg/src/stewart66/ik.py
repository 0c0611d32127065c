"""Leg vectors and lengths from a pose, plus the length-expansion pieces.

The squared leg lengths are linear in six pose-dependent unknowns w;
build_q(base) maps w to the shifted squared lengths d.  w_from_pose and
d_from_lengths compute the two sides of that identity independently,
which makes any pose a ground-truth oracle for the forward solvers.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateLeg, ValidationError
from .geometry import PlatformGeometry
from .rotation import Quaternion, to_matrix

MIN_LEG_LENGTH = 1e-12


@dataclass(frozen=True, eq=False)
class Pose:
    """Rigid placement of the top plate: orientation quaternion plus center."""

    orientation: Quaternion
    position: np.ndarray  # (3,)

    def __post_init__(self):
        p = np.array(self.position, dtype=float)
        if p.shape != (3,):
            raise ValidationError(f"position must be a 3-vector, got shape {p.shape}")
        if not np.all(np.isfinite(p)):
            raise ValidationError("position must be finite")
        object.__setattr__(self, "position", p)


def _base3(geom: PlatformGeometry) -> np.ndarray:
    # embed the planar vertices at z = 0
    return np.column_stack([geom.base, np.zeros(6)])


def leg_vectors(geom: PlatformGeometry, pose: Pose) -> np.ndarray:
    """Six leg vectors, row i = (mu*R*A - I) @ B_i + P."""
    m = geom.mu * (to_matrix(pose.orientation) @ geom.top_transform) - np.eye(3)
    return _base3(geom) @ m.T + pose.position


def leg_lengths(geom: PlatformGeometry, pose: Pose) -> np.ndarray:
    """Euclidean lengths of the six legs; DegenerateLeg if one collapses."""
    lengths = np.linalg.norm(leg_vectors(geom, pose), axis=1)
    if np.any(lengths < MIN_LEG_LENGTH):
        raise DegenerateLeg(f"leg {int(np.argmin(lengths)) + 1} collapsed to zero length")
    return lengths


def w_from_pose(geom: PlatformGeometry, pose: Pose) -> np.ndarray:
    """The six unknowns of the linear length system for a known pose.

    mu multiplies only the rotated position term in w2/w3; with it on both
    terms the identity build_q(base) @ w == d breaks.
    """
    ra = to_matrix(pose.orientation) @ geom.top_transform
    p = pose.position
    mixed = geom.mu * (ra.T @ p) - p
    return np.array([
        p @ p,
        2.0 * mixed[0],
        2.0 * mixed[1],
        -2.0 * geom.mu * ra[0, 0],
        -2.0 * geom.mu * (ra[0, 1] + ra[1, 0]),
        -2.0 * geom.mu * ra[1, 1],
    ])


def d_from_lengths(geom: PlatformGeometry, lengths) -> np.ndarray:
    """Right-hand side of the length system: L_i^2 - (1 + mu^2)*|B_i|^2."""
    lng = np.asarray(lengths, dtype=float)
    r2 = (geom.base ** 2).sum(axis=1)
    return lng * lng - (1.0 + geom.mu ** 2) * r2


def check_lengths(lengths) -> np.ndarray:
    """Validate a six-vector of strictly positive, finite leg lengths."""
    lng = np.asarray(lengths, dtype=float)
    if lng.shape != (6,):
        raise ValidationError(f"need exactly 6 leg lengths, got shape {lng.shape}")
    if not np.all(np.isfinite(lng)) or np.any(lng <= 0.0):
        raise ValidationError("leg lengths must be strictly positive and finite")
    return lng
