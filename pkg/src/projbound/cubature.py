"""Moment-test verifier for weighted point sets on the unit sphere of K^m.

A weighted set is an index-p projective cubature formula exactly when the
Jacobi moments M_k = sum_{i,j} w_i w_j P_k(x_i . x_j) vanish for
1 <= k <= p/2, where x.y = 2|(x,y)|^2 - 1 is the projective cosine.  Each
M_k is a sum of squared harmonic moments, hence nonnegative for every
weighted set; a strictly negative value therefore flags a numerical problem,
not a failed design.

Nodes are stored as quaternion coordinate quadruples for all three fields
(real and complex scalars are embedded with vanishing imaginary parts), so a
single inner-product kernel serves R, C and H.
"""

from __future__ import annotations

import json
import math
import warnings
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .bounds import lp_bound, yudin_bound
from .fields import Field, field_params
from .jacobi import NumericalError

_UNIT_NORM_TOL = 1e-12
_DUPLICATE_TOL = 1e-12
_MOMENT_NEGATIVE_GUARD = -1e-10

#: reading of the vanishing-moment condition used by this verifier
INTERPRETATION_NOTE = (
    "moment test: harmonic components are required to vanish with the node "
    "weights as coefficients; with equal weights this is the projective "
    "(p/2)-design condition"
)


@dataclass(frozen=True)
class Quaternion:
    """Hamilton quaternion w + x i + y j + z k."""

    w: float
    x: float
    y: float
    z: float

    def __mul__(self, other: "Quaternion") -> "Quaternion":
        a, b = self, other
        return Quaternion(
            a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w,
        )

    def conjugate(self) -> "Quaternion":
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def __abs__(self) -> float:
        return math.sqrt(self.w**2 + self.x**2 + self.y**2 + self.z**2)

    def as_array(self) -> np.ndarray:
        return np.array([self.w, self.x, self.y, self.z])


def _qconj(a: np.ndarray) -> np.ndarray:
    out = a.copy()
    out[..., 1:] = -out[..., 1:]
    return out


def _qmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    aw, ax, ay, az = a[..., 0], a[..., 1], a[..., 2], a[..., 3]
    bw, bx, by, bz = b[..., 0], b[..., 1], b[..., 2], b[..., 3]
    return np.stack(
        [
            aw * bw - ax * bx - ay * by - az * bz,
            aw * bx + ax * bw + ay * bz - az * by,
            aw * by - ax * bz + ay * bw + az * bx,
            aw * bz + ax * by - ay * bx + az * bw,
        ],
        axis=-1,
    )


def projective_cos(x: np.ndarray, y: np.ndarray) -> float:
    """Projective cosine 2|(x,y)|^2 - 1 of two unit nodes given as (m, 4) arrays.

    The inner product conjugates the left argument coordinate-wise, so the
    value is invariant under right multiplication of either node by a unit
    scalar of the field.
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.shape != y.shape or x.ndim != 2 or x.shape[1] != 4:
        raise ValueError(f"node shape mismatch: {x.shape} vs {y.shape}, expected (m, 4)")
    inner = _qmul(_qconj(x), y).sum(axis=0)
    return 2.0 * float(np.dot(inner, inner)) - 1.0


class PointSet:
    """Weighted nodes on the unit sphere of K^m, quaternion-embedded.

    nodes: array (n, m, 4); weights: array (n,) of positive reals summing
    to 1.  Coordinates must respect the field (imaginary parts beyond the
    scalar dimension vanish), each node must have unit norm, and nodes are
    expected to be projectively distinct (violations are reported as
    duplicates, not errors: the moment test stays meaningful).
    """

    def __init__(self, field: Field, m: int, nodes, weights=None):
        if m < 2:
            raise ValueError(f"m must be >= 2, got {m}")
        nodes = np.asarray(nodes, dtype=float)
        if nodes.ndim != 3 or nodes.shape[1] != m or nodes.shape[2] != 4:
            raise ValueError(f"nodes must have shape (n, {m}, 4), got {nodes.shape}")
        n = nodes.shape[0]
        if n < 1:
            raise ValueError("point set must contain at least one node")
        if weights is None:
            weights = np.full(n, 1.0 / n)
        weights = np.asarray(weights, dtype=float)
        if weights.shape != (n,):
            raise ValueError(f"weights must have shape ({n},), got {weights.shape}")
        if np.any(weights <= 0.0):
            raise ValueError("weights must be strictly positive")
        total = math.fsum(weights)
        if abs(total - 1.0) > 1e-12:
            raise ValueError(f"weights must sum to 1 within 1e-12, got {total!r}")

        if field.delta < 4 and np.any(nodes[:, :, field.delta :] != 0.0):
            raise ValueError(
                f"nodes contain components outside the scalar dimension of field {field.name}"
            )
        norms = np.sqrt((nodes**2).sum(axis=(1, 2)))
        bad = np.nonzero(np.abs(norms - 1.0) > _UNIT_NORM_TOL)[0]
        if bad.size:
            raise ValueError(f"nodes {bad.tolist()} are not unit-norm (|1 - |x|| > 1e-12)")

        self.field = field
        self.m = m
        self.nodes = nodes
        self.weights = weights
        self.n = n
        self.duplicates = self._find_duplicates()
        if self.duplicates:
            warnings.warn(
                f"point set has projectively coincident node pairs: {self.duplicates}",
                stacklevel=2,
            )

    def _find_duplicates(self):
        cosines = gram_matrix(self)
        pairs = []
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if cosines[i, j] >= 1.0 - _DUPLICATE_TOL:
                    pairs.append((i, j))
        return pairs


def gram_matrix(ps: PointSet) -> np.ndarray:
    """All pairwise projective cosines, shape (n, n)."""
    a = _qconj(ps.nodes)[:, None, :, :]  # (n, 1, m, 4)
    b = ps.nodes[None, :, :, :]  # (1, n, m, 4)
    inner = _qmul(a, b).sum(axis=2)  # (n, n, 4)
    return 2.0 * (inner**2).sum(axis=-1) - 1.0


def moment_test(ps: PointSet, p: int) -> list[float]:
    """Jacobi moments M_1 .. M_{p/2}; all vanish iff the set has cubature index p.

    Each moment is a compensated sum of the n^2 weighted kernel values.  A
    moment below the -1e-10 guard contradicts positive semidefiniteness and
    raises NumericalError.
    """
    if p < 2 or p % 2 != 0:
        raise ValueError(f"p must be a positive even integer, got {p}")
    params = field_params(ps.field, ps.m)
    a, b = params.alpha, params.beta
    t = gram_matrix(ps)
    pair_w = np.outer(ps.weights, ps.weights)

    moments = []
    p_prev = np.ones_like(t)
    p_curr = 0.5 * ((a + b + 2.0) * t + (a - b))
    for k in range(1, p // 2 + 1):
        if k >= 2:
            c1 = 2.0 * k * (k + a + b) * (2.0 * k + a + b - 2.0)
            c2 = (2.0 * k + a + b - 1.0) * (a * a - b * b)
            c3 = (2.0 * k + a + b - 2.0) * (2.0 * k + a + b - 1.0) * (2.0 * k + a + b)
            c4 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * (2.0 * k + a + b)
            p_curr, p_prev = ((c2 + c3 * t) * p_curr - c4 * p_prev) / c1, p_curr
        m_k = math.fsum((pair_w * p_curr).ravel())
        if m_k < _MOMENT_NEGATIVE_GUARD:
            raise NumericalError(
                f"moment M_{k} = {m_k!r} violates nonnegativity; numerical failure"
            )
        moments.append(m_k)
    return moments


@dataclass(frozen=True)
class VerificationReport:
    field: Field
    m: int
    p: int
    n: int
    moments: tuple
    max_abs_moment: float
    tolerance: float
    passed: bool
    lp_bound: int
    yudin_bound: int
    tight_lp: bool
    tight_yudin: bool
    duplicates: tuple
    note: str = INTERPRETATION_NOTE

    def to_dict(self) -> dict:
        return {
            "field": self.field.name,
            "m": self.m,
            "p": self.p,
            "n": self.n,
            "moments": list(self.moments),
            "max_abs_moment": self.max_abs_moment,
            "tolerance": self.tolerance,
            "passed": self.passed,
            "lp_bound": self.lp_bound,
            "yudin_bound": self.yudin_bound,
            "tight_lp": self.tight_lp,
            "tight_yudin": self.tight_yudin,
            "duplicates": [list(pair) for pair in self.duplicates],
            "note": self.note,
        }


def verify(ps: PointSet, p: int, tol: Optional[float] = None) -> VerificationReport:
    """Run the moment test and compare the cardinality against both bounds.

    tol defaults to 1e-10 * n, matching the accumulation of n^2 unit-scale
    terms per moment.
    """
    if tol is None:
        tol = 1e-10 * ps.n
    if tol <= 0.0:
        raise ValueError(f"tol must be positive, got {tol}")
    moments = moment_test(ps, p)
    max_abs = max(abs(m_k) for m_k in moments)
    lp = lp_bound(ps.field, ps.m, p // 2)
    yud = yudin_bound(ps.field, ps.m, p).yudin_bound
    return VerificationReport(
        field=ps.field,
        m=ps.m,
        p=p,
        n=ps.n,
        moments=tuple(moments),
        max_abs_moment=max_abs,
        tolerance=tol,
        passed=max_abs <= tol,
        lp_bound=lp,
        yudin_bound=yud,
        tight_lp=ps.n == lp,
        tight_yudin=ps.n == yud,
        duplicates=tuple(ps.duplicates),
    )


def _embed_scalar(components, delta: int, where: str) -> list[float]:
    if not isinstance(components, (list, tuple)) or len(components) != delta:
        raise ValueError(f"{where}: expected {delta} real components, got {components!r}")
    try:
        vals = [float(c) for c in components]
    except (TypeError, ValueError):
        raise ValueError(f"{where}: components must be numbers, got {components!r}") from None
    return vals + [0.0] * (4 - delta)


def parse_point_set(doc: dict) -> tuple[PointSet, int]:
    """Build (PointSet, p) from the JSON document format.

    Format: {"field": "R"|"C"|"H", "m": int, "p": int,
             "nodes": [[[scalar components] x m] x n], "weights": [n reals]?}
    with delta components per scalar (1 real / 2 complex / 4 quaternion).
    Omitted weights default to 1/n, i.e. the set is tested as a projective
    (p/2)-design.
    """
    if not isinstance(doc, dict):
        raise ValueError(f"point set document must be an object, got {type(doc).__name__}")
    for key in ("field", "m", "p", "nodes"):
        if key not in doc:
            raise ValueError(f"point set document is missing required key {key!r}")
    field = Field.parse(str(doc["field"]))
    m = int(doc["m"])
    p = int(doc["p"])
    raw_nodes = doc["nodes"]
    if not isinstance(raw_nodes, list) or not raw_nodes:
        raise ValueError("'nodes' must be a nonempty list")
    nodes = []
    for i, node in enumerate(raw_nodes):
        if not isinstance(node, list) or len(node) != m:
            raise ValueError(f"nodes[{i}]: expected {m} coordinates, got {node!r}")
        nodes.append(
            [_embed_scalar(c, field.delta, f"nodes[{i}][{j}]") for j, c in enumerate(node)]
        )
    weights = doc.get("weights")
    ps = PointSet(field, m, np.array(nodes), None if weights is None else np.asarray(weights))
    return ps, p


def load_point_set(path) -> tuple[PointSet, int]:
    """Read a point-set JSON file; parse errors carry line/column locations."""
    with open(path, "r", encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValueError(
                f"{path}: invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}"
            ) from None
    return parse_point_set(doc)


def circle_design(p: int) -> PointSet:
    """Equal-weight nodes at angles j*pi/n on the real circle, n = p/2 + 1.

    The classical tight fixture: a projective (p/2)-design in R^2 meeting
    both lower bounds.
    """
    if p < 2 or p % 2 != 0:
        raise ValueError(f"p must be a positive even integer, got {p}")
    n = p // 2 + 1
    nodes = np.zeros((n, 2, 4))
    angles = np.arange(n) * math.pi / n
    nodes[:, 0, 0] = np.cos(angles)
    nodes[:, 1, 0] = np.sin(angles)
    return PointSet(Field.R, 2, nodes)


def orthonormal_design(field: Field, m: int) -> PointSet:
    """The coordinate basis of K^m with weights 1/m; an index-2 cubature formula."""
    nodes = np.zeros((m, m, 4))
    for i in range(m):
        nodes[i, i, 0] = 1.0
    return PointSet(field, m, nodes)
