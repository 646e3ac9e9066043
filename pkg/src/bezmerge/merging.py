"""Least-squares merging of composite-curve segments into one Bezier curve.

Given a composite curve P with s segments on a partition of [0, 1], find the
degree-m Bezier curve R minimizing the L2 distance over [0, 1] subject to
R matching P's derivatives of order < k at t = 0 and order < l at t = 1.

The constrained controls r_0..r_{k-1} and r_{m-l+1}..r_m follow directly from
the endpoint-derivative formulas; the free middle block is the orthogonal
projection of the remainder onto the constrained space, computed in the dual
Bernstein basis and converted back through the c-table. Everything is done
componentwise, sharing the c-, d- and binomial tables across coordinates.
Total cost is O(s m^2).

merge_oracle solves the same problem through the normal equations with
quadrature-evaluated moments; it shares only the endpoint formulas with merge
and exists as an independent cross-check.
"""

from dataclasses import dataclass

import numpy as np

from .curves import (
    BezierSegment,
    CompositeBezierCurve,
    MAX_DEGREE,
    bernstein_eval,
    binomial,
    eval_segment_many,
    forward_difference,
)
from .dd import dd_add, dd_div_float, dd_from_ratio, dd_mul_float, two_prod
from .dualbasis import CTable, c_table, gram_matrix
from .errors import ValidationError
from .quadrature import gauss_legendre_unit
from .subdivision import DTable, d_table

CONVENTIONS = ("local", "global")


def _dd_total(pair) -> float:
    return pair[0] + pair[1]


@dataclass(frozen=True)
class MergeParams:
    """Target degree m and endpoint continuity orders (k at 0, l at 1).

    derivative_convention selects how P's endpoint derivatives are read:
    'local' matches the first/last segment's derivatives in their own
    parameter (the convention the coefficient formulas are written in);
    'global' rescales by the subinterval widths so that derivatives are taken
    with respect to the global parameter t.
    """

    m: int
    k: int
    l: int
    derivative_convention: str = "local"


def validate(curve: CompositeBezierCurve, params: MergeParams) -> list:
    """Check params against the curve; returns a list of violations (empty if valid)."""
    problems = []
    m, k, l = params.m, params.k, params.l
    if params.derivative_convention not in CONVENTIONS:
        problems.append(
            f"derivative_convention must be one of {CONVENTIONS}, "
            f"got {params.derivative_convention!r}")
    if m > MAX_DEGREE:
        problems.append(f"target degree m={m} exceeds the supported bound {MAX_DEGREE}")
    if k < 0:
        problems.append(f"left continuity order k={k} is negative")
    if l < 0:
        problems.append(f"right continuity order l={l} is negative")
    n_max = curve.max_degree
    if m < n_max:
        problems.append(f"target degree m={m} is below the maximum segment degree {n_max}")
    n1 = curve.segments[0].degree
    ns = curve.segments[-1].degree
    if k > n1 + 1:
        problems.append(f"k={k} exceeds n_1+1={n1 + 1} (first segment degree {n1})")
    if l > ns + 1:
        problems.append(f"l={l} exceeds n_s+1={ns + 1} (last segment degree {ns})")
    if k >= 0 and l >= 0 and k + l > m:
        problems.append(f"k+l={k + l} exceeds target degree m={m}")
    return problems


def constrained_head(first_seg: BezierSegment, m: int, k: int, step: float = 1.0) -> np.ndarray:
    """Controls r_0..r_{k-1} pinned by the left-endpoint derivative constraints.

    r_j = binom(n,j)/binom(m,j) * delta^j p_0 / step^j
          - sum_{h<j} (-1)^(j+h) binom(j,h) r_h,
    computed strictly in increasing j since each r_j consumes all previous.
    step = 1 matches the segment's local-parameter derivatives; step = dt_0
    matches global-parameter derivatives.
    """
    n = first_seg.degree
    out = np.empty((k, first_seg.dim))
    for j in range(k):
        dj = forward_difference(first_seg.points, j, 0)
        val = binomial(n, j) / binomial(m, j) * dj / step**j
        for h in range(j):
            val = val - (-1.0) ** (j + h) * binomial(j, h) * out[h]
        out[j] = val
    return out


def constrained_tail(last_seg: BezierSegment, m: int, l: int, step: float = 1.0) -> np.ndarray:
    """Controls r_{m-l+1}..r_m (ascending index) pinned by the right endpoint.

    r_{m-j} = (-1)^j binom(n,j)/binom(m,j) * delta^j p_{n-j} / step^j
              - sum_{h=1}^{j} (-1)^h binom(j,h) r_{m-j+h},  j = 0..l-1.
    """
    n = last_seg.degree
    out = np.empty((l, last_seg.dim))
    for j in range(l):
        dj = forward_difference(last_seg.points, j, n - j)
        val = (-1.0) ** j * binomial(n, j) / binomial(m, j) * dj / step**j
        for h in range(1, j + 1):
            # r_{m-j+h} sits at ascending-order slot l-1-(j-h).
            val = val - (-1.0) ** h * binomial(j, h) * out[l - 1 - j + h]
        out[l - 1 - j] = val
    return out


def segment_dual_coeffs(seg: BezierSegment, m: int) -> np.ndarray:
    """Coefficients of the segment in the unconstrained degree-m dual basis.

    hat_p[v] = <P, B^m_v> in the segment's local parameter
             = binom(m,v)/(m+n+1) * sum_q binom(n,q)/binom(m+n, q+v) p_q,
    so that P = sum_v hat_p[v] D^m_v. Shape (m+1, d); cost O(m n).
    """
    n = seg.degree
    pts = seg.points.tolist()
    dim = seg.dim
    out = np.empty((m + 1, dim))
    for v in range(m + 1):
        weights = [
            dd_from_ratio(binomial(n, q), binomial(m + n, q + v)) for q in range(n + 1)
        ]
        scale = binomial(m, v)
        for c in range(dim):
            ah = al = 0.0
            for q in range(n + 1):
                wh, wl = weights[q]
                ph, pl = dd_mul_float(wh, wl, pts[q][c])
                ah, al = dd_add(ah, al, ph, pl)
            ah, al = dd_mul_float(ah, al, scale)
            out[v, c] = _dd_total(dd_div_float(ah, al, float(m + n + 1)))
    return out


def dual_mid_coeffs(
    hat_ps: list,
    dtab: DTable,
    head: np.ndarray,
    tail: np.ndarray,
    m: int,
    k: int,
    l: int,
) -> np.ndarray:
    """Dual-basis coefficients hat_r_h (h = k..m-l) of the free middle block.

    hat_r_h = sum_i dt_{i-1} sum_v hat_p^i_v d^{(i)}_{hv}
              - binom(m,h)/(2m+1) * sum_{v fixed} binom(m,v)/binom(2m, h+v) r_v,
    where the fixed v are 0..k-1 (head) and m-l+1..m (tail). Accumulated with
    compensated products: the c-table contraction downstream amplifies absolute
    noise here by the inverse Gram norm.
    """
    kn = dtab.partition.knots
    s = dtab.n_segments
    dim = hat_ps[0].shape[1]
    deltas = [float(kn[i + 1] - kn[i]) for i in range(s)]
    hp_lists = [hp.tolist() for hp in hat_ps]
    d_lists = [dtab.coeffs[i].tolist() for i in range(s)]
    head_list = head.tolist()
    tail_list = tail.tolist()
    out = np.empty((m - k - l + 1, dim))
    for h in range(k, m - l + 1):
        corr_w = [
            (v, dd_from_ratio(binomial(m, v), binomial(2 * m, h + v)))
            for v in list(range(k)) + list(range(m - l + 1, m + 1))
        ]
        scale_h = binomial(m, h)
        for c in range(dim):
            ah = al = 0.0
            for i in range(s):
                drow = d_lists[i][h]
                hp = hp_lists[i]
                sh = sl = 0.0
                for v in range(m + 1):
                    ph, pl = two_prod(hp[v][c], drow[v])
                    sh, sl = dd_add(sh, sl, ph, pl)
                sh, sl = dd_mul_float(sh, sl, deltas[i])
                ah, al = dd_add(ah, al, sh, sl)
            ch = cl = 0.0
            for v, (wh, wl) in corr_w:
                r_v = head_list[v][c] if v < k else tail_list[v - (m - l + 1)][c]
                ph, pl = dd_mul_float(wh, wl, r_v)
                ch, cl = dd_add(ch, cl, ph, pl)
            ch, cl = dd_mul_float(ch, cl, scale_h)
            ch, cl = dd_div_float(ch, cl, float(2 * m + 1))
            out[h - k, c] = _dd_total(dd_add(ah, al, -ch, -cl))
    return out


def mid_controls(hat_r: np.ndarray, ctab: CTable) -> np.ndarray:
    """Bernstein controls r_k..r_{m-l} from dual coefficients: r_j = sum_h hat_r_h c[h][j]."""
    size = hat_r.shape[0]
    out = np.empty_like(hat_r)
    hr = hat_r.tolist()
    c = ctab.coeffs.tolist()
    for j in range(size):
        for co in range(hat_r.shape[1]):
            ah = al = 0.0
            for h in range(size):
                ph, pl = two_prod(hr[h][co], c[h][j])
                ah, al = dd_add(ah, al, ph, pl)
            out[j, co] = _dd_total((ah, al))
    return out


def _convention_steps(curve: CompositeBezierCurve, params: MergeParams):
    if params.derivative_convention == "global":
        return curve.partition.delta(0), curve.partition.delta(curve.n_segments - 1)
    return 1.0, 1.0


def merge(curve: CompositeBezierCurve, params: MergeParams) -> BezierSegment:
    """Merged degree-m curve on [0, 1] minimizing the L2 distance to the input."""
    problems = validate(curve, params)
    if problems:
        raise ValidationError(problems)
    m, k, l = params.m, params.k, params.l
    head_step, tail_step = _convention_steps(curve, params)

    head = constrained_head(curve.segments[0], m, k, head_step)
    tail = constrained_tail(curve.segments[-1], m, l, tail_step)
    hat_ps = [segment_dual_coeffs(seg, m) for seg in curve.segments]
    dtab = d_table(m, curve.partition)
    hat_r = dual_mid_coeffs(hat_ps, dtab, head, tail, m, k, l)
    ctab = c_table(m, k, l)
    mid = mid_controls(hat_r, ctab)

    controls = np.empty((m + 1, curve.dim))
    controls[:k] = head
    controls[k : m - l + 1] = mid
    controls[m - l + 1 :] = tail
    return BezierSegment(controls)


def merge_oracle(curve: CompositeBezierCurve, params: MergeParams) -> BezierSegment:
    """Same problem solved through the normal equations, for cross-checking.

    The endpoint formulas are shared with merge; the free block solves
    G x = b with G the constrained Bernstein Gram matrix and
    b_j = <P - fixed part, B^m_j> evaluated by per-segment Gauss-Legendre
    quadrature (exact: integrand degree is at most 2m). Intended for test
    scales (m <= 14); cost is O(s m^2 g + m^3).
    """
    problems = validate(curve, params)
    if problems:
        raise ValidationError(problems)
    m, k, l = params.m, params.k, params.l
    head_step, tail_step = _convention_steps(curve, params)

    head = constrained_head(curve.segments[0], m, k, head_step)
    tail = constrained_tail(curve.segments[-1], m, l, tail_step)
    fixed_idx = list(range(k)) + list(range(m - l + 1, m + 1))
    fixed_controls = np.vstack([head, tail]) if fixed_idx else np.zeros((0, curve.dim))
    free_idx = list(range(k, m - l + 1))

    nodes, weights = gauss_legendre_unit(m + 2)
    kn = curve.partition.knots
    b = np.zeros((len(free_idx), curve.dim))
    for i, seg in enumerate(curve.segments):
        dt = kn[i + 1] - kn[i]
        ts = kn[i] + dt * nodes
        bern = np.array([[bernstein_eval(m, v, t) for t in ts] for v in range(m + 1)])
        w_vals = eval_segment_many(seg, nodes)
        if fixed_idx:
            w_vals = w_vals - bern[fixed_idx].T @ fixed_controls
        b += dt * (bern[free_idx] * weights) @ w_vals

    g = gram_matrix(m, k, l)
    x = np.linalg.solve(g, b)

    controls = np.empty((m + 1, curve.dim))
    controls[:k] = head
    controls[k : m - l + 1] = x
    controls[m - l + 1 :] = tail
    return BezierSegment(controls)
