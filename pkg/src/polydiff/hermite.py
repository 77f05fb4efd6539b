"""Hermite interpolation with confluent nodes, in barycentric style.

Data layout
-----------
All routines here share one flattening of derivative data at confluent
nodes: node-major, scaled derivatives.  For nodes t_0, t_1, ... with
confluencies s_0, s_1, ... the data vector is

    p(t_0), p'(t_0)/1!, ..., p^(s_0-1)(t_0)/(s_0-1)!,  p(t_1), ...

so slot (i, j) holds the order-j Taylor coefficient of p about t_i.

Weights
-------
The generalized barycentric weights b_{i,j} are the coefficients of the
partial fraction expansion

    1 / w(z) = sum_i sum_{j < s_i} b_{i,j} / (z - t_i)^(j+1),

where w is the node polynomial prod (z - t_i)^(s_i).  They are read off
a truncated reciprocal power series of w(z) / (z - t_i)^(s_i) about each
node, which keeps the whole computation local and exact over rationals.
"""

from __future__ import annotations

from .core import (
    CoeffVector,
    DenseMatrix,
    Field,
    HermiteBasis,
    NodeSet,
    as_node_set,
    one_of,
    zero_of,
)
from .lagrange import node_polynomial_value
from .series import (
    linear_power_series,
    series_div,
    series_mul_linear,
    series_reciprocal,
    series_shift,
    series_trunc,
)


class GenBaryWeights:
    """Generalized barycentric weights, one ragged row per node.

    ``weights[i][j]`` stores b_{i,j} for 0 <= j < s_i.  The true weight
    is ``scale * weights[i][j]``; ``scale`` is 1 unless the weights were
    normalized to unit max modulus.
    """

    __slots__ = ("nodes", "weights", "scale")

    def __init__(self, nodes: NodeSet, weights, scale=1):
        self.nodes = nodes
        self.weights = tuple(tuple(row) for row in weights)
        self.scale = scale

    def __repr__(self):
        return f"GenBaryWeights({len(self.weights)} nodes, scale={self.scale})"


def _other_factor_series(nodes: NodeSet, i: int, order: int) -> list:
    """Taylor coefficients about t_i of prod_{m != i} (z - t_m)^(s_m)."""
    ti = nodes.nodes[i]
    out = series_trunc([one_of(nodes.field)], order)
    for m, (tm, sm) in enumerate(zip(nodes.nodes, nodes.confluencies)):
        if m == i:
            continue
        for _ in range(sm):
            out = series_mul_linear(out, ti - tm, order)
    return out


def node_polynomial_taylor(nodes, center: int, order: int) -> tuple:
    """Taylor coefficients of the node polynomial w about node ``center``.

    Returns coefficients of u^0 .. u^order with u = z - t_center,
    computed by repeated multiplication of shifted linear factors.
    """
    nodes = as_node_set(nodes)
    if not (0 <= center < len(nodes)):
        raise IndexError(f"no node {center} in this node set")
    ti = nodes.nodes[center]
    out = series_trunc([one_of(nodes.field)], order)
    for tm, sm in zip(nodes.nodes, nodes.confluencies):
        for _ in range(sm):
            out = series_mul_linear(out, ti - tm, order)
    return tuple(out)


def gen_bary_weights(nodes, normalize: bool = False) -> GenBaryWeights:
    """Partial fraction coefficients of 1/w, node by node.

    For node i, expand g_i = w(z) / (z - t_i)^(s_i) about t_i, invert
    the series to order s_i - 1, and read the weights in reverse:
    b_{i, s_i-1-t} is the order-t reciprocal coefficient.

    With ``normalize`` (floating fields only) all weights are divided by
    the largest modulus, recorded as ``scale``.
    """
    nodes = as_node_set(nodes)
    weights = []
    for i, si in enumerate(nodes.confluencies):
        g = _other_factor_series(nodes, i, si - 1)
        h = series_reciprocal(g, si - 1)
        row = [h[si - 1 - j] for j in range(si)]
        weights.append(row)
    scale = 1
    if normalize:
        if nodes.field is Field.RATIONAL:
            raise ValueError("normalization applies to floating fields only")
        scale = max(abs(b) for row in weights for b in row)
        weights = [[b / scale for b in row] for row in weights]
    return GenBaryWeights(nodes, weights, scale)


def hermite_eval(w: GenBaryWeights, data, z):
    """First-form evaluation of the interpolant defined by layout data.

    p(z) = w(z) sum_i sum_j sum_{k <= j} b_{i,j} d_{i,k} / (z-t_i)^(j+1-k),
    where d are the layout entries.  Hitting a node exactly returns the
    stored value there.
    """
    nodes = w.nodes
    data = tuple(data)
    if len(data) != nodes.dimension:
        raise ValueError(f"expected {nodes.dimension} data entries, got {len(data)}")
    for i, t in enumerate(nodes.nodes):
        if z == t:
            return data[nodes.slot(i, 0)]
    total = None
    for i, (t, si) in enumerate(zip(nodes.nodes, nodes.confluencies)):
        inv = 1 / (z - t)
        # Horner in inv: sum over pole order q = j + 1 - k
        local = None
        for j in range(si):
            bij = w.weights[i][j]
            for k in range(j + 1):
                term = bij * data[nodes.slot(i, k)] * inv ** (j + 1 - k)
                local = term if local is None else local + term
        total = local if total is None else total + local
    return w.scale * node_polynomial_value(nodes, z) * total


def hermite_basis_element(w: GenBaryWeights, i: int, j: int, z):
    """Value at z of the cardinal function for slot (i, j).

    The cardinal function H_{i,j} has order-k scaled derivative at t_l
    equal to 1 exactly when (l, k) = (i, j); its closed form is
    sum_k b_{i, j+k} w(z) / (z - t_i)^(k+1).
    """
    nodes = w.nodes
    if not (0 <= i < len(nodes)) or not (0 <= j < nodes.confluencies[i]):
        raise IndexError(f"no basis element ({i}, {j}) for this node set")
    for l, t in enumerate(nodes.nodes):
        if z == t:
            hit = l == i and j == 0
            return one_of(nodes.field) if hit else zero_of(nodes.field)
    si = nodes.confluencies[i]
    wz = node_polynomial_value(nodes, z)
    inv = 1 / (z - nodes.nodes[i])
    acc = None
    for k in range(si - j):
        term = w.weights[i][j + k] * wz * inv ** (k + 1)
        acc = term if acc is None else acc + term
    return w.scale * acc


def constant_data(nodes, value=1) -> CoeffVector:
    """Layout vector of the constant polynomial: value at each node, zero derivatives."""
    nodes = as_node_set(nodes)
    zero = zero_of(nodes.field)
    out = []
    for s in nodes.confluencies:
        out.append(value)
        out.extend([zero] * (s - 1))
    return CoeffVector(out, basis=HermiteBasis(nodes))


def diff_matrix_hermite(nodes) -> DenseMatrix:
    """Differentiation matrix on the scaled-derivative data layout.

    Maps the layout of p to the layout of p'.  For output order
    j < s_i - 1 the row is a shift, (j+1) times input slot (i, j+1).
    The single nontrivial row per node (output order s_i - 1) needs the
    order-s_i Taylor coefficient of every cardinal function about t_i:
    expand w(z)/(z - t_l)^(k+1) about t_i by truncated series division
    (for l = i the node factor inside w cancels the pole), combine per
    the cardinal closed form, and differentiate termwise.
    """
    nodes = as_node_set(nodes)
    w = gen_bary_weights(nodes)
    dim = nodes.dimension
    zero = zero_of(nodes.field)
    rows = [[zero] * dim for _ in range(dim)]
    for i, si in enumerate(nodes.confluencies):
        for j in range(si - 1):
            rows[nodes.slot(i, j)][nodes.slot(i, j + 1)] = (j + 1) * one_of(nodes.field)
        r = nodes.slot(i, si - 1)
        # Taylor data about t_i, one series per (source node l, pole order k+1)
        gi = _other_factor_series(nodes, i, si)
        w_about_i = series_shift(gi, si, si)
        for l, sl in enumerate(nodes.confluencies):
            pole_series = []
            for k in range(sl):
                if l == i:
                    pole_series.append(series_shift(gi, si - k - 1, si))
                else:
                    den = linear_power_series(nodes.nodes[i] - nodes.nodes[l], k + 1, si)
                    pole_series.append(series_div(w_about_i, den, si))
            for m in range(sl):
                t_si = sum(w.weights[l][m + k] * pole_series[k][si]
                           for k in range(sl - m))
                rows[r][nodes.slot(l, m)] = si * t_si
    return DenseMatrix.from_rows(rows, nodes.field)
