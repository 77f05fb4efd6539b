"""Scalar fields, dense matrices, coefficient vectors, and basis descriptors.

Every matrix and vector is homogeneous in one scalar field: exact
rationals (``fractions.Fraction``), 64-bit floats, or complex doubles.
Rationals promote to floats, and floats to complex doubles, whenever
fields mix; the reverse direction is an error, never a silent rounding.

The orientation convention is fixed once for the whole package: column
k of a differentiation matrix holds the coefficients of the derivative
of the k-th basis element, so coefficient vectors transform covariantly,
b = D a.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction


class Field(Enum):
    """Scalar field tag, ordered along the promotion ladder."""

    RATIONAL = "rational"
    REAL = "real"
    COMPLEX = "complex"


_RANK = {Field.RATIONAL: 0, Field.REAL: 1, Field.COMPLEX: 2}


class FieldError(ValueError):
    """Raised on an attempt to demote a scalar into a smaller field."""


class SingularMatrixError(ValueError):
    """Raised when a matrix that must be invertible is singular."""


def field_of(x) -> Field:
    """Return the field tag of a scalar value."""
    # bool is a subclass of int, so it lands in RATIONAL like any integer
    if isinstance(x, (int, Fraction)):
        return Field.RATIONAL
    if isinstance(x, float):
        return Field.REAL
    if isinstance(x, complex):
        return Field.COMPLEX
    raise TypeError(f"not a supported scalar: {x!r}")


def join_fields(*fields: Field) -> Field:
    """Smallest field containing all the given ones."""
    return max(fields, key=_RANK.__getitem__)


def coerce_scalar(x, field: Field):
    """Convert a scalar into ``field``; only promotion is allowed."""
    have = field_of(x)
    if _RANK[have] > _RANK[field]:
        raise FieldError(f"cannot demote {have.value} value {x!r} to {field.value}")
    if field is Field.RATIONAL:
        return x if isinstance(x, Fraction) else Fraction(x)
    if field is Field.REAL:
        return float(x)
    return complex(x)


def zero_of(field: Field):
    return coerce_scalar(0, field)


def one_of(field: Field):
    return coerce_scalar(1, field)


class DenseMatrix:
    """Immutable dense matrix with entries in one scalar field.

    Storage is row-major.  Matrices here stay small (a few hundred rows
    at most), so no triangular or banded structure is exploited even
    when the contents would allow it.
    """

    __slots__ = ("rows", "cols", "field", "entries")

    def __init__(self, rows: int, cols: int, entries, field: Field | None = None):
        entries = tuple(entries)
        if rows < 0 or cols < 0 or len(entries) != rows * cols:
            raise ValueError(f"need {rows * cols} entries, got {len(entries)}")
        if field is None:
            field = join_fields(Field.RATIONAL, *(field_of(e) for e in entries))
        self.rows = rows
        self.cols = cols
        self.field = field
        self.entries = tuple(coerce_scalar(e, field) for e in entries)

    @classmethod
    def from_rows(cls, rows, field: Field | None = None) -> "DenseMatrix":
        rows = [list(r) for r in rows]
        n = len(rows)
        m = len(rows[0]) if rows else 0
        if any(len(r) != m for r in rows):
            raise ValueError("ragged rows")
        return cls(n, m, [e for r in rows for e in r], field)

    @classmethod
    def identity(cls, n: int, field: Field = Field.RATIONAL) -> "DenseMatrix":
        one, zero = one_of(field), zero_of(field)
        return cls(n, n, [one if i == j else zero for i in range(n) for j in range(n)], field)

    @classmethod
    def zeros(cls, rows: int, cols: int, field: Field = Field.RATIONAL) -> "DenseMatrix":
        return cls(rows, cols, [zero_of(field)] * (rows * cols), field)

    def __getitem__(self, ij):
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"entry ({i}, {j}) outside {self.rows}x{self.cols}")
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple:
        return self.entries[j::self.cols]

    def to_rows(self) -> list[list]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "DenseMatrix":
        out = [self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)]
        return DenseMatrix(self.cols, self.rows, out, self.field)

    def __neg__(self) -> "DenseMatrix":
        return DenseMatrix(self.rows, self.cols, [-e for e in self.entries], self.field)

    def __add__(self, other: "DenseMatrix") -> "DenseMatrix":
        if not isinstance(other, DenseMatrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch in matrix addition")
        field = join_fields(self.field, other.field)
        return DenseMatrix(self.rows, self.cols,
                           [a + b for a, b in zip(self.entries, other.entries)], field)

    def __sub__(self, other: "DenseMatrix") -> "DenseMatrix":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, DenseMatrix):
            if self.cols != other.rows:
                raise ValueError("shape mismatch in matrix product")
            field = join_fields(self.field, other.field)
            zero = zero_of(field)
            out = []
            for i in range(self.rows):
                ri = self.row(i)
                for j in range(other.cols):
                    cj = other.column(j)
                    out.append(sum((a * b for a, b in zip(ri, cj)), zero))
            return DenseMatrix(self.rows, other.cols, out, field)
        # scalar
        field = join_fields(self.field, field_of(other))
        return DenseMatrix(self.rows, self.cols, [e * other for e in self.entries], field)

    def __rmul__(self, other):
        return self * other

    def __eq__(self, other):
        if not isinstance(other, DenseMatrix):
            return NotImplemented
        return (self.rows, self.cols) == (other.rows, other.cols) and all(
            a == b for a, b in zip(self.entries, other.entries))

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        return f"DenseMatrix({self.rows}x{self.cols}, {self.field.value})"


class CoeffVector:
    """Coefficient vector, optionally tied to a basis descriptor."""

    __slots__ = ("basis", "coeffs", "field")

    def __init__(self, coeffs, basis=None, field: Field | None = None):
        coeffs = tuple(coeffs)
        if field is None:
            field = join_fields(Field.RATIONAL, *(field_of(c) for c in coeffs))
        if basis is not None and basis.dimension != len(coeffs):
            raise ValueError(
                f"basis dimension {basis.dimension} does not match length {len(coeffs)}")
        self.basis = basis
        self.coeffs = tuple(coerce_scalar(c, field) for c in coeffs)
        self.field = field

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __getitem__(self, k):
        return self.coeffs[k]

    def __eq__(self, other):
        if isinstance(other, CoeffVector):
            other = other.coeffs
        try:
            other = tuple(other)
        except TypeError:
            return NotImplemented
        return len(self.coeffs) == len(other) and all(
            a == b for a, b in zip(self.coeffs, other))

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"CoeffVector({list(self.coeffs)!r})"


class NodeSet:
    """Distinct interpolation nodes with per-node confluencies.

    A node with confluency s carries function data and the first s - 1
    scaled derivatives.  Confluency 1 everywhere is plain interpolation.
    """

    __slots__ = ("nodes", "confluencies", "field")

    def __init__(self, nodes, confluencies=None):
        nodes = tuple(nodes)
        if not nodes:
            raise ValueError("need at least one node")
        if confluencies is None:
            confluencies = (1,) * len(nodes)
        confluencies = tuple(int(s) for s in confluencies)
        if len(confluencies) != len(nodes):
            raise ValueError("one confluency per node required")
        if any(s < 1 for s in confluencies):
            raise ValueError("confluencies must be at least 1")
        for a in range(len(nodes)):
            for b in range(a + 1, len(nodes)):
                if nodes[a] == nodes[b]:
                    raise ValueError(f"duplicate node {nodes[a]!r}; use a confluency instead")
        field = join_fields(*(field_of(t) for t in nodes))
        self.nodes = tuple(coerce_scalar(t, field) for t in nodes)
        self.confluencies = confluencies
        self.field = field

    @property
    def dimension(self) -> int:
        return sum(self.confluencies)

    @property
    def is_simple(self) -> bool:
        return all(s == 1 for s in self.confluencies)

    def flat_nodes(self) -> tuple:
        """Nodes repeated by confluency, node-major."""
        out = []
        for t, s in zip(self.nodes, self.confluencies):
            out.extend([t] * s)
        return tuple(out)

    def slot(self, i: int, j: int) -> int:
        """Flat index of derivative order j at node i in the data layout."""
        if not (0 <= i < len(self.nodes)) or not (0 <= j < self.confluencies[i]):
            raise IndexError(f"no slot ({i}, {j}) in this node set")
        return sum(self.confluencies[:i]) + j

    def __len__(self):
        return len(self.nodes)

    def __repr__(self):
        return f"NodeSet({list(self.nodes)!r}, {list(self.confluencies)!r})"


def as_node_set(nodes) -> NodeSet:
    """Wrap a plain sequence of points as a confluency-1 NodeSet."""
    return nodes if isinstance(nodes, NodeSet) else NodeSet(nodes)


class DegreeGradedBasis:
    """Basis with deg(phi_k) = k, described by its x-multiplication recurrence."""

    __slots__ = ("recurrence", "degree", "name")

    def __init__(self, recurrence, degree: int, name: str = "degree-graded"):
        if degree < 0:
            raise ValueError("degree must be nonnegative")
        if len(recurrence) < degree:
            raise ValueError(f"recurrence too short for degree {degree}")
        self.recurrence = recurrence
        self.degree = degree
        self.name = name

    @property
    def dimension(self) -> int:
        return self.degree + 1

    @property
    def field(self) -> Field:
        return self.recurrence.field

    def __repr__(self):
        return f"DegreeGradedBasis({self.name}, degree={self.degree})"


class LagrangeBasis:
    """Cardinal-function basis on simple (confluency-1) nodes."""

    __slots__ = ("nodes", "name")

    def __init__(self, nodes):
        nodes = as_node_set(nodes)
        if not nodes.is_simple:
            raise ValueError("Lagrange basis requires confluency 1 everywhere")
        self.nodes = nodes
        self.name = "lagrange"

    @property
    def dimension(self) -> int:
        return len(self.nodes)

    @property
    def field(self) -> Field:
        return self.nodes.field

    def __repr__(self):
        return f"LagrangeBasis({list(self.nodes.nodes)!r})"


class HermiteBasis:
    """Cardinal basis matching values and scaled derivatives at confluent nodes."""

    __slots__ = ("nodes", "name")

    def __init__(self, nodes):
        self.nodes = as_node_set(nodes)
        self.name = "hermite"

    @property
    def dimension(self) -> int:
        return self.nodes.dimension

    @property
    def field(self) -> Field:
        return self.nodes.field

    def __repr__(self):
        return f"HermiteBasis({self.nodes!r})"


class BernsteinBasis:
    """Bernstein basis of a fixed degree on [0, 1]."""

    __slots__ = ("degree", "name")

    def __init__(self, degree: int):
        if degree < 0:
            raise ValueError("degree must be nonnegative")
        self.degree = degree
        self.name = "bernstein"

    @property
    def dimension(self) -> int:
        return self.degree + 1

    @property
    def field(self) -> Field:
        return Field.RATIONAL

    def __repr__(self):
        return f"BernsteinBasis(degree={self.degree})"


def mat_apply(M: DenseMatrix, v) -> CoeffVector:
    """Apply a matrix to a coefficient vector, b = M a.

    The result lives in the same basis as the input vector; fields are
    joined by promotion (a rational matrix applied to a float vector
    gives a float vector, never the other way around).
    """
    basis = v.basis if isinstance(v, CoeffVector) else None
    coeffs = tuple(v)
    if M.cols != len(coeffs):
        raise ValueError(f"matrix has {M.cols} columns, vector has {len(coeffs)} entries")
    field = join_fields(M.field, *(field_of(c) for c in coeffs))
    zero = zero_of(field)
    out = [sum((a * b for a, b in zip(M.row(i), coeffs)), zero) for i in range(M.rows)]
    return CoeffVector(out, basis=basis if M.rows == len(coeffs) else None, field=field)


def mat_inf_norm(M: DenseMatrix):
    """Max absolute row sum.  Exact (a Fraction) on rational matrices."""
    if M.rows == 0:
        return zero_of(Field.RATIONAL)
    return max(sum(abs(e) for e in M.row(i)) for i in range(M.rows))


def vec_inf_norm(v):
    coeffs = tuple(v)
    if not coeffs:
        return Fraction(0)
    return max(abs(c) for c in coeffs)


def mat_power(M: DenseMatrix, k: int) -> DenseMatrix:
    """k-th power by repeated multiplication; k = 0 gives the identity."""
    if M.rows != M.cols:
        raise ValueError("matrix power needs a square matrix")
    if k < 0:
        raise ValueError("negative powers are not defined here")
    out = DenseMatrix.identity(M.rows, M.field)
    for _ in range(k):
        out = out * M
    return out


def promote_matrix(M: DenseMatrix, field: Field) -> DenseMatrix:
    """Return M with entries promoted into ``field`` (demotion is an error)."""
    return DenseMatrix(M.rows, M.cols, M.entries, field)


def promote_vector(v: CoeffVector, field: Field) -> CoeffVector:
    return CoeffVector(v.coeffs, basis=v.basis, field=field)


def approx_equal(a, b, tol: float = 1e-10) -> bool:
    """Elementwise |a - b| <= tol * max(1, largest magnitude on either side)."""
    if isinstance(a, DenseMatrix) and isinstance(b, DenseMatrix):
        if (a.rows, a.cols) != (b.rows, b.cols):
            return False
        xs, ys = a.entries, b.entries
    else:
        xs, ys = tuple(a), tuple(b)
        if len(xs) != len(ys):
            return False
    scale = max([1.0] + [abs(x) for x in xs] + [abs(y) for y in ys])
    return all(abs(x - y) <= tol * scale for x, y in zip(xs, ys))
