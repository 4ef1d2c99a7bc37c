"""Finite sections of the transfer-matrix pair behind the stationary
distribution.

The pair (D, E) together with a row vector W and column vector V satisfies

    D E - q E D = D + E,      D V = b V,      W E = a W,

with a = 1/alpha and b = 1/beta, and then the unnormalized stationary
weight of a configuration is W (product of D for occupied, E for empty) V,
while the normalization is W (D+E)^n V.

Two explicit solutions are provided.  The TABLEAU pair works for general
alpha, beta: D is the shift with b above the diagonal; E is lower
triangular with entry (i, j), j <= i, equal to

    b^(j-i) * ( a q^(j-1) C(i-1, j-1) + sum_{r=0}^{j-2} C(i-j+r, r) q^r ),

W = (1, 0, 0, ...) and V = (1, 1, 1, ...).  Note the b^(j-i): the strictly
subdiagonal entries carry negative powers of b, which cancel in every
product the evaluator forms.  The MOTZKIN pair is meaningful at
alpha = beta = 1 only: tridiagonal in the q-integers [i] = 1 + q + ... +
q^(i-1), with W = V = (1, 0, 0, ...); its products enumerate bicolored
Motzkin paths weighted by height.

A product of n factors applied to W can move weight no farther than index
n+1, so truncating both matrices to dim n+2 computes the infinite-matrix
value exactly; smaller truncations are refused.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from math import comb

from .poly import Poly


class TruncationError(ValueError):
    """Truncation too small for the requested product to be exact."""


class AnsatzKind(Enum):
    TABLEAU = "tableau"
    MOTZKIN = "motzkin"


def qint(i):
    """The q-integer [i] = 1 + q + ... + q^(i-1); [0] = 0."""
    if i < 0:
        raise ValueError("q-integer index must be nonnegative")
    return Poly({(j, 0, 0): 1 for j in range(i)})


@dataclass(frozen=True)
class TruncatedMatrix:
    """dim x dim matrix of polynomials, 1-indexed like the displays."""

    dim: int
    cells: tuple[tuple[Poly, ...], ...]

    def entry(self, i, j):
        if not (1 <= i <= self.dim and 1 <= j <= self.dim):
            raise IndexError(f"entry ({i}, {j}) outside dim {self.dim}")
        return self.cells[i - 1][j - 1]

    def with_entry(self, i, j, value):
        """Copy with one entry replaced (used by mutation tests)."""
        rows = [list(r) for r in self.cells]
        rows[i - 1][j - 1] = value
        return TruncatedMatrix(self.dim, tuple(tuple(r) for r in rows))


def _e1_entry(i, j):
    # a q^(j-1) C(i-1, j-1) + sum_{r<=j-2} C(i-j+r, r) q^r, times b^(j-i)
    g = Poly.monomial(comb(i - 1, j - 1), j - 1, 1, 0)
    for r in range(j - 1):
        g = g + Poly.monomial(comb(i - j + r, r), r, 0, 0)
    return Poly.monomial(1, 0, 0, j - i) * g


@lru_cache(maxsize=None)
def build(kind, which, dim):
    """The D or E matrix of the given kind, truncated to dim x dim."""
    if which not in ("D", "E"):
        raise ValueError(f"which must be 'D' or 'E', got {which!r}")
    if dim < 1:
        raise ValueError("dim must be positive")
    zero = Poly.zero()
    cells = [[zero] * dim for _ in range(dim)]
    if kind is AnsatzKind.TABLEAU:
        if which == "D":
            for i in range(dim - 1):
                cells[i][i + 1] = Poly.monomial(1, 0, 0, 1)
        else:
            for i in range(1, dim + 1):
                for j in range(1, i + 1):
                    cells[i - 1][j - 1] = _e1_entry(i, j)
    elif kind is AnsatzKind.MOTZKIN:
        if which == "D":
            for i in range(1, dim + 1):
                cells[i - 1][i - 1] = qint(i)
                if i < dim:
                    cells[i - 1][i] = qint(i + 1)
        else:
            for i in range(1, dim + 1):
                cells[i - 1][i - 1] = qint(i)
                if i < dim:
                    cells[i][i - 1] = qint(i)
    else:
        raise ValueError(f"unknown ansatz kind {kind!r}")
    return TruncatedMatrix(dim, tuple(tuple(r) for r in cells))


def _apply_row(vec, matrix):
    """Row vector times matrix, skipping structural zeros."""
    dim = matrix.dim
    out = [Poly.zero()] * dim
    for i, v in enumerate(vec):
        if not v:
            continue
        row = matrix.cells[i]
        for j in range(dim):
            m = row[j]
            if m:
                out[j] = out[j] + v * m
    return out


@lru_cache(maxsize=None)
def _sweep(kind, tau, dim):
    vec = [Poly.one()] + [Poly.zero()] * (dim - 1)
    for t in tau:
        vec = _apply_row(vec, build(kind, "D" if t else "E", dim))
    return tuple(vec)


def ansatz_eval(kind, tau, dim=None):
    """Unnormalized stationary weight W (D/E factors over tau) V, exact."""
    tau = tuple(int(t) for t in tau)
    n = len(tau)
    if dim is None:
        dim = n + 2
    if dim < n + 2:
        raise TruncationError(f"dim {dim} < {n + 2}; the product would be cut")
    vec = _sweep(kind, tau, dim)
    if kind is AnsatzKind.TABLEAU:
        return sum(vec, Poly.zero())
    return vec[0]


def top_row(tau, dim=None):
    """W times the product of TABLEAU factors over tau: the row vector
    whose entries refine the weight by landing index."""
    tau = tuple(int(t) for t in tau)
    n = len(tau)
    if dim is None:
        dim = n + 2
    if dim < n + 2:
        raise TruncationError(f"dim {dim} < {n + 2}; the product would be cut")
    return list(_sweep(AnsatzKind.TABLEAU, tau, dim))


@lru_cache(maxsize=None)
def _sum_matrix(kind, dim):
    d = build(kind, "D", dim)
    e = build(kind, "E", dim)
    cells = tuple(
        tuple(d.cells[i][j] + e.cells[i][j] for j in range(dim)) for i in range(dim)
    )
    return TruncatedMatrix(dim, cells)


def partition_function(kind, n, dim=None):
    """Normalization W (D+E)^n V, exact at the default truncation n+2."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if dim is None:
        dim = n + 2
    if dim < n + 2:
        raise TruncationError(f"dim {dim} < {n + 2}; the product would be cut")
    s = _sum_matrix(kind, dim)
    vec = [Poly.one()] + [Poly.zero()] * (dim - 1)
    for _ in range(n):
        vec = _apply_row(vec, s)
    if kind is AnsatzKind.TABLEAU:
        return sum(vec, Poly.zero())
    return vec[0]


@dataclass(frozen=True)
class RelationsReport:
    kind: AnsatzKind
    dim: int
    ok: bool
    failure: str | None

    def __bool__(self):
        return self.ok


def check_relations(kind, dim, d=None, e=None):
    """Verify the defining identities on the truncated matrices.

    The product DE is only exact in the leading (dim-1) x (dim-1) block
    (row dim of D reaches past the truncation), so the algebra identity is
    checked there; the eigenvector identities are checked on the first
    dim-1 coordinates.  Matrices can be passed in explicitly so tests can
    feed deliberately corrupted entries.
    """
    if dim < 2:
        raise ValueError("dim must be at least 2")
    if d is None:
        d = build(kind, "D", dim)
    if e is None:
        e = build(kind, "E", dim)
    q = Poly.monomial(1, 1, 0, 0)
    a = Poly.monomial(1, 0, 1, 0)
    b = Poly.monomial(1, 0, 0, 1)

    def dot(mat1, mat2, i, j):
        total = Poly.zero()
        for k in range(dim):
            x = mat1.cells[i][k]
            if x:
                y = mat2.cells[k][j]
                if y:
                    total = total + x * y
        return total

    for i in range(dim - 1):
        for j in range(dim - 1):
            lhs = dot(d, e, i, j) - q * dot(e, d, i, j)
            rhs = d.cells[i][j] + e.cells[i][j]
            if lhs != rhs:
                return RelationsReport(
                    kind, dim, False,
                    f"DE - qED != D + E at entry ({i + 1}, {j + 1}): "
                    f"{lhs} vs {rhs}",
                )
    if kind is AnsatzKind.TABLEAU:
        v = [Poly.one()] * dim
        w = [Poly.one()] + [Poly.zero()] * (dim - 1)
        dv_scale, we_scale = b, a
    else:
        v = [Poly.one()] + [Poly.zero()] * (dim - 1)
        w = list(v)
        dv_scale, we_scale = Poly.one(), Poly.one()
    for i in range(dim - 1):
        got = sum((d.cells[i][j] * v[j] for j in range(dim) if v[j]), Poly.zero())
        want = dv_scale * v[i]
        if got != want:
            return RelationsReport(
                kind, dim, False, f"(DV)_{i + 1} = {got}, expected {want}"
            )
    we = _apply_row(w, e)
    for j in range(dim - 1):
        want = we_scale * w[j]
        if we[j] != want:
            return RelationsReport(
                kind, dim, False, f"(WE)_{j + 1} = {we[j]}, expected {want}"
            )
    return RelationsReport(kind, dim, True, None)
