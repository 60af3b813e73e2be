"""Dense symmetric eigencomputation, graph energies, and spanning-tree counts.

Three matrices are supported for a graph G with degree matrix D and
adjacency matrix A: the adjacency matrix itself, the Laplacian D - A and
the signless Laplacian D + A.  Spanning trees are counted twice over, by
the spectral route (product of the n-1 largest Laplacian eigenvalues over
n) and by an exact integer cofactor determinant, so the two routes can
certify each other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ContractViolationError, ParameterError
from .graphs import Graph, is_bipartite

MATRIX_KINDS = ("adjacency", "laplacian", "signless_laplacian")

SYMMETRY_TOL = 1e-12


@dataclass(frozen=True)
class SymMatrix:
    """Dense real symmetric matrix; entries are held read-only."""

    entries: np.ndarray

    def __post_init__(self):
        M = np.asarray(self.entries, dtype=float)
        if M.ndim != 2 or M.shape[0] != M.shape[1]:
            raise ContractViolationError(f"expected a square matrix, got shape {M.shape}")
        if M.size and np.abs(M - M.T).max() > SYMMETRY_TOL:
            raise ContractViolationError("matrix is not symmetric within 1e-12")
        M = M.copy()
        M.flags.writeable = False
        object.__setattr__(self, "entries", M)

    @property
    def order(self) -> int:
        return self.entries.shape[0]

    def max_abs_entry(self) -> float:
        return float(np.abs(self.entries).max()) if self.entries.size else 0.0


@dataclass(frozen=True)
class Spectrum:
    """Sorted (ascending) real eigenvalue multiset with a comparison tolerance."""

    values: tuple[float, ...]
    tol: float = 1e-8

    def __post_init__(self):
        if self.tol < 0:
            raise ParameterError("tolerance must be nonnegative")
        vals = tuple(float(v) for v in self.values)
        if any(vals[i] > vals[i + 1] for i in range(len(vals) - 1)):
            vals = tuple(sorted(vals))
        object.__setattr__(self, "values", vals)

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class EnergyValue:
    """A graph energy: sum of spectral deviations for one matrix kind.

    avg_degree is the shift 2m/n and is set only for the Laplacian kinds.
    """

    value: float
    kind: str
    avg_degree: float | None = None

    def __post_init__(self):
        if self.kind not in MATRIX_KINDS:
            raise ParameterError(f"unknown energy kind {self.kind!r}")
        if self.value < 0:
            raise ParameterError("energy cannot be negative")


# ---------------------------------------------------------------------------
# matrices and eigenvalues
# ---------------------------------------------------------------------------

def matrix_of(G: Graph, kind: str) -> SymMatrix:
    """Adjacency / Laplacian / signless Laplacian matrix of G, integer-valued."""
    if kind not in MATRIX_KINDS:
        raise ParameterError(f"unknown matrix kind {kind!r}; choose from {MATRIX_KINDS}")
    A = np.zeros((G.n, G.n))
    for u, v in G.edges:
        A[u, v] = A[v, u] = 1.0
    if kind == "adjacency":
        return SymMatrix(A)
    D = np.diag(A.sum(axis=1)) if G.n else np.zeros((0, 0))
    return SymMatrix(D - A if kind == "laplacian" else D + A)


def eigenvalues(M: SymMatrix) -> Spectrum:
    """Full real spectrum of a symmetric matrix, ascending.

    Backed by LAPACK's symmetric solver; deterministic for identical input.
    The attached tolerance scales with the largest entry so later multiset
    comparisons default to something sensible.
    """
    if not isinstance(M, SymMatrix):
        M = SymMatrix(np.asarray(M))
    vals = np.linalg.eigvalsh(M.entries) if M.order else np.zeros(0)
    return Spectrum(tuple(float(v) for v in vals), tol=1e-8 * max(1.0, M.max_abs_entry()))


def spectrum_of(G: Graph, kind: str) -> Spectrum:
    return eigenvalues(matrix_of(G, kind))


def spectra_equal(S1: Spectrum, S2: Spectrum, eps: float) -> bool:
    """Multiset equality: same length, elementwise within eps after sorting."""
    if eps < 0:
        raise ParameterError("eps must be nonnegative")
    if len(S1) != len(S2):
        return False
    return all(abs(a - b) <= eps for a, b in zip(S1.values, S2.values))


def spectral_distance(S1: Spectrum, S2: Spectrum) -> float:
    """Max elementwise distance of the sorted spectra; inf on length mismatch."""
    if len(S1) != len(S2):
        return math.inf
    if not S1.values:
        return 0.0
    return max(abs(a - b) for a, b in zip(S1.values, S2.values))


def is_cospectral(G1: Graph, G2: Graph, kind: str, eps: float) -> bool:
    return spectra_equal(spectrum_of(G1, kind), spectrum_of(G2, kind), eps)


def is_laplacian_integral(G: Graph, eps: float = 1e-8) -> bool:
    """True iff every Laplacian eigenvalue is within eps of an integer."""
    if eps < 0:
        raise ParameterError("eps must be nonnegative")
    return all(abs(v - round(v)) <= eps for v in spectrum_of(G, "laplacian").values)


# ---------------------------------------------------------------------------
# energies
# ---------------------------------------------------------------------------

def energy(G: Graph) -> EnergyValue:
    """Sum of absolute adjacency eigenvalues."""
    vals = spectrum_of(G, "adjacency").values
    return EnergyValue(float(sum(abs(v) for v in vals)), "adjacency")


def laplacian_energy(G: Graph) -> EnergyValue:
    return _laplacian_energy(G, "laplacian")


def signless_laplacian_energy(G: Graph) -> EnergyValue:
    return _laplacian_energy(G, "signless_laplacian")


def _laplacian_energy(G: Graph, kind: str) -> EnergyValue:
    if G.n == 0:
        raise ParameterError("average degree 2m/n undefined for the empty graph")
    avg = 2.0 * G.m / G.n
    vals = spectrum_of(G, kind).values
    return EnergyValue(float(sum(abs(v - avg) for v in vals)), kind, avg_degree=avg)


# ---------------------------------------------------------------------------
# spanning trees
# ---------------------------------------------------------------------------

def spanning_trees_eigen(G: Graph) -> float:
    """Product of the n-1 largest Laplacian eigenvalues divided by n.

    Evaluates to ~0 for disconnected graphs since a second zero eigenvalue
    enters the product.
    """
    if G.n < 1:
        raise ParameterError("spanning trees undefined for the empty graph")
    vals = spectrum_of(G, "laplacian").values
    return float(np.prod(vals[1:])) / G.n if G.n > 1 else 1.0


def spanning_trees_exact(G: Graph) -> int:
    """Exact spanning-tree count: integer determinant of a Laplacian minor.

    Deletes the last row and column and runs fraction-free (Bareiss)
    elimination over Python integers, so the result is exact at any size.
    """
    if G.n < 1:
        raise ParameterError("spanning trees undefined for the empty graph")
    n = G.n
    deg = G.degrees()
    minor = [[0] * (n - 1) for _ in range(n - 1)]
    for i in range(n - 1):
        minor[i][i] = deg[i]
    for u, v in G.edges:
        if u < n - 1 and v < n - 1:
            minor[u][v] -= 1
            minor[v][u] -= 1
    return _bareiss_determinant(minor)


def _bareiss_determinant(rows: list[list[int]]) -> int:
    """Fraction-free Gaussian elimination; exact over the integers."""
    n = len(rows)
    if n == 0:
        return 1
    M = [list(map(int, r)) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if M[i][k] != 0), None)
            if pivot is None:
                return 0
            M[k], M[pivot] = M[pivot], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
            M[i][k] = 0
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def edc_spanning_trees_formula(G: Graph) -> float:
    """Spanning trees of the extended double cover from the base graph:
    half the exact count for G times the product of (q_i + 2) over the
    signless Laplacian spectrum of G.
    """
    if G.n < 1:
        raise ParameterError("spanning trees undefined for the empty graph")
    tau = spanning_trees_exact(G)
    q = spectrum_of(G, "signless_laplacian").values
    return 0.5 * tau * float(np.prod([v + 2.0 for v in q]))


def edc_spanning_trees_formula_bipartite(G: Graph) -> float:
    """Bipartite shortcut for the same count: tau(G) times the product of
    (mu_i + 2) over the n-1 largest Laplacian eigenvalues.
    """
    if G.n < 1:
        raise ParameterError("spanning trees undefined for the empty graph")
    if not is_bipartite(G):
        raise ParameterError("bipartite form requires a bipartite graph")
    tau = spanning_trees_exact(G)
    mu = spectrum_of(G, "laplacian").values
    return tau * float(np.prod([v + 2.0 for v in mu[1:]])) if G.n > 1 else tau * 1.0
