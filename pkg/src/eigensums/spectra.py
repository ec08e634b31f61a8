"""Dense symmetric spectra, canonical eigenvalue orderings, and closed forms.

Ordering conventions, used everywhere downstream:

* adjacency      values nonincreasing,
* laplacian      values nondecreasing (0 first for connected graphs),
* normalized     values nondecreasing, contained in [0, 2].

With these conventions a d-regular graph satisfies
``lap[k] == d - adj[k] == d * norm[k]`` index by index.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import reports
from .graphs import Graph, adjacency_matrix, laplacian, normalized_laplacian, zagreb_index

KINDS = ("adjacency", "laplacian", "normalized")

ORTHONORMALITY_TOL = 1e-10
RECONSTRUCTION_TOL = 1e-9


class EigensolverError(RuntimeError):
    """Eigendecomposition failed or did not meet its residual contract."""

    def __init__(self, message: str, residual: float | None = None):
        super().__init__(message)
        self.residual = residual


class ConsistencyError(RuntimeError):
    """Two supposedly-equivalent internal computations disagreed."""


def eig_sym(M: np.ndarray, want_vectors: bool = True):
    """Eigendecomposition of a real symmetric matrix, values ascending.

    Returns (values, vectors) with orthonormal eigenvectors in the columns
    of ``vectors``, or (values, None) when ``want_vectors`` is false.  The
    result is verified: column orthonormality residual below 1e-10 and
    max-norm reconstruction residual below 1e-9 * max(1, |M|_max);
    violations raise EigensolverError carrying the residual rather than
    returning silently.
    """
    M = np.asarray(M, dtype=float)
    if M.ndim != 2 or M.shape[0] != M.shape[1] or M.shape[0] < 1:
        raise ValueError("need a square matrix of order >= 1")
    scale = max(1.0, float(np.max(np.abs(M))) if M.size else 0.0)
    asym = float(np.max(np.abs(M - M.T)))
    if asym > 1e-12 * scale:
        raise ValueError(f"matrix is not symmetric (max asymmetry {asym:g})")
    try:
        if want_vectors:
            values, vectors = np.linalg.eigh(M)
        else:
            values = np.linalg.eigvalsh(M)
            vectors = None
    except np.linalg.LinAlgError as exc:
        raise EigensolverError(f"eigensolver did not converge: {exc}") from exc
    if vectors is not None:
        gram = vectors.T @ vectors
        orth = float(np.max(np.abs(gram - np.eye(M.shape[0]))))
        if orth > ORTHONORMALITY_TOL:
            raise EigensolverError(
                f"eigenvector orthonormality residual {orth:g}", residual=orth
            )
        recon = float(np.max(np.abs(M - (vectors * values) @ vectors.T)))
        if recon > RECONSTRUCTION_TOL * scale:
            raise EigensolverError(
                f"reconstruction residual {recon:g} exceeds tolerance", residual=recon
            )
    return values, vectors


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues of one graph matrix in that matrix's canonical order."""

    kind: str
    values: np.ndarray
    vectors: np.ndarray | None = None

    @property
    def n(self) -> int:
        return len(self.values)

    def ascending(self):
        """(values, vectors) sorted ascending regardless of kind."""
        if self.kind == "adjacency":
            vec = None if self.vectors is None else self.vectors[:, ::-1]
            return self.values[::-1], vec
        return self.values, self.vectors


def spectrum(G: Graph, kind: str, want_vectors: bool = False) -> Spectrum:
    """Spectrum of the adjacency / laplacian / normalized matrix of G."""
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}")
    if kind == "adjacency":
        M = adjacency_matrix(G)
    elif kind == "laplacian":
        M = laplacian(G)
    else:
        M = normalized_laplacian(G)
    values, vectors = eig_sym(M, want_vectors)
    if kind == "adjacency":
        values = values[::-1].copy()
        if vectors is not None:
            vectors = vectors[:, ::-1].copy()
    return Spectrum(kind, values, vectors)


def partial_sum(S: Spectrum, k: int) -> float:
    """Sum of the first k eigenvalues in canonical order.

    For the laplacian kinds the leading eigenvalue of a connected graph is
    0, so this equals the sum of the k-1 smallest positive-index values;
    use the same k on both conventions without shifting.
    """
    if not 1 <= k <= S.n:
        raise ValueError(f"k={k} outside 1..{S.n}")
    return float(np.sum(S.values[:k]))


def partial_power_sum(S: Spectrum, k: int, p: float) -> float:
    """Sum of the p-th powers of the first k canonical eigenvalues."""
    if not 1 <= k <= S.n:
        raise ValueError(f"k={k} outside 1..{S.n}")
    return float(np.sum(S.values[:k] ** p))


def magnitude_order(S: Spectrum) -> np.ndarray:
    """Indices of the canonical values sorted by |value|, ties by index."""
    return np.argsort(np.abs(S.values), kind="stable")


@dataclass(frozen=True)
class RieszValue:
    z: float
    power: float
    value: float


def riesz_mean(S: Spectrum, z: float, p: float = 1.0) -> RieszValue:
    """Sum of (z - value)_+^p over the spectrum.

    At p=0 the convention is the strict counting function: each eigenvalue
    strictly below z contributes 1 (no half weight on ties).
    """
    if p < 0:
        raise ValueError("power must be nonnegative")
    gaps = z - S.values
    if p == 0:
        value = float(np.count_nonzero(gaps > 0))
    else:
        value = float(np.sum(np.maximum(gaps, 0.0) ** p))
    return RieszValue(float(z), float(p), value)


def laplacian_energy(S: Spectrum, m: int, n: int) -> float:
    """Total deviation of laplacian eigenvalues from their mean 2m/n.

    Cross-checks the absolute-value form against the equivalent one-sided
    form 2 * sum (2m/n - value)_+ (equal because the values sum to 2m) and
    raises ConsistencyError if they disagree beyond 1e-9 relative.
    """
    if S.n != n:
        raise ValueError("spectrum length disagrees with n")
    mean = 2.0 * m / n
    direct = float(np.sum(np.abs(S.values - mean)))
    onesided = 2.0 * float(np.sum(np.maximum(mean - S.values, 0.0)))
    if abs(direct - onesided) > 1e-9 * max(1.0, direct):
        raise ConsistencyError(
            f"laplacian energy forms disagree: {direct!r} vs {onesided!r}"
        )
    return direct


# ---------------------------------------------------------------------------
# closed-form spectra for the oracle families


def closed_form(kind: str, family: str, n: int, p: int | None = None) -> Spectrum:
    """Exact spectrum for path / cycle / complete / star / join families.

    Join graphs (p mutually adjacent centers attached to everything) have
    closed forms for all three matrices; the complete graph and star are
    the p = n-1 and p = 1 specializations.  Paths have a closed form for
    the laplacian only; cycles (2-regular) for all three kinds.  Raises
    ValueError for unsupported combinations.
    """
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}")
    if family == "complete":
        if n < 2:
            raise ValueError("complete graph needs n >= 2")
        return closed_form(kind, "join", n, n - 1)
    if family == "star":
        if n < 2:
            raise ValueError("star needs n >= 2")
        return closed_form(kind, "join", n, 1)
    if family == "path":
        if n < 2:
            raise ValueError("path needs n >= 2")
        if kind != "laplacian":
            raise ValueError("no closed form for path spectra of kind " + kind)
        j = np.arange(n)
        return Spectrum(kind, 4.0 * np.sin(np.pi * j / (2.0 * n)) ** 2)
    if family == "cycle":
        if n < 3:
            raise ValueError("cycle needs n >= 3")
        j = np.arange(n)
        lam = np.sort(4.0 * np.sin(np.pi * j / n) ** 2)
        if kind == "laplacian":
            return Spectrum(kind, lam)
        if kind == "normalized":
            return Spectrum(kind, lam / 2.0)
        return Spectrum(kind, 2.0 - lam)  # descending, since lam ascends
    if family == "join":
        if p is None or not 1 <= p <= n - 1:
            raise ValueError(f"join requires 1 <= p <= {n - 1}")
        if kind == "laplacian":
            values = np.concatenate(
                [[0.0], np.full(n - p - 1, float(p)), np.full(p, float(n))]
            )
            return Spectrum(kind, values)
        if kind == "normalized":
            values = np.concatenate(
                [
                    [0.0],
                    np.ones(n - p - 1),
                    np.full(p - 1, n / (n - 1.0)),
                    [(2.0 * n - 1.0 - p) / (n - 1.0)],
                ]
            )
            return Spectrum(kind, values)
        gap = np.sqrt((p - 1.0) ** 2 + 4.0 * p * (n - p))
        rho_plus = (p - 1.0 + gap) / 2.0
        rho_minus = (p - 1.0 - gap) / 2.0
        values = np.concatenate(
            [[rho_plus], np.zeros(n - p - 1), np.full(p - 1, -1.0), [rho_minus]]
        )
        return Spectrum(kind, values)
    raise ValueError(f"unknown family {family!r}")


def trace_identity_report(G: Graph, S: Spectrum,
                          tolerance: float = reports.DEFAULT_TOLERANCE):
    """Check sum(values) == 2m and sum(values^2) == 2m + Zagreb index.

    Returns a pair of equality reports; violations yield FAIL verdicts.
    """
    if S.kind != "laplacian":
        raise ValueError("trace identities are stated for the laplacian spectrum")
    two_m = 2.0 * G.m
    first = reports.evaluate(
        "trace_sum",
        {"n": G.n, "m": G.m},
        bound=two_m,
        measured=float(np.sum(S.values)),
        direction="equality",
        tolerance=tolerance,
    )
    second = reports.evaluate(
        "trace_square_sum",
        {"n": G.n, "m": G.m},
        bound=two_m + zagreb_index(G),
        measured=float(np.sum(S.values**2)),
        direction="equality",
        tolerance=tolerance,
    )
    return first, second


def spectrum_to_csv(S: Spectrum) -> str:
    """CSV export, one "index,value" row per eigenvalue, 17-digit floats."""
    lines = ["index,value"]
    lines.extend(
        f"{i},{reports.format_float(v)}" for i, v in enumerate(S.values)
    )
    return "\n".join(lines) + "\n"
