"""Averaged variational principle and its ordered-pair-set corollaries.

The engine: for a symmetric matrix M with ascending eigenvalues mu_j and
eigenvectors psi_j, a weighted family of trial vectors f_z, and a marked
subfamily, integrating the spectral-projection variational inequality over
the family gives

    mu_k * c <= r,
    c = sum_marked w <f,f> - sum_{j<k} sum_all w |<f,psi_j>|^2,
    r = sum_marked w <Mf,f> - sum_{j<k} mu_j sum_all w |<f,psi_j>|^2.

Whenever c >= 0 this also upper-bounds the weighted eigenvalue sum:
sum_{j<k} mu_j sum_all w |<f,psi_j>|^2 <= sum_marked w <Mf,f>.

Taking the family of all coordinate-difference vectors e_u - e_v gives
closed-form bounds on partial sums for the laplacian, the renormalized
laplacian, and the adjacency matrix, each over a chosen set of ordered
vertex pairs.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import reports
from .graphs import Graph, GraphError, adjacency_matrix, is_connected
from .spectra import Spectrum, magnitude_order, partial_sum, spectrum


@dataclass(frozen=True)
class PairSet:
    """Distinct ordered vertex pairs feeding one of the pair-set bounds."""

    pairs: tuple[tuple[int, int], ...]
    context: str = ""

    def __post_init__(self):
        if len(set(self.pairs)) != len(self.pairs):
            raise GraphError("ordered pairs must be distinct")
        for (u, v) in self.pairs:
            if u == v:
                raise GraphError(f"pair ({u}, {v}) repeats a vertex")

    def __len__(self) -> int:
        return len(self.pairs)


@dataclass(frozen=True)
class TrialFamily:
    """Finitely many weighted trial vectors with a marked subfamily."""

    vectors: np.ndarray  # (count, n)
    weights: np.ndarray  # (count,)
    marked: np.ndarray  # indices into the family

    def __post_init__(self):
        vectors = np.atleast_2d(np.asarray(self.vectors, dtype=float))
        weights = np.asarray(self.weights, dtype=float)
        marked = np.asarray(self.marked, dtype=int)
        if weights.shape != (vectors.shape[0],):
            raise ValueError("need one weight per vector")
        if np.any(weights <= 0):
            raise ValueError("weights must be positive")
        if marked.size and (
            marked.min() < 0
            or marked.max() >= vectors.shape[0]
            or len(np.unique(marked)) != marked.size
        ):
            raise ValueError("marked indices must be distinct and in range")
        object.__setattr__(self, "vectors", vectors)
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "marked", marked)


def all_ordered_pairs(n: int) -> tuple[tuple[int, int], ...]:
    return tuple((u, v) for u in range(n) for v in range(n) if u != v)


def pair_difference_family(n: int, marked_pairs,
                           include_constant: bool = False) -> TrialFamily:
    """Family of e_u - e_v over all ordered pairs, marking the given ones.

    With ``include_constant`` an all-ones vector of weight 2 is appended
    (never marked); together the family then resolves the identity on the
    whole space rather than on the mean-zero subspace.
    """
    pairs = all_ordered_pairs(n)
    position = {pq: i for i, pq in enumerate(pairs)}
    vectors = np.zeros((len(pairs) + (1 if include_constant else 0), n))
    for i, (u, v) in enumerate(pairs):
        vectors[i, u] = 1.0
        vectors[i, v] = -1.0
    weights = np.ones(len(vectors))
    if include_constant:
        vectors[-1] = 1.0
        weights[-1] = 2.0
    marked = np.array([position[(int(u), int(v))] for (u, v) in marked_pairs],
                      dtype=int)
    return TrialFamily(vectors, weights, marked)


def averaged_principle_check(M: np.ndarray, S: Spectrum, fam: TrialFamily,
                             k: int,
                             tolerance: float = reports.DEFAULT_TOLERANCE):
    """Evaluate the averaged variational inequality for one k.

    Returns a list of reports: always the gap inequality mu_k * c <= r
    (skipped only at k = n, where no mu_k exists), plus the eigenvalue-sum
    inequality whenever the computed coefficient c is nonnegative.
    Requires S to carry eigenvectors.
    """
    if S.vectors is None:
        raise ValueError("spectrum must carry eigenvectors")
    values, vectors = S.ascending()
    n = len(values)
    if not 1 <= k <= n:
        raise ValueError(f"k={k} outside 1..{n}")
    M = np.asarray(M, dtype=float)
    F = fam.vectors
    w = fam.weights
    overlaps = (F @ vectors) ** 2  # (count, n): |<f, psi_j>|^2
    per_j = w @ overlaps  # total weighted overlap with each eigenvector
    marked_mass = float(np.sum(w[fam.marked] * np.sum(F[fam.marked] ** 2, axis=1)))
    marked_energy = float(
        np.sum(w[fam.marked] * np.einsum("ij,jk,ik->i", F[fam.marked], M,
                                         F[fam.marked]))
    ) if fam.marked.size else 0.0
    c = marked_mass - float(np.sum(per_j[:k]))
    sum_overlap_weighted = float(np.sum(values[:k] * per_j[:k]))
    r = marked_energy - sum_overlap_weighted
    out = []
    if k < n:
        out.append(
            reports.evaluate(
                "averaged_principle_gap",
                {"k": k, "coefficient": c},
                bound=r,
                measured=float(values[k]) * c,
                direction="upper",
                tolerance=tolerance,
            )
        )
    if c >= -tolerance * (1.0 + abs(marked_mass)):
        out.append(
            reports.evaluate(
                "averaged_principle_sum",
                {"k": k, "coefficient": c},
                bound=marked_energy,
                measured=sum_overlap_weighted,
                direction="upper",
                tolerance=tolerance,
            )
        )
    return out


# ---------------------------------------------------------------------------
# laplacian pair-set bound


def _sorted_pairs_by_cost(G: Graph, cost: np.ndarray) -> list[tuple[int, int]]:
    pairs = all_ordered_pairs(G.n)
    return sorted(pairs, key=lambda uv: (cost[uv[0], uv[1]], uv[0], uv[1]))


def _laplacian_pair_cost(G: Graph) -> np.ndarray:
    d = G.degrees.astype(float)
    return d[:, None] + d[None, :] + 2.0 * adjacency_matrix(G)


@lru_cache(maxsize=4)
def _ranked_laplacian_pairs(G: Graph) -> tuple[tuple[int, int], ...]:
    return tuple(_sorted_pairs_by_cost(G, _laplacian_pair_cost(G)))


def select_pairs_laplacian(G: Graph, k: int, strategy: str = "greedy") -> PairSet:
    """n(k-1) ordered pairs with small degree-plus-adjacency cost.

    Greedy sorts every ordered pair by d_u + d_v + 2 a_uv, ties broken
    lexicographically, and takes the first n(k-1); because the total cost
    is a sum of independent pair costs this greedy choice is optimal.  The
    exhaustive strategy (tiny inputs only) exists as an independent check.
    """
    if not 2 <= k <= G.n:
        raise GraphError(f"k={k} outside 2..{G.n}")
    need = G.n * (k - 1)
    if strategy == "greedy":
        return PairSet(_ranked_laplacian_pairs(G)[:need], context="laplacian")
    cost = _laplacian_pair_cost(G)
    if strategy == "exhaustive-small":
        total = G.n * (G.n - 1)
        if total > 30:
            raise GraphError("exhaustive pair search allowed only for <= 30 pairs")
        import itertools
        import math

        if math.comb(total, need) > 10**6:
            raise GraphError("exhaustive pair search budget exceeded; use greedy")
        candidates = all_ordered_pairs(G.n)
        best, best_val = None, None
        for combo in itertools.combinations(candidates, need):
            val = sum(cost[u, v] for (u, v) in combo)
            if best_val is None or val < best_val:
                best, best_val = combo, val
        return PairSet(tuple(best), context="laplacian")
    raise ValueError("strategy must be 'greedy' or 'exhaustive-small'")


def _as_pairset(G: Graph, pairs, context: str) -> PairSet:
    if isinstance(pairs, PairSet):
        ps = pairs
    else:
        ps = PairSet(tuple((int(u), int(v)) for (u, v) in pairs), context=context)
    for (u, v) in ps.pairs:
        if not (0 <= u < G.n and 0 <= v < G.n):
            raise GraphError(f"pair ({u}, {v}) out of range")
    return ps


def laplacian_pairsum_bound(G: Graph, k: int, pairs=None,
                            spec: Spectrum | None = None,
                            tolerance: float = reports.DEFAULT_TOLERANCE):
    """Sum of the k-1 smallest nonzero laplacian eigenvalues vs. pair costs.

    Over any n(k-1) distinct ordered pairs, the partial sum is at most
    (1/2n) * sum of (d_u + d_v + 2 a_uv).  Pairs default to the greedy
    minimum-cost selection; an explicit set must have exactly n(k-1)
    pairs.
    """
    if not 2 <= k <= G.n:
        raise GraphError(f"k={k} outside 2..{G.n}")
    if pairs is None:
        pairs = select_pairs_laplacian(G, k)
    ps = _as_pairset(G, pairs, "laplacian")
    need = G.n * (k - 1)
    if len(ps) != need:
        raise GraphError(f"need exactly n(k-1)={need} ordered pairs, got {len(ps)}")
    if spec is None:
        spec = spectrum(G, "laplacian")
    cost = _laplacian_pair_cost(G)
    total = float(sum(cost[u, v] for (u, v) in ps.pairs))
    return reports.evaluate(
        "laplacian_pair_set_upper",
        {"k": k, "n": G.n, "m": G.m, "pair_count": len(ps)},
        bound=total / (2.0 * G.n),
        measured=partial_sum(spec, k),
        direction="upper",
        tolerance=tolerance,
        pairs_or_subset=ps.pairs,
    )


# ---------------------------------------------------------------------------
# renormalized-laplacian pair-set bounds


def select_pairs_normalized(G: Graph, k: int) -> PairSet:
    """Cheapest ordered pairs until their degree mass reaches 4(k-1)m.

    The validity condition of the renormalized bounds is
    sum(d_u + d_v) >= 4(k-1)m over the chosen pairs; pairs are taken in
    ascending d_u + d_v + 2 a_uv order until it holds (k=1 needs none).
    """
    if not 1 <= k <= G.n:
        raise GraphError(f"k={k} outside 1..{G.n}")
    target = 4.0 * (k - 1) * G.m
    if target == 0:
        return PairSet((), context="normalized")
    ranked = _ranked_laplacian_pairs(G)
    d = G.degrees
    chosen, acc = [], 0.0
    for (u, v) in ranked:
        if acc >= target:
            break
        chosen.append((u, v))
        acc += float(d[u] + d[v])
    if acc < target:
        raise GraphError(f"cannot reach the degree-mass target for k={k}")
    return PairSet(tuple(chosen), context="normalized")


def _normalized_validity(G: Graph, k: int, ps: PairSet) -> bool:
    d = G.degrees
    mass = float(sum(d[u] + d[v] for (u, v) in ps.pairs))
    return mass >= 4.0 * (k - 1) * G.m - 1e-12


def normalized_pairsum_bound(G: Graph, k: int, pairs=None,
                             spec: Spectrum | None = None,
                             tolerance: float = reports.DEFAULT_TOLERANCE):
    """Partial sums of renormalized-laplacian eigenvalues vs. pair costs.

    sum_{j<k} values <= (1/4m) * sum (d_u + d_v + 2 a_uv) over a pair set
    whose degree mass covers 4(k-1)m; a set failing that validity check
    yields a NOT_APPLICABLE report, never a silent pass.
    """
    if not 1 <= k <= G.n:
        raise GraphError(f"k={k} outside 1..{G.n}")
    if pairs is None:
        pairs = select_pairs_normalized(G, k)
    ps = _as_pairset(G, pairs, "normalized")
    if spec is None:
        spec = spectrum(G, "normalized")
    cost = _laplacian_pair_cost(G)
    total = float(sum(cost[u, v] for (u, v) in ps.pairs))
    return reports.evaluate(
        "normalized_pair_set_upper",
        {"k": k, "n": G.n, "m": G.m, "pair_count": len(ps)},
        bound=total / (4.0 * G.m),
        measured=partial_sum(spec, k),
        direction="upper",
        tolerance=tolerance,
        applicable=_normalized_validity(G, k, ps),
        pairs_or_subset=ps.pairs,
    )


def normalized_square_pair_cost(G: Graph, u: int, v: int) -> float:
    """Exact renormalized energy of the degree-weighted difference vector.

    Equals |Nhat (sqrt(d_v) e_u - sqrt(d_u) e_v)|^2, expanded as
    d_u + d_v + 4 a_uv plus a degree-imbalance sum over all vertices x of
    (1/d_x) (a_xv sqrt(d_u/d_v) - a_xu sqrt(d_v/d_u))^2.
    """
    d = G.degrees.astype(float)
    A = adjacency_matrix(G)
    ratio = np.sqrt(d[u] / d[v])
    dev = float(np.sum((A[:, v] * ratio - A[:, u] / ratio) ** 2 / d))
    return float(d[u] + d[v] + 4.0 * A[u, v] + dev)


def _normalized_square_cost_matrix(G: Graph) -> np.ndarray:
    # expanded pair energies: the deviation sum splits into degree-scaled
    # neighbor weights s_v = sum_x a_xv / d_x and the common-neighbor
    # weight W_uv = sum_x a_xu a_xv / d_x
    d = G.degrees.astype(float)
    A = adjacency_matrix(G)
    scaled = A / d[:, None]
    s = scaled.sum(axis=0)
    W = A.T @ scaled
    ratio2 = d[:, None] / d[None, :]
    return (
        d[:, None]
        + d[None, :]
        + 4.0 * A
        + ratio2 * s[None, :]
        + s[:, None] / ratio2
        - 2.0 * W
    )


def normalized_square_bound(G: Graph, k: int, pairs=None,
                            spec: Spectrum | None = None,
                            tolerance: float = reports.DEFAULT_TOLERANCE):
    """Partial sums of squared renormalized eigenvalues vs. pair energies.

    Same validity condition and pair selection as the linear bound; the
    per-pair cost is the exact squared-matrix energy, so the inequality is
    a theorem whenever the degree-mass condition holds.
    """
    if not 1 <= k <= G.n:
        raise GraphError(f"k={k} outside 1..{G.n}")
    if pairs is None:
        pairs = select_pairs_normalized(G, k)
    ps = _as_pairset(G, pairs, "normalized")
    if spec is None:
        spec = spectrum(G, "normalized")
    cost = _normalized_square_cost_matrix(G)
    total = float(sum(cost[u, v] for (u, v) in ps.pairs))
    measured = float(np.sum(spec.values[:k] ** 2))
    return reports.evaluate(
        "normalized_square_pair_set_upper",
        {"k": k, "n": G.n, "m": G.m, "pair_count": len(ps)},
        bound=total / (4.0 * G.m),
        measured=measured,
        direction="upper",
        tolerance=tolerance,
        applicable=_normalized_validity(G, k, ps),
        pairs_or_subset=ps.pairs,
    )


# ---------------------------------------------------------------------------
# adjacency bounds


def adjacency_sum_bounds(G: Graph, k: int, spec: Spectrum | None = None,
                         tolerance: float = reports.DEFAULT_TOLERANCE):
    """The two mirrored adjacency partial-sum inequalities.

    Sum of the k smallest adjacency eigenvalues <= -k', and sum of the
    n-k largest >= k', where k' = min(k, m) guards disconnected graphs.
    Deriving -k' requires nk' ordered pairs that are all edges, so the
    reports are NOT_APPLICABLE unless n k' <= 2m (and 1 <= k <= n-2).
    Their slacks coincide because the eigenvalues sum to zero.
    """
    if not 1 <= k <= G.n - 2:
        raise GraphError(f"k={k} outside 1..{G.n - 2}")
    k_eff = k if is_connected(G) else min(k, G.m)
    applicable = G.n * k_eff <= 2 * G.m
    if spec is None:
        spec = spectrum(G, "adjacency")
    vals = spec.values  # descending
    smallest = float(np.sum(vals[G.n - k:]))
    largest = float(np.sum(vals[: G.n - k]))
    params = {"k": k, "k_effective": int(k_eff), "n": G.n, "m": G.m}
    upper = reports.evaluate(
        "adjacency_tail_sum_upper",
        params,
        bound=-float(k_eff),
        measured=smallest,
        direction="upper",
        tolerance=tolerance,
        applicable=applicable,
    )
    lower = reports.evaluate(
        "adjacency_head_sum_lower",
        params,
        bound=float(k_eff),
        measured=largest,
        direction="lower",
        tolerance=tolerance,
        applicable=applicable,
    )
    return upper, lower


def _adjacency_square_cost(G: Graph) -> np.ndarray:
    d = G.degrees.astype(float)
    A = adjacency_matrix(G)
    return d[:, None] + d[None, :] - 2.0 * (A @ A)


@lru_cache(maxsize=4)
def _ranked_adjacency_square_pairs(G: Graph) -> tuple[tuple[int, int], ...]:
    return tuple(_sorted_pairs_by_cost(G, _adjacency_square_cost(G)))


def select_pairs_adjacency_square(G: Graph, k: int) -> PairSet:
    """nk ordered pairs minimizing d_u + d_v - 2 (A^2)_uv, ties by id."""
    if not 1 <= k <= G.n - 1:
        raise GraphError(f"k={k} outside 1..{G.n - 1}")
    return PairSet(_ranked_adjacency_square_pairs(G)[: G.n * k],
                   context="adjacency-square")


def adjacency_square_bound(G: Graph, k: int, pairs=None,
                           spec: Spectrum | None = None,
                           tolerance: float = reports.DEFAULT_TOLERANCE):
    """Sum of the k smallest squared adjacency eigenvalues vs. pair costs.

    "Smallest squared" selects by magnitude, which generally differs from
    the eigenvalue order; the bound is (1/2n) * sum over nk ordered pairs
    of (d_u + d_v - 2 (A^2)_uv), the squared-matrix energy of e_u - e_v.
    """
    if not 1 <= k <= G.n - 1:
        raise GraphError(f"k={k} outside 1..{G.n - 1}")
    if pairs is None:
        pairs = select_pairs_adjacency_square(G, k)
    ps = _as_pairset(G, pairs, "adjacency-square")
    need = G.n * k
    if len(ps) != need:
        raise GraphError(f"need exactly nk={need} ordered pairs, got {len(ps)}")
    if spec is None:
        spec = spectrum(G, "adjacency")
    cost = _adjacency_square_cost(G)
    total = float(sum(cost[u, v] for (u, v) in ps.pairs))
    order = magnitude_order(spec)
    measured = float(np.sum(spec.values[order[:k]] ** 2))
    return reports.evaluate(
        "adjacency_square_pair_set_upper",
        {"k": k, "n": G.n, "m": G.m, "pair_count": len(ps)},
        bound=total / (2.0 * G.n),
        measured=measured,
        direction="upper",
        tolerance=tolerance,
        pairs_or_subset=ps.pairs,
    )
