import numpy as np
import pytest
from numpy.testing import assert_allclose

from eigensums import (
    GraphError,
    PairSet,
    TrialFamily,
    adjacency_matrix,
    adjacency_square_bound,
    adjacency_sum_bounds,
    averaged_principle_check,
    from_edge_list,
    gen_complete,
    gen_cycle,
    gen_path,
    gen_random_connected,
    gen_star,
    laplacian,
    laplacian_pairsum_bound,
    normalized_laplacian,
    normalized_pairsum_bound,
    normalized_square_bound,
    pair_difference_family,
    partial_sum,
    select_pairs_adjacency_square,
    select_pairs_laplacian,
    select_pairs_normalized,
    spectrum,
)
from eigensums.avg_bounds import all_ordered_pairs, normalized_square_pair_cost
from eigensums.rng import SplitMix64


# ---------------------------------------------------------------- engine


def test_trial_family_validation():
    with pytest.raises(ValueError, match="positive"):
        TrialFamily(np.eye(3), np.array([1.0, 0.0, 1.0]), np.array([0]))
    with pytest.raises(ValueError, match="marked"):
        TrialFamily(np.eye(3), np.ones(3), np.array([0, 0]))
    with pytest.raises(ValueError, match="weight"):
        TrialFamily(np.eye(3), np.ones(2), np.array([0]))


def test_engine_eigenvector_family_is_tight():
    g = gen_random_connected(6, 0.5, seed=41)
    H = laplacian(g)
    spec = spectrum(g, "laplacian", want_vectors=True)
    k = 3
    fam = TrialFamily(spec.vectors.T, np.ones(g.n), np.arange(k))
    reps = averaged_principle_check(H, spec, fam, k)
    assert [r.name for r in reps] == ["averaged_principle_gap",
                                      "averaged_principle_sum"]
    for rep in reps:
        assert rep.verdict == "EQUALITY"


def test_engine_single_vector_rayleigh_case():
    g = gen_path(4)
    H = laplacian(g)
    spec = spectrum(g, "laplacian", want_vectors=True)
    fam = TrialFamily(spec.vectors[:, :1].T, np.ones(1), np.array([0]))
    reps = averaged_principle_check(H, spec, fam, 1)
    gap = reps[0]
    assert gap.measured == pytest.approx(0.0, abs=1e-9)
    assert gap.verdict in ("PASS", "EQUALITY")


def test_engine_requires_vectors():
    g = gen_path(4)
    spec = spectrum(g, "laplacian")
    fam = TrialFamily(np.eye(4), np.ones(4), np.array([0]))
    with pytest.raises(ValueError, match="eigenvectors"):
        averaged_principle_check(laplacian(g), spec, fam, 2)


def test_engine_random_families_hold(corpus200, corpus_spectra):
    rng = SplitMix64(314159)
    gauss = np.random.default_rng(8)
    for g, spec in list(zip(corpus200, corpus_spectra))[::25]:
        H = laplacian(g)
        for _ in range(5):
            count = g.n + int(rng.randint(1, 5))
            vectors = gauss.normal(size=(count, g.n))
            weights = 0.5 + gauss.random(count)
            marked_size = int(rng.randint(1, count))
            marked = gauss.choice(count, size=marked_size, replace=False)
            fam = TrialFamily(vectors, weights, np.sort(marked))
            k = int(rng.randint(1, g.n - 1))
            reps = averaged_principle_check(H, spec, fam, k)
            gap = reps[0]
            assert gap.verdict in ("PASS", "EQUALITY")


def test_engine_reproduces_pair_set_bound():
    for seed, n in ((1, 7), (2, 9)):
        g = gen_random_connected(n, 0.45, seed=seed)
        spec = spectrum(g, "laplacian", want_vectors=True)
        for k in (2, 3, n):
            pair_set = select_pairs_laplacian(g, k)
            direct = laplacian_pairsum_bound(g, k, pairs=pair_set, spec=spec)
            fam = pair_difference_family(g.n, pair_set.pairs)
            reps = averaged_principle_check(laplacian(g), spec, fam, k)
            summed = [r for r in reps if r.name == "averaged_principle_sum"]
            assert summed, "coefficient should be nonnegative here"
            engine = summed[0]
            assert engine.bound / (2.0 * g.n) == pytest.approx(direct.bound,
                                                               rel=1e-9)
            assert engine.measured / (2.0 * g.n) == pytest.approx(
                direct.measured, abs=1e-9 * (1 + direct.measured))


def test_pair_overlap_normalizations(corpus_sample):
    # sum over all ordered pairs of |<e_u - e_v, psi>|^2 = 2n for any
    # unit psi orthogonal to the constant vector; the degree-weighted
    # analogue gives 4m against the renormalized eigenvectors
    for g in corpus_sample[:6]:
        n = g.n
        spec = spectrum(g, "laplacian", want_vectors=True)
        fam = pair_difference_family(n, [])
        overlaps = (fam.vectors @ spec.vectors) ** 2
        totals = overlaps.sum(axis=0)
        assert_allclose(totals[1:], np.full(n - 1, 2.0 * n), atol=1e-9 * n)
        nspec = spectrum(g, "normalized", want_vectors=True)
        d = g.degrees.astype(float)
        vecs = []
        for (u, v) in all_ordered_pairs(n):
            b = np.zeros(n)
            b[u] = np.sqrt(d[v])
            b[v] = -np.sqrt(d[u])
            vecs.append(b)
        overlaps = (np.array(vecs) @ nspec.vectors) ** 2
        totals = overlaps.sum(axis=0)
        assert_allclose(totals[1:], np.full(n - 1, 4.0 * g.m),
                        atol=1e-9 * 4 * g.m)


# ---------------------------------------------------------------- laplacian


def test_select_pairs_laplacian_star_prefers_leaves():
    g = gen_star(5)
    ps = select_pairs_laplacian(g, 2)
    assert len(ps) == 5
    assert all(u != 4 and v != 4 for (u, v) in ps.pairs)


def test_select_pairs_laplacian_path3_enumeration():
    ps = select_pairs_laplacian(gen_path(3), 2)
    assert ps.pairs == ((0, 2), (2, 0), (0, 1))


def test_select_pairs_exhaustive_matches_greedy_cost():
    g = gen_path(3)
    greedy = select_pairs_laplacian(g, 2, "greedy")
    exhaustive = select_pairs_laplacian(g, 2, "exhaustive-small")
    d = g.degrees
    A = adjacency_matrix(g)

    def total(ps):
        return sum(d[u] + d[v] + 2 * A[u, v] for (u, v) in ps.pairs)

    assert total(greedy) == total(exhaustive)


def test_pairset_rejects_duplicates_and_loops():
    with pytest.raises(GraphError):
        PairSet(((0, 1), (0, 1)))
    with pytest.raises(GraphError):
        PairSet(((2, 2),))


def test_laplacian_pairsum_star_equality():
    rep = laplacian_pairsum_bound(gen_star(5), 2)
    assert rep.bound == pytest.approx(1.0)
    assert rep.verdict == "EQUALITY"


def test_laplacian_pairsum_complete_full_k_equality():
    n = 6
    rep = laplacian_pairsum_bound(gen_complete(n), n)
    assert rep.bound == pytest.approx(n * (n - 1.0))
    assert rep.verdict == "EQUALITY"


def test_laplacian_pairsum_cardinality_error():
    g = gen_path(4)
    with pytest.raises(GraphError, match="n\\(k-1\\)=4"):
        laplacian_pairsum_bound(g, 2, pairs=[(0, 1), (1, 0)])


def test_laplacian_pairsum_cheapest_pairs_bound_lambda1(corpus_sample):
    for g in corpus_sample:
        rep = laplacian_pairsum_bound(g, 2)
        assert rep.verdict in ("PASS", "EQUALITY")


# ---------------------------------------------------------------- normalized


def test_select_pairs_normalized_cases():
    assert len(select_pairs_normalized(gen_path(5), 1)) == 0
    g = gen_cycle(6)  # 2-regular: constraint forces exactly n(k-1) pairs
    for k in (2, 3):
        assert len(select_pairs_normalized(g, k)) == g.n * (k - 1)
    g = gen_star(5)
    ps = select_pairs_normalized(g, 2)
    mass = sum(g.degrees[u] + g.degrees[v] for (u, v) in ps.pairs)
    assert mass >= 4 * g.m
    leaf_pairs = [(u, v) for (u, v) in ps.pairs if u != 4 and v != 4]
    assert len(leaf_pairs) == len(ps) == 8  # mass 2 each, target 16


def test_normalized_pairsum_complete_equality():
    rep = normalized_pairsum_bound(gen_complete(4), 4)
    assert rep.bound == pytest.approx(4.0)
    assert rep.measured == pytest.approx(4.0, abs=1e-9)
    assert rep.verdict == "EQUALITY"


def test_normalized_pairsum_k1_trivial():
    rep = normalized_pairsum_bound(gen_path(4), 1)
    assert rep.bound == 0.0
    assert rep.verdict == "EQUALITY"


def test_normalized_validity_gate():
    g = gen_star(5)
    rep = normalized_pairsum_bound(g, 3, pairs=[(0, 1), (1, 0)])
    assert rep.verdict == "NOT_APPLICABLE"
    assert rep.holds is None


def test_normalized_square_cost_is_exact_energy():
    g = gen_random_connected(8, 0.4, seed=77)
    N = normalized_laplacian(g)
    d = g.degrees.astype(float)
    for (u, v) in [(0, 1), (2, 5), (7, 3)]:
        b = np.zeros(g.n)
        b[u] = np.sqrt(d[v])
        b[v] = -np.sqrt(d[u])
        assert normalized_square_pair_cost(g, u, v) == pytest.approx(
            float(np.linalg.norm(N @ b) ** 2), abs=1e-10)


def test_normalized_square_regular_pair_cost():
    # C_4, adjacent pair: energy 10 = 2 + 2 + 4 + deviation 2
    assert normalized_square_pair_cost(gen_cycle(4), 0, 1) == pytest.approx(10.0)


def test_normalized_square_bounds_hold(corpus_sample):
    for g in corpus_sample[:8]:
        nspec = spectrum(g, "normalized")
        for k in (2, g.n // 2 + 1, g.n):
            rep = normalized_square_bound(g, k, spec=nspec)
            assert rep.verdict in ("PASS", "EQUALITY")


# ---------------------------------------------------------------- adjacency


def test_adjacency_sum_path3():
    up, low = adjacency_sum_bounds(gen_path(3), 1)
    assert up.bound == -1.0
    assert up.measured == pytest.approx(-np.sqrt(2.0), abs=1e-9)
    assert up.verdict == "PASS"
    assert low.verdict == "PASS"
    assert up.slack == pytest.approx(low.slack, abs=1e-9)


def test_adjacency_sum_complete_equalities():
    g = gen_complete(5)
    for k in (1, 2, 3):
        up, low = adjacency_sum_bounds(g, k)
        assert up.verdict == "EQUALITY"
        assert low.verdict == "EQUALITY"


def test_adjacency_sum_sparse_not_applicable():
    # star on 4: n k = 8 ordered pairs exceed the 2m = 6 adjacent ones
    up, low = adjacency_sum_bounds(gen_star(4), 2)
    assert up.verdict == "NOT_APPLICABLE"
    assert low.verdict == "NOT_APPLICABLE"


def test_adjacency_sum_disconnected_uses_min_k_m():
    g = from_edge_list(4, [(0, 1), (2, 3)])
    up, _ = adjacency_sum_bounds(g, 1)
    assert up.params["k_effective"] == 1
    assert up.verdict == "EQUALITY"  # spectrum (1,1,-1,-1)


def test_adjacency_sum_k_range():
    with pytest.raises(GraphError):
        adjacency_sum_bounds(gen_path(4), 3)


def test_adjacency_square_complete_equality():
    rep = adjacency_square_bound(gen_complete(4), 1)
    assert rep.bound == pytest.approx(1.0)
    assert rep.measured == pytest.approx(1.0, abs=1e-9)
    assert rep.verdict == "EQUALITY"


def test_adjacency_square_path3():
    rep = adjacency_square_bound(gen_path(3), 1)
    assert rep.bound == pytest.approx(0.5)
    assert rep.measured == pytest.approx(0.0, abs=1e-9)
    assert rep.verdict == "PASS"


def test_adjacency_square_cardinality_error():
    with pytest.raises(GraphError, match="nk=6"):
        adjacency_square_bound(gen_path(3), 2, pairs=[(0, 1)])


def test_adjacency_square_selection_is_sorted_by_cost():
    g = gen_path(3)
    ps = select_pairs_adjacency_square(g, 1)
    assert ps.pairs[:2] == ((0, 2), (2, 0))  # zero-cost end pair first


def test_adjacency_square_holds_on_corpus(corpus_sample):
    for g in corpus_sample[:8]:
        spec = spectrum(g, "adjacency")
        for k in (1, g.n // 2, g.n - 1):
            rep = adjacency_square_bound(g, k, spec=spec)
            assert rep.verdict in ("PASS", "EQUALITY")
