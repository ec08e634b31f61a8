import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from eigensums import (
    GraphError,
    LatticeEmbedding,
    closed_form,
    collinear_counts,
    embeddability_certificate,
    gen_complete,
    gen_cycle,
    gen_lattice_subgraph,
    gen_path,
    karamata_check,
    karamata_transform_bound,
    laplacian_energy,
    le_lower_bound,
    riesz_lower_bound,
    riesz_lower_bound_at_a,
    riesz_mean,
    simple_sum_bound,
    sinc,
    spectrum,
    verify_embedding,
    weyl_power_bound,
    weyl_sequence,
    weyl_sq_bound,
    weyl_sum_bound,
    weyl_sum_bound_at_a,
    zagreb_index,
)

SNAKE_8 = [(0, 0), (1, 0), (2, 0), (2, 1), (2, 2), (1, 2), (0, 2), (0, 1)]


def grid_graph(rows, cols):
    coords = [(i, j) for i in range(rows) for j in range(cols)]
    return gen_lattice_subgraph(coords, induced=True)


def test_sinc_special_values():
    assert sinc(0.0) == 1.0
    assert abs(sinc(math.pi)) < 1e-15
    assert sinc(math.pi / 2) == pytest.approx(2.0 / math.pi, abs=1e-15)


def test_sinc_matches_numpy_normalized_sinc():
    xs = np.array([1e-8, 1e-5, 9.9e-5, 1.1e-4, 0.5, 2.0, 3.1, -0.3])
    assert_allclose(sinc(xs), np.sinc(xs / np.pi), rtol=1e-14, atol=1e-16)


def test_collinear_counts_path_and_grid():
    g, emb = gen_lattice_subgraph([(i,) for i in range(5)])
    counts = collinear_counts(g, emb)
    assert list(counts) == [0, 1, 1, 1, 0]
    g, emb = grid_graph(3, 3)
    counts = collinear_counts(g, emb)
    assert counts.sum() == 4 * 1 + 1 * 2  # four edge-midpoints, one center
    g, emb = gen_lattice_subgraph([(0, 0), (1, 0), (0, 1), (1, 1)])
    assert collinear_counts(g, emb).sum() == 0  # all corner turns


def test_collinear_counts_validates_embedding():
    g = gen_path(3)
    emb = LatticeEmbedding(1, ((0,), (1,), (5,)), induced=False)
    with pytest.raises(GraphError):
        collinear_counts(g, emb)


def test_weyl_sum_bound_full_range_equality():
    assert weyl_sum_bound(7, 9, 2, 9) == pytest.approx(14.0, abs=1e-12)


def test_weyl_sum_bound_cycle_case():
    # C_8 at k=3 in two dimensions
    bound = weyl_sum_bound(8, 8, 2, 3)
    expected = 6.0 * (1.0 - np.sinc(math.sqrt(3.0 / 8.0)))
    assert bound == pytest.approx(expected, rel=1e-12)
    measured = 8.0 * math.sin(math.pi / 8.0) ** 2
    assert measured <= bound


def test_weyl_power_dominates_window_bound():
    kappas = np.linspace(1e-6, 1.0, 10_000)
    for nu in range(1, 9):
        window = 2.0 * kappas * (1.0 - sinc(np.pi * kappas ** (1.0 / nu)))
        power = (np.pi**2 / 3.0) * kappas ** (1.0 + 2.0 / nu)
        assert np.all(window <= power + 1e-12)


def test_weyl_power_large_nu_exceeds_linear():
    assert weyl_power_bound(5, 10, 10**6, 10) == pytest.approx(
        np.pi**2 * 5 / 3.0, rel=1e-4)
    assert np.pi**2 / 3.0 > 2.0


def test_weyl_sq_bound_collapses_at_full_range():
    g, emb = grid_graph(3, 3)
    tr_h2 = 2.0 * g.m + zagreb_index(g)
    assert weyl_sq_bound(g, emb, g.n) == pytest.approx(tr_h2, rel=1e-12)


def test_weyl_sq_bound_dominates_measured_sums():
    for g, emb in (grid_graph(3, 3), gen_lattice_subgraph(SNAKE_8)):
        vals = spectrum(g, "laplacian").values
        sq = np.cumsum(vals**2)
        for k in range(1, g.n + 1):
            bound = weyl_sq_bound(g, emb, k)
            assert sq[k - 1] <= bound + 1e-9 * (1 + bound)


def test_weyl_sum_bound_at_a_gap_inequality():
    g, emb = grid_graph(4, 3)
    vals = spectrum(g, "laplacian").values
    sums = np.concatenate([[0.0], np.cumsum(vals)])
    for k in range(1, g.n):
        for a in np.linspace(0.05, 1.0, 12):
            coeff, envelope = weyl_sum_bound_at_a(g.m, g.n, emb.nu, k, a)
            assert vals[k] * coeff <= envelope - sums[k] + 1e-9 * (1 + envelope)


def test_weyl_sum_bound_at_a_validation():
    with pytest.raises(ValueError):
        weyl_sum_bound_at_a(3, 4, 1, 2, 1.5)
    with pytest.raises(ValueError):
        weyl_sum_bound_at_a(3, 4, 1, 9, 0.5)


def test_riesz_window_form_trivial_values():
    assert riesz_lower_bound_at_a(1.0, 5, 6, 2, 0.0) == 0.0
    assert riesz_lower_bound(0.0, 5, 6, 2) == 0.0
    with pytest.raises(ValueError):
        riesz_lower_bound_at_a(-1.0, 5, 6, 2, 0.5)
    with pytest.raises(ValueError):
        riesz_lower_bound(30.0, 5, 6, 2)


def test_riesz_lower_bound_path100():
    n, m = 100, 99
    spec = closed_form("laplacian", "path", n)
    z = 2.0 * m / n
    measured = riesz_mean(spec, z).value
    assert measured >= riesz_lower_bound(z, m, n, 1) - 1e-9
    for a in np.linspace(0.0, 1.0, 11):
        assert measured >= riesz_lower_bound_at_a(z, m, n, 1, a) - 1e-9


def test_riesz_closed_form_clamps_large_z():
    # beyond the unconstrained-optimum regime the window pins at a = 1
    n, m, nu = 20, 30, 2
    z = 2.0 * m  # far above the clamp threshold
    val = riesz_lower_bound(z, m, n, nu)
    assert val == pytest.approx(z * n - np.pi**2 * m / 3.0, rel=1e-12)
    assert val <= z * n  # stays below the trivial cap


def test_le_lower_bound_one_dimensional():
    best, closed = le_lower_bound(7, 1)
    assert best == pytest.approx(4.0 * 7 / math.pi, rel=1e-10)
    assert closed == pytest.approx((8 * 7 / 3.0) * math.sqrt(6.0 / (3 * np.pi**2)),
                                   rel=1e-12)
    assert best >= closed


def test_le_lower_bound_monotone_sanity():
    for nu in range(1, 9):
        best, closed = le_lower_bound(5, nu)
        assert best >= closed > 0


def test_path_energy_meets_lower_bound():
    for n in (10, 50, 200):
        spec = closed_form("laplacian", "path", n)
        le = laplacian_energy(spec, n - 1, n)
        assert le >= (4.0 * n - 4.0) / math.pi - 1e-9


def test_karamata_check_cases():
    assert karamata_check([0.0, 1.0], [0.0, 2.0])
    assert karamata_check([0.0, 1.0], [0.0, 1.0])
    assert not karamata_check([0.0, 3.0], [0.0, 2.0])
    with pytest.raises(ValueError):
        karamata_check([1.0, 0.0], [0.0, 2.0])
    with pytest.raises(ValueError):
        karamata_check([0.0, 1.0], [0.0, 1.0, 2.0])


def test_weyl_sequence_invariants():
    for nu in (1, 2, 3):
        n, m = 40, 55
        seq = weyl_sequence(m, n, nu)
        assert len(seq) == n
        assert np.all(np.diff(seq) >= -1e-12)
        sums = np.cumsum(seq)
        ks = np.arange(1, n + 1)
        assert_allclose(sums, weyl_power_bound(m, n, nu, ks), rtol=1e-12)


def test_karamata_transform_grid_graph():
    g, emb = grid_graph(4, 4)
    spec = spectrum(g, "laplacian")
    for func in (("sqrt",), ("exp_neg", 1.0), ("riesz", 2.0, 1.0)):
        rep = karamata_transform_bound(spec, g.m, g.n, emb.nu, func, g.n)
        assert rep.verdict in ("PASS", "EQUALITY")
    # k=1 compares a zero eigenvalue against the first envelope increment
    rep = karamata_transform_bound(spec, g.m, g.n, emb.nu, ("sqrt",), 1)
    assert rep.measured == pytest.approx(0.0, abs=1e-12)
    assert rep.verdict == "PASS"


def test_karamata_transform_rejects_bad_funcs():
    g, emb = grid_graph(3, 3)
    spec = spectrum(g, "laplacian")
    for bad in (("riesz", 1.0, 0.5), ("exp_neg", -1.0), ("cube",), "sqrt"):
        with pytest.raises(ValueError):
            karamata_transform_bound(spec, g.m, g.n, emb.nu, bad, 5)


def test_certificate_complete5_excluded_in_low_dimensions():
    verdicts = embeddability_certificate(gen_complete(5), 3)
    assert verdicts[0].verdict == "EXCLUDED"
    assert verdicts[0].first_violation_k == 2
    assert verdicts[1].verdict == "EXCLUDED"
    # exclusion is monotone downward in dimension
    excluded = [v.verdict == "EXCLUDED" for v in verdicts]
    for lower, higher in zip(excluded, excluded[1:]):
        assert lower or not higher


def test_certificate_path_and_cycle_not_excluded():
    verdicts = embeddability_certificate(gen_path(50), 1)
    assert verdicts[0].verdict == "NOT_EXCLUDED"
    assert verdicts[0].first_violation_k is None
    verdicts = embeddability_certificate(gen_cycle(8), 2)
    assert verdicts[1].verdict == "NOT_EXCLUDED"


def test_certificate_requires_connected():
    from eigensums import from_edge_list

    with pytest.raises(GraphError, match="connected"):
        embeddability_certificate(from_edge_list(4, [(0, 1), (2, 3)]), 2)


def test_verify_embedding_snake_cycle_passes():
    g, emb = gen_lattice_subgraph(SNAKE_8)
    assert g.m == 8 and np.all(g.degrees == 2)
    reps = verify_embedding(g, emb)
    assert all(r.verdict in ("PASS", "EQUALITY") for r in reps)
    assert collinear_counts(g, emb).sum() == 4


def test_verify_embedding_grid_passes():
    g, emb = grid_graph(4, 4)
    reps = verify_embedding(g, emb)
    assert all(r.verdict in ("PASS", "EQUALITY") for r in reps)
    names = {r.name for r in reps}
    assert "lattice_square_sum_upper" in names
    assert "riesz_mean_lower_closed" in names
    assert "laplacian_energy_lower" in names


def test_verify_embedding_non_induced_subgraph():
    coords = [(i, j) for i in range(3) for j in range(3)]
    full, _ = gen_lattice_subgraph(coords, induced=True)
    kept = full.edges[:-2]  # drop two lattice edges
    g, emb = gen_lattice_subgraph(coords, induced=False, edges=list(kept))
    reps = verify_embedding(g, emb)
    assert all(r.verdict in ("PASS", "EQUALITY") for r in reps)


def test_verify_embedding_rejects_inconsistent_placement():
    g = gen_path(3)
    emb = LatticeEmbedding(1, ((0,), (1,), (7,)), induced=False)
    with pytest.raises(GraphError):
        verify_embedding(g, emb)


def test_simple_sum_bound_values():
    assert simple_sum_bound(6, 12, 1, 6) == pytest.approx(6.0)
