"""Shared corpora: random connected graphs and random lattice clusters."""

import pytest

from eigensums import gen_lattice_subgraph, gen_random_connected, spectrum
from eigensums.rng import SplitMix64

CORPUS_SEED = 20240601
LATTICE_SEED = 77001


def build_corpus(count=200, n_min=4, n_max=40, seed=CORPUS_SEED):
    rng = SplitMix64(seed)
    graphs = []
    for _ in range(count):
        n = rng.randint(n_min, n_max)
        prob = 0.15 + 0.45 * rng.random()
        graphs.append(gen_random_connected(n, prob, seed=rng.next_u64()))
    return graphs


def random_cluster_coords(nu, size, seed):
    """Connected induced cluster in Z^nu grown by random frontier accretion."""
    rng = SplitMix64(seed)
    cells = {(0,) * nu}
    frontier = set()

    def neighbors(c):
        for axis in range(nu):
            for step in (-1, 1):
                q = list(c)
                q[axis] += step
                yield tuple(q)

    frontier.update(neighbors((0,) * nu))
    while len(cells) < size:
        ranked = sorted(frontier)
        pick = ranked[rng.randint(0, len(ranked) - 1)]
        cells.add(pick)
        frontier.discard(pick)
        frontier.update(q for q in neighbors(pick) if q not in cells)
    return sorted(cells)


LATTICE_SIZES_2D = [8, 10, 12, 16, 20, 25, 30, 40, 50, 60, 75, 90, 110, 130,
                    150, 175, 200, 230, 260, 290, 320, 350, 380, 410, 440,
                    460, 480, 500, 9, 14]
LATTICE_SIZES_3D = [8, 10, 13, 17, 22, 28, 35, 45, 55, 70, 85, 100, 120, 140,
                    160, 185, 210, 240, 270, 300, 330, 360, 390, 11, 19]


def build_lattice_corpus():
    out = []
    rng = SplitMix64(LATTICE_SEED)
    for nu, sizes in ((2, LATTICE_SIZES_2D), (3, LATTICE_SIZES_3D)):
        for size in sizes:
            coords = random_cluster_coords(nu, size, seed=rng.next_u64())
            out.append(gen_lattice_subgraph(coords, induced=True))
    return out


@pytest.fixture(scope="session")
def corpus200():
    return build_corpus()


@pytest.fixture(scope="session")
def corpus_spectra(corpus200):
    """Laplacian spectra with eigenvectors, aligned with corpus200."""
    return [spectrum(g, "laplacian", want_vectors=True) for g in corpus200]


@pytest.fixture(scope="session")
def corpus_sample(corpus200):
    return corpus200[::10]


@pytest.fixture(scope="session")
def lattice_corpus():
    return build_lattice_corpus()


@pytest.fixture(scope="session")
def lattice_spectra(lattice_corpus):
    return [spectrum(g, "laplacian") for g, _ in lattice_corpus]
