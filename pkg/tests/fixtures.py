import pytest
import numpy as np
import gauge_graph as gg

EXAMPLE1_CLIQUES = [(1, 2, 3), (3, 4), (4, 5), (4, 6), (6, 7, 8, 9)]

GAUSS_LAPLACE_BLOCK = [
    [1.0, 0.3, 0.2, 0.7],
    [0.3, 1.0, 0.2, 0.3],
    [0.2, 0.2, 1.0, 0.1],
    [0.7, 0.3, 0.1, 1.0],
]


def chain_model(gauges, margin='exponential'):
    """chain 1 - 2 - ... with one bivariate gauge per edge"""
    cliques = [(k + 1, k + 2) for k in range(len(gauges))]
    return gg.assemble_model(gg.build_block_graph(cliques), dict(zip(cliques, gauges)), margin)

def example3_model(theta=0.4, rho=0.6):
    return chain_model([gg.LogisticGauge(theta), gg.GaussianExpGauge(rho)])

def example2_models():
    """the four bundled example2 chains with their beta_{4|1}"""
    return {
        'a': (chain_model([gg.LogisticGauge(0.5), gg.GaussianExpGauge(0.6), gg.LogisticGauge(0.4)]), 0.5),
        'b': (chain_model([gg.GaussianExpGauge(0.6), gg.GaussianExpGauge(0.7), gg.InvertedLogisticGauge(0.3)]), 0.7),
        'c': (chain_model([gg.InvertedLogisticGauge(0.3), gg.LogisticGauge(0.5), gg.InvertedLogisticGauge(0.2)]),
              0.56),
        'd': (chain_model([gg.LogisticGauge(0.5), gg.SquareGauge(0.5), gg.SquareGauge(0.3)]), 0.),
    }

def gauss_laplace_model():
    graph = gg.build_block_graph([(1, 2), (2, 3), (3, 4, 5, 6)])
    gauges = {(1, 2): gg.GaussianLaplaceGauge.from_rho(-0.9),
              (2, 3): gg.GaussianLaplaceGauge.from_rho(0.8),
              (3, 4, 5, 6): gg.GaussianLaplaceGauge(GAUSS_LAPLACE_BLOCK)}
    return gg.assemble_model(graph, gauges, 'laplace')

def random_edge_gauge(rng):
    family = rng.choice(['logistic', 'gaussian', 'inverted_logistic', 'square', 'asymmetric_ad'])
    if family == 'logistic':
        return gg.LogisticGauge(rng.uniform(0.2, 0.8))
    if family == 'gaussian':
        return gg.GaussianExpGauge(rng.uniform(0.1, 0.9))
    if family == 'inverted_logistic':
        return gg.InvertedLogisticGauge(rng.uniform(0.5, 1.))
    if family == 'square':
        return gg.SquareGauge(rng.uniform(0.2, 0.8))
    return gg.AsymmetricADGauge(rng.uniform(0.2, 0.8), rng.uniform(0.2, 0.8))

def random_tree_cliques(d, rng):
    """random tree on vertices 1..d, each new vertex hanging off an earlier one"""
    return [(int(rng.integers(1, v)), v) for v in range(2, d + 1)]

def random_tree_model(d, rng, gauge_factory=random_edge_gauge):
    cliques = random_tree_cliques(d, rng)
    gauges = {c: gauge_factory(rng) for c in cliques}
    return gg.assemble_model(gg.build_block_graph(cliques), gauges, 'exponential')

def random_block_cliques(d, rng, triangle_share=0.5):
    """random block graph on vertices 1..d mixing edges and triangles, every clique hanging off one earlier vertex"""
    cliques, v = [], 2
    while v <= d:
        anchor = int(rng.integers(1, v))
        if v < d and rng.uniform() < triangle_share:
            cliques.append((anchor, v, v + 1))
            v += 2
        else:
            cliques.append((anchor, v))
            v += 1
    return cliques

def random_correlation(k, rng):
    a = rng.normal(size=(k, k))
    cov = a @ a.T + k * np.eye(k)
    scale = 1. / np.sqrt(np.diag(cov))
    return cov * np.outer(scale, scale)

def smooth_edge_gauge(rng):
    if rng.uniform() < 0.5:
        return gg.LogisticGauge(rng.uniform(0.3, 0.8))
    return gg.GaussianExpGauge(rng.uniform(0.1, 0.9))

def random_block_model(d, rng, margin='exponential', edge_factory=random_edge_gauge):
    """random block graph with d-dimensional Logistic (exponential) or Gaussian (Laplace) triangles"""
    gauges = {}
    for clique in random_block_cliques(d, rng):
        if margin == 'laplace':
            gauges[clique] = gg.GaussianLaplaceGauge(random_correlation(len(clique), rng))
        elif len(clique) == 2:
            gauges[clique] = edge_factory(rng)
        else:
            gauges[clique] = gg.LogisticGauge(rng.uniform(0.2, 0.8), dimension=len(clique))
    return gg.assemble_model(gg.build_block_graph(list(gauges)), gauges, margin)

def random_ad_gauge(rng):
    return gg.AsymmetricADGauge(rng.uniform(0.2, 0.8), rng.uniform(0.2, 0.8))

def standard_grid(margin, n=gg.STANDARD_GRID_POINTS):
    lo, hi = gg.get_margin(margin).unit_interval()
    axis = np.linspace(lo, hi, n)
    u, v = np.meshgrid(axis, axis, indexing='ij')
    return np.stack([u.ravel(), v.ravel()], axis=-1)

################################

@pytest.fixture
def example3():
    return example3_model()

@pytest.fixture
def example2():
    return example2_models()

@pytest.fixture
def gauss_laplace():
    return gauss_laplace_model()

@pytest.fixture
def example1_graph():
    return gg.build_block_graph(EXAMPLE1_CLIQUES)

@pytest.fixture
def example3_text():
    with open(gg.example_path('example3')) as f:
        return f.read()
