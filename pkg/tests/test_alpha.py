import pytest
import numpy as np
from termcolor import cprint

import gauge_graph as gg
from gauge_graph import NotSupported, ContactValueNotOne, DimensionMismatch
from fixtures import chain_model, random_tree_model, random_block_model


def two_solution_gauge():
    """Laplace gauge with g(-1, -1) = g(-1, -0.5) = 1 and nothing between"""
    def evaluator(x):
        a = np.maximum(-x[..., 0], 0.)
        return np.maximum(np.abs(x[..., 0]), np.abs(x[..., 1])) + \
            np.minimum(np.abs(x[..., 1] + a), np.abs(x[..., 1] + 0.5 * a))
    return gg.CustomGauge(evaluator, 2, 'laplace', vectorized=True, name='two_solution')


@pytest.mark.alpha
@pytest.mark.table1
@pytest.mark.parametrize("theta", [0.2, 0.5, 0.8])
def test_edge_alpha_table1_theta(theta):
    assert gg.edge_alpha(gg.LogisticGauge(theta)).value == pytest.approx(1., abs=1e-6)
    assert gg.edge_alpha(gg.SquareGauge(theta)).value == pytest.approx(1. - theta, abs=1e-6)
    assert gg.edge_alpha(gg.AsymmetricADGauge(theta, 0.5)).value == pytest.approx(1., abs=1e-6)
    # the inverted logistic contact is flat to order 1 / theta
    assert gg.edge_alpha(gg.InvertedLogisticGauge(theta)).value == pytest.approx(0., abs=1e-6)


@pytest.mark.alpha
@pytest.mark.table1
@pytest.mark.parametrize("rho", [0.3, 0.6, 0.9])
def test_edge_alpha_table1_rho(rho):
    result = gg.edge_alpha(gg.GaussianExpGauge(rho))
    assert result.value == pytest.approx(rho ** 2, abs=1e-6)
    assert result.method == gg.NUMERIC
    assert result.conditioning_sign == gg.PLUS
    assert result.contact_value == pytest.approx(1., abs=1e-12)
    assert gg.GaussianExpGauge(rho).edge_coefficients().alpha == rho ** 2


@pytest.mark.alpha
@pytest.mark.gauss_laplace
def test_edge_alpha_laplace_signs():
    g = gg.GaussianLaplaceGauge.from_rho(-0.9)
    assert gg.edge_alpha(g, '+').value == pytest.approx(-0.81, abs=1e-6)
    minus = gg.edge_alpha(g, '-')
    assert minus.value == pytest.approx(0.81, abs=1e-6)
    assert minus.conditioning_sign == gg.MINUS
    with pytest.raises(NotSupported):
        gg.edge_alpha(gg.GaussianExpGauge(0.5), '-')


@pytest.mark.alpha
def test_edge_alpha_rightmost_solution():
    assert gg.edge_alpha(two_solution_gauge(), '-').value == pytest.approx(-0.5, abs=1e-8)
    assert gg.edge_alpha(two_solution_gauge(), '+').value == pytest.approx(0., abs=1e-8)


@pytest.mark.alpha
def test_edge_alpha_errors():
    with pytest.raises(DimensionMismatch):
        gg.edge_alpha(gg.LogisticGauge(0.5, dimension=3))
    # twice the componentwise max never reaches one on the conditioning ray
    doubled = gg.CustomGauge(lambda x: 2. * np.max(x, axis=-1), 2, 'exponential', vectorized=True)
    with pytest.raises(ContactValueNotOne) as excinfo:
        gg.edge_alpha(doubled)
    assert excinfo.value.details['contact_value'] == pytest.approx(2.)


@pytest.mark.alpha
@pytest.mark.example2
def test_alpha_path_example2(example2):
    assert gg.alpha_path(example2['a'][0], 1, 4).value == pytest.approx(0.36, abs=1e-15)
    assert gg.alpha_path(example2['b'][0], 1, 4).value == 0.
    assert gg.alpha_path(example2['c'][0], 1, 4).value == 0.
    assert gg.alpha_path(example2['d'][0], 1, 4).value == pytest.approx(0.35, abs=1e-15)
    # a single edge is the edge alpha itself
    result = gg.alpha_path(example2['a'][0], 2, 3)
    assert result.value == pytest.approx(0.36, abs=1e-15)
    assert result.method == gg.RECURRENCE


@pytest.mark.alpha
def test_alpha_path_edge_data(example3):
    assert gg.alpha_path(example3, 1, 3, edge_data={(2, 3): 0.5}).value == pytest.approx(0.5)
    with pytest.raises(NotSupported):
        gg.alpha_path_signed(example3, 1, 3)


@pytest.mark.alpha
@pytest.mark.gauss_laplace
def test_alpha_path_signed_gauss_laplace(gauss_laplace, print_debug):
    recurrence = gg.alpha_path_signed(gauss_laplace, 1, 6, '+')
    assert recurrence.value == pytest.approx(-0.254016, abs=1e-12)
    assert gg.gaussian_path_alpha([-0.9, 0.8, 0.7]) == pytest.approx(-0.254016, abs=1e-12)
    numeric = gg.edge_alpha(gg.pairwise_marginal(gauss_laplace, 1, 6), '+')
    if print_debug:
        cprint('alpha+_6|1: recurrence {:.6f}, numeric {:.6f}'.format(recurrence.value, numeric.value), 'cyan')
    assert numeric.value == pytest.approx(-0.254016, abs=1e-3)
    with pytest.raises(NotSupported):
        gg.alpha_path(gauss_laplace, 1, 6)


@pytest.mark.alpha
@pytest.mark.gauss_laplace
def test_alpha_path_signed_custom_edge():
    model = chain_model([gg.GaussianLaplaceGauge.from_rho(-0.9), two_solution_gauge()], 'laplace')
    assert gg.alpha_path_signed(model, 1, 3, '+').value == pytest.approx(-0.405, abs=1e-6)


@pytest.mark.alpha
@pytest.mark.gauss_laplace
def test_alpha_path_signed_random_chains(print_debug):
    rng = gg.get_rng(11)
    for _ in range(5):
        rhos = rng.uniform(0.1, 0.95, size=3) * rng.choice([-1., 1.], size=3)
        model = chain_model([gg.GaussianLaplaceGauge.from_rho(r) for r in rhos], 'laplace')
        recurrence = gg.alpha_path_signed(model, 1, 4).value
        assert recurrence == pytest.approx(gg.gaussian_path_alpha(rhos), abs=1e-12)
        numeric = gg.edge_alpha(gg.pairwise_marginal(model, 1, 4)).value
        if print_debug:
            cprint('rhos {} recurrence {:.6f} numeric {:.6f}'.format(rhos, recurrence, numeric), 'cyan')
        assert numeric == pytest.approx(recurrence, abs=1e-3)


@pytest.mark.alpha
def test_alpha_vector_example3(example3):
    given_1 = gg.alpha_vector(example3, 1)
    assert list(given_1) == [2, 3]
    assert [r.value for r in given_1.values()] == pytest.approx([1., 0.36], abs=1e-4)
    given_3 = gg.alpha_vector(example3, 3)
    assert [r.value for r in given_3.values()] == pytest.approx([0.36, 0.36], abs=1e-4)
    for result in given_3.values():
        assert result.contact_value == pytest.approx(1., abs=1e-6)
    with pytest.raises(NotSupported):
        gg.alpha_vector(example3, 1, '-')


@pytest.mark.alpha
def test_alpha_vector_matches_recurrence(example2):
    model, _ = example2['a']
    vector = gg.alpha_vector(model, 1)
    for j, result in vector.items():
        assert result.value == pytest.approx(gg.alpha_path(model, 1, j).value, abs=1e-4)


@pytest.mark.alpha
def test_alpha_table(example3):
    table = gg.alpha_table(example3)
    assert len(table) == 6
    assert table[1, 3].value == pytest.approx(0.36)
    assert table[3, 1].value == pytest.approx(0.36)
    assert table[2, 1].value == pytest.approx(1.)
    numeric = gg.alpha_table(example3, method='numeric')
    for key, result in table.items():
        assert numeric[key].value == pytest.approx(result.value, abs=1e-4)


@pytest.mark.alpha
def test_alpha_ray_scale_free():
    # homogeneity makes the contact coordinate scale-free along the conditioning ray
    g = gg.GaussianExpGauge(0.7)
    for t in [0.5, 2., 10.]:
        y, value = gg.rightmost_minimizer_1d(lambda s: g([t, s]), (0., t))
        assert y / t == pytest.approx(0.49, abs=1e-6)
        assert value == pytest.approx(t, abs=1e-10)


@pytest.mark.alpha
@pytest.mark.alpha_sweep
@pytest.mark.slow
def test_alpha_recurrence_sweep(print_debug):
    rng = gg.get_rng(2024)
    worst = 0.
    for _ in range(25):
        model = random_tree_model(int(rng.integers(4, 8)), rng)
        for i in model.vertices:
            for j in model.vertices:
                if i == j:
                    continue
                recurrence = gg.alpha_path(model, i, j).value
                numeric = gg.edge_alpha(gg.pairwise_marginal(model, i, j)).value
                worst = max(worst, abs(recurrence - numeric))
                assert numeric == pytest.approx(recurrence, abs=1e-3), (model, i, j)
    if print_debug:
        cprint('largest recurrence discrepancy {:.2e}'.format(worst), 'cyan')


@pytest.mark.alpha
@pytest.mark.alpha_sweep
@pytest.mark.slow
def test_alpha_recurrence_sweep_block_graphs(print_debug):
    # triangles route the recurrence through bivariate marginals of 3-dimensional cliques
    rng = gg.get_rng(2025)
    worst = 0.
    triangles = 0
    for _ in range(25):
        model = random_block_model(int(rng.integers(4, 8)), rng)
        triangles += sum(len(c) == 3 for c in model.graph.cliques)
        for i in model.vertices:
            for j in model.vertices:
                if i == j:
                    continue
                recurrence = gg.alpha_path(model, i, j).value
                numeric = gg.edge_alpha(gg.pairwise_marginal(model, i, j)).value
                worst = max(worst, abs(recurrence - numeric))
                assert numeric == pytest.approx(recurrence, abs=1e-3), (model, i, j)
    assert triangles > 0
    if print_debug:
        cprint('largest recurrence discrepancy on block graphs {:.2e}'.format(worst), 'cyan')


@pytest.mark.alpha
@pytest.mark.alpha_sweep
@pytest.mark.gauss_laplace
@pytest.mark.slow
def test_alpha_signed_sweep_block_graphs(print_debug):
    rng = gg.get_rng(2026)
    worst = 0.
    for _ in range(10):
        model = random_block_model(int(rng.integers(4, 7)), rng, margin='laplace')
        for i in model.vertices:
            for j in model.vertices:
                if i == j:
                    continue
                recurrence = gg.alpha_path_signed(model, i, j, '+').value
                numeric = gg.edge_alpha(gg.pairwise_marginal(model, i, j), '+').value
                worst = max(worst, abs(recurrence - numeric))
                assert numeric == pytest.approx(recurrence, abs=1e-3), (model, i, j)
    if print_debug:
        cprint('largest signed recurrence discrepancy on block graphs {:.2e}'.format(worst), 'cyan')
