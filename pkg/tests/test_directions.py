import pytest
import numpy as np
from termcolor import cprint

import gauge_graph as gg
from gauge_graph import SeparatorsIncluded, EmptySubset, UnknownVertex, NotSupported, DimensionTooLarge
from fixtures import chain_model, EXAMPLE1_CLIQUES


def two_block_model(theta1=0.5, theta2=0.5):
    cliques = [(1, 2, 3), (3, 4, 5)]
    gauges = {(1, 2, 3): gg.LogisticGauge(theta1, dimension=3), (3, 4, 5): gg.LogisticGauge(theta2, dimension=3)}
    return gg.assemble_model(gg.build_block_graph(cliques), gauges, 'exponential')


@pytest.mark.directions
def test_example3_directions(example3, print_debug):
    directions = gg.enumerate_directions(example3)
    if print_debug:
        for d in directions:
            cprint('{} witness {} gap {:.2e}'.format(d.A, np.round(d.witness, 4), d.gap), 'cyan')
    assert [d.A for d in directions] == [(3,), (1, 2)]
    assert directions[1].witness == pytest.approx([1., 1., 0.36], abs=1e-3)
    assert directions[0].witness == pytest.approx([0.36, 0.36, 1.], abs=1e-2)
    for d in directions:
        assert d.gap <= gg.DIRECTION_TOLERANCE


@pytest.mark.directions
def test_example3_non_directions(example3):
    result = gg.is_direction(example3, [3, 1])
    assert result.A == (1, 3)
    assert not result.is_direction
    assert result.gap == pytest.approx(0.25, abs=1e-5)
    # approached only as x_2 -> 1, which the corner re-check rejects
    assert not gg.is_direction(example3, [1]).is_direction
    full = gg.is_direction(example3, [1, 2, 3])
    assert full.gap == pytest.approx(0.25, abs=1e-12)
    assert not full.is_direction


@pytest.mark.directions
def test_inverted_logistic_pair():
    model = chain_model([gg.InvertedLogisticGauge(0.5)])
    directions = gg.enumerate_directions(model)
    assert [d.A for d in directions] == [(1,), (2,)]
    assert directions[0].witness == pytest.approx([1., 0.], abs=1e-6)


@pytest.mark.directions
def test_all_logistic_joint_direction():
    model = chain_model([gg.LogisticGauge(0.4), gg.LogisticGauge(0.6)])
    assert [d.A for d in gg.enumerate_directions(model)] == [(1, 2, 3)]
    candidates = gg.directions_from_alphas(model)
    assert candidates.sets == [(1, 2, 3)]
    assert candidates.possibly_incomplete


@pytest.mark.directions
@pytest.mark.parametrize("model, expected", [
    (chain_model([gg.GaussianExpGauge(0.6), gg.GaussianExpGauge(0.7)]), [(1,), (2,), (3,)]),
    (chain_model([gg.LogisticGauge(0.4), gg.GaussianExpGauge(0.6)]), [(3,), (1, 2)]),
    (chain_model([gg.SquareGauge(0.5), gg.AsymmetricADGauge(0.3, 0.6)]), [(1,), (2, 3)]),
])
def test_alpha_directions_agree(model, expected):
    candidates = gg.directions_from_alphas(model)
    assert candidates.sets == expected
    assert not candidates.possibly_incomplete
    assert [d.A for d in gg.enumerate_directions(model)] == expected
    for A in candidates.sets:
        assert gg.is_direction(model, A).is_direction


@pytest.mark.directions
def test_direction_errors(example3, gauss_laplace):
    with pytest.raises(EmptySubset):
        gg.is_direction(example3, [])
    with pytest.raises(UnknownVertex):
        gg.is_direction(example3, [4])
    with pytest.raises(NotSupported):
        gg.directions_from_alphas(gauss_laplace)
    cliques = [(k, k + 1) for k in range(1, 13)]
    large = gg.assemble_model(gg.build_block_graph(cliques), {c: gg.LogisticGauge(0.5) for c in cliques},
                              'exponential')
    with pytest.raises(DimensionTooLarge):
        gg.enumerate_directions(large)


@pytest.mark.directions
def test_laplace_directions():
    model = chain_model([gg.GaussianLaplaceGauge.from_rho(0.5)], 'laplace')
    result = gg.is_direction(model, [1])
    assert result.is_direction
    assert result.witness == pytest.approx([1., 0.25], abs=1e-3)
    assert not gg.is_direction(model, [1, 2]).is_direction


@pytest.mark.directions
def test_clique_equivalence(example3):
    report = gg.check_clique_equivalence(example3)
    assert report.forward and report.backward
    assert report.joint_value == pytest.approx(1.25)
    assert report.clique_values[(1, 2)] == pytest.approx(1.)
    logistic = gg.check_clique_equivalence(chain_model([gg.LogisticGauge(0.4), gg.LogisticGauge(0.7)]))
    assert logistic.forward and logistic.backward
    assert logistic.joint_value == pytest.approx(1.)


@pytest.mark.separator_gap
@pytest.mark.parametrize("eps", [1e-1, 1e-2, 1e-3])
def test_separator_gap_two_blocks(eps):
    gap = gg.separator_gap(two_block_model(), [1, 5], eps)
    assert gap >= eps - 1e-6
    # both blocks minimized at x_2 = x_3 = x_4 = 1 - eps
    assert gap <= 3. * eps + 1e-3


@pytest.mark.separator_gap
def test_separator_gap_included():
    with pytest.raises(SeparatorsIncluded):
        gg.separator_gap(two_block_model(), [1, 3, 5], 1e-3)
    with pytest.raises(SeparatorsIncluded):
        gg.separator_gap(two_block_model(), [1, 2], 1e-3)


@pytest.mark.separator_gap
@pytest.mark.slow
def test_separator_gap_example1():
    graph = gg.build_block_graph(EXAMPLE1_CLIQUES)
    gauges = {c: gg.LogisticGauge(0.5, dimension=len(c)) for c in graph.cliques}
    model = gg.assemble_model(graph, gauges, 'exponential')
    assert gg.separator_gap(model, [1, 9], 1e-2) > 0.


@pytest.mark.separator_gap
@pytest.mark.slow
def test_separator_gap_random_blocks(print_debug):
    rng = gg.get_rng(9)
    for _ in range(10):
        if rng.uniform() < 0.5:
            cliques = [(1, 2, 3), (3, 4, 5)]
        else:
            cliques = [(1, 2), (2, 3, 4), (4, 5)]
        gauges = {c: gg.LogisticGauge(rng.uniform(0.2, 0.8), dimension=len(c)) for c in cliques}
        model = gg.assemble_model(gg.build_block_graph(cliques), gauges, 'exponential')
        for A in [[1, 5], [1, 4, 5], [2, 5], [1, 2, 5]]:
            try:
                gap = gg.separator_gap(model, A, 1e-3)
            except SeparatorsIncluded:
                continue
            if print_debug:
                cprint('{} A={} gap {:.3e}'.format(cliques, A, gap), 'cyan')
            assert gap >= 1e-3 - 1e-6
