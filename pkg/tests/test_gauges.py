import pytest
import numpy as np
from termcolor import cprint

import gauge_graph as gg
from gauge_graph import ParameterOutOfRange, NotPositiveDefinite, DomainViolation, DimensionMismatch, MarginMismatch

from fixtures import GAUSS_LAPLACE_BLOCK


@pytest.mark.gauges
@pytest.mark.parametrize("family, params", [
    ('logistic', {'theta': 0.4}),
    ('gaussian', {'rho': 0.6}),
    ('inverted_logistic', {'theta': 1.}),
    ('square', {'theta': 0.3}),
    ('asymmetric_ad', {'theta': 0.3, 'gamma': 0.7}),
    ('gaussian_laplace', {'rho': -0.9}),
    ])
def test_make_gauge(family, params):
    g = gg.make_gauge(family, params, 2)
    assert g.dimension == 2
    assert g.family == family
    assert g.to_spec()['family'] == family
    assert g == gg.make_gauge(g.to_spec()['family'], g.to_spec()['params'])


@pytest.mark.gauges
@pytest.mark.parametrize("family, params, parameter", [
    ('gaussian', {'rho': 1.0}, 'rho'),
    ('logistic', {'theta': 0.}, 'theta'),
    ('logistic', {'theta': 1.}, 'theta'),
    ('inverted_logistic', {'theta': 1.2}, 'theta'),
    ('square', {'theta': -0.1}, 'theta'),
    ('asymmetric_ad', {'theta': 0.5}, 'gamma'),
    ('gaussian', {'rho': 0.5, 'theta': 0.1}, 'theta'),
    ])
def test_make_gauge_out_of_range(family, params, parameter):
    with pytest.raises(ParameterOutOfRange) as info:
        gg.make_gauge(family, params)
    assert info.value.details['parameter'] == parameter


@pytest.mark.gauges
def test_make_gauge_errors():
    with pytest.raises(NotPositiveDefinite):
        gg.make_gauge('gaussian_laplace', {'sigma': [[1., 1.01], [1.01, 1.]]})
    with pytest.raises(ParameterOutOfRange):
        gg.make_gauge('frank', {'theta': 0.5})
    with pytest.raises(DimensionMismatch):
        gg.make_gauge('gaussian', {'rho': 0.5}, 3)
    with pytest.raises(DimensionMismatch):
        gg.make_gauge('gaussian_laplace', {'sigma': GAUSS_LAPLACE_BLOCK}, 3)
    assert gg.make_gauge('logistic', {'theta': 0.5}, 3).dimension == 3
    assert gg.make_gauge('invlog', {'theta': 0.5}) == gg.InvertedLogisticGauge(0.5)


@pytest.mark.gauges
def test_eval_gauge():
    for theta in [0.1, 0.4, 0.9]:
        assert gg.LogisticGauge(theta)([1., 1.]) == pytest.approx(1., abs=1e-12)
    assert gg.GaussianExpGauge(0.6)([1., 0.36]) == pytest.approx(1., abs=1e-12)
    assert gg.InvertedLogisticGauge(0.5)([1., 1.]) == pytest.approx(np.sqrt(2.), abs=1e-12)
    assert gg.GaussianLaplaceGauge.from_rho(-0.9)([1., -0.81]) == pytest.approx(1., abs=1e-12)
    assert gg.LogisticGauge(0.5, 3)([1., 1., 1.]) == pytest.approx(1., abs=1e-12)

    values = gg.GaussianExpGauge(0.6)(np.array([[1., 0.36], [2., 0.72]]))
    assert values.shape == (2,)
    assert values == pytest.approx([1., 2.])

    with pytest.raises(DomainViolation):
        gg.LogisticGauge(0.5)([1., -0.1])
    with pytest.raises(DimensionMismatch):
        gg.LogisticGauge(0.5)([1., 1., 1.])


@pytest.mark.gauges
@pytest.mark.parametrize("theta", [0.2, 0.5, 0.8])
def test_table1_contact_identities(theta):
    rho = 1. - theta
    assert gg.LogisticGauge(theta)([1., 1.]) == pytest.approx(1., abs=1e-14)
    assert gg.GaussianExpGauge(rho)([1., rho ** 2]) == pytest.approx(1., abs=1e-12)
    assert gg.InvertedLogisticGauge(theta)([1., 0.]) == pytest.approx(1., abs=1e-14)
    assert gg.SquareGauge(theta)([1., 1. - theta]) == pytest.approx(1., abs=1e-14)
    assert gg.AsymmetricADGauge(theta, rho)([1., 1.]) == pytest.approx(1., abs=1e-14)


@pytest.mark.gauges
def test_edge_coefficients():
    c = gg.GaussianExpGauge(0.6).edge_coefficients()
    assert c.alpha == pytest.approx(0.36) and c.beta == 0.5 and c.sigma == pytest.approx(2.)
    assert gg.GaussianExpGauge(0.).edge_coefficients().beta == 0.
    assert gg.InvertedLogisticGauge(0.3).edge_coefficients() == gg.make_edge_coefficients(0., 0.7)
    assert gg.SquareGauge(0.3).edge_coefficients().alpha == pytest.approx(0.7)
    assert gg.LogisticGauge(0.5, 3).edge_coefficients() is None
    for c in [gg.LogisticGauge(0.3).edge_coefficients(), gg.SquareGauge(0.3).edge_coefficients()]:
        assert c.sigma * (1. - c.beta) == pytest.approx(1., abs=1e-12)

    laplace = gg.GaussianLaplaceGauge.from_rho(-0.9)
    assert laplace.edge_coefficients(1).alpha == pytest.approx(-0.81)
    assert laplace.edge_coefficients(-1).alpha == pytest.approx(0.81)
    assert laplace.edge_coefficients(1).beta is None


@pytest.mark.gauges
def test_marginal_closed_forms():
    logistic = gg.LogisticGauge(0.4, 4)
    assert logistic.marginal([0, 2]) == gg.LogisticGauge(0.4)
    assert isinstance(logistic.marginal([3]), gg.AbsoluteGauge)
    assert logistic.marginal([0, 1, 2, 3]) is logistic

    ad = gg.AsymmetricADGauge(0.3, 0.6)
    swapped = ad.marginal([1, 0])
    assert swapped == gg.AsymmetricADGauge(0.6, 0.3)
    x = np.array([0.4, 0.9])
    assert swapped(x) == pytest.approx(ad(x[::-1]), abs=1e-14)

    laplace = gg.GaussianLaplaceGauge(GAUSS_LAPLACE_BLOCK)
    pair = laplace.marginal([0, 3])
    assert pair.correlation[0, 1] == pytest.approx(0.7)
    reversed_pair = laplace.marginal([3, 0])
    assert reversed_pair([0.5, -0.2]) == pytest.approx(pair([-0.2, 0.5]), abs=1e-14)


@pytest.mark.gauges
def test_numeric_marginal_of_custom_gauge():
    # max(|x|) is its own marginal
    g = gg.CustomGauge(lambda x: np.max(np.abs(x), axis=-1), 3, 'exponential', vectorized=True)
    m = g.marginal([0, 2])
    for point in [[0.3, 0.8], [1., 0.], [0.5, 0.5]]:
        assert m(point) == pytest.approx(max(point), abs=1e-8)


@pytest.mark.gauges
def test_margin():
    assert gg.get_margin('Laplace') is gg.Margin.LAPLACE
    assert gg.Margin.EXPONENTIAL.unit_interval() == (0., 1.)
    assert gg.Margin.LAPLACE.box(2.) == (-2., 2.)
    with pytest.raises(MarginMismatch):
        gg.get_margin('gumbel')


@pytest.mark.gauges
@pytest.mark.axioms
@pytest.mark.parametrize("gauge", [
    gg.LogisticGauge(0.4),
    gg.LogisticGauge(0.6, 4),
    gg.GaussianExpGauge(0.),
    gg.GaussianExpGauge(0.9),
    gg.InvertedLogisticGauge(0.2),
    gg.InvertedLogisticGauge(1.),
    gg.SquareGauge(0.3),
    gg.AsymmetricADGauge(0.2, 0.7),
    gg.GaussianLaplaceGauge.from_rho(-0.9),
    gg.GaussianLaplaceGauge(GAUSS_LAPLACE_BLOCK),
    ])
def test_catalogue_axioms(gauge, print_debug):
    report = gg.check_gauge_axioms(gauge, n_rays=1000, tol=1e-9)
    if print_debug:
        cprint('{}: {}'.format(gauge, report), 'cyan')
    assert report.passed


@pytest.mark.axioms
def test_axioms_relative_homogeneity():
    rng = gg.get_rng(3)
    for gauge in [gg.LogisticGauge(0.4), gg.GaussianLaplaceGauge(GAUSS_LAPLACE_BLOCK)]:
        x = gg.sample_domain_points(200, gauge.dimension, gauge.margin.value, rng)
        t = rng.uniform(0.01, 100., size=len(x))
        values = gauge(x)
        assert np.all(np.abs(gauge(t[:, None] * x) - t * values) <= 1e-9 * (1. + t * values))
        assert np.all(values + 1e-12 >= np.max(np.abs(x), axis=-1))


@pytest.mark.axioms
def test_axioms_random_laplace():
    rng = gg.get_rng(7)
    a = rng.normal(size=(3, 3))
    cov = a @ a.T + 3. * np.eye(3)
    scale = 1. / np.sqrt(np.diag(cov))
    gauge = gg.GaussianLaplaceGauge(cov * np.outer(scale, scale))
    assert gg.check_gauge_axioms(gauge, n_rays=1000, tol=1e-9).passed


@pytest.mark.axioms
def test_axioms_report_violation():
    half_max = gg.CustomGauge(lambda x: 0.5 * np.max(np.abs(x), axis=-1), 2, 'laplace', vectorized=True)
    report = gg.check_gauge_axioms(half_max, n_rays=100, tol=1e-9)
    assert not report.passed
    assert report.lower_bound_violation > 0.
    assert report.homogeneity_defect <= 1e-9
