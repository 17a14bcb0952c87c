"""
Invariant checks run by ``gauge-graph verify``.

Each check records whether it passed and a short detail; library errors
raised inside a check count as a failure of that check only.
"""
from collections import namedtuple

import numpy as np

from ..utils import LOGGER, GaugeGraphError
from ..gauges import check_gauge_axioms
from ..models import sample_level_set, pairwise_marginal
from ..coefficients import alpha_path, alpha_path_signed, edge_alpha
from ..extremes import enumerate_directions, directions_from_alphas, check_clique_equivalence, is_direction

__all__ = ['Check', 'run_verification', 'AXIOM_TOLERANCE', 'LEVEL_SET_TOLERANCE', 'ALPHA_AGREEMENT',
           'FULL_CHECK_DIM']

Check = namedtuple('Check', ['name', 'passed', 'detail'])

AXIOM_TOLERANCE = 1e-8
LEVEL_SET_TOLERANCE = 1e-9
# flat contacts composed along a chain still limit the numeric alpha in double precision
ALPHA_AGREEMENT = 5e-3
# subset enumeration above this dimension only runs on request
FULL_CHECK_DIM = 6


def _check(name, fn):
    try:
        passed, detail = fn()
    except GaugeGraphError as e:
        passed, detail = False, '{}: {}'.format(e.__class__.__name__, e.message)
    LOGGER.debug('{}: {} ({})'.format(name, 'pass' if passed else 'FAIL', detail))
    return Check(name, bool(passed), detail)

def _axioms(gauge):
    report = check_gauge_axioms(gauge, n_rays=1000, tol=AXIOM_TOLERANCE)
    return report.passed, 'homogeneity {:.2e}, domination {:.2e}'.format(report.homogeneity_defect,
                                                                       report.lower_bound_violation)

def _level_set(model):
    points = sample_level_set(model, 200)
    deviation = float(np.max(np.abs(model.eval_joint(points) - 1.)))
    return deviation <= LEVEL_SET_TOLERANCE, 'max |g(p) - 1| = {:.2e}'.format(deviation)

def _alpha_agreement(model, label):
    worst, worst_pair = 0., None
    for i in model.vertices:
        for j in model.vertices:
            if i == j:
                continue
            if model.margin.is_exponential:
                recurrence = alpha_path(model, i, j).value
            else:
                recurrence = alpha_path_signed(model, i, j).value
            numeric = edge_alpha(pairwise_marginal(model, i, j), '+').value
            if abs(recurrence - numeric) >= worst:
                worst, worst_pair = abs(recurrence - numeric), (label(i), label(j))
    return worst <= ALPHA_AGREEMENT, 'max discrepancy {:.2e} at {}'.format(worst, worst_pair)

def _coverage(model, label):
    directions = enumerate_directions(model)
    covered = set().union(*[set(d.A) for d in directions]) if directions else set()
    sets = [[label(v) for v in d.A] for d in directions]
    return covered == set(model.vertices), 'directions {}'.format(sets)

def _alpha_directions(model, label):
    candidates = directions_from_alphas(model)
    failed = [[label(v) for v in A] for A in candidates.sets if not is_direction(model, A).is_direction]
    return not failed, 'unconfirmed {}'.format(failed) if failed else '{} candidate sets confirmed'.format(
        len(candidates.sets))

def run_verification(model, labels=None, full=False):
    """Run the invariant checks on ``model``; returns a list of :class:`Check`."""
    label = (lambda v: labels[v]) if labels is not None else str
    checks = []
    for clique in model.graph.cliques:
        name = 'axioms of clique {{{}}}'.format(','.join(label(v) for v in clique))
        checks.append(_check(name, lambda clique=clique: _axioms(model.clique_gauges[clique])))
    checks.append(_check('axioms of the joint gauge', lambda: _axioms(model.as_gauge())))

    def equivalence():
        report = check_clique_equivalence(model)
        return report.forward and report.backward and report.joint_value >= 1. - AXIOM_TOLERANCE, \
            'g(1) = {:.12g}'.format(report.joint_value)
    checks.append(_check('clique equivalence at the unit vector', equivalence))
    checks.append(_check('level set points on the boundary', lambda: _level_set(model)))
    checks.append(_check('alpha recurrence against pairwise marginals', lambda: _alpha_agreement(model, label)))
    if full or model.dimension <= FULL_CHECK_DIM:
        checks.append(_check('directions cover every vertex', lambda: _coverage(model, label)))
        if model.margin.is_exponential:
            checks.append(_check('alpha directions are directions', lambda: _alpha_directions(model, label)))
    else:
        LOGGER.info('skipping direction checks for {} vertices, use --full to run them'.format(model.dimension))
    return checks
