"""
Geometric extreme directions.

A vertex subset A is a direction when some point with ones on A and values
strictly inside the unit interval elsewhere lies on the unit level set of the
joint gauge.
"""
from collections import namedtuple
from concurrent.futures import ThreadPoolExecutor
from itertools import combinations

import numpy as np

from ..utils import LOGGER, EmptySubset, DimensionTooLarge, SeparatorsIncluded, NotSupported, implies, \
    nonempty_subsets, get_worker_count, DIRECTION_TOLERANCE, CORNER_SHRINK, ATTAINMENT_MARGIN, \
    MAX_ENUMERATION_DIM, ALPHA_UNIT_TOLERANCE
from ..numerics import minimize_box, DEFAULT_MINIMIZER_CONFIG
from ..coefficients import alpha_vector

__all__ = ['Direction', 'DirectionCandidates', 'CliqueEquivalence', 'is_direction', 'enumerate_directions',
           'directions_from_alphas', 'check_clique_equivalence', 'separator_gap']

Direction = namedtuple('Direction', ['A', 'witness', 'gap', 'is_direction'])
DirectionCandidates = namedtuple('DirectionCandidates', ['sets', 'possibly_incomplete'])
CliqueEquivalence = namedtuple('CliqueEquivalence', ['forward', 'backward', 'joint_value', 'clique_values'])


def _check_subset(model, A):
    A = sorted(set(A))
    if not A:
        raise EmptySubset('vertex subset is empty')
    for v in A:
        model.graph.check_vertex(v)
    return A

def _pinned_objective(model, A):
    on = [model.graph.index(v) for v in A]
    off = [k for k in range(model.dimension) if k not in on]

    def joint(z):
        z = np.atleast_2d(z)
        x = np.ones((len(z), model.dimension))
        x[:, off] = z
        return model._joint(x)
    return joint, off

def _off_box(model, margin):
    return (0. if model.margin.is_exponential else -1. + margin, 1. - margin)

def is_direction(model, A, cfg=DEFAULT_MINIMIZER_CONFIG, eps=CORNER_SHRINK, tol=DIRECTION_TOLERANCE):
    """Minimize the joint gauge over the coordinates outside ``A`` with ``A`` pinned at one.

    Witnesses within the attainment margin of the corner are confirmed on the
    coarser box, since a minimum approached only at the corner does not count.
    """
    A = _check_subset(model, A)
    joint, off = _pinned_objective(model, A)
    witness = np.ones(model.dimension)
    if not off:
        gap = float(joint(np.zeros((1, 0)))[0]) - 1.
        return Direction(tuple(A), tuple(witness.tolist()), gap, gap <= tol)

    z, value = minimize_box(joint, [_off_box(model, eps)] * len(off), cfg, vectorized=True)
    gap = value - 1.
    direction = gap <= tol
    if direction and np.any(np.abs(z) > 1. - ATTAINMENT_MARGIN):
        _, coarse = minimize_box(joint, [_off_box(model, ATTAINMENT_MARGIN)] * len(off), cfg, vectorized=True)
        direction = coarse - 1. <= tol
        LOGGER.debug('direction {}: witness at the corner, coarse gap {:.3e}'.format(A, coarse - 1.))
    witness[off] = z
    return Direction(tuple(A), tuple(witness.tolist()), float(gap), bool(direction))

def enumerate_directions(model, cfg=DEFAULT_MINIMIZER_CONFIG):
    """All geometric extreme directions, in canonical subset order.

    Subsets are checked concurrently; results keep the subset order.
    """
    if model.dimension > MAX_ENUMERATION_DIM:
        raise DimensionTooLarge('{} vertices exceed the enumeration limit {}'.format(
            model.dimension, MAX_ENUMERATION_DIM), dimension=model.dimension, limit=MAX_ENUMERATION_DIM)
    subsets = list(nonempty_subsets(model.vertices))
    with ThreadPoolExecutor(max_workers=get_worker_count()) as executor:
        checked = list(executor.map(lambda A: is_direction(model, A, cfg), subsets))
    directions = [d for d in checked if d.is_direction]
    covered = set().union(*[set(d.A) for d in directions]) if directions else set()
    if covered != set(model.vertices):
        LOGGER.warning('directions do not cover vertices {}'.format(sorted(set(model.vertices) - covered)))
    return directions

def directions_from_alphas(model, cfg=DEFAULT_MINIMIZER_CONFIG):
    """Candidate directions {i} + {j : alpha_{j|i} = 1} from each conditioning vertex."""
    if not model.margin.is_exponential:
        raise NotSupported('alpha-based directions need exponential margins', margin=str(model.margin))
    found = set()
    for i in model.vertices:
        alphas = alpha_vector(model, i, '+', cfg)
        found.add(tuple(sorted([i] + [j for j, a in alphas.items() if abs(a.value - 1.) <= ALPHA_UNIT_TOLERANCE])))
    sets = sorted(found, key=lambda A: (len(A), A))
    return DirectionCandidates(sets, any(len(A) == model.dimension for A in sets))

def check_clique_equivalence(model, tol=1e-9):
    """Joint gauge at the unit vector is one exactly when every clique gauge is."""
    joint_value = model.eval_joint(np.ones(model.dimension))
    clique_values = {c: model.clique_gauges[c](np.ones(len(c))) for c in model.graph.cliques}
    joint_one = abs(joint_value - 1.) <= tol
    cliques_one = all(abs(v - 1.) <= tol for v in clique_values.values())
    report = CliqueEquivalence(implies(cliques_one, joint_one), implies(joint_one, cliques_one),
                               joint_value, clique_values)
    if not (report.forward and report.backward):
        LOGGER.warning('clique equivalence fails: g(1) = {:.12g}, cliques {}'.format(joint_value, clique_values))
    return report

def separator_gap(model, A, eps, cfg=DEFAULT_MINIMIZER_CONFIG):
    """Smallest excess of the joint gauge over one when ``A`` skips a path separator.

    Omitted separators are capped at 1 - eps, so the excess is at least eps.
    """
    A = _check_subset(model, A)
    omitted = set()
    for a, b in combinations(A, 2):
        omitted |= {v for v in model.graph.shortest_path(a, b).vertices[1:-1] if v not in A}
    if not omitted:
        raise SeparatorsIncluded('{} contains every separator between its vertices'.format(A), A=A)
    joint, off = _pinned_objective(model, A)
    bounds = []
    for column in off:
        if model.vertices[column] in omitted:
            bounds.append(_off_box(model, eps))
        else:
            bounds.append(model.margin.unit_interval())
    _, value = minimize_box(joint, bounds, cfg, vectorized=True)
    return float(value - 1.)
