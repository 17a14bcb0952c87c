from itertools import combinations

__all__ = ['implies', 'get_pairs', 'nonempty_subsets']


def implies(p1, p2):
    return not p1 or p2

def get_pairs(sequence):
    """get a sequece of (seq[i], seq[i+1]), i=0~n-1
    """
    return list(zip(sequence[:-1], sequence[1:]))

def nonempty_subsets(sequence):
    """all nonempty subsets as tuples, by size then lexicographically

    >>> list(nonempty_subsets([1, 2, 3]))
    [(1,), (2,), (3,), (1, 2), (1, 3), (2, 3), (1, 2, 3)]
    """
    items = sorted(sequence)
    for size in range(1, len(items) + 1):
        for subset in combinations(items, size):
            yield subset
