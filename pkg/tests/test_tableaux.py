import itertools

import pytest

from plethyx.partitions import Partition, SkewShape, contains, iter_partitions, transpose
from plethyx.tableaux import enumerate_lr_tableaux, lr_coefficient


def brute_lr_count(lam, mu, nu):
    """Try every filling of lam/mu with the multiset of content nu."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if not contains(lam, mu) or lam.size != mu.size + nu.size:
        return 0
    cells = [(i, j) for i in range(len(lam)) for j in range(mu.part(i), lam[i])]
    letters = [k + 1 for k, c in enumerate(nu) for _ in range(c)]
    count = 0
    for filling in set(itertools.permutations(letters)):
        t = dict(zip(cells, filling))
        ok = all(
            t[(i, j)] <= t.get((i, j + 1), 99) and t[(i, j)] < t.get((i + 1, j), 99)
            for i, j in cells
        )
        if not ok:
            continue
        word = [t[(i, j)] for i in range(len(lam)) for j in range(lam[i] - 1, mu.part(i) - 1, -1)]
        seen = [0] * (len(nu) + 2)
        for w in word:
            seen[w] += 1
            if w > 1 and seen[w] > seen[w - 1]:
                break
        else:
            count += 1
    return count


def test_examples():
    (t,) = enumerate_lr_tableaux(SkewShape.of((2, 1)), (2, 1))
    assert t.rows == ((1, 1), (2,))
    assert str(t) == "[[1,1],[2]]"
    assert len(enumerate_lr_tableaux(SkewShape.of((3, 2, 1), (2, 1)), (2, 1))) == 2
    assert enumerate_lr_tableaux(SkewShape.of((1, 1)), (2,)) == []


def test_coefficient_examples():
    assert lr_coefficient((2, 1), (1,), (1, 1)) == 1
    assert lr_coefficient((3, 2, 1), (2, 1), (2, 1)) == 2
    assert lr_coefficient((4, 2), (), (4, 2)) == 1
    assert lr_coefficient((2,), (1, 1), (1,)) == 0


def test_tableaux_are_valid():
    shape = SkewShape.of((4, 3, 2), (2, 1))
    for t in enumerate_lr_tableaux(shape, (3, 2, 1)):
        assert t.content == (3, 2, 1)
        e = t.entries
        for (i, j), v in e.items():
            assert v <= e.get((i, j + 1), 99)
            assert v < e.get((i + 1, j), 99)


def _triples(max_size):
    for n in range(max_size + 1):
        for lam in iter_partitions(n):
            for a in range(n + 1):
                for mu in iter_partitions(a):
                    if contains(lam, mu):
                        for nu in iter_partitions(n - a):
                            yield lam, mu, nu


def test_against_brute_force():
    for lam, mu, nu in _triples(6):
        assert lr_coefficient(lam, mu, nu) == brute_lr_count(lam, mu, nu), (lam, mu, nu)


def test_symmetries():
    for lam, mu, nu in _triples(8):
        c = lr_coefficient(lam, mu, nu)
        assert c == lr_coefficient(lam, nu, mu)
        assert c == lr_coefficient(transpose(lam), transpose(mu), transpose(nu))


@pytest.mark.parametrize("lam, mu", [((2, 1), (3,)), ((3,), (1, 1))])
def test_zero_without_containment(lam, mu):
    for nu in iter_partitions(max(0, sum(lam) - sum(mu))):
        assert lr_coefficient(lam, mu, nu) == 0
