"""Closed forms for plethysm coefficients ``<s_lam, s_mu[h_r]>``, plethysm
adjoints by ``h_r``, the Frobenius transform ``f -> f[H^perp]`` and the
restriction coefficients of partitions with at most three columns.

Every function here refuses inputs outside the range where its formula is
proven (:class:`ScopeError`); the brute-force routes live in
:mod:`plethyx.plethysm`.
"""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .partitions import (
    Partition,
    SkewShape,
    contains,
    is_horizontal_strip,
    is_vertical_strip,
    iter_partitions,
    transpose,
    vertical_strips,
)
from .plethysm import H_series, TruncatedSeries
from .schur import (
    ONE,
    ZERO,
    HPrefixedSeries,
    SchurPoly,
    e_times,
    e_to_schur,
    h_to_schur,
    multiply,
    skew_schur,
)
from .tableaux import LRTableau, enumerate_lr_tableaux


class ScopeError(ValueError):
    """Input lies outside the hypotheses of the closed-form result."""


def _check_columns(lam: Partition, max_cols: int, what: str) -> None:
    if lam and lam[0] > max_cols:
        raise ScopeError(f"{what}: lambda_1 <= {max_cols} required, got {lam}")


def _padded(seq: Sequence[int], n: int) -> tuple[int, ...]:
    """Zero-pad to length ``n``; the single normalisation point for padding."""
    seq = tuple(seq)
    if len(seq) > n:
        raise ValueError(f"{seq} has more than {n} entries")
    return seq + (0,) * (n - len(seq))


def _natural(x: Fraction) -> int | None:
    if x.denominator != 1 or x < 0:
        return None
    return x.numerator


# -- plethysm coefficients ------------------------------------------------------

def plethysm_coeff_hr_closed(lam, mu, r: int) -> int:
    """``<s_lam, s_mu[h_r]>`` for ``lam_1 <= r + 1``; always 0 or 1.

    At ``r = 0`` the rule reads "mu has at most one row and lam is empty",
    which is what the general formula gives with zero padding.
    """
    lam, mu = Partition(lam), Partition(mu)
    if r < 0:
        raise ValueError("r must be nonnegative")
    _check_columns(lam, r + 1, "plethysm_coeff_hr_closed")
    n = r + 1
    lam_t = _padded(transpose(lam), n)
    size = mu.size
    if r % 2 == 0:
        if len(mu) > n:
            return 0
        ref = _padded(mu, n)
    else:
        if mu and mu[0] > n:
            return 0
        ref = _padded(transpose(mu), n)
    # lam^T_i = |mu| - ref_{r+2-i}, 1-based
    return int(all(lam_t[i] == size - ref[n - 1 - i] for i in range(n)))


def plethysm_coeff_small_r(lam, mu, r: int) -> int:
    """``<s_lam, s_mu[h_r]>`` for ``lam_1 <= 3`` and any ``r >= 0``, case by case."""
    lam, mu = Partition(lam), Partition(mu)
    if r < 0:
        raise ValueError("r must be nonnegative")
    _check_columns(lam, 3, "plethysm_coeff_small_r")
    if r == 0:
        return int(len(mu) <= 1 and not lam)
    if r == 1:
        return int(lam == mu)
    if r == 2:
        if len(mu) > 3:
            return 0
        m1, m2, m3 = _padded(mu, 3)
        return int(lam == transpose((m1 + m2, m1 + m3, m2 + m3)))
    if r == 3:
        if mu and mu[0] > 1:
            return 0
        c = transpose(mu).part(0)
        return int(lam == transpose((c, c, c)))
    return int(not mu and not lam)


# -- adjoints s_lam[h_r^perp] -----------------------------------------------------

def s_lambda_hr_perp_closed(lam, r: int, max_degree: int) -> TruncatedSeries:
    """``s_lam[h_r^perp]`` for ``lam_1 <= r + 1`` as a single Schur function (or 0).

    Writing ``c = lam^T`` padded to ``r + 1`` parts and ``q = |lam| / r``, the
    result is ``s_(q - c_{r+1}, ..., q - c_1)``, transposed for odd ``r``, and 0
    when ``q - c_1`` is not a natural number.  ``r = 0`` gives ``H`` or 0.
    """
    lam = Partition(lam)
    if r < 0:
        raise ValueError("r must be nonnegative")
    _check_columns(lam, r + 1, "s_lambda_hr_perp_closed")
    if r == 0:
        return H_series(max_degree) if not lam else TruncatedSeries(ZERO, max_degree)
    c = _padded(transpose(lam), r + 1)
    q = Fraction(lam.size, r)
    if _natural(q - c[0]) is None:
        return TruncatedSeries(ZERO, max_degree)
    idx = Partition(int(q - x) for x in reversed(c))
    if r % 2:
        idx = transpose(idx)
    return TruncatedSeries(SchurPoly.basis(idx), max_degree)


def s_lambda_h_perp_cases(lam, r: int, max_degree: int) -> TruncatedSeries:
    """``s_lam[h_r^perp]`` for ``lam_1 <= 3`` by the five small-``r`` cases."""
    lam = Partition(lam)
    if r < 0:
        raise ValueError("r must be nonnegative")
    _check_columns(lam, 3, "s_lambda_h_perp_cases")
    zero = TruncatedSeries(ZERO, max_degree)
    if r == 0:
        return H_series(max_degree) if not lam else zero
    if r == 1:
        return TruncatedSeries(SchurPoly.basis(lam), max_degree)
    c1, c2, c3 = _padded(transpose(lam), 3)
    if r == 2:
        third = Fraction(-c1 + c2 + c3, 2)
        if _natural(third) is None:
            return zero
        idx = ((c1 + c2 - c3) // 2, (c1 - c2 + c3) // 2, int(third))
        return TruncatedSeries(SchurPoly.basis(idx), max_degree)
    if r == 3:
        if c1 == c2 == c3:
            return TruncatedSeries(e_to_schur((c1,)), max_degree)
        return zero
    return TruncatedSeries(ONE, max_degree) if not lam else zero


# -- vector partitions ---------------------------------------------------------------

def _vector_partitions(
    target: tuple[int, ...], vectors: Sequence[tuple[int, ...]], max_total: int | None = None
) -> Iterator[tuple[int, ...]]:
    """All multiplicity vectors ``M`` with ``sum_j M[j] * vectors[j] == target``.

    ``max_total`` caps ``sum M`` (the degree of the resulting h/e product).
    """
    n = len(vectors)
    mult = [0] * n

    def rec(i, rest, total):
        if not any(rest):
            yield tuple(mult)
            return
        if i == n:
            return
        v = vectors[i]
        support = [k for k, x in enumerate(v) if x]
        top = min(rest[k] // v[k] for k in support)
        if max_total is not None:
            top = min(top, max_total - total)
        for m in range(top, -1, -1):
            mult[i] = m
            nxt = tuple(a - m * b for a, b in zip(rest, v))
            yield from rec(i + 1, nxt, total + m)
        mult[i] = 0

    yield from rec(0, tuple(target), 0)


def _sum_of_products(
    target: tuple[int, ...],
    vectors: Sequence[tuple[int, ...]],
    elementary: Sequence[bool],
    max_total: int | None = None,
) -> SchurPoly:
    """``sum_M prod_j (h or e)_{M(j)}`` over vector partitions of ``target``."""
    products: Counter = Counter()
    for mult in _vector_partitions(target, vectors, max_total):
        hs = tuple(sorted((m for m, el in zip(mult, elementary) if m and not el), reverse=True))
        es = tuple(sorted((m for m, el in zip(mult, elementary) if m and el), reverse=True))
        products[(hs, es)] += 1
    out = ZERO
    for (hs, es), count in sorted(products.items()):
        out = out + multiply(h_to_schur(hs), e_to_schur(es)).scale(count)
    return out


def _box_vectors(target: Sequence[int]) -> list[tuple[int, ...]]:
    ranges = [range(t + 1) for t in target]
    return [v for v in itertools.product(*ranges) if any(v)]


def _check_vector(lam: Sequence[int]) -> tuple[int, ...]:
    lam = tuple(int(x) for x in lam)
    if any(x < 0 for x in lam):
        raise ValueError(f"exponent vector must be nonnegative: {lam}")
    return lam


def frobenius_h_closed(lam: Sequence[int], max_degree: int | None = None) -> HPrefixedSeries:
    """``h_lam[H^perp]`` for an exponent vector ``lam`` in ``N^l``.

    The result is ``H * Q`` with ``Q`` summing ``prod_j h_{M(j)}`` over maps
    ``M`` from nonzero vectors of ``N^l`` with ``sum M(j) j = lam``; the free
    multiplicity of the zero vector is the ``H`` factor.
    """
    lam = _check_vector(lam)
    vectors = _box_vectors(lam)
    return HPrefixedSeries(_sum_of_products(lam, vectors, [False] * len(vectors), max_degree))


def frobenius_e_closed(lam: Sequence[int], max_degree: int | None = None) -> HPrefixedSeries:
    """``e_lam[H^perp]``: as :func:`frobenius_h_closed` over ``{0,1}^l``, using
    ``e`` for odd-weight vectors and ``h`` for even-weight ones."""
    lam = _check_vector(lam)
    vectors = [v for v in itertools.product((0, 1), repeat=len(lam)) if any(v)]
    kinds = [sum(v) % 2 == 1 for v in vectors]
    return HPrefixedSeries(_sum_of_products(lam, vectors, kinds, max_degree))


def weak_compositions(length: int, r: int) -> list[tuple[int, ...]]:
    """Length-``length`` vectors of naturals summing to ``r``, lexicographically decreasing."""
    if length == 0:
        return [()] if r == 0 else []
    out = []
    for first in range(r, -1, -1):
        out.extend((first,) + rest for rest in weak_compositions(length - 1, r - first))
    return out


def binary_vectors(length: int, r: int) -> list[tuple[int, ...]]:
    return [v for v in weak_compositions(length, r) if max(v, default=0) <= 1]


def h_lambda_hr_perp_closed(lam: Sequence[int], r: int) -> SchurPoly:
    """``h_lam[h_r^perp]``: sum over ``M: WC(l, r) -> N`` with ``sum M(j) j = lam``."""
    lam = _check_vector(lam)
    if r < 1:
        raise ValueError("r = 0 gives a series; use h_lambda_h0_perp")
    vectors = weak_compositions(len(lam), r)
    return _sum_of_products(lam, vectors, [False] * len(vectors))


def h_lambda_h0_perp(lam: Sequence[int], max_degree: int) -> TruncatedSeries:
    """``h_lam[h_0^perp]``: ``H`` when ``lam`` is the zero vector, else 0."""
    lam = _check_vector(lam)
    return H_series(max_degree) if not any(lam) else TruncatedSeries(ZERO, max_degree)


def e_lambda_hr_perp_closed(lam: Sequence[int], r: int) -> SchurPoly:
    """``e_lam[h_r^perp]``: sum over ``M: B(l, r) -> N``; ``h`` factors for even
    ``r``, ``e`` factors for odd ``r``."""
    lam = _check_vector(lam)
    if r < 1:
        raise ValueError("r must be positive")
    vectors = binary_vectors(len(lam), r)
    return _sum_of_products(lam, vectors, [r % 2 == 1] * len(vectors))


def e_vector_hr_perp_special(lam: Sequence[int], r: int) -> SchurPoly:
    """``e_lam[h_r^perp]`` for ``lam`` in ``Z^{r+1}``: a single product
    ``prod_i h_{|lam|/r - lam_i}`` (even ``r``) or the same with ``e`` (odd ``r``)."""
    lam = tuple(int(x) for x in lam)
    if r < 1:
        raise ValueError("r must be positive")
    if len(lam) != r + 1:
        raise ValueError(f"vector must have length r + 1 = {r + 1}")
    q = Fraction(sum(lam), r)
    indices = [q - x for x in lam]
    return e_to_schur(indices) if r % 2 else h_to_schur(indices)


# -- restriction coefficients, three columns ---------------------------------------

def _partitions_inside(outer: Partition) -> Iterator[Partition]:
    def rec(i, cap, prefix):
        yield Partition(prefix)
        if i == len(outer):
            return
        for x in range(min(cap, outer[i]), 0, -1):
            prefix.append(x)
            yield from rec(i + 1, x, prefix)
            prefix.pop()

    yield from rec(0, outer[0] if outer else 0, [])


def main_terms(lam) -> Iterator[tuple[int, Partition, Partition]]:
    """``(r, nu, kappa)`` over the index set of the three-column formula.

    ``nu`` runs over partitions with ``nu^T`` inside ``lam`` (so at most three
    parts) and ``r`` over naturals with ``(-nu_1 + nu_2 + nu_3 - r)/2`` in N;
    ``kappa`` is the three-part index built from ``nu`` and ``r``.
    """
    lam = Partition(lam)
    _check_columns(lam, 3, "main_terms")
    for nu in _partitions_inside(transpose(lam)):
        n1, n2, n3 = _padded(nu, 3)
        top = -n1 + n2 + n3
        assert top <= n2 + n3  # r is bounded, so the sum is finite
        for r in range(top % 2, top + 1, 2) if top >= 0 else ():
            kappa = Partition(
                ((n1 + n2 - n3 - r) // 2, (n1 - n2 + n3 - r) // 2, (top - r) // 2)
            )
            yield r, nu, kappa


def frobenius_three_columns(lam, max_degree: int | None = None) -> HPrefixedSeries:
    """``s_lam[H^perp]`` for ``lam_1 <= 3`` as ``H * sum e_r s_kappa s_{lam/nu^T}``.

    Terms of the finite factor above ``max_degree`` are dropped.
    """
    lam = Partition(lam)
    _check_columns(lam, 3, "frobenius_three_columns")
    out = ZERO
    for r, nu, kappa in main_terms(lam):
        deg = r + kappa.size + lam.size - nu.size
        if max_degree is not None and deg > max_degree:
            continue
        term = e_times(r, SchurPoly.basis(kappa))
        out = out + multiply(term, skew_schur(lam, transpose(nu)))
    return HPrefixedSeries(out)


def restriction_via_main(lam, mu) -> int:
    lam, mu = Partition(lam), Partition(mu)
    _check_columns(lam, 3, "restriction_via_main")
    return frobenius_three_columns(lam, mu.size).coefficient(mu)


@dataclass(frozen=True)
class RestrictionTuple:
    r: int
    nu: Partition
    lambda1: Partition
    lambda2: Partition
    lambda3: Partition
    t1: LRTableau
    t2: LRTableau

    def content2(self) -> Partition:
        """The content required of ``t2``, trailing zeros stripped."""
        n1, n2, n3 = _padded(self.nu, 3)
        r = self.r
        return Partition(
            ((n1 + n2 - n3 - r) // 2, (n1 - n2 + n3 - r) // 2, (-n1 + n2 + n3 - r) // 2)
        )

    def is_valid(self, lam, mu) -> bool:
        """Check all defining conditions directly."""
        lam, mu = Partition(lam), Partition(mu)
        n1, n2, n3 = _padded(self.nu, 3)
        third = -n1 + n2 + n3 - self.r
        if self.r < 0 or third < 0 or third % 2:
            return False
        nu_t = transpose(self.nu)
        return (
            self.t1.shape == SkewShape(lam, nu_t)
            and self.t1.content == self.lambda1
            and self.t2.shape == SkewShape(self.lambda2, self.lambda1)
            and self.t2.content == self.content2()
            and contains(self.lambda3, self.lambda2)
            and self.lambda3.size - self.lambda2.size == self.r
            and is_vertical_strip_pair(self.lambda3, self.lambda2)
            and is_horizontal_strip(SkewShape(mu, self.lambda3))
        )


def is_vertical_strip_pair(outer: Partition, inner: Partition) -> bool:
    return contains(outer, inner) and is_vertical_strip(SkewShape(outer, inner))


def iter_restriction_tuples(lam, mu) -> Iterator[RestrictionTuple]:
    """All combinatorial witnesses for ``r_lam^mu`` with ``lam_1 <= 3``.

    Every intermediate shape sits inside ``mu``, which bounds the search.
    """
    lam, mu = Partition(lam), Partition(mu)
    _check_columns(lam, 3, "iter_restriction_tuples")
    for r, nu, kappa in main_terms(lam):
        nu_t = transpose(nu)
        n1 = lam.size - nu.size
        s2 = n1 + kappa.size
        if s2 + r > mu.size:
            continue
        for lam1 in iter_partitions(n1):
            if not contains(mu, lam1) or not contains(lam, lam1):
                continue
            t1s = enumerate_lr_tableaux(SkewShape(lam, nu_t), lam1)
            if not t1s:
                continue
            for lam2 in iter_partitions(s2):
                if not contains(mu, lam2) or not contains(lam2, lam1):
                    continue
                t2s = enumerate_lr_tableaux(SkewShape(lam2, lam1), kappa)
                if not t2s:
                    continue
                for lam3 in vertical_strips(lam2, r, bound=mu):
                    if not is_horizontal_strip(SkewShape(mu, lam3)):
                        continue
                    for t1 in t1s:
                        for t2 in t2s:
                            yield RestrictionTuple(r, nu, lam1, lam2, lam3, t1, t2)


def enumerate_restriction_tuples(lam, mu) -> list[RestrictionTuple]:
    return list(iter_restriction_tuples(lam, mu))


def count_restriction_tuples(lam, mu) -> int:
    return sum(1 for _ in iter_restriction_tuples(lam, mu))
