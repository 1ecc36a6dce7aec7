"""Plethysm, plethysm adjoints, and the brute-force Frobenius transform.

Everything goes through the power-sum basis: ``p_k[g]`` replaces each
``p_m`` in ``g`` by ``p_{km}``, and ``f[g]`` follows by multiplicativity.
Inhomogeneous ``g`` (such as truncations of ``H``) is handled the same
way, with truncation applied to every intermediate product.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .partitions import Partition, iter_partitions, partitions_up_to
from .schur import (
    PowerSumPoly,
    SchurPoly,
    from_power_sum,
    hall_inner,
    to_power_sum,
)


@dataclass(frozen=True)
class TruncatedSeries:
    """Truncation to degrees ``<= max_degree`` of an element of the completed ring."""

    value: SchurPoly
    max_degree: int

    def __post_init__(self):
        if self.max_degree < 0:
            raise ValueError("max_degree must be nonnegative")
        if self.value.degree() > self.max_degree:
            object.__setattr__(self, "value", self.value.truncate(self.max_degree))

    def __getitem__(self, mu) -> int:
        mu = Partition(mu)
        if mu.size > self.max_degree:
            raise ValueError(f"s{mu} lies above the truncation degree {self.max_degree}")
        return self.value[mu]

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.max_degree == other.max_degree and self.value == other.value

    def __repr__(self) -> str:
        return f"{self.value!r} + O({self.max_degree + 1})"


def H_series(max_degree: int) -> TruncatedSeries:
    """``1 + h_1 + ... + h_max_degree``."""
    return TruncatedSeries(
        SchurPoly({(k,) if k else (): 1 for k in range(max_degree + 1)}), max_degree
    )


def _mul(a: dict, b: dict, cap: int | None) -> dict:
    acc: dict[Partition, Fraction] = defaultdict(Fraction)
    for x, cx in a.items():
        sx = x.size
        for y, cy in b.items():
            if cap is not None and sx + y.size > cap:
                continue
            acc[Partition(sorted(x + y, reverse=True))] += cx * cy
    return {k: v for k, v in acc.items() if v}


def _dilate(g: dict, k: int, cap: int | None) -> dict:
    """``p_k[g]`` for g given by its power-sum terms."""
    out = {}
    for sigma, c in g.items():
        if cap is not None and k * sigma.size > cap:
            continue
        out[Partition(k * part for part in sigma)] = c
    return out


def _plethysm_ps(f_ps: PowerSumPoly, g_ps: PowerSumPoly, cap: int | None) -> PowerSumPoly:
    g = g_ps.terms
    dilated: dict[int, dict] = {}
    # p_rho[g] built by growing prefixes of rho; share work across rho
    prefix_cache: dict[tuple[int, ...], dict] = {(): {Partition(): Fraction(1)}}

    def p_rho_of_g(rho: tuple[int, ...]) -> dict:
        if rho in prefix_cache:
            return prefix_cache[rho]
        k = rho[-1]
        if k not in dilated:
            dilated[k] = _dilate(g, k, cap)
        out = _mul(p_rho_of_g(rho[:-1]), dilated[k], cap)
        prefix_cache[rho] = out
        return out

    acc: dict[Partition, Fraction] = defaultdict(Fraction)
    for rho, c in f_ps.terms.items():
        for sigma, v in p_rho_of_g(tuple(rho)).items():
            acc[sigma] += c * v
    return PowerSumPoly._raw(acc)


def plethysm(f: SchurPoly, g: SchurPoly) -> SchurPoly:
    """``f[g]`` in the Schur basis.

    The final conversion asserts integrality, so a wrong character or
    conversion table surfaces as :class:`NonIntegralError`.
    """
    return from_power_sum(_plethysm_ps(to_power_sum(f), to_power_sum(g), None))


def plethysm_truncated(f: SchurPoly, g: TruncatedSeries) -> TruncatedSeries:
    """``f[g]`` for a truncated series ``g``, exact through ``g.max_degree``."""
    d = g.max_degree
    out = _plethysm_ps(to_power_sum(f), to_power_sum(g.value), d)
    return TruncatedSeries(from_power_sum(out), d)


@lru_cache(maxsize=None)
def _schur_of_H(mu: Partition, d: int) -> SchurPoly:
    return plethysm_truncated(SchurPoly.basis(mu), H_series(d)).value


def schur_of_H(mu, max_degree: int) -> TruncatedSeries:
    """``s_mu[H]`` truncated at ``max_degree`` (cached)."""
    return TruncatedSeries(_schur_of_H(Partition(mu), max_degree), max_degree)


def plethysm_adjoint(f: SchurPoly, g: SchurPoly) -> SchurPoly:
    """``f[g^perp] = sum_mu <f, s_mu[g]> s_mu`` for homogeneous ``g`` of positive degree."""
    if not g:
        return SchurPoly()
    if not g.is_homogeneous():
        raise ValueError("plethysm_adjoint needs homogeneous g")
    k = g.degree()
    if k < 1:
        raise ValueError("g of degree 0 gives a series; use s_lambda_hr_perp_closed(r=0)")
    terms = {}
    for d in sorted(f.degrees()):
        if d % k:
            continue
        fd = f.homogeneous_part(d)
        for mu in iter_partitions(d // k):
            c = hall_inner(fd, plethysm(SchurPoly.basis(mu), g))
            if c:
                terms[mu] = terms.get(mu, 0) + c
    return SchurPoly(terms)


def frobenius_oracle(f: SchurPoly, max_degree: int) -> TruncatedSeries:
    """Brute-force ``f[H^perp]`` through degree ``max_degree``.

    The coefficient of ``s_mu`` is ``<f, s_mu[H]>``; only the degree-``deg f``
    part of ``s_mu[H]`` matters, so ``H`` is truncated there.
    """
    if not f.is_homogeneous():
        raise ValueError("frobenius_oracle needs homogeneous f")
    d = max(f.degree(), 0)
    terms = {}
    for mu in partitions_up_to(max_degree):
        c = hall_inner(f, _schur_of_H(mu, d))
        if c:
            terms[mu] = c
    return TruncatedSeries(SchurPoly(terms), max_degree)


def restriction_oracle(lam, mu) -> int:
    """``<s_lam, s_mu[H]>``, valid for every partition ``lam``."""
    lam, mu = Partition(lam), Partition(mu)
    return _schur_of_H(mu, lam.size)[lam]
