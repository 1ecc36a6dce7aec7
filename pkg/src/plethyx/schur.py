"""The ring of symmetric functions in the Schur basis.

Coefficients are Python integers (Schur basis) and ``Fraction`` (power-sum
basis), so nothing ever overflows or rounds.
"""
from __future__ import annotations

import itertools
import json
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Mapping, Sequence

from .partitions import (
    EMPTY,
    Partition,
    SkewShape,
    contains,
    format_partition,
    horizontal_strips,
    is_horizontal_strip,
    iter_partitions,
    sort_key,
    transpose,
    vertical_strips,
)
from .tableaux import lr_coefficient


class NonIntegralError(ArithmeticError):
    """A Schur coefficient came out non-integral; indicates an upstream bug."""


class _Poly:
    __slots__ = ("_terms",)
    _coeff_type: type = int

    def __init__(self, terms: Mapping[Sequence[int], object] | Iterable = ()):
        acc: dict[Partition, object] = defaultdict(self._coeff_type)
        items = terms.items() if isinstance(terms, Mapping) else terms
        for lam, c in items:
            acc[Partition(lam)] += self._coeff_type(c)
        self._terms = {lam: c for lam, c in acc.items() if c != 0}

    @classmethod
    def _raw(cls, terms: dict):
        obj = cls.__new__(cls)
        obj._terms = {lam: c for lam, c in terms.items() if c != 0}
        return obj

    @property
    def terms(self) -> dict[Partition, object]:
        return dict(self._terms)

    def items(self):
        """Terms in canonical order."""
        return sorted(self._terms.items(), key=lambda kv: sort_key(kv[0]))

    def __getitem__(self, lam) -> object:
        return self._terms.get(Partition(lam), self._coeff_type(0))

    def __iter__(self):
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and not isinstance(other, bool):
            other = type(self).constant(other)
        if type(other) is not type(self):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    @classmethod
    def constant(cls, c):
        return cls._raw({EMPTY: cls._coeff_type(c)})

    @classmethod
    def basis(cls, lam: Sequence[int], c=1):
        return cls._raw({Partition(lam): cls._coeff_type(c)})

    def __add__(self, other):
        if isinstance(other, int):
            other = type(self).constant(other)
        if type(other) is not type(self):
            return NotImplemented
        acc = dict(self._terms)
        for lam, c in other._terms.items():
            acc[lam] = acc.get(lam, 0) + c
        return type(self)._raw(acc)

    __radd__ = __add__

    def __neg__(self):
        return type(self)._raw({lam: -c for lam, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        return type(self)._raw({lam: c * v for lam, v in self._terms.items()})

    def degrees(self) -> set[int]:
        return {lam.size for lam in self._terms}

    def degree(self) -> int:
        """Top degree; -1 for the zero element."""
        return max(self.degrees(), default=-1)

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def homogeneous_part(self, d: int):
        return type(self)._raw({lam: c for lam, c in self._terms.items() if lam.size == d})

    def truncate(self, max_degree: int):
        return type(self)._raw({lam: c for lam, c in self._terms.items() if lam.size <= max_degree})


class SchurPoly(_Poly):
    """Finite integer combination of Schur functions."""

    __slots__ = ()
    _coeff_type = int

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, SchurPoly):
            return NotImplemented
        return multiply(self, other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def __repr__(self) -> str:
        return format_poly(self, "s")

    def to_json(self) -> dict:
        return {
            "terms": [
                {"partition": list(lam), "coeff": c} for lam, c in self.items()
            ]
        }

    @classmethod
    def from_json(cls, data: dict | str) -> "SchurPoly":
        if isinstance(data, str):
            data = json.loads(data)
        return cls((t["partition"], t["coeff"]) for t in data["terms"])


class PowerSumPoly(_Poly):
    """Finite rational combination of power-sum products ``p_rho``."""

    __slots__ = ()
    _coeff_type = Fraction

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(Fraction(other))
        if not isinstance(other, PowerSumPoly):
            return NotImplemented
        return power_sum_multiply(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(Fraction(other))
        return NotImplemented

    def __repr__(self) -> str:
        return format_poly(self, "p")


def format_poly(f: _Poly, letter: str) -> str:
    if not f:
        return "0"
    out = []
    for lam, c in f.items():
        sign = "-" if c < 0 else "+"
        a = abs(c)
        body = f"{letter}{format_partition(lam, brackets=True)}"
        if a != 1:
            body = f"{a}*{body}"
        out.append((sign, body))
    first_sign, first = out[0]
    text = ("-" if first_sign == "-" else "") + first
    for sign, body in out[1:]:
        text += f" {sign} {body}"
    return text


def s(*parts: int) -> SchurPoly:
    """Shorthand: ``s(2, 1)`` is the Schur function s_{2,1}."""
    return SchurPoly.basis(parts)


ONE = SchurPoly.constant(1)
ZERO = SchurPoly()


# -- arithmetic ---------------------------------------------------------------

def add(f: SchurPoly, g: SchurPoly) -> SchurPoly:
    return f + g


def scale(c: int, f: SchurPoly) -> SchurPoly:
    return f.scale(c)


@lru_cache(maxsize=None)
def _schur_product(mu: Partition, nu: Partition) -> tuple[tuple[Partition, int], ...]:
    if not mu:
        return ((nu, 1),)
    if not nu:
        return ((mu, 1),)
    if len(nu) == 1:
        return tuple((lam, 1) for lam in horizontal_strips(mu, nu[0]))
    if nu[0] == 1:
        return tuple((lam, 1) for lam in vertical_strips(mu, len(nu)))
    n = mu.size + nu.size
    out = []
    width = mu[0] + nu[0]
    for lam in iter_partitions(n, width, len(mu) + len(nu)):
        if contains(lam, mu) and contains(lam, nu):
            c = lr_coefficient(lam, mu, nu)
            if c:
                out.append((lam, c))
    return tuple(out)


def multiply(f: SchurPoly, g: SchurPoly) -> SchurPoly:
    """Product in the Schur basis, expanded with LR coefficients."""
    acc: dict[Partition, int] = defaultdict(int)
    for mu, a in f._terms.items():
        for nu, b in g._terms.items():
            # LR coefficients are symmetric; canonicalise the cache key
            key = (mu, nu) if (len(mu), mu) <= (len(nu), nu) else (nu, mu)
            for lam, c in _schur_product(*key):
                acc[lam] += a * b * c
    return SchurPoly._raw(acc)


def hall_inner(f: _Poly, g: _Poly) -> int:
    """Hall inner product in the Schur basis (the Schur functions are orthonormal)."""
    if len(f) > len(g):
        f, g = g, f
    return sum(c * g[lam] for lam, c in f._terms.items())


def skew_schur(outer: Sequence[int] | SkewShape, inner: Sequence[int] | None = None) -> SchurPoly:
    """``s_{outer/inner}``; zero when inner is not contained in outer."""
    if inner is None:
        outer, inner = outer
    lam, mu = Partition(outer), Partition(inner)
    if not contains(lam, mu):
        return ZERO
    n = lam.size - mu.size
    terms = {}
    for nu in iter_partitions(n, lam[0] if lam else 0, len(lam)):
        c = lr_coefficient(lam, mu, nu)
        if c:
            terms[nu] = c
    return SchurPoly._raw(terms)


def omega(f: SchurPoly) -> SchurPoly:
    return SchurPoly._raw({transpose(lam): c for lam, c in f._terms.items()})


def antipode(f: SchurPoly) -> SchurPoly:
    """``(-1)^d omega`` on each degree-d component."""
    return SchurPoly._raw(
        {transpose(lam): (-c if lam.size % 2 else c) for lam, c in f._terms.items()}
    )


# -- h, e and Pieri -----------------------------------------------------------

def _index(m) -> int | None:
    """Single choke point for the convention h_m = e_m = 0 unless m is in N."""
    if isinstance(m, Fraction):
        if m.denominator != 1:
            return None
        m = m.numerator
    m = int(m)
    return m if m >= 0 else None


def pieri_h(r: int, mu: Sequence[int]) -> SchurPoly:
    """``h_r s_mu``: sum over horizontal strips of ``r`` boxes added to ``mu``."""
    if r < 0:
        return ZERO
    return SchurPoly._raw({lam: 1 for lam in horizontal_strips(Partition(mu), r)})


def pieri_e(r: int, mu: Sequence[int]) -> SchurPoly:
    """``e_r s_mu``: sum over vertical strips of ``r`` boxes added to ``mu``."""
    if r < 0:
        return ZERO
    return SchurPoly._raw({lam: 1 for lam in vertical_strips(Partition(mu), r)})


def h_times(r: int, f: SchurPoly) -> SchurPoly:
    acc: dict[Partition, int] = defaultdict(int)
    for mu, c in f._terms.items():
        for lam in horizontal_strips(mu, r):
            acc[lam] += c
    return SchurPoly._raw(acc)


def e_times(r: int, f: SchurPoly) -> SchurPoly:
    acc: dict[Partition, int] = defaultdict(int)
    for mu, c in f._terms.items():
        for lam in vertical_strips(mu, r):
            acc[lam] += c
    return SchurPoly._raw(acc)


@lru_cache(maxsize=None)
def _h_product(parts: tuple[int, ...], elementary: bool) -> SchurPoly:
    if not parts:
        return ONE
    times = e_times if elementary else h_times
    return times(parts[0], _h_product(parts[1:], elementary))


def _product_of(indices: Iterable, elementary: bool) -> SchurPoly:
    parts = []
    for m in indices:
        k = _index(m)
        if k is None:
            return ZERO
        if k:
            parts.append(k)
    return _h_product(tuple(sorted(parts, reverse=True)), elementary)


def h_to_schur(lam: Iterable) -> SchurPoly:
    """``h_{lam_1} h_{lam_2} ...`` in the Schur basis; any index outside N gives 0."""
    return _product_of(lam, elementary=False)


def e_to_schur(lam: Iterable) -> SchurPoly:
    """``e_{lam_1} e_{lam_2} ...`` in the Schur basis; any index outside N gives 0."""
    return _product_of(lam, elementary=True)


def h(r: int) -> SchurPoly:
    return h_to_schur((r,))


def e(r: int) -> SchurPoly:
    return e_to_schur((r,))


# -- Jacobi-Trudi ---------------------------------------------------------------

def _jacobi_trudi(alpha: Sequence[int], elementary: bool) -> SchurPoly:
    n = len(alpha)
    acc = ZERO
    # depth-first over permutations, skipping entries with negative index
    used = [False] * n
    chosen: list[int] = []

    def rec(i, sign):
        nonlocal acc
        if i == n:
            acc = acc + _product_of(chosen, elementary).scale(sign)
            return
        # sign of the partial permutation via inversion count
        for j in range(n):
            if used[j]:
                continue
            m = alpha[i] - i + j
            if m < 0:
                continue
            inv = sum(1 for k in range(j + 1, n) if used[k])
            used[j] = True
            chosen.append(m)
            rec(i + 1, -sign if inv % 2 else sign)
            chosen.pop()
            used[j] = False

    rec(0, 1)
    return acc


def jacobi_trudi_h(alpha: Sequence[int]) -> SchurPoly:
    """``det(h_{alpha_i - i + j})`` expanded in the Schur basis."""
    return _jacobi_trudi(tuple(alpha), elementary=False)


def jacobi_trudi_e(alpha: Sequence[int]) -> SchurPoly:
    """``det(e_{alpha_i - i + j})`` expanded in the Schur basis."""
    return _jacobi_trudi(tuple(alpha), elementary=True)


# -- power sums (Murnaghan-Nakayama) ------------------------------------------

@lru_cache(maxsize=None)
def character(lam: Partition, rho: Partition) -> int:
    """Irreducible character value chi^lam(rho) by ribbon removal on beta-sets."""
    if lam.size != rho.size:
        raise ValueError("character needs |lam| == |rho|")
    if not rho:
        return 1
    k, rest = rho[0], Partition(rho[1:])
    n = len(lam)
    beta = [lam[i] + (n - 1 - i) for i in range(n)]
    beads = set(beta)
    total = 0
    for b in beta:
        t = b - k
        if t < 0 or t in beads:
            continue
        height = sum(1 for x in beta if t < x < b)
        new = sorted((beads - {b}) | {t}, reverse=True)
        m = len(new)
        nu = Partition(x - (m - 1 - i) for i, x in enumerate(new))
        value = character(nu, rest)
        total += -value if height % 2 else value
    return total


@lru_cache(maxsize=None)
def z_factor(rho: Partition) -> int:
    """``z_rho = prod_i i^{m_i} m_i!``."""
    out = 1
    for part, grp in itertools.groupby(rho):
        m = len(list(grp))
        out *= part**m * factorial(m)
    return out


def p(*parts: int) -> PowerSumPoly:
    return PowerSumPoly.basis(sorted(parts, reverse=True))


def power_sum_multiply(f: PowerSumPoly, g: PowerSumPoly) -> PowerSumPoly:
    acc: dict[Partition, Fraction] = defaultdict(Fraction)
    for a, x in f._terms.items():
        for b, y in g._terms.items():
            acc[Partition(sorted(a + b, reverse=True))] += x * y
    return PowerSumPoly._raw(acc)


@lru_cache(maxsize=None)
def _schur_in_power_sums(lam: Partition) -> PowerSumPoly:
    return PowerSumPoly._raw(
        {rho: Fraction(character(lam, rho), z_factor(rho)) for rho in iter_partitions(lam.size)}
    )


@lru_cache(maxsize=None)
def _power_sum_in_schur(rho: Partition) -> tuple[tuple[Partition, int], ...]:
    out = []
    for lam in iter_partitions(rho.size):
        c = character(lam, rho)
        if c:
            out.append((lam, c))
    return tuple(out)


def to_power_sum(f: SchurPoly) -> PowerSumPoly:
    acc: dict[Partition, Fraction] = defaultdict(Fraction)
    for lam, c in f._terms.items():
        for rho, v in _schur_in_power_sums(lam)._terms.items():
            acc[rho] += c * v
    return PowerSumPoly._raw(acc)


def from_power_sum(g: PowerSumPoly) -> SchurPoly:
    """Inverse of :func:`to_power_sum`; raises NonIntegralError on fractional output."""
    acc: dict[Partition, Fraction] = defaultdict(Fraction)
    for rho, c in g._terms.items():
        for lam, chi in _power_sum_in_schur(rho):
            acc[lam] += c * chi
    out = {}
    for lam, c in acc.items():
        if c.denominator != 1:
            raise NonIntegralError(f"coefficient {c} of s{lam} is not an integer")
        if c:
            out[lam] = c.numerator
    return SchurPoly._raw(out)


# -- the series H * (finite) ---------------------------------------------------

@dataclass(frozen=True)
class HPrefixedSeries:
    """The element ``H * factor`` of the completed ring, ``H = 1 + h_1 + h_2 + ...``."""

    factor: SchurPoly

    def truncate(self, max_degree: int) -> SchurPoly:
        acc: dict[Partition, int] = defaultdict(int)
        for mu, c in self.factor._terms.items():
            for r in range(max_degree - mu.size + 1):
                for lam in horizontal_strips(mu, r):
                    acc[lam] += c
        return SchurPoly._raw(acc)

    def coefficient(self, mu: Sequence[int]) -> int:
        """``<H * factor, s_mu>``."""
        mu = Partition(mu)
        total = 0
        for nu, c in self.factor._terms.items():
            # s_mu appears in h_r s_nu iff mu/nu is a horizontal strip
            if nu.size <= mu.size and is_horizontal_strip(SkewShape(mu, nu)):
                total += c
        return total

    def __repr__(self) -> str:
        return f"H*({self.factor!r})"

    def to_json(self) -> dict:
        return {**self.factor.to_json(), "h_prefixed": True}

