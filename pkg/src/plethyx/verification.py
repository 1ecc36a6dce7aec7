"""Independent oracles and exhaustive differential sweeps.

The monomial-substitution oracle evaluates ``f`` at the monomials of ``g``
in finitely many variables and re-expands by leading-term subtraction; it
never touches the power-sum basis, so it checks :func:`plethysm` from the
outside.  Sweeps compare each closed form against brute force on a finite
grid and report every mismatch.
"""
from __future__ import annotations

import itertools
import os
import time
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Iterator

from . import formulas
from .partitions import (
    Partition,
    horizontal_strips,
    iter_partitions,
    partitions_up_to,
    sort_key,
    transpose,
)
from .plethysm import frobenius_oracle, plethysm, plethysm_adjoint, restriction_oracle
from .schur import (
    ONE,
    SchurPoly,
    antipode,
    e_to_schur,
    from_power_sum,
    h,
    h_to_schur,
    hall_inner,
    jacobi_trudi_e,
    jacobi_trudi_h,
    omega,
    skew_schur,
    to_power_sum,
)
from .tableaux import lr_coefficient

DEFAULT_CAP = 10


class CapExceeded(RuntimeError):
    """The monomial oracle would need more variables than allowed."""


def monomial_cap() -> int:
    return int(os.environ.get("PLETHYX_CAP", DEFAULT_CAP))


# -- monomial-substitution oracle ------------------------------------------------

@lru_cache(maxsize=None)
def kostka(lam: Partition, weight: Partition) -> int:
    """Number of semistandard tableaux of shape ``lam`` and content ``weight``."""
    if lam.size != weight.size:
        return 0
    layer = {Partition(): 1}
    for w in weight:
        nxt: dict[Partition, int] = defaultdict(int)
        for mu, c in layer.items():
            for nu in horizontal_strips(mu, w, bound=lam):
                nxt[nu] += c
        layer = nxt
    return layer.get(lam, 0)


def _compositions(n: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 0:
        if n == 0:
            yield ()
        return
    for first in range(n, -1, -1):
        for rest in _compositions(n - first, parts - 1):
            yield (first,) + rest


def _monomials(g: SchurPoly, nvars: int) -> list[tuple[int, ...]]:
    """Exponent vectors of ``g(x_1..x_nvars)``, repeated by coefficient."""
    k = g.degree()
    out = []
    for beta in _compositions(k, nvars):
        key = Partition(sorted(beta, reverse=True))
        c = sum(a * kostka(lam, key) for lam, a in g.terms.items())
        if c < 0:
            raise ValueError("monomial oracle needs g with nonnegative monomial coefficients")
        out.extend([beta] * c)
    return out


def _h_of_monomials(monos: list[tuple[int, ...]], top: int, nvars: int) -> list[dict]:
    """``h_j(M_1, ..., M_N)`` for ``j <= top`` as polynomials in ``nvars`` variables."""
    zero = (0,) * nvars
    hs = [{zero: 1}] + [{} for _ in range(top)]
    for m in monos:
        # multiply the generating series by 1/(1 - m t)
        for j in range(1, top + 1):
            cur = hs[j]
            for expo, c in hs[j - 1].items():
                key = tuple(a + b for a, b in zip(expo, m))
                cur[key] = cur.get(key, 0) + c
    return hs


def _symmetric_part(poly: dict) -> dict[Partition, int]:
    """Coefficients of the monomials with weakly decreasing exponents."""
    return {
        Partition(expo): c
        for expo, c in poly.items()
        if c and all(expo[i] >= expo[i + 1] for i in range(len(expo) - 1))
    }


def _sym_mul(a: dict[Partition, int], b: dict[Partition, int], nvars: int) -> dict[Partition, int]:
    """Product of homogeneous symmetric polynomials given by dominant coefficients."""
    if not a or not b:
        return {}
    da = next(iter(a)).size
    db = next(iter(b)).size
    out = {}
    for alpha in iter_partitions(da + db, max_length=nvars):
        total = 0
        for beta in itertools.product(*(range(x + 1) for x in alpha)):
            if sum(beta) != da:
                continue
            ka = Partition(sorted(beta, reverse=True))
            kb = Partition(sorted((x - y for x, y in zip(alpha, beta)), reverse=True))
            ca = a.get(ka)
            if ca:
                cb = b.get(kb)
                if cb:
                    total += ca * cb
        if total:
            out[alpha] = total
    return out


def _jt_h_terms(lam: Partition) -> list[tuple[int, tuple[int, ...]]]:
    """Jacobi-Trudi: ``s_lam`` as signed products of ``h``'s (no straightening)."""
    n = len(lam)
    out = []
    for perm in itertools.permutations(range(n)):
        idx = [lam[i] - i + perm[i] for i in range(n)]
        if any(x < 0 for x in idx):
            continue
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        out.append((-1 if inv % 2 else 1, tuple(sorted((x for x in idx if x), reverse=True))))
    return out


def _leading_term_expand(poly: dict[Partition, int]) -> SchurPoly:
    poly = {k: v for k, v in poly.items() if v}
    out = {}
    while poly:
        lead = max(poly, key=tuple)
        c = poly[lead]
        out[lead] = c
        for beta in list(iter_partitions(lead.size)):
            if tuple(beta) > tuple(lead):
                continue
            k = kostka(lead, beta)
            if k:
                v = poly.get(beta, 0) - c * k
                if v:
                    poly[beta] = v
                else:
                    poly.pop(beta, None)
    return SchurPoly(out)


def monomial_substitution_plethysm(f: SchurPoly, g: SchurPoly, cap: int | None = None) -> SchurPoly:
    """``f[g]`` by evaluating ``f`` at the monomials of ``g`` in ``deg f * deg g`` variables."""
    if not f or not g:
        return SchurPoly()
    if not (f.is_homogeneous() and g.is_homogeneous()):
        raise ValueError("monomial oracle needs homogeneous f and g")
    df, dg = f.degree(), g.degree()
    if df == 0:
        return f
    if dg == 0:
        # f[c] = f(1, ..., 1) with c ones
        c = g[()]
        if c < 0:
            raise ValueError("monomial oracle needs g with nonnegative monomial coefficients")
        return _leading_term_expand(_evaluate(f, [()] * c, 0))
    nvars = df * dg
    cap = monomial_cap() if cap is None else cap
    if nvars > cap:
        raise CapExceeded(f"deg f * deg g = {nvars} exceeds cap {cap}")
    monos = _monomials(g, nvars)
    return _leading_term_expand(_evaluate(f, monos, nvars))


def _evaluate(f: SchurPoly, monos, nvars) -> dict[Partition, int]:
    df = f.degree()
    hs = [_symmetric_part(x) for x in _h_of_monomials(monos, df, nvars)]
    products: dict[tuple[int, ...], dict] = {(): {Partition(): 1}}

    def h_product(idx):
        if idx not in products:
            products[idx] = _sym_mul(h_product(idx[1:]), hs[idx[0]], nvars)
        return products[idx]

    total: dict[Partition, int] = defaultdict(int)
    for lam, c in f.terms.items():
        for sign, idx in _jt_h_terms(lam):
            for alpha, v in h_product(idx).items():
                total[alpha] += sign * c * v
    return dict(total)


# -- sweep machinery --------------------------------------------------------------

@dataclass
class SweepReport:
    suite: str
    checked: int = 0
    mismatches: list[tuple[str, str, str]] = field(default_factory=list)
    elapsed: float = 0.0
    config: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "checked": self.checked,
            "mismatches": [
                {"input": a, "closed": b, "oracle": c} for a, b, c in self.mismatches
            ],
            "elapsed_ms": round(self.elapsed * 1000),
            "config": self.config,
        }

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (
            f"{status} {self.suite}: {self.checked} checked, "
            f"{len(self.mismatches)} mismatches ({self.elapsed:.2f}s)"
        )


Check = Callable[[tuple], list]


def _run_chunk(check: Check, chunk: list[tuple]) -> tuple[int, list]:
    bad = []
    for cell in chunk:
        bad.extend(check(cell))
    return len(chunk), bad


def _chunks(cells: Iterable[tuple], size: int) -> Iterator[list[tuple]]:
    it = iter(cells)
    while chunk := list(itertools.islice(it, size)):
        yield chunk


def run_sweep(suite: str, cells: Iterable[tuple], check: Check, config: dict, workers: int = 1) -> SweepReport:
    """Stream ``cells`` through ``check``; each call returns a list of mismatches.

    ``check`` must be a module-level function when ``workers > 1``.
    """
    start = time.perf_counter()
    report = SweepReport(suite, config=dict(config))
    if workers <= 1:
        for n, bad in map(lambda ch: _run_chunk(check, ch), _chunks(cells, 64)):
            report.checked += n
            report.mismatches.extend(bad)
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_run_chunk, check, ch) for ch in _chunks(cells, 64)]
            for fut in futures:
                n, bad = fut.result()
                report.checked += n
                report.mismatches.extend(bad)
    report.mismatches.sort()
    report.elapsed = time.perf_counter() - start
    return report


def _fmt(*parts) -> str:
    return " ".join(repr(x) if not isinstance(x, str) else x for x in parts)


# -- plethysm coefficients --------------------------------------------------------

@lru_cache(maxsize=None)
def _s_of_h(mu: Partition, r: int) -> SchurPoly:
    return plethysm(SchurPoly.basis(mu), h(r))


def _plethysm_hr_cells(max_size: int, r_max: int):
    for r in range(1, r_max + 1):
        for d in range(0, max_size + 1, r):
            for lam in iter_partitions(d, max_part=r + 1):
                for mu in iter_partitions(d // r):
                    yield (lam, mu, r)


def _check_plethysm_hr(cell) -> list:
    lam, mu, r = cell
    closed = formulas.plethysm_coeff_hr_closed(lam, mu, r)
    oracle = _s_of_h(mu, r)[lam]
    out = []
    if closed != oracle:
        out.append((_fmt("lam", lam, "mu", mu, "r", r), str(closed), str(oracle)))
    if not lam or lam[0] <= 3:
        small = formulas.plethysm_coeff_small_r(lam, mu, r)
        if small != closed:
            out.append((_fmt("small_r lam", lam, "mu", mu, "r", r), str(small), str(closed)))
    return out


def sweep_plethysm_hr(max_size: int = 8, r_max: int = 4, workers: int = 1) -> SweepReport:
    """Closed ``<s_lam, s_mu[h_r]>`` against brute force for ``lam_1 <= r + 1``."""
    return run_sweep(
        "plethysm-hr",
        _plethysm_hr_cells(max_size, r_max),
        _check_plethysm_hr,
        {"max_size": max_size, "r_max": r_max},
        workers,
    )


# -- s_lam[h_r^perp] ---------------------------------------------------------------

def brute_s_perp(lam: Partition, r: int, max_degree: int) -> SchurPoly:
    if r == 0:
        # <s_lam, s_mu[1]>: s_mu[1] is 1 for one-row mu and 0 otherwise
        return SchurPoly(
            {mu: hall_inner(SchurPoly.basis(lam), plethysm(SchurPoly.basis(mu), ONE))
             for mu in partitions_up_to(max_degree)}
        )
    return plethysm_adjoint(SchurPoly.basis(lam), h(r))


def _s_perp_cells(max_size: int, r_max: int):
    for n in range(max_size + 1):
        for lam in iter_partitions(n, max_part=3):
            for r in range(r_max + 1):
                yield (lam, r, max_size)


def _check_s_perp(cell) -> list:
    lam, r, max_degree = cell
    oracle = brute_s_perp(lam, r, max_degree)
    out = []
    cases = formulas.s_lambda_h_perp_cases(lam, r, max_degree).value
    if cases != oracle:
        out.append((_fmt("cases lam", lam, "r", r), repr(cases), repr(oracle)))
    if not lam or lam[0] <= r + 1:
        closed = formulas.s_lambda_hr_perp_closed(lam, r, max_degree).value
        if closed != oracle:
            out.append((_fmt("closed lam", lam, "r", r), repr(closed), repr(oracle)))
    return out


def sweep_s_perp(max_size: int = 9, r_max: int = 6, workers: int = 1) -> SweepReport:
    """``s_lam[h_r^perp]`` closed forms against the brute-force adjoint, ``lam_1 <= 3``."""
    return run_sweep(
        "s-perp",
        _s_perp_cells(max_size, r_max),
        _check_s_perp,
        {"max_size": max_size, "r_max": r_max},
        workers,
    )


# -- h_lam[h_r^perp], e_lam[h_r^perp] -------------------------------------------------

def _vectors(max_size: int, length: int):
    for n in range(max_size + 1):
        yield from _compositions(n, length)


def _he_perp_cells(max_size: int, l_max: int, r_max: int):
    for l in range(l_max + 1):
        for lam in _vectors(max_size, l):
            for r in range(1, r_max + 1):
                yield ("general", lam, r)
    for r in range(1, r_max + 1):
        for lam in _vectors(max_size, r + 1):
            yield ("special", lam, r)


def _check_he_perp(cell) -> list:
    kind, lam, r = cell
    out = []
    if kind == "general":
        for name, closed_fn, expand in (
            ("h", formulas.h_lambda_hr_perp_closed, h_to_schur),
            ("e", formulas.e_lambda_hr_perp_closed, e_to_schur),
        ):
            closed = closed_fn(lam, r)
            oracle = plethysm_adjoint(expand(lam), h(r))
            if closed != oracle:
                out.append((_fmt(name, lam, "r", r), repr(closed), repr(oracle)))
    else:
        special = formulas.e_vector_hr_perp_special(lam, r)
        general = formulas.e_lambda_hr_perp_closed(lam, r)
        if special != general:
            out.append((_fmt("special", lam, "r", r), repr(special), repr(general)))
    return out


def sweep_he_perp(max_size: int = 8, l_max: int = 3, r_max: int = 3, workers: int = 1) -> SweepReport:
    return run_sweep(
        "he-h-perp",
        _he_perp_cells(max_size, l_max, r_max),
        _check_he_perp,
        {"max_size": max_size, "l_max": l_max, "r_max": r_max},
        workers,
    )


# -- Frobenius transform of h_lam, e_lam --------------------------------------------

def _f_he_cells(max_size: int, l_max: int, extra: int):
    for l in range(l_max + 1):
        for lam in _vectors(max_size, l):
            yield (lam, extra)


def _check_f_he(cell) -> list:
    lam, extra = cell
    top = sum(lam) + extra
    out = []
    for name, closed_fn, expand in (
        ("h", formulas.frobenius_h_closed, h_to_schur),
        ("e", formulas.frobenius_e_closed, e_to_schur),
    ):
        closed = closed_fn(lam, top).truncate(top)
        oracle = frobenius_oracle(expand(lam), top).value
        if closed != oracle:
            out.append((_fmt(name, lam), repr(closed), repr(oracle)))
    return out


def sweep_frobenius_he(max_size: int = 6, l_max: int = 3, extra: int = 3, workers: int = 1) -> SweepReport:
    return run_sweep(
        "f-he",
        _f_he_cells(max_size, l_max, extra),
        _check_f_he,
        {"max_size": max_size, "l_max": l_max, "extra_degrees": extra},
        workers,
    )


# -- restriction coefficients ----------------------------------------------------------

def _restriction_cells(max_lambda: int, max_mu: int):
    for n in range(max_lambda + 1):
        for lam in iter_partitions(n, max_part=3):
            for mu in partitions_up_to(max_mu):
                yield (lam, mu)


def _check_restriction(cell) -> list:
    lam, mu = cell
    via_main = formulas.restriction_via_main(lam, mu)
    tuples = formulas.count_restriction_tuples(lam, mu)
    oracle = restriction_oracle(lam, mu)
    if via_main == tuples == oracle:
        return []
    return [(_fmt("lam", lam, "mu", mu), f"{via_main} {tuples}", str(oracle))]


def sweep_restriction(max_lambda: int = 7, max_mu: int = 7, workers: int = 1) -> SweepReport:
    """Three-way agreement: closed formula, tuple count, brute-force oracle."""
    return run_sweep(
        "restriction",
        _restriction_cells(max_lambda, max_mu),
        _check_restriction,
        {"max_lambda": max_lambda, "max_mu": max_mu},
        workers,
    )


# -- ring integrity ------------------------------------------------------------------

def _ring_cells(max_size: int):
    for n in range(max_size + 1):
        for lam in iter_partitions(n):
            yield ("single", lam)
    for n in range(max_size + 1):
        for a in range(n + 1):
            for mu in iter_partitions(a):
                for nu in iter_partitions(n - a):
                    if sort_key(mu) <= sort_key(nu):
                        yield ("pair", mu, nu)


def _check_ring(cell) -> list:
    out = []
    if cell[0] == "single":
        lam = cell[1]
        s_lam = SchurPoly.basis(lam)
        checks = {
            "jacobi_trudi_h": (jacobi_trudi_h(lam), s_lam),
            "jacobi_trudi_e": (jacobi_trudi_e(lam), SchurPoly.basis(transpose(lam))),
            "round_trip": (from_power_sum(to_power_sum(s_lam)), s_lam),
            "omega_involution": (omega(omega(s_lam)), s_lam),
            "antipode": (antipode(s_lam), omega(s_lam).scale((-1) ** lam.size)),
            "omega_h_to_e": (omega(h_to_schur(lam)), e_to_schur(lam)),
        }
        for name, (got, want) in checks.items():
            if got != want:
                out.append((_fmt(name, lam), repr(got), repr(want)))
        return out
    _, mu, nu = cell
    n = mu.size + nu.size
    lr = SchurPoly({lam: lr_coefficient(lam, mu, nu) for lam in iter_partitions(n)})
    ps = from_power_sum(to_power_sum(SchurPoly.basis(mu)) * to_power_sum(SchurPoly.basis(nu)))
    if lr != ps:
        out.append((_fmt("product", mu, nu), repr(lr), repr(ps)))
    sym = SchurPoly({lam: lr_coefficient(lam, nu, mu) for lam in iter_partitions(n)})
    if sym != lr:
        out.append((_fmt("lr symmetry", mu, nu), repr(lr), repr(sym)))
    if n <= 10:
        prod = SchurPoly.basis(mu) * SchurPoly.basis(nu)
        if omega(prod) != omega(SchurPoly.basis(mu)) * omega(SchurPoly.basis(nu)):
            out.append((_fmt("omega homomorphism", mu, nu), "", ""))
    return out


def sweep_ring(max_size: int = 8, workers: int = 1) -> SweepReport:
    """Jacobi-Trudi, omega, antipode, power-sum round trip, LR vs power-sum products."""
    return run_sweep("ring", _ring_cells(max_size), _check_ring, {"max_size": max_size}, workers)


# -- plethysm laws ---------------------------------------------------------------------

def _laws_cells(max_size: int):
    small = [SchurPoly.basis(lam) for n in (1, 2, 3) for lam in iter_partitions(n)]
    for f in small:
        for g in small:
            for u in (1, 2):
                yield ("assoc", f, g, u)
    for f in small:
        for g in [SchurPoly.basis(lam) for n in (1, 2) for lam in iter_partitions(n)]:
            yield ("negation", f, g)
    gens = {"h1": h(1), "h2": h(2), "e2": e_to_schur((2,))}
    for n in range(5):
        for lam in iter_partitions(n):
            for a, b in itertools.product(gens, repeat=2):
                yield ("addition", lam, gens[a], gens[b])
    for r in range(1, max_size + 1):
        for n in range(1, max_size // r + 1):
            for mu in iter_partitions(n):
                yield ("dual", SchurPoly.basis(mu), h(r))


def _check_laws(cell) -> list:
    kind = cell[0]
    if kind == "assoc":
        _, f, g, u = cell
        left = plethysm(f, plethysm(g, h(u)))
        right = plethysm(plethysm(f, g), h(u))
        ok = left == right
    elif kind == "negation":
        _, f, g = cell
        left = plethysm(f, g.scale(-1))
        right = plethysm(antipode(f), g)
        ok = left == right
    elif kind == "addition":
        _, lam, f, g = cell
        left = plethysm(SchurPoly.basis(lam), f + g)
        right = SchurPoly()
        for n in range(lam.size + 1):
            for mu in iter_partitions(n):
                sk = skew_schur(lam, mu)
                if sk:
                    right = right + plethysm(SchurPoly.basis(mu), f) * plethysm(sk, g)
        ok = left == right
    else:
        _, f, g = cell
        left = plethysm(f, g)
        right = monomial_substitution_plethysm(f, g)
        ok = left == right
    if ok:
        return []
    return [(_fmt(kind, *cell[1:]), repr(left), repr(right))]


def sweep_laws(max_size: int = 8, workers: int = 1) -> SweepReport:
    """Associativity, negation, plethystic addition, and power-sum vs monomial plethysm."""
    return run_sweep("laws", _laws_cells(max_size), _check_laws, {"max_size": max_size}, workers)


SUITES = {
    "plethysm-hr": lambda n, w: sweep_plethysm_hr(n, 4, workers=w),
    "s-perp": lambda n, w: sweep_s_perp(n, 6, workers=w),
    "he-h-perp": lambda n, w: sweep_he_perp(n, 3, 3, workers=w),
    "f-he": lambda n, w: sweep_frobenius_he(n, 3, 3, workers=w),
    "restriction": lambda n, w: sweep_restriction(n, n, workers=w),
    "ring": lambda n, w: sweep_ring(n, workers=w),
    "laws": lambda n, w: sweep_laws(n, workers=w),
}
