"""End-to-end identity suites behind ``structypes check``."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import series as _series
from .errors import StructypesError
from .chern import HypersurfaceSpec, adjunction_oracle, chern_hypersurface, euler_char, euler_poly
from .generators import random_groupoid, random_regular_int_species, random_species
from .groupoid import action_groupoid, gcard, gprod, gsum
from .intspecies import iegf
from .operators import vop
from .species import Cycle, Injections, LinOrder, Prod, Sum, ZPow, count, egf


@dataclass(frozen=True)
class CheckConfig:
    seed: int = 20240601
    egf_pairs: int = 200
    egf_depth: int = 4
    egf_order: int = 8
    vop_cases: int = 100
    vop_degree: int = 8
    vop_mult: int = 5
    grid_n: tuple[int, int] = (2, 6)
    grid_d: tuple[int, int] = (1, 9)
    groupoid_n: int = 6
    groupoid_cases: int = 100


class CheckFailure(Exception):
    pass


@dataclass
class SuiteResult:
    name: str
    cases: int
    failure: str | None = None

    @property
    def ok(self) -> bool:
        return self.failure is None

    def line(self) -> str:
        if self.ok:
            return f"PASS {self.name}: {self.cases} cases"
        return f"FAIL {self.name}: {self.failure}"


def _expect(cond: bool, what: str) -> None:
    if not cond:
        raise CheckFailure(what)


def suite_egf_hom(cfg: CheckConfig) -> int:
    rng = random.Random(cfg.seed)
    n = cfg.egf_order
    for _ in range(cfg.egf_pairs):
        f = random_species(rng, cfg.egf_depth)
        g = random_species(rng, cfg.egf_depth)
        ef, eg = egf(f, order=n), egf(g, order=n)
        _expect(egf(Sum(f, g), order=n) == ef + eg, f"egf({f} + {g}) is not additive")
        _expect(egf(Prod(f, g), order=n) == _series.mul(ef, eg), f"egf({f} * {g}) is not multiplicative")
    return cfg.egf_pairs


def suite_vop_theta(cfg: CheckConfig) -> int:
    rng = random.Random(cfg.seed + 1)
    order = cfg.vop_degree + 1
    for _ in range(cfg.vop_cases):
        phi = random_regular_int_species(rng, cfg.vop_degree, cfg.vop_mult)
        lhs = iegf(vop(phi, cfg.vop_degree), order - 1)
        rhs = _series.theta(iegf(phi, order))
        _expect(lhs == rhs, f"V{phi}: {lhs} != theta(...) = {rhs}")
    return cfg.vop_cases


def suite_chern_grid(cfg: CheckConfig) -> int:
    cases = 0
    for n in range(cfg.grid_n[0], cfg.grid_n[1] + 1):
        e = euler_poly(n)
        for d in range(cfg.grid_d[0], cfg.grid_d[1] + 1):
            spec = HypersurfaceSpec(n, d)
            c, oracle = chern_hypersurface(spec), adjunction_oracle(spec)
            _expect(c == oracle, f"c(n={n}, d={d}) = {c} but adjunction gives {oracle}")
            _expect(euler_char(spec) == e(d), f"chi(n={n}, d={d}) differs from the Euler polynomial")
            iterate = e.as_series()
            for i in range(n, 0, -1):
                _expect(c[i] == _series.eval_at(iterate, d), f"H^{i} coefficient at n={n}, d={d}")
                if i > 1:
                    iterate = _series.theta(iterate)
            cases += 1
    return cases


def suite_groupoid(cfg: CheckConfig) -> int:
    cases = 0
    family = [ZPow(k) for k in range(5)] + [Cycle(k) for k in range(5)] + [LinOrder()]
    family += [Injections(m) for m in range(6)]
    for f in family:
        for n in range(cfg.groupoid_n + 1):
            g = action_groupoid(f, n=n)
            _expect(gcard(g) == Fraction(count(f, n=n), math.factorial(n)), f"gcard of {f} at n={n}")
            cases += 1
    rng = random.Random(cfg.seed + 2)
    for _ in range(cfg.groupoid_cases):
        g, h = random_groupoid(rng), random_groupoid(rng)
        _expect(gcard(gsum(g, h)) == gcard(g) + gcard(h), f"gcard not additive on {g}, {h}")
        _expect(gcard(gprod(g, h)) == gcard(g) * gcard(h), f"gcard not multiplicative on {g}, {h}")
        cases += 1
    return cases


SUITES: dict[str, Callable[[CheckConfig], int]] = {
    "egf-hom": suite_egf_hom,
    "cmm": suite_vop_theta,
    "chern-grid": suite_chern_grid,
    "groupoid": suite_groupoid,
}


def run_suite(name: str, cfg: CheckConfig | None = None) -> list[SuiteResult]:
    cfg = cfg or CheckConfig()
    names = list(SUITES) if name == "all" else [name]
    results = []
    for n in names:
        try:
            results.append(SuiteResult(n, SUITES[n](cfg)))
        except CheckFailure as exc:
            results.append(SuiteResult(n, 0, str(exc)))
        except StructypesError as exc:
            results.append(SuiteResult(n, 0, f"{type(exc).__name__}: {exc}"))
    return results
