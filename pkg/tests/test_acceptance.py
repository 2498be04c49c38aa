"""Acceptance criteria, one test each; a PASS/FAIL line per criterion is
printed in the terminal summary."""

import math
import random
import subprocess
import sys
import time
from fractions import Fraction

from structypes.chern import HypersurfaceSpec, adjunction_oracle, chern_hypersurface, euler_char
from structypes.checks import CheckConfig
from structypes.finset import IntegralSet, LabeledSet, cardinal_equivalent, cardinality
from structypes.generators import random_groupoid, random_regular_int_species, random_species
from structypes.groupoid import action_groupoid, gcard, gprod, gsum
from structypes.intspecies import iegf
from structypes.operators import (
    MZ,
    D,
    apply_mixed,
    commutator,
    dcycle_bijection,
    dzpow_bijection,
    sti_bijection,
    vop,
    xop,
)
from structypes.parse import parse_program
from structypes.series import mul, theta
from structypes.species import (
    EMPTY_SYSTEM,
    Cycle,
    Deriv,
    Injections,
    LinOrder,
    Prod,
    ScalarMul,
    Sum,
    ZPow,
    count,
    egf,
)

CFG = CheckConfig()
ORDER = 8


def criterion(label):
    def mark(fn):
        fn.criterion = label
        return fn

    return mark


def random_suite():
    # the same seeded pairs the egf-hom check uses
    rng = random.Random(CFG.seed)
    return [(random_species(rng, 4), random_species(rng, 4)) for _ in range(CFG.egf_pairs)]


@criterion("1. Catalan EGF of B = 1 + Z*B^2")
def test_catalan():
    t = time.perf_counter()
    b, sys_ = parse_program("let B = 1 + Z*B^2; B")
    series = egf(b, sys_, 7)
    elapsed = time.perf_counter() - t
    catalan = [math.comb(2 * n, n) // (n + 1) for n in range(7)]
    assert list(series) == [1, 1, 2, 5, 14, 42, 132] == catalan
    assert count(b, sys_, 6) == math.factorial(6) * 132
    assert elapsed < 1


@criterion("2. EGF is a homomorphism on 200 random pairs")
def test_egf_homomorphism():
    t = time.perf_counter()
    pairs = random_suite()
    assert len(pairs) >= 200
    for f, g in pairs:
        ef, eg = egf(f, order=ORDER), egf(g, order=ORDER)
        assert egf(Sum(f, g), order=ORDER) == ef + eg
        assert egf(Prod(f, g), order=ORDER) == mul(ef, eg)
    assert time.perf_counter() - t < 60


@criterion("3. derivative identities and bijections")
def test_derivative_identities():
    for n in range(6):
        assert count(Deriv(ZPow(3)), n=n) == count(ScalarMul(3, ZPow(2)), n=n)
        assert count(Deriv(Cycle(4)), n=n) == count(ZPow(3), n=n)
    assert len(dzpow_bijection(3, ["a", "b"])) == 6
    assert len(dcycle_bijection(3, ["a", "b"])) == 2
    assert len(dzpow_bijection(4, ["a", "b", "c"])) == 24
    assert len(dcycle_bijection(4, ["a", "b", "c"])) == 6
    for f, g in random_suite():
        for h in (f, g):
            assert egf(Deriv(h), order=ORDER - 1) == egf(h, order=ORDER).derivative()


@criterion("4. commutator [D, M_Z] acts as the identity")
def test_commutator():
    op = commutator(D, MZ)
    for f, _ in random_suite():
        phi = apply_mixed(op, f, EMPTY_SYSTEM, ORDER)
        assert iegf(phi, ORDER) == egf(f, order=ORDER)
    rng = random.Random(CFG.seed + 3)
    checked = 0
    for _ in range(50):
        f = random_species(rng, 4)
        for n in range(6):
            s = LabeledSet.canonical(n)
            m = sti_bijection(f, EMPTY_SYSTEM, s)
            assert len(m) == count(Deriv(Prod(ZPow(1), f)), n=n)
        checked += 1
    assert checked >= 50


@criterion("5. cyclic quotient of Z^n is Z^(n-1)")
def test_x_on_zpow():
    for n in range(2, 8):
        s = LabeledSet.canonical(n - 1)
        reps = xop(ZPow(n), EMPTY_SYSTEM, s)  # raises NonFreeAction on a non-free orbit
        assert len(reps) == math.factorial(n - 1) == count(ZPow(n - 1), n=n - 1)
        assert len(reps) * n == count(ZPow(n), n=n)


@criterion("6. vop decategorifies to theta on 100 regular signed species")
def test_vop_matches_theta():
    t = time.perf_counter()
    rng = random.Random(CFG.seed + 1)
    for _ in range(100):
        phi = random_regular_int_species(rng, 8, 5)
        assert iegf(vop(phi, 8), 8) == theta(iegf(phi, 9))
    assert time.perf_counter() - t < 30


@criterion("7. Chern classes match the adjunction formula on the 45-case grid")
def test_chern_grid():
    t = time.perf_counter()
    cases = 0
    for n in range(2, 7):
        for d in range(1, 10):
            spec = HypersurfaceSpec(n, d)
            assert list(chern_hypersurface(spec).coeffs) == list(adjunction_oracle(spec).coeffs)
            cases += 1
    assert cases == 45
    assert euler_char(HypersurfaceSpec(2, 3)) == 0
    assert euler_char(HypersurfaceSpec(3, 4)) == 24
    assert euler_char(HypersurfaceSpec(4, 5)) == -200
    assert list(chern_hypersurface(HypersurfaceSpec(3, 4)).coeffs) == [0, 4, 0, 24]
    assert time.perf_counter() - t < 5


@criterion("8. groupoid cardinality of F(S)//S_n is F_n/n!")
def test_groupoid_suite():
    family = [ZPow(k) for k in range(5)] + [Cycle(k) for k in range(5)] + [LinOrder()]
    family += [Injections(m) for m in range(6)]
    for f in family:
        for n in range(7):
            assert gcard(action_groupoid(f, n=n)) == Fraction(count(f, n=n), math.factorial(n))
    rng = random.Random(CFG.seed + 2)
    for _ in range(100):
        g, h = random_groupoid(rng), random_groupoid(rng)
        assert gcard(gsum(g, h)) == gcard(g) + gcard(h)
        assert gcard(gprod(g, h)) == gcard(g) * gcard(h)


def _random_integral_set(rng, tag):
    p, n = rng.randint(0, 5), rng.randint(0, 5)
    return IntegralSet([f"{tag}p{i}" for i in range(p)], [f"{tag}n{i}" for i in range(n)])


def _sized(k, tag):
    return IntegralSet([f"{tag}{i}" for i in range(k)]) if k >= 0 else IntegralSet((), [f"{tag}{i}" for i in range(-k)])


@criterion("9. integral-set cardinality and the worked identity")
def test_integral_sets():
    rng = random.Random(CFG.seed + 4)
    for i in range(200):
        x = _random_integral_set(rng, "x")
        y = _random_integral_set(rng, "y" if i % 2 else "x")  # odd cases share labels
        assert cardinality(x | y) == cardinality(x) + cardinality(y)
        assert cardinality(x @ y) == cardinality(x) * cardinality(y)
    five_minus_three = IntegralSet(["p1", "p2", "p3", "p4", "p5"], ["q1", "q2", "q3"])
    lhs = (_sized(-3, "t") @ five_minus_three) | _sized(2, "u")
    rhs = _sized(-1, "v") | _sized(-3, "w")
    assert cardinality(lhs) == cardinality(rhs) == -4
    assert cardinal_equivalent(lhs, rhs)
    assert not cardinal_equivalent(lhs, _sized(-3, "w"))


@criterion("10. check all passes and is deterministic")
def test_cli_determinism():
    cmd = [sys.executable, "-m", "structypes", "check", "all"]
    first = subprocess.run(cmd, capture_output=True)
    second = subprocess.run(cmd, capture_output=True)
    assert first.returncode == 0, first.stdout.decode() + first.stderr.decode()
    assert first.stdout == second.stdout
    lines = first.stdout.decode().splitlines()
    assert len(lines) == 4 and all(line.startswith("PASS ") for line in lines)
