"""The property-verification suite behind the ``verify-paper`` command.

Each check exercises one mathematical statement about the convolution
ring at a finite window and is a deterministic function of (window,
seed), so two runs with the same arguments print byte-identical reports.
A failed check names the statement it was validating.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

from . import ideals, sampling, structure, zoo
from .ideals import IdealSpec, chain, divisibility_depth, member, probe_prime, probe_semiprime
from .primes import factorize
from .ring import ArithFunc, NotDivisibleWitness, delta, identity, try_divide
from .structure import (
    CERT_COMPOSITE_NEXT,
    CERT_PRIME_NORM,
    certified_atom_factor_search,
    classify,
)
from .witness import MEMBER, NON_MEMBER, UNDECIDED

MIN_WINDOW = 64


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


class _Ctx:
    def __init__(self, n: int, seed: int, name: str):
        self.n = n
        self.seed = seed
        self.rng = random.Random(f"{seed}/{name}")


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise AssertionError(message)


# ring structure ----------------------------------------------------------


def _check_invertibility(ctx: _Ctx) -> str:
    e = identity(ctx.n)
    hits = {True: 0, False: 0}
    for _ in range(30):
        f = sampling.random_nonzero(ctx.rng, ctx.n)
        if f(1):
            _require(f.convolve(f.invert()) == e, "inverse round-trip broke")
            hits[True] += 1
        else:
            try:
                f.invert()
            except Exception:
                hits[False] += 1
            else:
                raise AssertionError("inverted an element with f(1) = 0")
    return f"{hits[True]} units inverted exactly, {hits[False]} non-units rejected"


def _check_units_group(ctx: _Ctx) -> str:
    verdict = structure.units_group_probe(12, ctx.seed, min(ctx.n, 64))
    _require(verdict.verdict == MEMBER, verdict.note)
    return verdict.note


def _check_additive_nonunits(ctx: _Ctx) -> str:
    for _ in range(8):
        f = sampling.random_additive(ctx.rng, ctx.n)
        g = sampling.random_additive(ctx.rng, ctx.n)
        _require(zoo.is_additive(f).is_member, "additive sample failed its own check")
        _require(zoo.is_additive(f + g).is_member, "sum of additives not additive")
        _require(zoo.is_additive(-f).is_member, "negation of additive not additive")
        if not f.is_zero():
            _require(classify(f).in_maximal, "an additive function came out a unit")
    return "8 sampled additive pairs: closed under +, -, all non-units"


def _check_local_dichotomy(ctx: _Ctx) -> str:
    for _ in range(20):
        f = sampling.random_nonzero(ctx.rng, ctx.n)
        report = classify(f)
        _require(report.is_unit != report.in_maximal, "unit xor maximal failed")
        g = sampling.random_non_unit(ctx.rng, ctx.n)
        h = sampling.random_func(ctx.rng, ctx.n)
        if not f(1):
            _require((f + g)(1) == 0, "maximal ideal not closed under +")
        _require(g.convolve(h)(1) == 0, "maximal ideal absorbed nothing")
    return "20 samples: dichotomy and maximal-ideal closure hold"


def _check_essential(ctx: _Ctx) -> str:
    for _ in range(10):
        f = sampling.random_nonzero(ctx.rng, ctx.n)
        w = structure.essential_witness(f)
        _require(not w.is_zero(), "witness vanished")
        _require(w(1) == 0, "witness escaped the maximal ideal")
    return "10 nonzero samples each meet the maximal ideal inside their ideal"


def _check_norm_homomorphism(ctx: _Ctx) -> str:
    _require(identity(ctx.n).norm() == 1, "norm(e) != 1")
    count = 0
    for _ in range(25):
        i = ctx.rng.randint(1, 12)
        j = ctx.rng.randint(1, max(1, ctx.n // i // 2))
        f = sampling.random_with_norm(ctx.rng, ctx.n, i)
        g = sampling.random_with_norm(ctx.rng, ctx.n, j)
        _require(f.convolve(g).norm() == i * j, f"norm broke at {i} * {j}")
        count += 1
    return f"norm(e) = 1 and {count} random pairs multiply norms exactly"


def _check_integral_domain(ctx: _Ctx) -> str:
    for _ in range(20):
        i = ctx.rng.randint(1, 8)
        j = ctx.rng.randint(1, max(1, ctx.n // i // 2))
        f = sampling.random_with_norm(ctx.rng, ctx.n, i)
        g = sampling.random_with_norm(ctx.rng, ctx.n, j)
        _require(not f.convolve(g).is_zero(), "zero divisor appeared in the window")
    return "20 nonzero pairs with visible norm product: products all nonzero"


def _check_no_idempotents(ctx: _Ctx) -> str:
    window = 8
    found = []
    for tail in itertools.product((-1, 0, 1), repeat=window):
        prod = [0] * window
        for i in range(1, window + 1):
            if not tail[i - 1]:
                continue
            for j in range(1, window // i + 1):
                if tail[j - 1]:
                    prod[i * j - 1] += tail[i - 1] * tail[j - 1]
        if tuple(prod) == tail:
            found.append(tail)
    zero = (0,) * window
    e = (1,) + (0,) * (window - 1)
    _require(sorted(found) == sorted([zero, e]), f"unexpected idempotents: {found}")
    return f"exhaustive window-8 search over {3 ** window} candidates: only 0 and e"


def _check_atoms_every_norm(ctx: _Ctx) -> str:
    window = 13
    for c in range(2, 13):
        f = delta(c, window) + delta(c + 1, window)
        report = classify(f)
        expected = CERT_PRIME_NORM if report.norm in (2, 3, 5, 7, 11) else CERT_COMPOSITE_NEXT
        _require(report.norm == c, f"constructed function has norm {report.norm}")
        _require(
            report.atom_certificate == expected,
            f"norm {c}: certificate {report.atom_certificate}, wanted {expected}",
        )
    counterexample = certified_atom_factor_search(window=10)
    _require(counterexample is None, f"certified atom factored: {counterexample}")
    return "certificates fire for every norm 2..12; bounded search finds no factorization"


def _check_nonprime_norm_products(ctx: _Ctx) -> str:
    for _ in range(15):
        f = sampling.random_non_unit(ctx.rng, ctx.n)
        g = sampling.random_non_unit(ctx.rng, ctx.n)
        verdict = structure.check_nonprime_norm_product(f, g)
        _require(verdict.verdict == MEMBER, verdict.note)
    return "15 non-unit products vanish at every prime index in the window"


# chains -------------------------------------------------------------------


def _check_descending_norm_chain(ctx: _Ctx) -> str:
    report = chain("I_descending", 8, ctx.n)
    return f"I_1 through I_8 strictly descend; separators {_sep_labels(report)}"


def _check_ascending_prime_tail_chain(ctx: _Ctx) -> str:
    report = chain("K_ascending", 8, ctx.n)
    return f"K_1 through K_8 strictly ascend; separators {_sep_labels(report)}"


def _sep_labels(report) -> str:
    return ", ".join(link.separator_label for link in report.links)


def _check_krull_chains(ctx: _Ctx) -> str:
    up = chain("P_ascending", 5, ctx.n)
    down = chain("J_descending", 5, ctx.n)
    return (
        f"{up.specs[0]} through {up.specs[-1]} ascend strictly; "
        f"{down.specs[0]} through {down.specs[-1]} descend strictly"
    )


# prime and semi-prime ideals ----------------------------------------------


def _check_prime_tail_not_prime(ctx: _Ctx) -> str:
    for t in (1, 2, 3):
        verdict = probe_prime(IdealSpec.prime_tail(t), trials=0, seed=ctx.seed, window=ctx.n)
        _require(verdict.verdict == NON_MEMBER, f"no witness for the tail ideal K_{t}")
        f, g = verdict.elements
        _require(f.values[0] == 0 and f.values[1] == 1, "unexpected witness shape")
    return "the all-ones-from-2 witness refutes primality of K_1, K_2, K_3"


def _check_coprime_ideal_prime(ctx: _Ctx) -> str:
    spec = IdealSpec.coprime_vanishing(6)
    verdict = probe_prime(spec, trials=40, seed=ctx.seed, window=min(ctx.n, 64))
    _require(verdict.verdict == UNDECIDED, "a probe refuted primality of P_6")
    for _ in range(10):
        f = sampling.random_func(ctx.rng, ctx.n)
        g = sampling.random_func(ctx.rng, ctx.n)
        wf, wg = member(spec, f), member(spec, g)
        if wf.is_member or wg.is_member:
            continue
        k1, k2 = wf.index, wg.index
        if k1 * k2 <= ctx.n:
            _require(
                f.convolve(g)(k1 * k2) == f(k1) * g(k2),
                "product witness identity failed",
            )
    return "40-trial probe finds no counterexample; product-witness identity holds"


def _check_principal_prime(ctx: _Ctx) -> str:
    for p in (2, 3, 5):
        spec = IdealSpec.coprime_vanishing(p)
        for _ in range(6):
            f = sampling.random_in_ideal(ctx.rng, spec, ctx.n)
            q = ideals.principal_quotient(p, f)
            back = ideals.indicator_shift(p, q, ctx.n)
            _require(back == f, f"round-trip through the quotient failed at p = {p}")
    return "18 members of P_2, P_3, P_5 reconvolve exactly from their quotients"


def _check_generator_count(ctx: _Ctx) -> str:
    for m in (6, 12):
        spec = IdealSpec.coprime_vanishing(m)
        qs = factorize(m).distinct_primes
        for _ in range(6):
            f = sampling.random_in_ideal(ctx.rng, spec, ctx.n)
            dec = ideals.decompose_coprime_vanishing(m, f)
            _require(dec.reconstruction() == f, f"reconstruction failed for m = {m}")
        basis = [[g(q) for q in qs] for g in
                 (delta(q, ctx.n) for q in qs)]
        expected = [[Fraction(int(i == j)) for j in range(len(qs))] for i in range(len(qs))]
        _require(basis == expected, "indicator evaluations are not the standard basis")
    return "12 members of P_6 and P_12 reconstruct exactly; evaluations give the standard basis"


def _check_not_bezout(ctx: _Ctx) -> str:
    window = min(ctx.n, 64)
    d2, d3 = delta(2, window), delta(3, window)
    spec = IdealSpec.coprime_vanishing(6)
    _require(member(spec, d2).is_member and member(spec, d3).is_member, "indicators not in P_6")
    _require(not member(spec, delta(5, window)).is_member, "P_6 swallowed delta_5")
    units = 0
    for _ in range(100):
        g = sampling.random_nonzero(ctx.rng, window)
        if g(1):
            units += 1
            continue
        divides_both = not isinstance(try_divide(d2, g), NotDivisibleWitness) and not isinstance(
            try_divide(d3, g), NotDivisibleWitness
        )
        _require(not divides_both, "a single non-unit divided both generators")
    return f"no common divisor among 100 candidates ({units} units rejected since P_6 is proper)"


def _check_prime_products_ideal(ctx: _Ctx) -> str:
    allow = IdealSpec.prime_products((2, 3))
    verdict = probe_prime(allow, trials=40, seed=ctx.seed, window=min(ctx.n, 64))
    _require(verdict.verdict == UNDECIDED, "a probe refuted primality of J_{2,3}")
    co = IdealSpec.prime_products((2, 3), complement=True)
    pm = IdealSpec.coprime_vanishing(6)
    for idx in range(1, min(ctx.n, 64) + 1):
        d = delta(idx, min(ctx.n, 64))
        _require(
            member(co, d).verdict == member(pm, d).verdict,
            f"complement-mode J and P_6 disagree on delta_{idx}",
        )
    for _ in range(10):
        f = sampling.random_func(ctx.rng, min(ctx.n, 64))
        _require(
            member(co, f).verdict == member(pm, f).verdict,
            "complement-mode J and P_6 disagree on a random function",
        )
    return "probe undecided as expected; finite-complement J agrees with P_6 everywhere tested"


def _check_inclusion_chain(ctx: _Ctx) -> str:
    window = min(ctx.n, 64)
    p_small = IdealSpec.coprime_vanishing(2)
    p_mid = IdealSpec.coprime_vanishing(6)
    j_q = IdealSpec.prime_products((5, 7))
    j_single = IdealSpec.prime_products((5,))
    checked = 0
    candidates = [delta(i, window) for i in range(1, window + 1)]
    for _ in range(10):
        candidates.append(sampling.random_func(ctx.rng, window))
    for f in candidates:
        if member(p_small, f).is_member:
            _require(member(p_mid, f).is_member, "P_2 escaped P_6")
        if member(p_mid, f).is_member:
            _require(member(j_q, f).is_member, "P_6 escaped J_{5,7}")
        if member(j_q, f).is_member:
            _require(member(j_single, f).is_member, "J_{5,7} escaped J_{5}")
        checked += 1
    return f"inclusions P_2 in P_6 in J_{{5,7}} in J_{{5}} hold on {checked} candidates"


def _check_same_ideal_criterion(ctx: _Ctx) -> str:
    window = min(ctx.n, 64)
    same_a, same_b = IdealSpec.coprime_vanishing(6), IdealSpec.coprime_vanishing(12)
    diff = IdealSpec.coprime_vanishing(10)
    for idx in range(1, window + 1):
        d = delta(idx, window)
        _require(
            member(same_a, d).verdict == member(same_b, d).verdict,
            f"P_6 and P_12 disagree on delta_{idx}",
        )
    for _ in range(10):
        f = sampling.random_func(ctx.rng, window)
        _require(
            member(same_a, f).verdict == member(same_b, f).verdict,
            "P_6 and P_12 disagree on a random function",
        )
    d5 = delta(5, window)
    _require(
        member(diff, d5).is_member and not member(same_a, d5).is_member,
        "delta_5 fails to separate P_10 from P_6",
    )
    return "P_6 = P_12 on all tested inputs; delta_5 separates P_10 from P_6"


def _check_divisibility_depth(ctx: _Ctx) -> str:
    _require(divisibility_depth(delta(8, ctx.n), delta(2, ctx.n)) == 3, "depth of 8 over 2")
    _require(divisibility_depth(delta(6, ctx.n), delta(2, ctx.n)) == 1, "depth of 6 over 2")
    for _ in range(10):
        a = ctx.rng.randint(2, 4)
        b = ctx.rng.randint(2, ctx.n // 2)
        f = sampling.random_with_norm(ctx.rng, ctx.n, a)
        h = sampling.random_with_norm(ctx.rng, ctx.n, b)
        depth = divisibility_depth(h, f)
        _require(a**depth <= b, f"depth {depth} beats the norm bound for {a}, {b}")
    return "indicator depths exact; 10 random depths obey the norm-logarithm bound"


def _check_semiprime(ctx: _Ctx) -> str:
    spec = IdealSpec.gcd_count(6, 1)
    verdict = probe_prime(spec, trials=0, seed=ctx.seed, window=ctx.n)
    _require(verdict.verdict == NON_MEMBER, "no witness that P_{6,1} is not prime")
    count = 0
    for _ in range(8):
        vals = [sampling.random_scalar(ctx.rng) for _ in range(ctx.n)]
        vals[0] = Fraction(0)
        vals[1] = Fraction(ctx.rng.choice((1, 2, 3)))
        f = ArithFunc(vals)
        w = probe_semiprime(6, 1, f, rmax=2, window=ctx.n)
        _require(w.verdict == NON_MEMBER, "powers entered the ideal")
        count += 1
    return f"delta-pair witness refutes primality; {count} power chains stay outside as predicted"


def _check_semiprime_boundaries(ctx: _Ctx) -> str:
    window = min(ctx.n, 64)
    base = IdealSpec.coprime_vanishing(6)
    k0 = IdealSpec.gcd_count(6, 0)
    k_big = IdealSpec.gcd_count(6, 2)
    for idx in range(1, window + 1):
        d = delta(idx, window)
        _require(
            member(k0, d).verdict == member(base, d).verdict,
            f"P_{{6,0}} and P_6 disagree on delta_{idx}",
        )
        _require(not member(k_big, d).is_member, f"P_{{6,2}} admitted delta_{idx}")
    return "P_{6,0} matches P_6 on all indicators; P_{6,2} rejects every indicator"


# the function zoo ----------------------------------------------------------


def _check_zoo_invertibility(ctx: _Ctx) -> str:
    n = min(ctx.n, 64)
    non_units = {
        "big_omega": zoo.big_omega(n),
        "distinct_prime_count": zoo.distinct_prime_count(n),
        "mangoldt": zoo.mangoldt(n),
        "nu_2": zoo.p_adic_valuation(2, n),
        "log": zoo.log_function(n),
    }
    units = {
        "mobius": zoo.mobius(n),
        "euler_phi": zoo.euler_phi(n),
        "liouville": zoo.liouville(n),
        "ramanujan_tau": zoo.ramanujan_tau(n),
        "dedekind_psi": zoo.dedekind_psi(n),
    }
    for name, f in non_units.items():
        _require(not f(1), f"{name} should vanish at 1")
    for name, f in units.items():
        _require(bool(f(1)), f"{name} should not vanish at 1")
    return "value at 1 separates the five non-units from the five units"


def _check_mobius_inversion(ctx: _Ctx) -> str:
    n = ctx.n
    _require(zoo.mobius(n) == zoo.unit(n).invert(), "mu is not the inverse of u")
    _require(
        zoo.mobius(n).convolve(zoo.natural(n)) == zoo.euler_phi(n),
        "mu * N differs from phi",
    )
    return f"mu = u^-1 and mu * N = phi, exact on 1..{n}"


CHECKS = (
    ("f is invertible exactly when f(1) is nonzero", _check_invertibility),
    ("the units form an abelian group under convolution", _check_units_group),
    ("additive functions are non-units, closed under pointwise + and -", _check_additive_nonunits),
    ("the ring is local: nonzero elements split unit xor maximal", _check_local_dichotomy),
    ("the maximal ideal meets every nonzero principal ideal", _check_essential),
    ("the norm is a multiplicative monoid homomorphism", _check_norm_homomorphism),
    ("no zero divisors appear inside the window", _check_integral_domain),
    ("only 0 and e are idempotent (exhaustive small search)", _check_no_idempotents),
    ("atoms exist with every norm 2..12, by both certificates", _check_atoms_every_norm),
    ("a product of two non-units never has prime norm", _check_nonprime_norm_products),
    ("norm-threshold ideals I_n descend strictly without end", _check_descending_norm_chain),
    ("prime-tail ideals K_n ascend strictly without end", _check_ascending_prime_tail_chain),
    ("K_n is not prime: explicit witness pair", _check_prime_tail_not_prime),
    ("P_m is prime: refutation probe finds nothing", _check_coprime_ideal_prime),
    ("P_p at a prime is principal with indicator generator", _check_principal_prime),
    ("P_m decomposes over its k prime indicators", _check_generator_count),
    ("P_6 needs two generators: no sampled single divisor", _check_not_bezout),
    ("J_Q is prime and collapses to P_m for finite complements", _check_prime_products_ideal),
    ("inclusions P_p in P_m in J_Q in J_q", _check_inclusion_chain),
    ("P_m1 = P_m2 exactly when prime divisors coincide", _check_same_ideal_criterion),
    ("divisibility depth is bounded by the norm logarithm", _check_divisibility_depth),
    ("strict prime chains run arbitrarily far up and down", _check_krull_chains),
    ("P_{m,k} is semi-prime yet not prime for middle k", _check_semiprime),
    ("P_{m,0} = P_m and P_{m,k} vanishes once k covers m", _check_semiprime_boundaries),
    ("named functions split into units and non-units at 1", _check_zoo_invertibility),
    ("Moebius inversion: mu = u^-1 and phi = mu * N", _check_mobius_inversion),
)


def run_all(n: int, seed: int) -> list[CheckResult]:
    if n < MIN_WINDOW:
        raise ValueError(f"the verification suite needs a window of at least {MIN_WINDOW}")
    results = []
    for name, func in CHECKS:
        ctx = _Ctx(n, seed, name)
        try:
            detail = func(ctx)
            results.append(CheckResult(name, True, detail))
        except AssertionError as exc:
            results.append(CheckResult(name, False, str(exc)))
    return results


def render_report(results: list[CheckResult], n: int, seed: int) -> str:
    width = max(len(r.name) for r in results)
    lines = [f"property verification at window {n}, seed {seed}", ""]
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        lines.append(f"{status}  {r.name:<{width}}  {r.detail}")
    passed = sum(r.passed for r in results)
    lines.append("")
    lines.append(f"{passed}/{len(results)} checks passed")
    return "\n".join(lines) + "\n"
