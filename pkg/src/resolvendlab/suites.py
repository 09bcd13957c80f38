"""Batch verification suites with deterministic, citation-tagged reports.

Each suite exercises one family of identities and returns ReportRecord rows.
Reports carry no timestamps and every randomized case derives its generator
from the configured seed plus the case name, so the same configuration
always produces byte-identical JSON.
"""

from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

import numpy as np

from .abelian import FiniteAbelianGroup, char_exponent, dual_enumerate, element_order
from .cyclotomic import CycloElement
from .gauss import (
    MultiplicativeCharacter,
    backend_coherence,
    character_sum_identity,
    gauss_sum,
    gauss_valuation,
    power_sum_S,
    verify_translation,
)
from .groupring import (
    GroupMap,
    GroupRingElement,
    inverse_transform,
    is_unit,
    reduced_equal,
    resolvend,
    resolvend_to_map,
    transform,
    unit_inverse,
    unit_pair_check,
)
from .numutil import divisor_list, euler_phi, is_odd_prime
from .ramify import (
    RamificationFiltration,
    classify,
    different_valuation,
    enumerate_filtrations,
    sqrt_inverse_different_valuation,
)
from .stickelberger import (
    VirtualCharacter,
    in_S,
    kappa_twist,
    stickelberger_map,
)
from .wildsym import (
    WildContext,
    WildMonomial,
    build_alpha,
    build_g,
    conjugate_check,
    omega_action,
    omega_monomial,
    product_contexts,
    resolvent_at,
    transpose_eval_g,
)

CITATIONS = frozenset(
    {
        "Prop 1.1",
        "Eq. (2)",
        "Def 3.2",
        "Prop 3.3",
        "Def 3.4",
        "Prop 3.5(a)",
        "Eq. (iden1)",
        "Prop 3.12",
        "Prop 3.14",
        "Lemma 4.4",
        "Def 4.5",
        "Prop 4.6",
        "Prop 4.7",
        "(S1)",
        "(S2)",
        "Lemma 4.8",
        "Lemma 5.7",
        "Prop 5.8",
        "Lemma 5.9",
        "Prop 5.1",
        "Theorem 1.3",
    }
)


@dataclass(frozen=True)
class ReportRecord:
    suite: str
    case: str
    citation: str
    passed: bool
    witness: dict

    def __post_init__(self):
        if self.citation not in CITATIONS:
            raise ValueError("unregistered citation tag %r" % (self.citation,))

    def to_json(self):
        return {
            "suite": self.suite,
            "case": self.case,
            "citation": self.citation,
            "pass": bool(self.passed),
            "witness": self.witness,
        }


@dataclass
class SuiteConfig:
    suite: str = "all"
    pmax: int = 31
    precision: int = 6
    groups: tuple = ()
    trials: int | None = None
    seed: str = "resolvend"
    p: int | None = None
    n: int | None = None
    product: int | None = None
    max_order: int = 81
    fmt: str = "text"
    jobs: int = 1

    def to_json(self):
        # fmt and jobs shape execution and presentation, not results; leaving
        # them out keeps reports byte-identical across those knobs
        return {
            "suite": self.suite,
            "pmax": self.pmax,
            "precision": self.precision,
            "groups": list(self.groups),
            "trials": self.trials,
            "seed": self.seed,
            "p": self.p,
            "n": self.n,
            "product": self.product,
            "max_order": self.max_order,
        }


def _case_rng(seed, case):
    return random.Random("%s-%s" % (seed, case))


def _execute(tasks, jobs):
    """Run (case, thunk) tasks, each yielding a record list; stable order."""
    if jobs and jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(lambda t: t[1](), tasks))
    else:
        chunks = [fn() for _, fn in tasks]
    records = [r for chunk in chunks for r in chunk]
    records.sort(key=lambda r: (r.suite, r.case))
    return records


# -- gauss ---------------------------------------------------------------


def _gauss_identity_task(p, n):
    def task():
        phi = MultiplicativeCharacter(p, n)
        at_zero = gauss_sum(phi, 0)
        if n == 1:
            ok = at_zero.as_rational() == p - 1
            ok = ok and all(
                gauss_sum(phi, j).as_rational() == -1 for j in range(1, p)
            )
        else:
            ok = at_zero.is_zero()
        ok = ok and all(verify_translation(phi, j) for j in range(1, p))
        return [
            ReportRecord(
                "gauss",
                "lemma-4.4:p%d:n%d" % (p, n),
                "Lemma 4.4",
                ok,
                {"p": p, "n": n, "j_checked": p - 1},
            )
        ]

    return task


def _gauss_valuation_task(p, n, precision, with_coherence):
    def task():
        phi = MultiplicativeCharacter(p, n)
        bound = (p - 1) // n
        recs = []
        for j in range(1, p):
            v = gauss_valuation(phi, j, precision)
            ok = v >= bound and (n != 2 or v == bound)
            recs.append(
                ReportRecord(
                    "gauss",
                    "valuation:p%d:n%d:j%d" % (p, n, j),
                    "Prop 4.6",
                    ok,
                    {"p": p, "n": n, "j": j, "valuation": v, "bound": bound},
                )
            )
            recs.append(
                ReportRecord(
                    "gauss",
                    "char-sum:p%d:n%d:j%d" % (p, n, j),
                    "Prop 4.7",
                    character_sum_identity(phi, j),
                    {"p": p, "n": n, "j": j},
                )
            )
        _, exact, bounded = power_sum_S(phi, n)
        recs.append(
            ReportRecord(
                "gauss",
                "power-sum-exact:p%d:n%d" % (p, n),
                "(S2)",
                exact,
                {"p": p, "n": n},
            )
        )
        recs.append(
            ReportRecord(
                "gauss",
                "power-sum-valuation:p%d:n%d" % (p, n),
                "(S1)",
                bounded,
                {"p": p, "n": n, "bound": p - 1},
            )
        )
        if with_coherence:
            okc = all(backend_coherence(phi, j, precision) for j in range(1, p))
            recs.append(
                ReportRecord(
                    "gauss",
                    "coherence:p%d:n%d" % (p, n),
                    "Def 4.5",
                    okc,
                    {"p": p, "n": n, "precision": precision},
                )
            )
        return recs

    return task


def run_gauss(config):
    """Identity sweep to pmax; valuations, character sums and power sums to
    min(pmax, 31); backend coherence to min(pmax, 13).  An explicit --p
    narrows the sweep to one prime and lifts both caps for it; --n narrows
    to one character order."""
    pmax = config.pmax
    if pmax < 3:
        raise ValueError("pmax must be at least 3, got %d" % pmax)
    if config.p is not None:
        if not is_odd_prime(config.p):
            raise ValueError("p must be an odd prime, got %d" % config.p)
        primes = [config.p]
        deep_cap = coherence_cap = config.p
    else:
        primes = [p for p in range(3, pmax + 1) if is_odd_prime(p)]
        deep_cap = min(pmax, 31)
        coherence_cap = min(pmax, 13)
    tasks = []
    for p in primes:
        orders = divisor_list(p - 1)
        if config.n is not None:
            if config.n not in orders:
                raise ValueError(
                    "n must divide p - 1 = %d, got %d" % (p - 1, config.n)
                )
            orders = [config.n]
        for n in orders:
            tasks.append((("id", p, n), _gauss_identity_task(p, n)))
            if n > 1 and p <= deep_cap:
                tasks.append(
                    (
                        ("val", p, n),
                        _gauss_valuation_task(
                            p, n, config.precision, p <= coherence_cap
                        ),
                    )
                )
    return _execute(tasks, config.jobs)


# -- stickelberger -------------------------------------------------------

_STICKELBERGER_DEFAULT_GROUPS = ("3", "9", "3,3", "7", "15")
_BOX_RADIUS = 2
_RANDOM_SPAN = 6


def _pairing_tables(group):
    """Integer tables for the centered pairing and the determinant.

    U[a, b] holds the pairing of character a with element b scaled by the
    group exponent m (always an integer); C[a] holds character coordinates.
    Integrality of a virtual character's group-ring image then reads
    V @ U == 0 mod m, and determinant-kernel membership V @ C == 0 mod the
    invariant factors.
    """
    m = group.exponent
    elements = group.elements()
    chars = dual_enumerate(group)
    U = np.zeros((len(chars), len(elements)), dtype=np.int64)
    for a, chi in enumerate(chars):
        for b, s in enumerate(elements):
            o = element_order(group, s)
            t = (char_exponent(group, chi, s) // (m // o)) % o
            if t > (o - 1) // 2:
                t -= o
            U[a, b] = t * (m // o)
    C = np.array([chi.coords for chi in chars], dtype=np.int64)
    return U, C


def _box_vectors(idx, width, radius):
    base = 2 * radius + 1
    V = np.empty((len(idx), width), dtype=np.int64)
    for col in range(width):
        V[:, col] = (idx // base**col) % base - radius
    return V


def _box_equivalence(group, radius, chunk=1 << 18):
    """Exhaustive check that integrality matches kernel membership over the
    coefficient box [-radius, radius]^|dual|.  Returns (total, kernel, ok)."""
    U, C = _pairing_tables(group)
    m = group.exponent
    mods = np.array(group.invariant_factors, dtype=np.int64)
    width = U.shape[0]
    total = (2 * radius + 1) ** width
    kernel = 0
    ok = True
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        V = _box_vectors(idx, width, radius)
        integral = ((V @ U) % m == 0).all(axis=1)
        member = ((V @ C) % mods == 0).all(axis=1)
        kernel += int(member.sum())
        if not np.array_equal(integral, member):
            ok = False
    return total, kernel, ok


def _stickelberger_group_task(literal, seed, trials):
    def task():
        group = FiniteAbelianGroup.from_literal(literal)
        chars = dual_enumerate(group)
        recs = []
        if group.order <= 9:
            total, kernel, ok = _box_equivalence(group, _BOX_RADIUS)
            recs.append(
                ReportRecord(
                    "stickelberger",
                    "box:%s" % literal,
                    "Prop 3.12",
                    ok,
                    {
                        "group": literal,
                        "radius": _BOX_RADIUS,
                        "vectors": total,
                        "kernel": kernel,
                    },
                )
            )
            # spot-check the table route against the object route
            rng = _case_rng(seed, "crosscheck:%s" % literal)
            U, _ = _pairing_tables(group)
            m = group.exponent
            agree = True
            for _ in range(25):
                vec = [
                    rng.randrange(-_BOX_RADIUS, _BOX_RADIUS + 1) for _ in chars
                ]
                psi = VirtualCharacter(group, list(zip(chars, vec)))
                row = np.array(vec, dtype=np.int64) @ U
                table_integral = bool((row % m == 0).all())
                if stickelberger_map(psi).is_integral() != table_integral:
                    agree = False
            recs.append(
                ReportRecord(
                    "stickelberger",
                    "crosscheck:%s" % literal,
                    "Prop 3.12",
                    agree,
                    {"group": literal, "samples": 25},
                )
            )
        rng = _case_rng(seed, "random:%s" % literal)
        hits = 0
        ok = True
        for _ in range(trials):
            vec = [rng.randrange(-_RANDOM_SPAN, _RANDOM_SPAN + 1) for _ in chars]
            psi = VirtualCharacter(group, list(zip(chars, vec)))
            member = in_S(psi)
            if member != stickelberger_map(psi).is_integral():
                ok = False
            hits += member
        recs.append(
            ReportRecord(
                "stickelberger",
                "random:%s" % literal,
                "Prop 3.12",
                ok,
                {"group": literal, "trials": trials, "kernel": hits},
            )
        )
        mexp = group.exponent
        units = [u for u in range(1, mexp) if _coprime(u, mexp)]
        ok = True
        for chi in chars:
            base = stickelberger_map(VirtualCharacter.single(chi))
            for u in units:
                lhs = stickelberger_map(
                    VirtualCharacter.single(kappa_twist(u, chi))
                )
                if lhs != base.permute_powers(pow(u, -1, mexp)):
                    ok = False
        recs.append(
            ReportRecord(
                "stickelberger",
                "twist:%s" % literal,
                "Prop 3.14",
                ok,
                {"group": literal, "characters": len(chars), "units": len(units)},
            )
        )
        return recs

    return task


def _coprime(a, b):
    return gcd(a, b) == 1


def run_stickelberger(config):
    groups = tuple(config.groups) or _STICKELBERGER_DEFAULT_GROUPS
    trials = config.trials if config.trials is not None else 500
    for literal in groups:
        group = FiniteAbelianGroup.from_literal(literal)
        if group.order % 2 == 0:
            raise ValueError(
                "suite needs odd group order, got %s (order %d)"
                % (literal, group.order)
            )
    tasks = [
        (("grp", literal), _stickelberger_group_task(literal, config.seed, trials))
        for literal in groups
    ]
    return _execute(tasks, config.jobs)


# -- wild ----------------------------------------------------------------

_WILD_DEFAULT_PRIMES = (3, 5, 7, 11, 13, 17, 19)


def _wild_pair_task(p, n):
    def task():
        ctx = WildContext(p, n)
        alpha = build_alpha(ctx)
        ok_alpha = len(alpha.terms) == p and all(
            c == Fraction(1, p) for c in alpha.terms.values()
        )
        ok_alpha = ok_alpha and all(
            omega_action(j, alpha) == alpha for j in ctx.subgroup
        )
        recs = [
            ReportRecord(
                "wild",
                "alpha:p%d:n%d" % (p, n),
                "Lemma 5.7",
                ok_alpha,
                {"p": p, "n": n, "summands": len(alpha.terms)},
            )
        ]
        ok_conj = all(
            conjugate_check(ctx, j, k) for j in range(p) for k in range(p)
        )
        recs.append(
            ReportRecord(
                "wild",
                "conjugate:p%d:n%d" % (p, n),
                "Prop 5.8",
                ok_conj,
                {"p": p, "n": n, "pairs": p * p},
            )
        )
        g = build_g(ctx)
        ok_g = g.check_equivariance(
            ctx.subgroup, lambda u, v: omega_monomial(u, v, p)
        )
        support = sum(1 for s in ctx.group.elements() if not g(s).is_one())
        recs.append(
            ReportRecord(
                "wild",
                "gmap:p%d:n%d" % (p, n),
                "Lemma 5.9",
                ok_g,
                {"p": p, "n": n, "support": support},
            )
        )
        monos = {}
        for k in range(p):
            try:
                ((mono, _coeff),) = resolvent_at(ctx, k).terms.items()
                matched = transpose_eval_g(ctx, k) == mono
                monos[k] = mono
                witness = {"p": p, "n": n, "k": k, "monomial": str(mono)}
            except ArithmeticError as exc:
                matched = False
                witness = {"p": p, "n": n, "k": k, "error": str(exc)}
            recs.append(
                ReportRecord(
                    "wild",
                    "resolvent:p%d:n%d:k%d" % (p, n, k),
                    "Prop 5.1",
                    matched,
                    witness,
                )
            )
        ok_pair = len(monos) == p and all(
            monos[k] * monos[(-k) % p] == WildMonomial.one() for k in range(p)
        )
        recs.append(
            ReportRecord(
                "wild",
                "pairing:p%d:n%d" % (p, n),
                "Lemma 4.8",
                ok_pair,
                {"p": p, "n": n},
            )
        )
        return recs

    return task


def _wild_product_task(p, ns):
    def task():
        rows = product_contexts([WildContext(p, n) for n in ns])
        recs = []
        for coords, mono, ok in rows:
            recs.append(
                ReportRecord(
                    "wild",
                    "product:p%d:r%d:k%s"
                    % (p, len(ns), "-".join(str(c) for c in coords)),
                    "Theorem 1.3",
                    ok,
                    {
                        "p": p,
                        "orders": list(ns),
                        "coords": list(coords),
                        "monomial": str(mono),
                    },
                )
            )
        return recs

    return task


def product_orders(p, r, n=None):
    """Character orders used for an r-fold product at p: the requested n for
    every slot, or the smallest nontrivial divisors of p-1, cycling."""
    if n is not None:
        return tuple([n] * r)
    pool = [d for d in divisor_list(p - 1) if d > 1]
    if not pool:
        raise ValueError("p = %d has no nontrivial character orders" % p)
    return tuple(pool[i % len(pool)] for i in range(r))


def run_wild(config):
    ps = (config.p,) if config.p is not None else _WILD_DEFAULT_PRIMES
    for p in ps:
        if not is_odd_prime(p):
            raise ValueError("wild suite needs odd primes, got %r" % (p,))
        if config.n is not None and (p - 1) % config.n:
            raise ValueError("n = %d does not divide %d" % (config.n, p - 1))
    tasks = []
    for p in ps:
        ns = (config.n,) if config.n is not None else divisor_list(p - 1)
        for n in ns:
            tasks.append((("wild", p, n), _wild_pair_task(p, n)))
    if config.product is not None:
        if config.product < 1:
            raise ValueError("product size must be positive")
        if config.p is None:
            raise ValueError("--product needs an explicit p")
        ns = product_orders(config.p, config.product, config.n)
        tasks.append((("product", config.p), _wild_product_task(config.p, ns)))
    return _execute(tasks, config.jobs)


# -- groupring -----------------------------------------------------------

_GROUPRING_DEFAULT_GROUPS = ("3", "9", "3,3", "15", "2,4", "30")


def _random_cyclo(rng, conductor):
    return CycloElement(
        conductor,
        [
            Fraction(rng.randrange(-9, 10), rng.randrange(1, 10))
            for _ in range(euler_phi(conductor))
        ],
    )


def _random_map(rng, group, conductor):
    return GroupMap(
        group,
        conductor,
        {s: _random_cyclo(rng, conductor) for s in group.elements()},
    )


def _groupring_task(literal, seed, trials):
    def task():
        group = FiniteAbelianGroup.from_literal(literal)
        N = group.exponent
        rng = _case_rng(seed, "groupring:%s" % literal)
        ok_round = ok_diag = ok_units = True
        unit_rounds = min(trials, 20)
        unit_hits = 0
        for round_no in range(trials):
            a = _random_map(rng, group, N)
            r = resolvend(a)
            if resolvend_to_map(r) != a:
                ok_round = False
            tr = transform(r)
            if inverse_transform(tr) != a:
                ok_round = False
            r2 = GroupRingElement(
                group, N, {s: _random_cyclo(rng, N) for s in group.elements()}
            )
            if transform(r * r2) != tr.pointwise_mul(transform(r2)):
                ok_diag = False
            if round_no >= unit_rounds:
                continue
            unit = is_unit(r)
            if unit != unit_pair_check(a):
                ok_units = False
            if unit:
                unit_hits += 1
                if unit_inverse(r) * r != GroupRingElement.identity(group, N):
                    ok_units = False
                shift = group.element(
                    [rng.randrange(d) for d in group.invariant_factors]
                )
                if reduced_equal(r, r * shift) != shift:
                    ok_units = False
        return [
            ReportRecord(
                "groupring",
                "roundtrip:%s" % literal,
                "Def 3.4",
                ok_round,
                {"group": literal, "trials": trials},
            ),
            ReportRecord(
                "groupring",
                "convolution:%s" % literal,
                "Eq. (iden1)",
                ok_diag,
                {"group": literal, "trials": trials},
            ),
            ReportRecord(
                "groupring",
                "units:%s" % literal,
                "Prop 3.5(a)",
                ok_units,
                {"group": literal, "trials": unit_rounds, "units_seen": unit_hits},
            ),
        ]

    return task


def run_groupring(config):
    groups = tuple(config.groups) or _GROUPRING_DEFAULT_GROUPS
    trials = config.trials if config.trials is not None else 50
    for literal in groups:
        FiniteAbelianGroup.from_literal(literal)
    tasks = [
        (("ring", literal), _groupring_task(literal, config.seed, trials))
        for literal in groups
    ]
    return _execute(tasks, config.jobs)


# -- ramify --------------------------------------------------------------


def _prime_power_base(g):
    """The prime p with g = p^r, or None."""
    if g < 2:
        return None
    p = 2
    x = g
    while p * p <= x:
        if x % p == 0:
            break
        p += 1
    else:
        p = x
    while x % p == 0:
        x //= p
    return p if x == 1 else None


def _ramify_task(max_order):
    def task():
        recs = []
        counts = {"unramified": 0, "tame": 0, "weak-wild": 0, "deep-wild": 0}
        sqrt_cases = 0
        sqrt_ok = True
        chains = enumerate_filtrations(max_order, 4)
        for f in chains:
            dv = different_valuation(f)
            kind = classify(f)
            counts[kind] += 1
            v_sqrt = None
            ok = dv >= 0
            if kind == "weak-wild" and f.order(0) == f.order(1):
                p = _prime_power_base(f.order(0))
                if p is not None:
                    v_sqrt = sqrt_inverse_different_valuation(f, p)
                    sqrt_cases += 1
                    good = v_sqrt == 1 - f.order(0) and dv == 2 * (f.order(0) - 1)
                    good = good and dv % 2 == 0
                    sqrt_ok = sqrt_ok and good
                    ok = ok and good
            recs.append(
                ReportRecord(
                    "ramify",
                    "chain:%s" % ",".join(str(g) for g in f),
                    "Eq. (2)",
                    ok,
                    {
                        "filtration": list(f),
                        "class": kind,
                        "v_different": dv,
                        "v_sqrt": v_sqrt,
                    },
                )
            )
        recs.append(
            ReportRecord(
                "ramify",
                "classify-partition",
                "Def 3.2",
                sum(counts.values()) == len(chains),
                {"max_order": max_order, "counts": counts},
            )
        )
        recs.append(
            ReportRecord(
                "ramify",
                "sqrt-existence",
                "Prop 3.3",
                sqrt_ok and sqrt_cases > 0,
                {"max_order": max_order, "cases": sqrt_cases},
            )
        )
        rejects_ok = True
        for orders, p in (((6, 6, 1), 3), ((9, 3, 1), 3)):
            try:
                sqrt_inverse_different_valuation(RamificationFiltration(orders), p)
                rejects_ok = False
            except ValueError as exc:
                rejects_ok = rejects_ok and "inconsistent filtration" in str(exc)
        recs.append(
            ReportRecord(
                "ramify",
                "sqrt-rejections",
                "Prop 3.3",
                rejects_ok,
                {"cases": ["6,6,1", "9,3,1"]},
            )
        )
        return recs

    return task


def run_ramify(config):
    if config.max_order < 1:
        raise ValueError("max order must be positive")
    return _execute([(("ramify",), _ramify_task(config.max_order))], config.jobs)


# -- driver --------------------------------------------------------------

SUITES = {
    "gauss": run_gauss,
    "stickelberger": run_stickelberger,
    "wild": run_wild,
    "ramify": run_ramify,
    "groupring": run_groupring,
}


def run(config):
    """Execute the configured suite(s); returns (report dict, exit code)."""
    if config.suite == "all":
        records = []
        for name in sorted(SUITES):
            records.extend(SUITES[name](config))
    elif config.suite in SUITES:
        records = SUITES[config.suite](config)
    else:
        raise ValueError("unknown suite %r" % (config.suite,))
    records.sort(key=lambda r: (r.suite, r.case))
    failed = sum(1 for r in records if not r.passed)
    report = {
        "suite": config.suite,
        "config": config.to_json(),
        "records": [r.to_json() for r in records],
        "passed": len(records) - failed,
        "failed": failed,
    }
    return report, (0 if failed == 0 else 1)
