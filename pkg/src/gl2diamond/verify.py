"""Named verification suites over parameter sweeps, with uniform reports.

Each suite re-derives one family of statements and returns a list of check
dictionaries {anchor, instance, expected, got, status}; a sweep passes when
every check passes.  Instances are enumerated deterministically from the
run configuration, and parallel runs aggregate in sorted instance order, so
identical configurations produce identical reports.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .core import (
    DomainError,
    Params,
    Weight,
    char_times_alpha_power,
    char_normal_form,
    chi_of_weight,
    conjugate_char,
)
from .diamond import (
    GaloisParams,
    d0_is_multiplicity_free,
    diamond_set,
    find_special_sigma,
    is_generic,
    tau_j_factor,
    verify_combination,
    xi_and_J,
)
from .filtration import f2_tables, v1_s1_filtrations
from .principal import jh_of_induced

SUITES = (
    "jh",
    "witt",
    "uplus",
    "calculH",
    "indej",
    "womega",
    "combination",
    "f2",
    "special",
    "s1s2",
)


@dataclass
class RunConfig:
    p: int = 5
    f: int = 2
    case: str = "irreducible"  # or "reducible" / "all-generic"
    r: tuple | None = None
    twist: int = 0
    suite: str = "jh"
    fmt: str = "text"
    jobs: int = 1
    seed: int = 0

    @property
    def params(self) -> Params:
        return Params(self.p, self.f)

    @property
    def reducible(self) -> bool:
        return self.case.startswith("red")


def _checks_of_report(rep) -> list:
    out = []
    for c in rep.checks:
        out.append(
            {
                "anchor": f"{rep.anchor}.{c['name']}",
                "instance": rep.instance,
                "expected": c["expected"],
                "got": c["got"],
                "status": c["status"],
            }
        )
    return out


def _check(anchor, instance, passed, expected="", got="") -> dict:
    return {
        "anchor": anchor,
        "instance": str(instance),
        "expected": str(expected),
        "got": str(got),
        "status": "pass" if passed else "FAIL",
    }


def generic_parameters(params: Params, case: str = "all-generic", twist: int = 0) -> list:
    """All generic parameter records with the given twist, subset-ordered."""
    out = []
    cases = []
    if case in ("all-generic", "reducible"):
        cases.append(True)
    if case in ("all-generic", "irreducible"):
        cases.append(False)
    p, f = params.p, params.f
    for red in cases:
        for r in itertools.product(range(p), repeat=f):
            try:
                rho = GaloisParams(params, red, r, twist)
            except DomainError:
                continue
            if is_generic(rho):
                out.append(rho)
    return out


def sweep_characters(params: Params, limit: int | None = None) -> list:
    """Deterministic character sweep: every digit vector, twists 0 and 1."""
    out = []
    p, f = params.p, params.f
    for twist in (0, 1):
        for r in itertools.product(range(p), repeat=f):
            if r == (p - 1,) * f:
                continue
            out.append(chi_of_weight(Weight(params, r, twist)))
    if limit is not None and len(out) > limit:
        step = len(out) / limit
        out = [out[int(i * step)] for i in range(limit)]
    return out


# -- suite bodies ------------------------------------------------------------


def suite_jh(config: RunConfig, limit: int | None = 24) -> list:
    from collections import Counter

    from .oracle.groups import get_context
    from .oracle.modules import character_module, induce, jh_multiset, socle_weights

    from .principal import socle_of_induced

    params = config.params
    ctx = get_context(params)
    checks = []
    for chi in sweep_characters(params, limit=limit):
        inst = f"p={params.p},f={params.f},chi=({chi.a},{chi.b})"
        mod = induce(character_module(ctx, conjugate_char(chi)))
        got = jh_multiset(mod)
        want = Counter(jh_of_induced(conjugate_char(chi)).weights())
        checks.append(_check("jh.multiset", inst, got == want, dict(want), dict(got)))
        soc = socle_weights(mod)
        want_soc = Counter(socle_of_induced(conjugate_char(chi)))
        checks.append(_check("jh.socle", inst, soc == want_soc, dict(want_soc), dict(soc)))
    return checks


def suite_dimension(config: RunConfig) -> list:
    """Dimension identity for inductions with interior normal-form digits."""
    params = config.params
    checks = []
    for r in itertools.product(range(1, params.p - 1), repeat=params.f):
        chi = chi_of_weight(Weight(params, r, 0))
        jh = jh_of_induced(chi)
        ok = jh.total_dim == params.q + 1 and not jh.dropped
        checks.append(
            _check("jh.dimension", f"r={r}", ok, params.q + 1, jh.total_dim)
        )
    return checks


def _witt_pairs(config: RunConfig) -> list:
    params = config.params
    if config.r is not None:
        weights = [Weight(params, config.r, config.twist)]
    else:
        mid = [min(i + 1, params.p - 2) for i in range(params.f)]
        weights = [
            Weight(params, tuple(mid), 0),
            Weight(params, tuple(reversed([params.p - 2 - m for m in mid])), 1),
        ]
    return [(chi_of_weight(w), j) for w in weights for j in range(params.f)]


def suite_witt(config: RunConfig) -> list:
    from .oracle.groups import get_context
    from .oracle.vectors import verify_witt

    ctx = get_context(config.params)
    checks = []
    for chi, j in _witt_pairs(config):
        checks.extend(_checks_of_report(verify_witt(ctx, chi, j)))
    return checks


def suite_uplus(config: RunConfig) -> list:
    from .oracle.groups import get_context
    from .oracle.vectors import verify_uplus

    params = config.params
    ctx = get_context(params)
    r = config.r if config.r is not None else tuple(min(i + 2, params.p - 2) for i in range(params.f))
    chi = chi_of_weight(Weight(params, r, config.twist))
    checks = []
    for j in range(params.f):
        for k in range(params.q):
            checks.extend(_checks_of_report(verify_uplus(ctx, chi, j, k)))
    return checks


def suite_calculH(config: RunConfig) -> list:
    from .oracle.groups import get_context
    from .oracle.vectors import verify_calcul_H

    params = config.params
    ctx = get_context(params)
    r = config.r if config.r is not None else tuple(min(i + 2, params.p - 2) for i in range(params.f))
    chi = chi_of_weight(Weight(params, r, config.twist))
    rng = np.random.default_rng(config.seed)
    checks = []
    combos = [({0: 1}, {}), ({}, {params.q - 1: 1}), ({params.q - 1: 1, 0: 2}, {1: 1})]
    for _ in range(5):
        ks = rng.integers(0, params.q, 3)
        combos.append(({int(ks[0]): 1, int(ks[1]): 2}, {int(ks[2]): 3}))
    for j in range(params.f):
        for a_c, b_c in combos:
            checks.extend(_checks_of_report(verify_calcul_H(ctx, chi, j, a_c, b_c)))
    return checks


def suite_indej(config: RunConfig) -> list:
    from .oracle.groups import get_context
    from .oracle.vectors import verify_ind_ej

    params = config.params
    ctx = get_context(params)
    if config.r is not None:
        weights = [Weight(params, config.r, config.twist)]
    else:
        weights = [
            Weight(params, tuple(min(i + 2, params.p - 2) for i in range(params.f)), 0),
            Weight(params, (1,) * params.f, 0),
        ]
    checks = []
    for w in weights:
        chi = chi_of_weight(w)
        for j in range(params.f):
            digits, _ = char_normal_form(char_times_alpha_power(chi, j, -1))
            if digits[j] > params.p - 2:
                continue
            checks.extend(_checks_of_report(verify_ind_ej(ctx, chi, j)))
    return checks


def suite_womega(config: RunConfig) -> list:
    from .oracle.groups import get_context
    from .oracle.vectors import verify_u_generators, verify_w_omega

    params = config.params
    ctx = get_context(params)
    if config.r is not None:
        weights = [Weight(params, config.r, config.twist)]
    elif params.f == 1:
        weights = [Weight(params, (r0,), 0) for r0 in range(1, params.p)]
    else:
        weights = [Weight(params, tuple(min(i + 2, params.p - 2) for i in range(params.f)), 0)]
    checks = []
    for w in weights:
        chi = chi_of_weight(w)
        checks.extend(_checks_of_report(verify_u_generators(ctx, chi)))
        for j in range(params.f):
            checks.extend(_checks_of_report(verify_w_omega(ctx, chi, j)))
    return checks


def suite_combination(config: RunConfig) -> list:
    params = config.params
    if config.r is not None:
        rhos = [GaloisParams(params, config.reducible, config.r, config.twist)]
    else:
        rhos = generic_parameters(params, config.case if config.case else "all-generic", config.twist)
    checks = []
    for rho in rhos:
        for dw in diamond_set(rho):
            for j in range(params.f):
                rep = verify_combination(rho, dw, j)
                inst = f"{rho},S={sorted(dw.S)},j={j}"
                if not rep.has_couple:
                    checks.append(_check("combination.no-couple", inst, True, "", "no couple"))
                    continue
                for cl in rep.clauses:
                    checks.append(
                        _check(f"combination.{cl.name}", inst, cl.passed, "", cl.detail)
                    )
    return checks


def suite_counts(config: RunConfig) -> list:
    """Size of the weight set and multiplicity freeness of its blocks."""
    params = config.params
    checks = []
    for rho in generic_parameters(params, config.case or "all-generic", config.twist):
        dws = diamond_set(rho)
        checks.append(_check("diamond.count", str(rho), len(dws) == 2 ** params.f, 2 ** params.f, len(dws)))
        checks.append(_check("diamond.mult-free", str(rho), d0_is_multiplicity_free(rho)))
    return checks


def suite_f2(config: RunConfig) -> list:
    params = config.params
    if params.f != 2:
        raise DomainError("the f2 suite needs f = 2")
    checks = []
    for rho in generic_parameters(params, "irreducible", config.twist):
        tab = f2_tables(rho)
        checks.append(_check("f2.table", str(rho), tab.matches_d0, "", tab.detail))
        vs = v1_s1_filtrations(rho)
        checks.append(
            _check("f2.s1-is-v1-head", str(rho), vs.s1.layers == vs.v1.layers[:-2])
        )
        checks.append(
            _check(
                "f2.taus-outside",
                str(rho),
                vs.taus_outside[0] and not any(vs.taus_outside[1:]),
            )
        )
        checks.append(_check("f2.couples", str(rho), all(ok for _, ok in vs.couple_checks)))
    return checks


def suite_special(config: RunConfig) -> list:
    params = config.params
    red = params.f % 2 == 0
    checks = []
    rhos = [r for r in generic_parameters(params, "reducible" if red else "irreducible", config.twist)]
    if config.r is not None:
        rhos = [GaloisParams(params, red, config.r, config.twist)]
    for rho in rhos:
        try:
            sp = find_special_sigma(rho)
        except DomainError as exc:
            raise
        inst = str(rho)
        checks.append(_check("special.exists", inst, True, "", str(sp.weight)))
        for j in range(1, params.f):
            fac = tau_j_factor(rho, sp, j)
            _, J, consistent = xi_and_J(rho, sp, fac)
            want = frozenset(range(params.f)) - {(j - 2) % params.f}
            checks.append(
                _check(f"special.J-xi j={j}", inst, J == want and consistent, sorted(want), sorted(J))
            )
    return checks


def suite_s1s2(config: RunConfig) -> list:
    from .oracle.groups import get_context
    from .oracle.modules import h_eigen_split
    from .oracle.vectors import e_two_char_module, verify_S1_condition, verify_e_two_char, verify_ej_chain

    checks = []
    # chain modules and glued modules at the configured parameters
    params = config.params
    ctx = get_context(params)
    r = config.r if config.r is not None else tuple(min(i + 2, params.p - 2) for i in range(params.f))
    chi = chi_of_weight(Weight(params, r, config.twist))
    for j in range(params.f):
        for s in (1, 2, min(3, params.p - 1)):
            checks.extend(_checks_of_report(verify_ej_chain(ctx, chi, j, s)))

    if params.f >= 2:
        try:
            rho = GaloisParams(params, config.reducible, r, config.twist)
            ok_gen = is_generic(rho)
        except DomainError:
            ok_gen = False
        if ok_gen and params.f == 2 and not rho.reducible:
            tab = f2_tables(rho)
            s1w, s2w = tab.sigmas[0], tab.sigmas[1]
            chi2 = chi_of_weight(s2w)
            chi1s = conjugate_char(chi_of_weight(s1w))
            r0 = rho.r[0]
            checks.extend(_checks_of_report(verify_e_two_char(ctx, chi2, chi1s, 1, r0)))
            mod = e_two_char_module(ctx, chi2, chi1s, 1, r0)
            chi3 = char_times_alpha_power(chi2, 0, -r0)
            v = None
            for ch, rows in h_eigen_split(mod, np.eye(mod.dim, dtype=np.int64)):
                if ch == chi3:
                    v = rows[0]
            ok = v is not None and verify_S1_condition(mod, v)
            checks.append(_check("s1.generator-condition", str(rho), ok))
    return checks


_SUITE_FUNCS = {
    "jh": suite_jh,
    "witt": suite_witt,
    "uplus": suite_uplus,
    "calculH": suite_calculH,
    "indej": suite_indej,
    "womega": suite_womega,
    "combination": suite_combination,
    "f2": suite_f2,
    "special": suite_special,
    "s1s2": suite_s1s2,
    "counts": suite_counts,
    "dimension": suite_dimension,
}


def run_suite(config: RunConfig) -> list:
    if config.suite not in _SUITE_FUNCS:
        raise DomainError(f"unknown suite {config.suite!r}; choose from {sorted(_SUITE_FUNCS)}")
    checks = _SUITE_FUNCS[config.suite](config)
    return sorted(checks, key=lambda c: (c["instance"], c["anchor"]))


def _run_one(args):
    suite, kwargs = args
    cfg = RunConfig(**kwargs)
    cfg.suite = suite
    return run_suite(cfg)


def run_suites(config: RunConfig, suites) -> list:
    """Run several suites, optionally across processes, deterministically."""
    jobs = max(1, config.jobs)
    payload = []
    for s in suites:
        kw = dict(
            p=config.p, f=config.f, case=config.case, r=config.r,
            twist=config.twist, suite=s, fmt=config.fmt, jobs=1, seed=config.seed,
        )
        payload.append((s, kw))
    if jobs == 1 or len(payload) == 1:
        results = [_run_one(item) for item in payload]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_one, payload))
    out = []
    for chunk in results:
        out.extend(chunk)
    return out
