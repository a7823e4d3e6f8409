"""
Check suites run by ``qdu-typeb check``.

Each suite returns rows ``{case, status, details}`` with status 'pass' or
'fail'. A failing row carries the poset as JSON and a short trace of the
operations that disagreed.
"""

from __future__ import annotations

import logging
from collections import Counter, defaultdict
from dataclasses import dataclass
from typing import Any, Callable, Iterable, Optional

import numpy as np

from ..Coxeter.compositions import CompositionB
from ..Coxeter.weak_order import IntervalR, comparable_pairs
from ..Hecke.certify import (
    certify_isomorphism,
    chi_certificate,
    induction_certificate,
    label_map,
    restriction_certificate,
    theta_certificate,
    theta_chi_certificate,
    twisted_induction_certificate,
)
from ..Hecke.functors import induce_general, restrict, twist_chi, twist_theta
from ..Hecke.grothendieck import decompose_interval, grothendieck_decompose, top_part_is_submodule
from ..Hecke.hecke_module import HeckeRelationError
from ..Hecke.poset_modules import characteristic, module_MBP, module_MP_typeA, module_sfMBP, wbim
from ..Posets.bn_poset import (
    BnPoset,
    kbp,
    kbp_oracle,
    linear_extensions_B,
    linear_poset_B,
    p_partitions_bounded,
    poset_of,
    poset_to_dict,
)
from ..Posets.distinguished import all_bn_posets, is_distinguished, is_regular, sigma_rho_endpoints
from ..Posets.finite_poset import FinitePoset, all_posets
from ..Posets.sampling import random_bn_poset
from ..Posets.surgery import RestrictionBijection, coaction_of_poset, disjoint_union_B, shuffle_B_coset
from ..QSym.operations import action_odotB, coaction_deltaB
from .run_config import SUITES

log = logging.getLogger(__name__)

Row = dict[str, Any]

# largest certified induced module; above it only the combinatorial identities run
CERTIFY_MAX_RANK = 3


@dataclass(frozen=True)
class SuiteContext:
    rank_cap: int = 4
    seed: int = 0
    samples: int = 20
    trunc: Optional[int] = None

    def ranks(self, limit: int, start: int = 1) -> range:
        return range(start, min(self.rank_cap, limit) + 1)

    def truncation(self, n: int) -> int:
        return n + 1 if self.trunc is None else self.trunc


def _row(case: str, ok: bool, poset: Optional[FinitePoset] = None,
         trace: Iterable[str] = (), **details: Any) -> Row:
    if not ok:
        if isinstance(poset, BnPoset):
            details["poset"] = poset_to_dict(poset)
        elif poset is not None:
            details["poset"] = poset.to_dict()
        details["trace"] = list(trace)
    return {"case": case, "status": "pass" if ok else "fail", "details": details}


def _guarded(case: str, poset: Optional[FinitePoset],
             check: Callable[[], Row]) -> Row:
    """Run one case, turning a raised error into a failing row."""
    try:
        return check()
    except (ValueError, RuntimeError) as err:
        log.debug(f"{case} raised {err!r}")
        return _row(case, False, poset, [f"{type(err).__name__}: {err}"])


def bn_posets(n: int, ctx: SuiteContext, rng: np.random.Generator) -> list[BnPoset]:
    """All B_n posets for n <= 2, else ``samples`` random ones, every third not distinguished."""
    if n <= 2:
        return all_bn_posets(n)
    return [random_bn_poset(n, rng, distinguished=k % 3 != 2) for k in range(ctx.samples)]


# suites

def relations_suite(ctx: SuiteContext) -> list[Row]:
    rng = np.random.default_rng(ctx.seed)
    single = FinitePoset.chain([1])
    rows = []
    for n in ctx.ranks(3):
        for poset in bn_posets(n, ctx, rng):
            def check(poset: BnPoset = poset, n: int = n) -> Row:
                module = module_MBP(poset)
                built = [module, module_sfMBP(poset), twist_theta(module), twist_chi(module)]
                for m in range(n + 1):
                    for summand in restrict(module, m):
                        built.extend([summand.left, summand.right])
                if n < CERTIFY_MAX_RANK:
                    built.append(induce_general(module, module_MP_typeA(single)))
                try:
                    for item in built:
                        item.check_relations()
                except HeckeRelationError as err:
                    return _row(f"relations n={n}", False, poset, [str(err)],
                                relation=err.relation, generators=list(err.generators))
                return _row(f"relations n={n}", True, modules=len(built))
            rows.append(_guarded(f"relations n={n}", poset, check))
    return rows


def partition_suite(ctx: SuiteContext) -> list[Row]:
    rng = np.random.default_rng(ctx.seed)
    rows = []
    for n in ctx.ranks(3):
        V = ctx.truncation(n)
        for poset in bn_posets(n, ctx, rng):
            def check(poset: BnPoset = poset, n: int = n) -> Row:
                trace = []
                ch = characteristic(module_MBP(poset)).element
                if ch != kbp(poset):
                    trace.append(f"ch^B = {ch}, K^B_P = {kbp(poset)}")
                if not kbp_oracle(poset, V):
                    trace.append(f"truncated expansion disagrees at V={V}")
                if n <= 2:
                    everything = set(p_partitions_bounded(poset, 3))
                    parts = [set(p_partitions_bounded(linear_poset_B(gamma), 3))
                             for gamma in linear_extensions_B(poset)]
                    if sum(map(len, parts)) != len(everything) or set().union(*parts) != everything:
                        trace.append("P-partitions are not the disjoint union over extensions")
                return _row(f"partition n={n}", not trace, poset, trace, V=V)
            rows.append(_guarded(f"partition n={n}", poset, check))
    return rows


def grothendieck_suite(ctx: SuiteContext) -> list[Row]:
    rng = np.random.default_rng(ctx.seed)
    rows = []

    def random_choice(pairs):
        return pairs[int(rng.integers(len(pairs)))]

    for n in ctx.ranks(3):
        for poset in bn_posets(n, ctx, rng):
            def check(poset: BnPoset = poset, n: int = n) -> Row:
                factors = grothendieck_decompose(poset)
                expected = Counter(dict(kbp(poset).items()))
                trace = []
                if factors != expected:
                    trace.append(f"factors {dict(factors)} against K^B_P {kbp(poset)}")
                if grothendieck_decompose(poset, random_choice) != factors:
                    trace.append("factors depend on the order of the pairs")
                return _row(f"grothendieck n={n}", not trace, poset, trace,
                            factors=sum(factors.values()))
            rows.append(_guarded(f"grothendieck n={n}", poset, check))
    return rows


def induction_suite(ctx: SuiteContext) -> list[Row]:
    rng = np.random.default_rng(ctx.seed)
    rows = []
    top = min(ctx.rank_cap, 4)
    for m in range(1, top):
        lefts = bn_posets(m, ctx, rng) if m == 1 else \
            [random_bn_poset(m, rng) for _ in range(min(ctx.samples, 5))]
        for n in range(1, top - m + 1):
            for first in lefts:
                for second in all_posets(n):
                    def check(first: BnPoset = first, second: FinitePoset = second,
                              m: int = m, n: int = n) -> Row:
                        glued = disjoint_union_B(first, second)
                        trace = []
                        shuffled = set()
                        for sigma in linear_extensions_B(first):
                            for rho in second.linear_extensions():
                                shuffled |= shuffle_B_coset(sigma, rho)
                        if shuffled != set(linear_extensions_B(glued)):
                            trace.append("shuffle of extensions is not the extension set of the union")
                        if action_odotB(kbp(first), second.kp()) != kbp(glued):
                            trace.append(f"K^B_P1 ⊙ K_P2 = {action_odotB(kbp(first), second.kp())}, "
                                         f"K^B of the union = {kbp(glued)}")
                        certified = None
                        if m + n <= CERTIFY_MAX_RANK:
                            certified = induction_certificate(first, second) is not None
                            if not certified:
                                trace.append("induced module is not isomorphic to M^B of the union")
                        return _row(f"induction m={m} n={n}", not trace, glued, trace,
                                    certified=certified)
                    rows.append(_guarded(f"induction m={m} n={n}", first, check))
    return rows


def restriction_suite(ctx: SuiteContext) -> list[Row]:
    rng = np.random.default_rng(ctx.seed)
    rows = []
    for n in ctx.ranks(3):
        for poset in bn_posets(n, ctx, rng):
            def check(poset: BnPoset = poset, n: int = n) -> Row:
                trace = []
                for m in range(n + 1):
                    if not RestrictionBijection(poset, m).check():
                        trace.append(f"restriction map is not a bijection at m={m}")
                    if restriction_certificate(poset, m) is None:
                        trace.append(f"restriction does not intertwine at m={m}")
                if coaction_of_poset(poset) != coaction_deltaB(kbp(poset)):
                    trace.append("sum over lower and upper subposets differs from delta^B(K^B_P)")
                return _row(f"restriction n={n}", not trace, poset, trace)
            rows.append(_guarded(f"restriction n={n}", poset, check))
    return rows


def twists_suite(ctx: SuiteContext) -> list[Row]:
    rng = np.random.default_rng(ctx.seed)
    rows = []
    for n in ctx.ranks(3):
        for poset in bn_posets(n, ctx, rng):
            def check(poset: BnPoset = poset, n: int = n) -> Row:
                trace = [name for name, certify in (("theta", theta_certificate),
                                                    ("chi", chi_certificate),
                                                    ("theta chi", theta_chi_certificate))
                         if certify(poset) is None]
                if n == 2:
                    for twist in ("theta", "chi"):
                        if restriction_certificate(poset, 1, twist) is None:
                            trace.append(f"{twist}-twisted restriction")
                return _row(f"twists n={n}", not trace, poset, trace)
            rows.append(_guarded(f"twists n={n}", poset, check))
    for m, n in ((1, 1), (1, 2)):
        if m + n > ctx.rank_cap:
            continue
        candidates = all_posets(n)
        for first in all_bn_posets(m):
            second = candidates[int(rng.integers(len(candidates)))]
            for twist in ("theta", "chi"):
                def check(first: BnPoset = first, second: FinitePoset = second,
                          twist: str = twist, m: int = m, n: int = n) -> Row:
                    ok = twisted_induction_certificate(first, second, twist) is not None
                    return _row(f"twisted induction {twist} m={m} n={n}", ok,
                                disjoint_union_B(first, second), [f"{twist} compatibility"])
                rows.append(_guarded(f"twisted induction {twist} m={m} n={n}", first, check))
    return rows


def distinguished_suite(ctx: SuiteContext) -> list[Row]:
    rows = []
    for n in ctx.ranks(2):
        classes: dict[frozenset, list[BnPoset]] = defaultdict(list)
        for poset in all_bn_posets(n):
            classes[frozenset(linear_extensions_B(poset))].append(poset)
        for extensions, members in classes.items():
            chosen = [p for p in members if is_distinguished(p)]
            expected = poset_of(extensions)
            ok = len(chosen) == 1 and chosen[0] == expected
            rows.append(_row(f"distinguished n={n}", ok, expected,
                             [f"{len(chosen)} distinguished posets in a class of {len(members)}"],
                             class_size=len(members)))
        log.info(f"{len(classes)} extension classes at n={n}")
    return rows


def regular_interval_suite(ctx: SuiteContext) -> list[Row]:
    rows = []
    for n in ctx.ranks(3):
        examined, failures = 0, []
        for interval in comparable_pairs(n):
            examined += 1
            poset = poset_of({interval.bottom, interval.top})
            trace = []
            if not is_regular(poset):
                trace.append("poset of the endpoints is not regular")
            elif set(linear_extensions_B(poset)) != set(interval.elements):
                trace.append("extensions differ from the interval")
            elif sigma_rho_endpoints(poset) != (interval.bottom, interval.top):
                trace.append(f"endpoints {sigma_rho_endpoints(poset)}")
            if trace:
                failures.append(_row(f"regular-interval {interval}", False, poset, trace))
        rows.extend(failures)
        rows.append(_row(f"regular-interval n={n}", not failures, intervals=examined))
    return rows


def wbim_suite(ctx: SuiteContext) -> list[Row]:
    rows = []
    for n in ctx.ranks(3):
        examined, failures = 0, []
        hit: set[CompositionB] = set()
        for interval in comparable_pairs(n):
            examined += 1
            case = f"wbim {interval}"
            row = _guarded(case, None, lambda interval=interval: _check_wbim(interval, n, hit))
            if row["status"] == "fail":
                failures.append(row)
        missing = [str(alpha) for alpha in CompositionB.all(n) if alpha not in hit]
        rows.extend(failures)
        rows.append(_row(f"wbim n={n}", not failures and not missing,
                         trace=[f"no interval gives {alpha}" for alpha in missing],
                         intervals=examined))
    return rows


def _check_wbim(interval: IntervalR, n: int, hit: set) -> Row:
    module = wbim(interval)
    factors = decompose_interval(interval)
    hit.update(factors)
    trace = []
    if factors != Counter(dict(characteristic(module).element.items())):
        trace.append(f"factors {dict(factors)} against ch^B {characteristic(module)}")
    if len(interval) > 1 and not top_part_is_submodule(interval):
        trace.append("upper part of the split is not a submodule")
    poset = poset_of({interval.bottom, interval.top})
    if n <= 2:
        target = module_MBP(poset)
        if certify_isomorphism(module, target, label_map(module, target)) is None:
            trace.append("identity map to M^B of the endpoint poset is not an isomorphism")
    elif set(linear_extensions_B(poset)) != set(interval.elements):
        trace.append("extensions of the endpoint poset differ from the interval")
    return _row(f"wbim {interval}", not trace, poset, trace)


SUITE_FUNCTIONS: dict[str, Callable[[SuiteContext], list[Row]]] = {
    "relations": relations_suite,
    "partition": partition_suite,
    "grothendieck": grothendieck_suite,
    "induction": induction_suite,
    "restriction": restriction_suite,
    "twists": twists_suite,
    "distinguished": distinguished_suite,
    "regular-interval": regular_interval_suite,
    "wbim": wbim_suite,
}


def run_suite(name: str, ctx: SuiteContext) -> list[Row]:
    """
    Raises:
        ValueError: for an unknown suite name.
    """
    if name not in SUITE_FUNCTIONS:
        raise ValueError(f"unknown suite {name!r}, expected one of {', '.join(SUITES)}")
    log.info(f"running suite {name} up to rank {ctx.rank_cap} with seed {ctx.seed}")
    rows = SUITE_FUNCTIONS[name](ctx)
    failed = sum(row["status"] == "fail" for row in rows)
    log.info(f"suite {name}: {len(rows)} cases, {failed} failed")
    return rows
