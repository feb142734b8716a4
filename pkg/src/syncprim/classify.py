"""Group-level predicates: sync-maximality, the six equivalent
characterization conditions, and strong sync-maximality.

Every predicate is tri-state: True, False (with a witness that
re-validates independently), or None when a degree cap makes the scan
infeasible ("skipped", never guessed).
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Optional

from . import automaton as am
from . import group as gr
from . import perm
from .group import GroupSpec
from .perm import Transformation

MODE_IDEMPOTENTS = "idempotents_only"
MODE_ALL = "all_rank_n_minus_1"
MODES = (MODE_IDEMPOTENTS, MODE_ALL)

# Full n^n scans stay tractable up to here.
STRONG_SCAN_CAP = 7

_CHUNK = 64

REPORT_SCHEMA = "syncprim-report/1"


@dataclass
class PredicateResult:
    value: Optional[bool]        # None = skipped
    witness: Optional[dict] = None
    scanned: int = 0
    millis: float = 0.0
    reason: Optional[str] = None

    def to_dict(self, timings: bool = False) -> dict:
        out: dict = {"value": self.value, "witness": self.witness, "scanned": self.scanned}
        if self.reason is not None:
            out["reason"] = self.reason
        if timings:
            out["millis"] = round(self.millis, 3)
        return out


@dataclass
class ClassificationReport:
    group: GroupSpec
    name: Optional[str] = None
    predicates: dict[str, PredicateResult] = field(default_factory=dict)

    def to_dict(self, timings: bool = False) -> dict:
        return {
            "schema": REPORT_SCHEMA,
            "name": self.name,
            "group": {
                "degree": self.group.degree,
                "generators": [perm.format_image(g) for g in self.group.generators],
            },
            "predicates": {
                k: v.to_dict(timings) for k, v in sorted(self.predicates.items())
            },
        }


def family(G: GroupSpec, mode: str) -> Iterator[Transformation]:
    """The quantifier family of rank n-1 maps selected by mode."""
    if mode == MODE_IDEMPOTENTS:
        return perm.enumerate_idempotents_rank_n_minus_1(G.degree)
    if mode == MODE_ALL:
        return perm.enumerate_rank_n_minus_1(G.degree)
    raise ValueError(f"unknown mode {mode!r}")


def _scan(
    maps: Iterable[Transformation],
    check: Callable[[Transformation], tuple[bool, Optional[dict]]],
    threads: int = 1,
    full_scan: bool = False,
) -> tuple[bool, Optional[dict], int]:
    """Run check over the family; first counterexample in enumeration order wins.

    Deterministic regardless of thread count: work is chunked in order and
    the failure with the smallest index is reported, with scanned equal to
    that index + 1 (or the family size when all pass).  full_scan disables
    the early stop but keeps the same result."""
    scanned = 0
    first_fail: Optional[tuple[int, Transformation, Optional[dict]]] = None

    def run_chunk(chunk):
        return [check(f) for f in chunk]

    if threads <= 1:
        for i, f in enumerate(maps):
            scanned += 1
            ok, extra = check(f)
            if not ok and first_fail is None:
                first_fail = (i, f, extra)
                if not full_scan:
                    break
    else:
        chunks = []
        chunk: list[Transformation] = []
        for f in maps:
            chunk.append(f)
            if len(chunk) == _CHUNK:
                chunks.append(chunk)
                chunk = []
        if chunk:
            chunks.append(chunk)
        total = sum(len(c) for c in chunks)
        with ThreadPoolExecutor(max_workers=threads) as pool:
            base = 0
            pending = [(c, pool.submit(run_chunk, c)) for c in chunks]
            for c, fut in pending:
                results = fut.result()
                if first_fail is None:
                    for j, (ok, extra) in enumerate(results):
                        if not ok:
                            first_fail = (base + j, c[j], extra)
                            break
                base += len(c)
        # scanned is normalized so the report is thread-count independent,
        # even though whole chunks past the failure may have been computed
        if first_fail is not None and not full_scan:
            scanned = first_fail[0] + 1
        else:
            scanned = total
    if first_fail is None:
        return True, None, scanned
    _, f, extra = first_fail
    witness = {"f": perm.format_image(f)}
    if extra:
        witness.update(extra)
    return False, witness, scanned


def _timed(func):
    start = time.perf_counter()
    result = func()
    result.millis = (time.perf_counter() - start) * 1000.0
    return result


def is_sync_maximal(
    G: GroupSpec, mode: str = MODE_IDEMPOTENTS, threads: int = 1, full_scan: bool = False
) -> PredicateResult:
    """Whether every adjoined rank n-1 map yields a synchronizing language
    whose minimal DFA has the maximum 2^n - n states."""
    def run():
        n = G.degree
        if n > am.SUBSET_CAP:
            return PredicateResult(None, reason=f"degree {n} exceeds power-set cap")
        target = (1 << n) - n

        def check(f):
            count = am.minimal_syn_dfa(am.build_group_automaton(G, f)).state_count
            return count == target, None if count == target else {"state_count": count}

        ok, witness, scanned = _scan(family(G, mode), check, threads, full_scan)
        return PredicateResult(ok, witness, scanned)

    return _timed(run)


def _condition_check(G: GroupSpec, index: int) -> Callable[[Transformation], tuple[bool, Optional[dict]]]:
    if index == 2:
        def check(f):
            A = am.build_group_automaton(G, f)
            sub = am.build_subset_automaton(A)
            if len(sub.states) == (1 << G.degree) - 1:
                return True, None
            reached = set(sub.states)
            missing = next(m for m in range(1, 1 << G.degree) if m not in reached)
            return False, {"unreachable": am.mask_to_str(missing)}
    elif index == 3:
        def check(f):
            ok, pair = am.all_2subsets_distinguishable(am.build_group_automaton(G, f))
            return ok, None if ok else {"pair": [am.set_to_str(s) for s in pair]}
    elif index == 4:
        def check(f):
            ok, pair = am.all_nonsingleton_distinguishable_witness(am.build_group_automaton(G, f))
            return ok, None if ok else {"pair": [am.set_to_str(s) for s in pair]}
    elif index == 5:
        def check(f):
            ok, pair = am.different_cardinality_reachable_witness(am.build_group_automaton(G, f))
            return ok, None if ok else {"pair": [am.set_to_str(s) for s in pair]}
    elif index == 6:
        def check(f):
            ok, pair = am.disjoint_2subsets_distinguishable(am.build_group_automaton(G, f))
            return ok, None if ok else {"pair": [am.set_to_str(s) for s in pair]}
    else:
        raise ValueError(f"no scan for condition {index}")
    return check


def condition(
    G: GroupSpec,
    index: int,
    mode: str = MODE_IDEMPOTENTS,
    threads: int = 1,
    full_scan: bool = False,
) -> PredicateResult:
    """One of the six characterization conditions.

    (1) primitivity; (2) complete reachability for every f; (3) all 2-subsets
    distinguishable; (4) all non-singleton subsets distinguishable; (5) every
    two non-singleton subsets mappable to different cardinalities; (6) like
    (3) for disjoint 2-subsets.  Their full equivalence needs degree >= 5;
    each condition is still computed at any degree."""
    if index not in range(1, 7):
        raise ValueError(f"condition index {index} outside 1..6")

    def run():
        if index == 1:
            prim, blocks = gr.is_primitive(G)
            witness = None
            if blocks is not None:
                witness = {"blocks": [am.set_to_str(c) for c in blocks.classes]}
            return PredicateResult(prim, witness)
        if index in (2, 4, 5) and G.degree > am.SUBSET_CAP:
            return PredicateResult(None, reason=f"degree {G.degree} exceeds power-set cap")
        ok, witness, scanned = _scan(family(G, mode), _condition_check(G, index), threads, full_scan)
        return PredicateResult(ok, witness, scanned)

    return _timed(run)


def is_strongly_sync_maximal(G: GroupSpec, threads: int = 1, full_scan: bool = False) -> PredicateResult:
    """Whether adjoining any map of rank 2..n-1 leaves all 2-subsets
    distinguishable.  The scan covers all n^n maps, so degrees above
    STRONG_SCAN_CAP are skipped."""
    def run():
        n = G.degree
        if n > STRONG_SCAN_CAP:
            return PredicateResult(
                None, reason=f"full map scan infeasible: {n}^{n} = {n**n} maps"
            )

        def maps():
            for r in range(2, n):
                yield from perm.enumerate_maps_of_rank(n, r)

        def check(f):
            ok, pair = am.all_2subsets_distinguishable(am.build_group_automaton(G, f))
            return ok, None if ok else {"pair": [am.set_to_str(s) for s in pair]}

        ok, witness, scanned = _scan(maps(), check, threads, full_scan)
        return PredicateResult(ok, witness, scanned)

    return _timed(run)


def classify(
    G: GroupSpec,
    name: Optional[str] = None,
    mode: str = MODE_IDEMPOTENTS,
    threads: int = 1,
    full_scan: bool = False,
    with_conditions: bool = True,
    with_strong: bool = True,
) -> ClassificationReport:
    """Run all predicates and collect the report.  Predicates exceeding a
    cap come back skipped, never guessed."""
    report = ClassificationReport(G, name)
    preds = report.predicates

    def timed_plain(func):
        start = time.perf_counter()
        value, witness = func()
        res = PredicateResult(value, witness)
        res.millis = (time.perf_counter() - start) * 1000.0
        return res

    preds["transitive"] = timed_plain(lambda: (gr.is_transitive(G), None))
    prim = condition(G, 1)
    preds["primitive"] = prim
    preds["sync_maximal"] = is_sync_maximal(G, mode, threads, full_scan)
    preds["completely_reachable_all_f"] = condition(G, 2, mode, threads, full_scan)
    if with_conditions:
        for i in range(3, 7):
            preds[f"condition_{i}"] = condition(G, i, mode, threads, full_scan)
        preds["condition_1"] = prim
        preds["condition_2"] = preds["completely_reachable_all_f"]
    if with_strong:
        preds["strongly_sync_maximal"] = is_strongly_sync_maximal(G, threads, full_scan)
    return report
