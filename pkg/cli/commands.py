# cli/commands.py
"""One handler per subcommand; each returns an Outcome and never exits."""
import logging
from typing import Callable, Dict

import pandas as pd

from approx.formulas import (
    central_report,
    cushion_split_estimate,
    dominance_ratio,
    reports_frame,
    stirling_report,
)
from bounds.filibuster import filibuster_estimate
from bounds.table import TableMode, bounds_table, to_csv, to_markdown
from cli.models import Invocation, Outcome
from cli.utils import emit, frame_text, write_json
from constructors.chain import canonical_chain, chain_family
from constructors.cushion import cushion_family
from constructors.layered import layered_compose
from constructors.models import ChainSpec, load_cushion_spec, load_layered_spec
from exact.models import SearchConfig
from exact.search import max_union_free
from family_core.algebra import relabel
from family_core.family import Family, Verdict
from family_core.predicates import is_antichain, is_maximal_union_free, is_union_free, lym_sum
from family_core.uff_format import load_family, serialize_family

logger = logging.getLogger(__name__)


def _deliver(inv: Invocation, text: str, code: int = 0) -> Outcome:
    if inv.output_path is None:
        return Outcome(code, text)
    emit(text, inv.output_path)
    logger.info("wrote %s", inv.output_path)
    return Outcome(code)


def construct(inv: Invocation) -> Outcome:
    action = inv.action
    if action == "chain":
        family = chain_family(ChainSpec(n=inv.flag("n"), ms=inv.flag("m")))
    elif action == "canonical":
        family = chain_family(canonical_chain(inv.flag("n")))
    elif action == "cushion":
        family = cushion_family(load_cushion_spec(inv.flag("spec")))
    else:
        family = layered_compose(load_layered_spec(inv.flag("spec")))
        if inv.flag("drop_empty", False):
            family = family.without_empty()
    logger.info("constructed %d members over n=%d", len(family), family.n)
    return _deliver(inv, serialize_family(family))


def _verdict_outcome(name: str, verdict: Verdict) -> Outcome:
    if verdict:
        return Outcome(0, f"{name}: holds\n")
    return Outcome(1, f"{name}: fails\nwitness {verdict.witness.describe()}\n")


def verify(inv: Invocation) -> Outcome:
    family: Family = load_family(inv.input_path)
    action = inv.action
    if action == "union-free":
        return _verdict_outcome(action, is_union_free(family))
    if action == "antichain":
        return _verdict_outcome(action, is_antichain(family))
    if action == "maximal":
        verdict = is_union_free(family)
        if not verdict:
            return _verdict_outcome("union-free", verdict)
        return _verdict_outcome(action, is_maximal_union_free(family))

    total = lym_sum(family)
    code = 0 if total <= 1 else 1
    return Outcome(code, f"lym: {total} ({float(total):.6f}) {'<=' if code == 0 else '>'} 1\n")


def bounds(inv: Invocation) -> Outcome:
    if inv.action == "filibuster":
        estimate = filibuster_estimate(inv.flag("n"), inv.flag("minutes", 1.0))
        text = (
            f"n={estimate.n} amendments={estimate.amendments} "
            f"minutes={estimate.minutes:.2f} years={estimate.years:.2f}\n"
        )
        return Outcome(0, text)

    rows = bounds_table(inv.flag("n_max"), TableMode(inv.flag("mode", TableMode.REPLICA.value)))
    text = to_csv(rows) if inv.flag("format", "csv") == "csv" else to_markdown(rows)
    return _deliver(inv, text)


def approx(inv: Invocation) -> Outcome:
    action = inv.action
    fmt = inv.flag("format", "text")
    if action == "stirling":
        frame = reports_frame([stirling_report(inv.flag("k"), inv.flag("j"))])
    elif action == "central":
        frame = reports_frame([central_report(inv.flag("n"))])
    elif action == "dominance":
        exact, estimate = dominance_ratio(inv.flag("n"))
        frame = pd.DataFrame([{"n": inv.flag("n"), "exact_ratio": exact, "estimate": estimate}])
    else:
        n, t = inv.flag("n"), inv.flag("t")
        frame = pd.DataFrame([{"n": n, "t": t, "estimate": cushion_split_estimate(n, t)}])
    return Outcome(0, frame_text(frame, fmt))


def exact(inv: Invocation) -> Outcome:
    config = SearchConfig(
        n=inv.flag("n"),
        time_limit=inv.flag("time_limit"),
        thread_hint=inv.flag("threads"),
        symmetry=inv.flag("symmetry", False),
    )
    result = max_union_free(config)
    if inv.output_path is not None:
        emit(serialize_family(result.witness), inv.output_path)
    report = inv.flag("report")
    if report is not None:
        write_json(result.to_report(), report)
    text = f"n={config.n} status={result.status} best_size={result.best_size} explored={result.explored}\n"
    return Outcome(0, text)


def relabel_family(inv: Invocation) -> Outcome:
    family = relabel(load_family(inv.input_path), inv.flag("perm"))
    return _deliver(inv, serialize_family(family))


HANDLERS: Dict[str, Callable[[Invocation], Outcome]] = {
    "construct": construct,
    "verify": verify,
    "bounds": bounds,
    "approx": approx,
    "exact": exact,
    "relabel": relabel_family,
}


def dispatch(inv: Invocation) -> Outcome:
    return HANDLERS[inv.subcommand](inv)
