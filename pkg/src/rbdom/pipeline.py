"""The two experiment pipelines and their report aggregation.

Both pipelines start from the all-blue instance and apply the isolated rule
once, then the pendant rule exhaustively. The lossy pipeline additionally
applies the lossy rule once before handing the reduced instance to the
drop-in approximator; lifting then replays the recorded add-sets newest
first. AA/LA denote the lifted solution sizes of the plain and lossy
pipelines; an instance counts as improved when LA < AA, and its improvement
percentage is (AA - LA) * 100 / EX.
"""

import time
from dataclasses import dataclass

from .approx import Approximator, approximate
from .exact import exact_min
from .graph import InvariantError
from .instance import all_blue, is_valid_solution
from .reduce import (
    ReductionTrace,
    lift,
    rr_isolated,
    rr_lossy2,
    rr_pendant_exhaustive,
    verify_psi,
)


@dataclass
class RunReport:
    """One benchmark row: instance id, sizes, and the three solution values."""

    id: str
    n: int
    m: int
    ex: int | None
    aa: int
    la: int
    imprv: float | None
    ex_proven: bool = True


@dataclass
class AggregateStats:
    category: str
    count: int
    pct_improved: float
    avg_imprv: float | None


def reduce_instance(inst, lossy, check_psi=False):
    """Apply isolated once, pendant exhaustively, then optionally lossy once.

    Mutates ``inst`` and returns the replayable trace. With ``check_psi``
    the lossy pair map is validated against the pre-rule state and an
    InvariantError raised on failure.
    """
    trace = ReductionTrace()
    rec = rr_isolated(inst)
    if rec is not None:
        trace.records.append(rec)
    trace.records.extend(rr_pendant_exhaustive(inst))
    if lossy:
        before = inst.copy() if check_psi else None
        rec = rr_lossy2(inst)
        if rec is not None:
            if check_psi and not verify_psi(before, rec.psi):
                raise InvariantError("lossy rule produced an invalid pair map")
            trace.records.append(rec)
    return trace


def run_exp_aa(g, approx=Approximator.GREEDY_COVER):
    """Reduce (isolated + pendant), approximate, lift. Returns a valid solution."""
    inst = all_blue(g)
    trace = reduce_instance(inst, lossy=False)
    s_reduced = approximate(inst, approx)
    return lift(trace, s_reduced)


def run_exp_la(g, approx=Approximator.GREEDY_COVER, check_psi=False):
    """Like run_exp_aa with the lossy rule inserted before the approximator."""
    inst = all_blue(g)
    trace = reduce_instance(inst, lossy=True, check_psi=check_psi)
    s_reduced = approximate(inst, approx)
    return lift(trace, s_reduced)


def improvement_pct(aa, la, ex):
    """(aa - la) * 100 / ex when aa > la, else None. ex must be positive."""
    if ex <= 0:
        raise ValueError(f"exact value must be positive, got {ex}")
    if aa <= la:
        return None
    return (aa - la) * 100.0 / ex


def aggregate(reports, category):
    """Share of improved instances and mean improvement among them."""
    reports = list(reports)
    if not reports:
        raise ValueError("cannot aggregate an empty report list")
    improved = [r for r in reports if r.la < r.aa]
    pct = 100.0 * len(improved) / len(reports)
    vals = [r.imprv for r in improved if r.imprv is not None]
    avg = sum(vals) / len(vals) if vals else None
    return AggregateStats(category, len(reports), pct, avg)


def run_instance(
    instance_id,
    g,
    approx=Approximator.GREEDY_COVER,
    time_limit=30.0,
    check_psi=False,
    with_exact=True,
):
    """Run both pipelines (and optionally the exact solver) on one graph.

    Returns (RunReport, aa_seconds, la_seconds). Both pipeline outputs are
    checked for validity; a failure raises InvariantError.
    """
    inst = all_blue(g)

    t0 = time.perf_counter()
    s_aa = run_exp_aa(g, approx)
    aa_seconds = time.perf_counter() - t0

    t0 = time.perf_counter()
    s_la = run_exp_la(g, approx, check_psi=check_psi)
    la_seconds = time.perf_counter() - t0

    if not is_valid_solution(inst, s_aa):
        raise InvariantError(f"{instance_id}: AA pipeline output is not valid")
    if not is_valid_solution(inst, s_la):
        raise InvariantError(f"{instance_id}: LA pipeline output is not valid")

    ex = None
    proven = True
    if with_exact:
        s_ex, proven, _ = exact_min(inst, time_limit)
        ex = len(s_ex)

    aa, la = len(s_aa), len(s_la)
    imprv = improvement_pct(aa, la, ex) if ex else None
    report = RunReport(str(instance_id), g.n, g.m, ex, aa, la, imprv, proven)
    return report, aa_seconds, la_seconds
