"""Quantile aggregation of run records over class groups"""

import logging

import pandas as pd

from qbench.core.exceptions import ValidationError
from qbench.problems.classes import GROUPINGS, group_members

logger = logging.getLogger(__name__)

AGGREGATE_COLUMNS = ["group", "solver", "evaluations", "median", "q10", "q90", "count"]
PER_CLASS = "class"


def grouping_names() -> list[str]:
    return [*GROUPINGS, PER_CLASS]


def check_schedule(frame: pd.DataFrame) -> list[int]:
    """The checkpoint schedule shared by every run; raises on a mixture"""
    if frame.empty:
        raise ValidationError("No run records to aggregate")
    schedules = frame.groupby(["class_name", "dimension", "index", "solver", "seed"], sort=False)[
        "evaluations"
    ].apply(lambda s: tuple(sorted(s)))
    distinct = set(schedules)
    if len(distinct) != 1:
        raise ValidationError(f"Run records mix {len(distinct)} checkpoint schedules")
    return list(distinct.pop())


def _summarize(frame: pd.DataFrame, group: str) -> pd.DataFrame:
    grouped = frame.groupby(["solver", "evaluations"])["normalized_hv"]
    summary = pd.DataFrame(
        {
            "median": grouped.quantile(0.5, interpolation="lower"),
            "q10": grouped.quantile(0.1, interpolation="lower"),
            "q90": grouped.quantile(0.9, interpolation="lower"),
            "count": grouped.size(),
        }
    ).reset_index()
    summary.insert(0, "group", group)
    return summary


def aggregate(frame: pd.DataFrame, grouping: str = "taxonomy") -> pd.DataFrame:
    """Median and 10%/90% quantiles per (group, solver, checkpoint).

    Args:
        frame: Run records as read by ``read_runs``
        grouping: A key of ``GROUPINGS`` or ``"class"`` for one group per class

    Returns:
        Frame with AGGREGATE_COLUMNS, sorted by group order, solver and evaluations
    """
    if grouping != PER_CLASS and grouping not in GROUPINGS:
        raise ValidationError(f"Unknown grouping '{grouping}'; available: {grouping_names()}")
    check_schedule(frame)

    if grouping == PER_CLASS:
        groups = {name: [name] for name in sorted(frame["class_name"].unique())}
    else:
        groups = {name: group_members(name) for name in GROUPINGS[grouping]}

    parts = []
    for group, members in groups.items():
        subset = frame[frame["class_name"].isin(members)]
        if subset.empty:
            logger.info("Group %s has no run records", group)
            continue
        parts.append(_summarize(subset, group))
    if not parts:
        raise ValidationError(f"No run records fall into grouping '{grouping}'")

    result = pd.concat(parts, ignore_index=True)
    result["evaluations"] = result["evaluations"].astype(int)
    return result[AGGREGATE_COLUMNS]
