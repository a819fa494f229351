"""Per-month metric aggregation and CSV/JSON export.

The CSV schema is fixed and bit-exact: floats are serialized with 17
significant digits so a round-trip through the file reproduces every frame
exactly, which keeps golden-file comparisons byte-stable.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from .neurons import NeuronState, NeuronStatus
from .rewards import is_governor

CSV_COLUMNS = (
    "month",
    "governor_count",
    "tokens_liquid",
    "tokens_staking",
    "tokens_dissolving",
    "pct_liquid",
    "pct_staking",
    "pct_dissolving",
    "total_supply",
    "minted_this_month",
    "mean_realized_annualized_ratio",
)


@dataclass(frozen=True, slots=True)
class MetricsFrame:
    """End-of-month aggregates for one simulation step."""

    month: int
    governor_count: int
    tokens_liquid: float       # liquid balances across all agents, any status
    tokens_staking: float      # stake held by staking neurons
    tokens_dissolving: float   # stake held by dissolving neurons
    pct_liquid: float
    pct_staking: float
    pct_dissolving: float
    total_supply: float
    minted_this_month: float
    mean_realized_annualized_ratio: float   # 0.0 in months with no governors


def aggregate(neurons: Iterable[NeuronState],
              *,
              month: int,
              total_supply: float | None = None,
              minted_this_month: float = 0.0,
              mean_realized_annualized_ratio: float = 0.0) -> MetricsFrame:
    """Fold neuron states into a frame.

    Liquid balances count as liquid tokens regardless of neuron status, so
    the three buckets always sum to the tokens actually held by agents.
    When ``total_supply`` is omitted it defaults to that sum.
    """
    liquid = staking = dissolving = 0.0
    governors = 0
    for n in neurons:
        liquid += n.liquid_balance
        if n.status is NeuronStatus.STAKING:
            staking += n.stake
        elif n.status is NeuronStatus.DISSOLVING:
            dissolving += n.stake
        if is_governor(n):
            governors += 1
    held = liquid + staking + dissolving
    if total_supply is None:
        total_supply = held
    if held > 0:
        pct_liquid, pct_staking, pct_dissolving = liquid / held, staking / held, dissolving / held
    else:
        pct_liquid = pct_staking = pct_dissolving = 0.0
    return MetricsFrame(
        month=month,
        governor_count=governors,
        tokens_liquid=liquid,
        tokens_staking=staking,
        tokens_dissolving=dissolving,
        pct_liquid=pct_liquid,
        pct_staking=pct_staking,
        pct_dissolving=pct_dissolving,
        total_supply=total_supply,
        minted_this_month=minted_this_month,
        mean_realized_annualized_ratio=mean_realized_annualized_ratio,
    )


def _fmt(value: float) -> str:
    return format(value, ".17g")


def frame_to_row(frame: MetricsFrame) -> str:
    return ",".join((
        str(frame.month),
        str(frame.governor_count),
        _fmt(frame.tokens_liquid),
        _fmt(frame.tokens_staking),
        _fmt(frame.tokens_dissolving),
        _fmt(frame.pct_liquid),
        _fmt(frame.pct_staking),
        _fmt(frame.pct_dissolving),
        _fmt(frame.total_supply),
        _fmt(frame.minted_this_month),
        _fmt(frame.mean_realized_annualized_ratio),
    ))


def export_csv(frames: Sequence[MetricsFrame], destination) -> None:
    """Write header plus one row per month; refuses an empty frame list."""
    if not frames:
        raise ValueError("no frames to export")
    lines = [",".join(CSV_COLUMNS)]
    lines.extend(frame_to_row(f) for f in frames)
    with open(destination, "w", encoding="utf-8", newline="") as fh:
        fh.write("\n".join(lines) + "\n")


def import_csv(source) -> list[MetricsFrame]:
    """Inverse of :func:`export_csv`; exact for files it wrote itself."""
    text = Path(source).read_text(encoding="utf-8")
    lines = [ln for ln in text.split("\n") if ln]
    header = tuple(lines[0].split(","))
    if header != CSV_COLUMNS:
        raise ValueError(f"unexpected CSV header: {lines[0]!r}")
    frames = []
    for line in lines[1:]:
        parts = line.split(",")
        frames.append(MetricsFrame(
            month=int(parts[0]),
            governor_count=int(parts[1]),
            tokens_liquid=float(parts[2]),
            tokens_staking=float(parts[3]),
            tokens_dissolving=float(parts[4]),
            pct_liquid=float(parts[5]),
            pct_staking=float(parts[6]),
            pct_dissolving=float(parts[7]),
            total_supply=float(parts[8]),
            minted_this_month=float(parts[9]),
            mean_realized_annualized_ratio=float(parts[10]),
        ))
    return frames


def export_json(frames: Sequence[MetricsFrame], destination) -> None:
    """Same columns as the CSV, as an array of objects."""
    if not frames:
        raise ValueError("no frames to export")
    records = []
    for f in frames:
        records.append({
            "month": f.month,
            "governor_count": f.governor_count,
            "tokens_liquid": f.tokens_liquid,
            "tokens_staking": f.tokens_staking,
            "tokens_dissolving": f.tokens_dissolving,
            "pct_liquid": f.pct_liquid,
            "pct_staking": f.pct_staking,
            "pct_dissolving": f.pct_dissolving,
            "total_supply": f.total_supply,
            "minted_this_month": f.minted_this_month,
            "mean_realized_annualized_ratio": f.mean_realized_annualized_ratio,
        })
    with open(destination, "w", encoding="utf-8", newline="") as fh:
        json.dump(records, fh, indent=2)
        fh.write("\n")
