"""Shared domain types: time grids, spike trains, and membrane traces.

All types here are immutable value objects.  Arrays are copied on
construction and marked read-only, so instances can be shared freely
across parallel workers.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionMismatch, IndexOutOfRange, MisalignedGrid, NonPositiveTime

__all__ = [
    "TimeGrid",
    "SpikeTrain",
    "MembraneTrace",
    "make_time_grid",
    "spike_count",
    "raster_rows",
    "train_from_rows",
    "write_raster_csv",
]

RASTER_HEADER = "neuron,time_ms,count"


@dataclass(frozen=True)
class TimeGrid:
    """Discrete simulation grid: ``steps`` bins of width ``dt`` ms."""

    duration: float
    dt: float
    steps: int

    def times(self) -> np.ndarray:
        """Bin start times in ms, shape (steps,)."""
        return np.arange(self.steps) * self.dt


def make_time_grid(duration: float, dt: float = 1.0) -> TimeGrid:
    """Build a grid covering ``duration`` ms in bins of ``dt`` ms.

    Raises NonPositiveTime for non-positive arguments and MisalignedGrid
    when duration is not an integer multiple of dt (to one part in 1e6).
    """
    if duration <= 0 or dt <= 0:
        raise NonPositiveTime(f"duration={duration}, dt={dt} must both be > 0")
    ratio = duration / dt
    steps = int(round(ratio))
    if steps < 1 or abs(ratio - steps) > 1e-6 * max(1.0, ratio):
        raise MisalignedGrid(f"duration {duration} is not an integer multiple of dt {dt}")
    return TimeGrid(duration=float(duration), dt=float(dt), steps=steps)


def _readonly(a: np.ndarray) -> np.ndarray:
    a = np.array(a, copy=True)
    a.flags.writeable = False
    return a


@dataclass(frozen=True)
class SpikeTrain:
    """Per-neuron, per-step non-negative integer spike counts.

    A count of c in bin s stands for c unit impulses at time s * dt;
    the excitation function can emit more than one spike per bin, so
    counts rather than booleans are stored.
    """

    grid: TimeGrid
    spikes: np.ndarray = field(repr=False)

    def __post_init__(self):
        counts = np.asarray(self.spikes)
        if counts.ndim != 2 or counts.shape[1] != self.grid.steps:
            raise DimensionMismatch(
                f"spike array shape {counts.shape} does not match grid steps {self.grid.steps}"
            )
        if counts.size and counts.min() < 0:
            raise ValueError("spike counts must be non-negative")
        if not np.issubdtype(counts.dtype, np.integer):
            rounded = np.rint(counts)
            if counts.size and np.abs(rounded - counts).max() > 0:
                raise ValueError("spike counts must be integers")
            counts = rounded
        object.__setattr__(self, "spikes", _readonly(counts.astype(np.int64)))

    @property
    def neuron_count(self) -> int:
        return self.spikes.shape[0]

    @classmethod
    def zeros(cls, neuron_count: int, grid: TimeGrid) -> "SpikeTrain":
        return cls(grid=grid, spikes=np.zeros((neuron_count, grid.steps), dtype=np.int64))

    def counts_per_neuron(self) -> np.ndarray:
        return self.spikes.sum(axis=1)


@dataclass(frozen=True)
class MembraneTrace:
    """Per-neuron, per-step membrane potential samples."""

    grid: TimeGrid
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        v = np.asarray(self.values, dtype=np.float64)
        if v.ndim != 2 or v.shape[1] != self.grid.steps:
            raise DimensionMismatch(
                f"trace shape {v.shape} does not match grid steps {self.grid.steps}"
            )
        if v.size and not np.all(np.isfinite(v)):
            raise ValueError("membrane trace must be finite")
        object.__setattr__(self, "values", _readonly(v))

    @property
    def neuron_count(self) -> int:
        return self.values.shape[0]


def spike_count(train: SpikeTrain, neuron: int) -> int:
    """Total number of spikes emitted by one neuron."""
    if not 0 <= neuron < train.neuron_count:
        raise IndexOutOfRange(f"neuron {neuron} outside [0, {train.neuron_count})")
    return int(train.spikes[neuron].sum())


def raster_rows(train: SpikeTrain) -> list[tuple[int, float, int]]:
    """Flatten a train to (neuron, time_ms, count) rows.

    One row per nonzero cell, ordered by time then neuron.
    """
    neurons, steps = np.nonzero(train.spikes)
    order = np.lexsort((neurons, steps))
    return [
        (int(neurons[i]), float(steps[i] * train.grid.dt), int(train.spikes[neurons[i], steps[i]]))
        for i in order
    ]


def train_from_rows(
    rows, neuron_count: int, grid: TimeGrid
) -> SpikeTrain:
    """Rebuild a SpikeTrain from raster rows (inverse of raster_rows)."""
    counts = np.zeros((neuron_count, grid.steps), dtype=np.int64)
    for neuron, time_ms, count in rows:
        step = int(round(time_ms / grid.dt))
        if not 0 <= neuron < neuron_count:
            raise IndexOutOfRange(f"neuron {neuron} outside [0, {neuron_count})")
        if not 0 <= step < grid.steps:
            raise IndexOutOfRange(f"time {time_ms} ms outside the grid")
        counts[neuron, step] += count
    return SpikeTrain(grid=grid, spikes=counts)


def write_raster_csv(path, train: SpikeTrain) -> None:
    """Write the raster CSV: header ``neuron,time_ms,count``, LF endings."""
    with open(path, "w", newline="\n") as fh:
        fh.write(RASTER_HEADER + "\n")
        for neuron, time_ms, count in raster_rows(train):
            fh.write(f"{neuron},{time_ms},{count}\n")
