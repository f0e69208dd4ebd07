from __future__ import annotations

import contextvars
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Iterator


@dataclass(frozen=True)
class Params:
    """Size thresholds (tau_u, tau_v) and frequency threshold lam."""

    tau_u: int
    tau_v: int
    lam: int

    def __post_init__(self):
        for name in ("tau_u", "tau_v", "lam"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int) or value < 1:
                raise ValueError(f"{name} must be a positive integer, got {value!r}")


@dataclass(frozen=True, order=True)
class FrequencyGroup:
    """V-side vertex ids of a group and the timestamps supporting it."""

    members: tuple[int, ...]
    support: tuple[int, ...] = ()

    def __len__(self) -> int:
        return len(self.members)


@dataclass
class Counters:
    """Work counters filled in by the enumerators while ``counting()`` is active."""

    frequency_checks: int = 0
    subset_comparisons: int = 0
    frames: int = 0
    # (candidates surviving the timestamp filter, frequency checks) per FilterV frame
    filterv_frames: list = field(default_factory=list)


_counters: contextvars.ContextVar[Counters | None] = contextvars.ContextVar(
    "mfgroups_counters", default=None
)


@contextmanager
def counting() -> Iterator[Counters]:
    c = Counters()
    token = _counters.set(c)
    try:
        yield c
    finally:
        _counters.reset(token)


def current_counters() -> Counters | None:
    return _counters.get()


def remap_groups(groups, v_map, t_map) -> list[FrequencyGroup]:
    """Translate groups from a reduced graph's ids to its parent's ids."""
    out = [
        FrequencyGroup(
            tuple(sorted(v_map[v] for v in g.members)),
            tuple(sorted(t_map[t] for t in g.support)),
        )
        for g in groups
    ]
    out.sort()
    return out
