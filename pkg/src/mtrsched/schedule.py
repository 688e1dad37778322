"""Schedule data type and its JSON document form."""

from __future__ import annotations

import json
from dataclasses import dataclass

from .model import Link

__all__ = ["ScheduleEntry", "Schedule", "ScheduleFormatError",
           "schedule_to_json", "schedule_from_json"]


class ScheduleFormatError(ValueError):
    """Malformed schedule document."""


@dataclass(frozen=True)
class ScheduleEntry:
    """A matching and the number of consecutive slots assigned to it."""

    links: tuple[Link, ...]
    slots: int


@dataclass(frozen=True)
class Schedule:
    """Ordered list of (matching, slots) entries."""

    entries: tuple[ScheduleEntry, ...] = ()

    @property
    def total_slots(self) -> int:
        return sum(e.slots for e in self.entries)

    def coverage(self, link: Link) -> int:
        """Total slots over entries containing the given link."""
        return sum(e.slots for e in self.entries if link in e.links)


def schedule_to_json(schedule: Schedule) -> str:
    doc = {
        "entries": [
            {"links": [[tx, rx] for tx, rx in e.links], "slots": e.slots}
            for e in schedule.entries
        ],
        "total": schedule.total_slots,
    }
    return json.dumps(doc)


def schedule_from_json(text: str | bytes) -> Schedule:
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ScheduleFormatError(f"not valid JSON: {exc}") from None
    if not isinstance(doc, dict) or "entries" not in doc:
        raise ScheduleFormatError("schedule document must be an object with 'entries'")
    entries = []
    for rec in doc["entries"]:
        if not isinstance(rec, dict) or "links" not in rec or "slots" not in rec:
            raise ScheduleFormatError(f"entry must have 'links' and 'slots': {rec!r}")
        slots = rec["slots"]
        if not isinstance(slots, int):
            raise ScheduleFormatError(f"'slots' must be an integer, got {slots!r}")
        links = []
        for pair in rec["links"]:
            if (not isinstance(pair, list) or len(pair) != 2
                    or not all(isinstance(v, int) for v in pair)):
                raise ScheduleFormatError(f"links must be [tx, rx] pairs, got {pair!r}")
            links.append((pair[0], pair[1]))
        entries.append(ScheduleEntry(tuple(sorted(links)), slots))
    sched = Schedule(tuple(entries))
    if "total" in doc and doc["total"] != sched.total_slots:
        raise ScheduleFormatError(
            f"declared total {doc['total']} does not match entry sum {sched.total_slots}")
    return sched
