"""Structured verdicts shared by the membership oracles and probes.

A witness never claims more than the truncation window can show:
``member`` and ``non_member`` are verdicts about the window, and
``undecided_at_truncation`` is the honest outcome when the window cannot
settle the question either way.
"""

from __future__ import annotations

from dataclasses import dataclass, field

MEMBER = "member"
NON_MEMBER = "non_member"
UNDECIDED = "undecided_at_truncation"


@dataclass(frozen=True)
class Witness:
    verdict: str
    index: int | None = None
    pair: tuple[int, int] | None = None
    note: str = ""
    elements: tuple = field(default=(), compare=False)

    @property
    def is_member(self) -> bool:
        return self.verdict == MEMBER

    def to_dict(self) -> dict:
        out: dict = {"verdict": self.verdict}
        if self.index is not None:
            out["index"] = self.index
        if self.pair is not None:
            out["pair"] = list(self.pair)
        if self.note:
            out["note"] = self.note
        return out


def member_witness(note: str = "") -> Witness:
    return Witness(MEMBER, note=note)


def non_member_witness(index: int | None = None, pair=None, note: str = "", elements=()) -> Witness:
    return Witness(NON_MEMBER, index=index, pair=pair, note=note, elements=elements)


def undecided_witness(note: str = "") -> Witness:
    return Witness(UNDECIDED, note=note)
