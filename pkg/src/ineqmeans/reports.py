"""Shared report type for three-term inequality chains."""

from __future__ import annotations

from dataclasses import dataclass

CHAIN_RTOL = 1e-12


@dataclass(frozen=True)
class ChainReport:
    """Evaluated left/middle/right terms of a chain plus the ordering verdict.

    For a forward chain (left <= middle <= right) the slacks are
    middle - left and right - middle; a reversed chain (left >= middle >=
    right, e.g. the Lorentz-space refinement) orients them as left - middle
    and middle - right.  Either way, ``ordered`` means both slacks are
    >= -tol * scale with scale = max(|left|, |middle|, |right|).
    """

    left: float
    middle: float
    right: float
    slack_left: float
    slack_right: float
    ordered: bool

    @property
    def scale(self) -> float:
        return max(abs(self.left), abs(self.middle), abs(self.right))


def chain_report(left: float, middle: float, right: float,
                 tol: float = CHAIN_RTOL, reverse: bool = False) -> ChainReport:
    if reverse:
        slack_left = left - middle
        slack_right = middle - right
    else:
        slack_left = middle - left
        slack_right = right - middle
    scale = max(abs(left), abs(middle), abs(right))
    ordered = slack_left >= -tol * scale and slack_right >= -tol * scale
    return ChainReport(left, middle, right, slack_left, slack_right, ordered)
