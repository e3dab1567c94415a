# -*- coding: utf-8 -*-
"""Lottery extensions: stochastic dominance and downward lexicographic."""
from enum import Enum
from itertools import accumulate

from .base import BaseLotteryExtension

__all__ = [
    "ComparisonResult",
    "SDExtension",
    "DLExtension",
    "sd_compare",
    "dl_compare",
    "exists_strict_improvement",
    "get_extension",
]


class ComparisonResult(Enum):
    """Outcome of comparing lottery p against lottery q for one agent."""

    STRICTLY_PREFERS = "strictly_prefers"
    INDIFFERENT = "indifferent"
    STRICTLY_DISPREFERRED = "strictly_dispreferred"
    INCOMPARABLE = "incomparable"

    def flip(self):
        """Result of the comparison with p and q swapped."""
        return _FLIPPED[self]

    @property
    def weakly_prefers(self):
        """Whether p is weakly preferred to q."""
        return self in (ComparisonResult.STRICTLY_PREFERS, ComparisonResult.INDIFFERENT)


_FLIPPED = {
    ComparisonResult.STRICTLY_PREFERS: ComparisonResult.STRICTLY_DISPREFERRED,
    ComparisonResult.STRICTLY_DISPREFERRED: ComparisonResult.STRICTLY_PREFERS,
    ComparisonResult.INDIFFERENT: ComparisonResult.INDIFFERENT,
    ComparisonResult.INCOMPARABLE: ComparisonResult.INCOMPARABLE,
}


class SDExtension(BaseLotteryExtension):
    """Stochastic dominance extension.

    p is weakly SD-preferred to q iff every upper contour set gets at least
    as much probability under p as under q. Upper contour sets of a weak
    order are the class prefixes E^1 u ... u E^l, so the comparison runs on
    the vectors of cumulative class masses.
    """

    _tags = {"extension_id": "sd", "complete": False, "refines_sd": True}

    def _compare(self, order, p, q):
        cum_p = list(accumulate(p.class_masses(order)))
        cum_q = list(accumulate(q.class_masses(order)))

        geq = all(x >= y for x, y in zip(cum_p, cum_q))
        leq = all(x <= y for x, y in zip(cum_p, cum_q))
        if geq and leq:
            return ComparisonResult.INDIFFERENT
        if geq:
            return ComparisonResult.STRICTLY_PREFERS
        if leq:
            return ComparisonResult.STRICTLY_DISPREFERRED
        return ComparisonResult.INCOMPARABLE


class DLExtension(BaseLotteryExtension):
    """Downward lexicographic extension.

    Compares the class masses p(E^l), q(E^l) from the most preferred class
    down; the first class with different mass decides. DL is complete and
    refines SD.
    """

    _tags = {"extension_id": "dl", "complete": True, "refines_sd": True}

    def _compare(self, order, p, q):
        for mass_p, mass_q in zip(p.class_masses(order), q.class_masses(order)):
            if mass_p > mass_q:
                return ComparisonResult.STRICTLY_PREFERS
            if mass_p < mass_q:
                return ComparisonResult.STRICTLY_DISPREFERRED
        return ComparisonResult.INDIFFERENT


_EXTENSIONS = {"sd": SDExtension, "dl": DLExtension}


def get_extension(ext):
    """Return a lottery extension object.

    Parameters
    ----------
    ext : str or BaseLotteryExtension
        extension id ("sd" or "dl", case insensitive) or an extension object,
        which is returned as is

    Returns
    -------
    BaseLotteryExtension
    """
    if isinstance(ext, BaseLotteryExtension):
        return ext
    try:
        return _EXTENSIONS[str(ext).lower()]()
    except KeyError:
        raise ValueError(
            f'extension must be one of the strings "sd", "dl", but found {ext}'
        ) from None


def sd_compare(order, p, q):
    """Compare p against q under stochastic dominance, see `SDExtension`."""
    return SDExtension().compare(order, p, q)


def dl_compare(order, p, q):
    """Compare p against q downward lexicographically, see `DLExtension`."""
    return DLExtension().compare(order, p, q)


def exists_strict_improvement(order, q, ext="sd"):
    """Decide whether some lottery is ext-strictly preferred to q.

    Parameters
    ----------
    order : WeakOrder
    q : Lottery over ``order.alternatives``
    ext : str or BaseLotteryExtension, default "sd"

    Returns
    -------
    exists : bool
        True iff q puts probability below 1 on the top class of `order`
    witness : Lottery or None
        q's top-class mass kept, the remaining mass moved to the
        lexicographically least top-class alternative; None if not exists
    """
    return get_extension(ext).exists_strict_improvement(order, q)
