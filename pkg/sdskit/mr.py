# -*- coding: utf-8 -*-
"""Maximal recursive rule.

The rule distributes probability weight v of an alternative set S by
generalized plurality scores, then recurses into the inclusion minimal
subsets of the agents' top sets within S. Alternatives outside every
recursion child keep the weight assigned at the current level.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .base import BaseSDS
from .preferences import Lottery, _render_set, max_set

__all__ = [
    "ScoreTable",
    "MrNode",
    "MaximalRecursive",
    "generalized_plurality",
    "ims",
    "all_intersections",
    "mr",
]


@dataclass(frozen=True)
class ScoreTable:
    """Scores of one recursion step on the alternative set S.

    Attributes
    ----------
    s1 : dict of str to int
        generalized plurality score, number of agents whose top set in S
        contains the alternative
    T : dict of int to frozenset
        per agent, its top-set alternatives with maximal s1
    t : dict of (int, str) to Fraction
        1/|T(i)| for alternatives in T(i), 0 otherwise
    gamma : dict of str to Fraction
        sum of t over agents; sums to the number of agents
    """

    s1: dict
    T: dict
    t: dict
    gamma: dict


def generalized_plurality(profile, S):
    """Compute the score table of `profile` restricted to `S`.

    Parameters
    ----------
    profile : Profile
    S : iterable of str, nonempty subset of the alternatives

    Returns
    -------
    ScoreTable
    """
    S = frozenset(S)
    if not S:
        raise ValueError("generalized_plurality needs a nonempty set S")
    tops = {agent: max_set(order, S) for agent, order in profile.orders()}

    s1 = dict.fromkeys(S, 0)
    for top in tops.values():
        for a in top:
            s1[a] += 1

    T, t = {}, {}
    gamma = dict.fromkeys(S, Fraction(0))
    for agent, top in tops.items():
        best = max(s1[a] for a in top)
        T[agent] = frozenset(a for a in top if s1[a] == best)
        share = Fraction(1, len(T[agent]))
        for a in S:
            t[agent, a] = share if a in T[agent] else Fraction(0)
        for a in T[agent]:
            gamma[a] += share
    return ScoreTable(s1=s1, T=T, t=t, gamma=gamma)


def ims(sets):
    """Inclusion minimal sets among all nonempty intersections of `sets`.

    The smallest intersection containing an alternative x is the
    intersection M(x) of all sets containing x, and every minimal
    intersection equals M(x) for each of its members. The minimal elements
    of {M(x)} are therefore the inclusion minimal subsets, found without
    enumerating subfamilies.

    Parameters
    ----------
    sets : iterable of nonempty sets

    Returns
    -------
    frozenset of frozensets, pairwise disjoint
    """
    family = {frozenset(s) for s in sets}
    if not family:
        raise ValueError("ims needs a nonempty family of sets")
    if frozenset() in family:
        raise ValueError("ims needs nonempty sets")

    smallest = {
        frozenset.intersection(*[A for A in family if x in A])
        for x in frozenset().union(*family)
    }
    return frozenset(X for X in smallest if not any(Y < X for Y in smallest))


def all_intersections(sets):
    """Set of all nonempty intersections of subfamilies of `sets`.

    Exponential in the number of distinct sets; used to cross-check `ims`.
    """
    family = sorted({frozenset(s) for s in sets}, key=sorted)
    intersections = set()
    for size in range(1, len(family) + 1):
        for subfamily in combinations(family, size):
            X = frozenset.intersection(*subfamily)
            if X:
                intersections.add(X)
    return intersections


@dataclass
class MrNode:
    """Node of the maximal recursive rule's recursion tree.

    Attributes
    ----------
    set : frozenset of str
        alternative set S handled by the node
    weight : Fraction
        probability weight v distributed over S
    assignment : dict of str to Fraction
        weight assigned to each alternative of S at this level
    children : list of MrNode
        recursion into the inclusion minimal subsets, ordered by their sorted
        members, empty for leaves
    """

    set: frozenset
    weight: Fraction
    assignment: dict
    children: list = field(default_factory=list)

    def iter_nodes(self):
        """Yield the nodes of the subtree, depth first, self first."""
        yield self
        for child in self.children:
            yield from child.iter_nodes()

    def depth(self):
        """Number of edges on the longest root-to-leaf path."""
        return max((child.depth() + 1 for child in self.children), default=0)

    def render(self, indent=0):
        """Indented text rendering with exact weights."""
        assigned = ", ".join(
            f"{a}: {self.assignment[a]}" for a in sorted(self.assignment)
        )
        head = f"{_render_set(self.set)} @ {self.weight}  [{assigned}]"
        lines = [f"{'  ' * indent}{head}"]
        for child in self.children:
            lines.append(child.render(indent + 1))
        return "\n".join(lines)

    def to_dict(self):
        """Structured representation of the subtree."""
        return {
            "set": sorted(self.set),
            "weight": str(self.weight),
            "assignment": {a: str(v) for a, v in sorted(self.assignment.items())},
            "children": [child.to_dict() for child in self.children],
        }


def _subroutine(profile, S, v, final):
    tops = [max_set(order, S) for _, order in profile.orders()]
    if all(top == S for top in tops):
        share = v / len(S)
        assignment = {a: share for a in S}
        final.update(assignment)
        return MrNode(set=S, weight=v, assignment=assignment)

    table = generalized_plurality(profile, S)
    n = profile.n_agents
    assignment = {a: v * table.gamma[a] / n for a in S}
    final.update(assignment)

    node = MrNode(set=S, weight=v, assignment=assignment)
    for child_set in sorted(ims(tops), key=sorted):
        if not child_set < S:
            raise RuntimeError(
                f"recursion child {sorted(child_set)} is not a subset of S"
            )
        child_weight = sum((assignment[a] for a in child_set), Fraction(0))
        node.children.append(_subroutine(profile, child_set, child_weight, final))

    covered = [a for child in node.children for a in child.set]
    if len(covered) != len(set(covered)):
        raise RuntimeError(f"recursion children of {sorted(S)} overlap")
    return node


def mr(profile):
    """Maximal recursive rule.

    Parameters
    ----------
    profile : Profile

    Returns
    -------
    lottery : Lottery
        each alternative gets its assignment in the deepest node containing it
    tree : MrNode
        root of the recursion tree, weight 1 on all alternatives
    """
    final = {}
    tree = _subroutine(profile, profile.alternatives, Fraction(1), final)
    return Lottery(final), tree


class MaximalRecursive(BaseSDS):
    """Maximal recursive rule, ex post efficient and polynomial time."""

    _tags = {"rule_id": "mr", "ex_post_efficient": True}

    def tree(self, profile):
        """Recursion tree of the rule on `profile`, as MrNode."""
        return mr(profile)[1]

    def _compute(self, profile):
        """Compute the rule's lottery for a valid profile.

        Parameters
        ----------
        profile : Profile

        Returns
        -------
        Lottery
        """
        return mr(profile)[0]
