# -*- coding: utf-8 -*-
"""Weak orders, preference profiles and lotteries.

This module exports the core value types of the package:

WeakOrder
    an agent's preference as an ordered partition into indifference classes
Profile
    agents' weak orders over a common alternative set
Lottery
    exact rational probability distribution over the alternatives

and the text grammar used to read and write profiles and lotteries.
All types are immutable after construction.
"""
import re
from fractions import Fraction
from itertools import combinations

__all__ = [
    "ProfileSyntaxError",
    "WeakOrder",
    "Profile",
    "Lottery",
    "parse_order",
    "parse_profile",
    "render_profile",
    "parse_lottery",
    "restrict",
    "max_set",
    "remove_agent",
    "lottery_class_mass",
    "iter_weak_orders",
]

_ALT_PATTERN = re.compile(r"[a-z0-9_]+")
_AGENT_PATTERN = re.compile(r"[1-9][0-9]*")


class ProfileSyntaxError(ValueError):
    """Malformed profile, order or lottery text.

    Parameters
    ----------
    message : str
        description of the problem
    line : int, optional
        1-based line number of the problem
    column : int, optional
        1-based column number of the problem
    """

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            location = f"line {line}" + (f", column {column}" if column else "")
            message = f"{location}: {message}"
        super(ProfileSyntaxError, self).__init__(message)


def _check_alternative(alt):
    if not isinstance(alt, str) or not _ALT_PATTERN.fullmatch(alt):
        raise ValueError(
            "alternatives must be nonempty strings over [a-z0-9_], "
            f"but found {alt!r}"
        )
    return alt


def _as_set(S, name="S"):
    S = frozenset(S)
    if not S:
        raise ValueError(f"{name} must be a nonempty set of alternatives")
    return S


def _render_set(S):
    S = sorted(S)
    if len(S) == 1:
        return S[0]
    return "{" + ",".join(S) + "}"


class WeakOrder:
    """Complete and transitive preference, as ordered indifference classes.

    Parameters
    ----------
    classes : iterable of iterables of str
        equivalence classes E^1, E^2, ..., E^k, most preferred first.
        Classes must be nonempty and pairwise disjoint; a bare string is
        read as a singleton class.

    Examples
    --------
    >>> order = WeakOrder([{"a", "b"}, "c"])
    >>> order.render()
    '{a,b},c'
    """

    __slots__ = ("_classes", "_rank")

    def __init__(self, classes):
        coerced = []
        rank = {}
        for level, cls in enumerate(classes):
            cls = frozenset([cls]) if isinstance(cls, str) else frozenset(cls)
            if not cls:
                raise ValueError("equivalence classes of a WeakOrder must be nonempty")
            for alt in cls:
                _check_alternative(alt)
                if alt in rank:
                    raise ValueError(
                        f"duplicate alternative in order: {alt!r} appears in "
                        "more than one equivalence class"
                    )
                rank[alt] = level
            coerced.append(cls)
        if not coerced:
            raise ValueError("a WeakOrder needs at least one equivalence class")
        self._classes = tuple(coerced)
        self._rank = rank

    @property
    def classes(self):
        """Tuple of frozensets, most preferred class first."""
        return self._classes

    @property
    def alternatives(self):
        """Frozenset of all alternatives ranked by the order."""
        return frozenset(self._rank)

    @property
    def is_strict(self):
        """Whether all equivalence classes are singletons."""
        return all(len(cls) == 1 for cls in self._classes)

    @property
    def is_dichotomous(self):
        """Whether the order has exactly two equivalence classes."""
        return len(self._classes) == 2

    def rank(self, alt):
        """Return 0-based index of the class containing `alt`."""
        try:
            return self._rank[alt]
        except KeyError:
            raise ValueError(
                f"alternative {alt!r} is not ranked by order {self.render()}"
            ) from None

    def weakly_prefers(self, a, b):
        """Whether a is at least as good as b."""
        return self.rank(a) <= self.rank(b)

    def strictly_prefers(self, a, b):
        """Whether a is strictly better than b."""
        return self.rank(a) < self.rank(b)

    def prefixes(self):
        """Yield the upper sets E^1, E^1 u E^2, ..., as frozensets."""
        acc = frozenset()
        for cls in self._classes:
            acc = acc | cls
            yield acc

    def restrict(self, S):
        """Restrict the order to `S`, see `restrict`."""
        return restrict(self, S)

    def max_set(self, S):
        """Most preferred alternatives within `S`, see `max_set`."""
        return max_set(self, S)

    def rename(self, mapping):
        """Return the order with alternatives renamed by `mapping`."""
        return WeakOrder([{mapping[a] for a in cls} for cls in self._classes])

    def render(self):
        """Render in profile-line syntax, e.g. ``{a,b},c``."""
        return ",".join(_render_set(cls) for cls in self._classes)

    def sort_key(self):
        """Canonical key: tuple of sorted class tuples."""
        return tuple(tuple(sorted(cls)) for cls in self._classes)

    def __eq__(self, other):
        if not isinstance(other, WeakOrder):
            return NotImplemented
        return self._classes == other._classes

    def __hash__(self):
        return hash(self._classes)

    def __repr__(self):
        return f"WeakOrder({self.render()!r})"


def restrict(order, S):
    """Restrict a weak order to a subset of alternatives.

    Parameters
    ----------
    order : WeakOrder
    S : iterable of str, nonempty subset of ``order.alternatives``

    Returns
    -------
    WeakOrder
        classes intersected with `S`, empty classes dropped, order preserved
    """
    S = _as_set(S)
    unknown = S - order.alternatives
    if unknown:
        raise ValueError(
            f"cannot restrict order {order.render()} to alternatives it does "
            f"not rank: {sorted(unknown)}"
        )
    return WeakOrder([cls & S for cls in order.classes if cls & S])


def max_set(order, S):
    """Return the most preferred alternatives of `order` within `S`."""
    return restrict(order, S).classes[0]


class Profile:
    """Preference profile: agents' weak orders over one alternative set.

    Parameters
    ----------
    orders : mapping of int to WeakOrder
        agent id (positive int) to that agent's order. Agent ids need not
        be contiguous.
    alternatives : iterable of str, optional
        the alternative set. If omitted, the union of the orders.

    Raises
    ------
    ValueError
        if there are no agents, an agent id is not a positive int, or some
        order does not rank exactly the alternative set ("incomplete order")
    """

    __slots__ = ("_orders", "_alternatives")

    def __init__(self, orders, alternatives=None):
        orders = dict(orders)
        if not orders:
            raise ValueError("a Profile needs at least one agent")
        for agent, order in orders.items():
            if not isinstance(agent, int) or isinstance(agent, bool) or agent < 1:
                raise ValueError(f"agent ids must be positive ints, found {agent!r}")
            if not isinstance(order, WeakOrder):
                raise TypeError(
                    f"order of agent {agent} must be a WeakOrder, "
                    f"found {type(order).__name__}"
                )
        if alternatives is None:
            alternatives = frozenset().union(*(o.alternatives for o in orders.values()))
        alternatives = frozenset(_check_alternative(a) for a in alternatives)
        for agent, order in orders.items():
            if order.alternatives != alternatives:
                missing = sorted(alternatives - order.alternatives)
                extra = sorted(order.alternatives - alternatives)
                raise ValueError(
                    f"incomplete order for agent {agent}: {order.render()} "
                    f"misses {missing} and has unknown {extra}"
                )
        self._orders = {agent: orders[agent] for agent in sorted(orders)}
        self._alternatives = alternatives

    @property
    def alternatives(self):
        """Frozenset of alternatives."""
        return self._alternatives

    @property
    def agents(self):
        """Tuple of agent ids, ascending."""
        return tuple(self._orders)

    @property
    def n_agents(self):
        """Number of agents."""
        return len(self._orders)

    def sorted_alternatives(self):
        """List of alternatives in lexicographic order."""
        return sorted(self._alternatives)

    def orders(self):
        """Return list of (agent, order) pairs, ascending agent id."""
        return list(self._orders.items())

    def __getitem__(self, agent):
        try:
            return self._orders[agent]
        except KeyError:
            raise ValueError(
                f"unknown agent {agent!r}, profile agents are {list(self.agents)}"
            ) from None

    def __contains__(self, agent):
        return agent in self._orders

    def __len__(self):
        return len(self._orders)

    def __iter__(self):
        return iter(self._orders)

    def remove_agent(self, agent):
        """Profile without `agent`, see `remove_agent`."""
        return remove_agent(self, agent)

    def add_agent(self, agent, order):
        """Return the profile with a new agent added.

        Parameters
        ----------
        agent : int, must not be present yet
        order : WeakOrder over ``self.alternatives``
        """
        if agent in self._orders:
            raise ValueError(f"duplicate agent id {agent} in profile")
        orders = dict(self._orders)
        orders[agent] = order
        return Profile(orders, self._alternatives)

    def replace_order(self, agent, order):
        """Return the profile where `agent` reports `order` instead."""
        self[agent]
        orders = dict(self._orders)
        orders[agent] = order
        return Profile(orders, self._alternatives)

    def relabel_agents(self, mapping):
        """Return the profile with agent ids renamed by `mapping`."""
        return Profile(
            {mapping[agent]: order for agent, order in self._orders.items()},
            self._alternatives,
        )

    def rename_alternatives(self, mapping):
        """Return the profile with alternatives renamed by `mapping`."""
        return Profile(
            {agent: order.rename(mapping) for agent, order in self._orders.items()},
            {mapping[a] for a in self._alternatives},
        )

    def restrict(self, S):
        """Return the profile with every order restricted to `S`."""
        S = _as_set(S)
        return Profile({agent: restrict(o, S) for agent, o in self._orders.items()}, S)

    def canonical_key(self):
        """Hashable key identifying the profile up to nothing (ids kept)."""
        return (
            tuple(sorted(self._alternatives)),
            tuple((agent, o.sort_key()) for agent, o in self._orders.items()),
        )

    def render(self):
        """Render in profile text syntax, always with a header line."""
        return render_profile(self)

    def to_dict(self):
        """Structured representation for machine consumption.

        Returns
        -------
        dict with keys
            "alternatives" : list of str, lexicographic
            "orders" : dict of str (agent id) to list of list of str (classes)
        """
        return {
            "alternatives": self.sorted_alternatives(),
            "orders": {
                str(agent): [sorted(cls) for cls in order.classes]
                for agent, order in self._orders.items()
            },
        }

    def __eq__(self, other):
        if not isinstance(other, Profile):
            return NotImplemented
        return (
            self._alternatives == other._alternatives
            and self._orders == other._orders
        )

    def __hash__(self):
        return hash(self.canonical_key())

    def __repr__(self):
        lines = "; ".join(f"{a}: {o.render()}" for a, o in self._orders.items())
        return f"Profile({lines})"


def remove_agent(profile, agent):
    """Return ``profile`` without ``agent`` (abstention); ids of others kept.

    Raises
    ------
    ValueError
        if `agent` is unknown or is the last agent of the profile
    """
    profile[agent]
    if profile.n_agents < 2:
        raise ValueError(
            f"cannot remove agent {agent}: it is the last agent of the profile"
        )
    orders = {a: o for a, o in profile.orders() if a != agent}
    return Profile(orders, profile.alternatives)


def render_profile(profile):
    """Render a profile as text with header, one agent per line."""
    lines = ["alternatives: " + ", ".join(profile.sorted_alternatives())]
    lines += [f"{agent}: {order.render()}" for agent, order in profile.orders()]
    return "\n".join(lines) + "\n"


class _LineScanner:
    """Cursor over one line of profile text, reporting 1-based columns."""

    def __init__(self, text, lineno, offset=0):
        self.text = text
        self.lineno = lineno
        self.pos = offset

    def error(self, message):
        raise ProfileSyntaxError(message, self.lineno, self.pos + 1)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def at_end(self):
        self.skip_ws()
        return self.pos >= len(self.text)

    def peek(self):
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, char):
        if self.peek() != char:
            found = self.peek() or "end of line"
            self.error(f"expected {char!r} but found {found!r}")
        self.pos += 1

    def alternative(self):
        self.skip_ws()
        match = _ALT_PATTERN.match(self.text, self.pos)
        if not match:
            found = self.peek() or "end of line"
            self.error(f"expected an alternative [a-z0-9_]+ but found {found!r}")
        self.pos = match.end()
        return match.group()

    def alternative_list(self):
        alts = [self.alternative()]
        while self.peek() == ",":
            self.pos += 1
            alts.append(self.alternative())
        return alts

    def order_classes(self):
        """Parse ``class ("," class)*`` up to end of line."""
        classes = []
        seen = set()
        while True:
            column = self.pos + 1
            if self.peek() == "{":
                self.pos += 1
                cls = self.alternative_list()
                self.expect("}")
            else:
                cls = [self.alternative()]
            for alt in cls:
                if alt in seen:
                    raise ProfileSyntaxError(
                        f"duplicate alternative in order: {alt!r}", self.lineno, column
                    )
                seen.add(alt)
            classes.append(cls)
            if self.at_end():
                return classes
            self.expect(",")


def _strip_comment(line):
    return line.split("#", 1)[0]


def parse_order(text):
    """Parse a single order such as ``"{a,b},c"`` into a WeakOrder."""
    scanner = _LineScanner(_strip_comment(text), 1)
    if scanner.at_end():
        scanner.error("empty order")
    return WeakOrder(scanner.order_classes())


def parse_profile(text):
    """Parse profile text into a Profile.

    Grammar (whitespace around tokens ignored, ``#`` starts a comment)::

        header  := "alternatives:" alt ("," alt)*      (optional)
        line    := agent-id ":" class ("," class)*
        class   := "{" alt ("," alt)* "}" | alt

    Parameters
    ----------
    text : str

    Returns
    -------
    Profile
        alternative set is the header's if present, else the union of lines

    Raises
    ------
    ProfileSyntaxError
        on grammar violations (with line and column), "duplicate agent id",
        "duplicate alternative in order" and "incomplete order"
    """
    header = None
    orders = {}
    linenos = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        scanner = _LineScanner(line, lineno)
        if scanner.at_end():
            continue
        stripped = line.lstrip()
        if stripped.startswith("alternatives"):
            if header is not None:
                scanner.error("duplicate alternatives header")
            if orders:
                scanner.error("alternatives header must precede agent lines")
            scanner.pos = line.index("alternatives") + len("alternatives")
            scanner.expect(":")
            header = scanner.alternative_list()
            if not scanner.at_end():
                scanner.error(f"unexpected {scanner.peek()!r} after header")
            if len(set(header)) != len(header):
                raise ProfileSyntaxError("duplicate alternative in header", lineno)
            continue
        scanner.skip_ws()
        match = _AGENT_PATTERN.match(line, scanner.pos)
        if not match:
            scanner.error("expected an agent id [1-9][0-9]*")
        agent = int(match.group())
        scanner.pos = match.end()
        scanner.expect(":")
        if agent in orders:
            raise ProfileSyntaxError(f"duplicate agent id {agent}", lineno, 1)
        if scanner.at_end():
            scanner.error(f"agent {agent} has an empty order")
        orders[agent] = WeakOrder(scanner.order_classes())
        linenos[agent] = lineno

    if not orders:
        raise ProfileSyntaxError("profile has no agent lines")
    alternatives = (
        frozenset(header)
        if header is not None
        else frozenset().union(*(o.alternatives for o in orders.values()))
    )
    for agent, order in orders.items():
        missing = alternatives - order.alternatives
        extra = order.alternatives - alternatives
        if missing:
            raise ProfileSyntaxError(
                f"incomplete order: agent {agent} omits {sorted(missing)}",
                linenos[agent],
            )
        if extra:
            raise ProfileSyntaxError(
                f"agent {agent} ranks alternatives not in the header: {sorted(extra)}",
                linenos[agent],
            )
    return Profile(orders, alternatives)


def _as_fraction(value):
    if isinstance(value, float):
        raise TypeError(
            f"probabilities must be exact (int, Fraction or str), found float {value}"
        )
    return Fraction(value)


class Lottery:
    """Probability distribution over alternatives, with exact rationals.

    Parameters
    ----------
    probs : mapping of str to int, Fraction or str
        alternative to probability. Explicit zeros are allowed; the keys are
        the domain of the lottery. Floats are rejected.

    Raises
    ------
    ValueError
        if some probability is negative or the probabilities do not sum to 1
    """

    __slots__ = ("_probs",)

    def __init__(self, probs):
        probs = {_check_alternative(a): _as_fraction(v) for a, v in dict(probs).items()}
        if not probs:
            raise ValueError("a Lottery needs a nonempty domain")
        negative = sorted(a for a, v in probs.items() if v < 0)
        if negative:
            raise ValueError(f"lottery has negative probabilities on {negative}")
        total = sum(probs.values())
        if total != 1:
            raise ValueError(f"lottery probabilities must sum to 1, but sum to {total}")
        self._probs = {a: probs[a] for a in sorted(probs)}

    @classmethod
    def uniform(cls, alternatives, over=None):
        """Uniform lottery on `over` (default: all), zero elsewhere."""
        alternatives = frozenset(alternatives)
        over = alternatives if over is None else _as_set(over, "over")
        share = Fraction(1, len(over))
        return cls({a: share if a in over else 0 for a in alternatives})

    @classmethod
    def degenerate(cls, alternatives, alt):
        """Lottery putting probability 1 on `alt`."""
        return cls.uniform(alternatives, over=[alt])

    @property
    def alternatives(self):
        """Frozenset domain of the lottery."""
        return frozenset(self._probs)

    @property
    def support(self):
        """Frozenset of alternatives with positive probability."""
        return frozenset(a for a, v in self._probs.items() if v > 0)

    def __getitem__(self, alt):
        try:
            return self._probs[alt]
        except KeyError:
            raise ValueError(
                f"alternative {alt!r} is outside the lottery domain "
                f"{sorted(self._probs)}"
            ) from None

    def items(self):
        """(alternative, probability) pairs in lexicographic order."""
        return self._probs.items()

    def mass(self, S):
        """Total probability of `S`, see `lottery_class_mass`."""
        return lottery_class_mass(self, S)

    def class_masses(self, order):
        """Tuple of probabilities p(E^1), ..., p(E^k) of `order`'s classes."""
        _check_domain(order, self)
        return tuple(sum(self._probs[a] for a in cls) for cls in order.classes)

    def render(self, fmt="fraction"):
        """Render as ``"a: 5/18, b: 0, c: 4/9"`` in lexicographic order.

        Parameters
        ----------
        fmt : str, one of "fraction" or "decimal"
            "fraction" = exact reduced rationals
            "decimal" = 6 fractional digits, rounded half to even
        """
        if fmt == "fraction":
            fmt_value = str
        elif fmt == "decimal":
            fmt_value = _decimal6
        else:
            raise ValueError(
                f'fmt must be one of the strings "fraction", "decimal", found {fmt}'
            )
        return ", ".join(f"{a}: {fmt_value(v)}" for a, v in self._probs.items())

    def to_dict(self):
        """Structured representation: alternative to fraction string."""
        return {a: str(v) for a, v in self._probs.items()}

    def to_series(self):
        """Return pd.Series of Fraction, indexed by alternative."""
        import pandas as pd

        return pd.Series(dict(self._probs), dtype=object, name="probability")

    def __eq__(self, other):
        if not isinstance(other, Lottery):
            return NotImplemented
        return self._probs == other._probs

    def __hash__(self):
        return hash(tuple(self._probs.items()))

    def __repr__(self):
        return f"Lottery({self.render()})"


def _decimal6(value):
    scaled = round(value * 10**6)
    return f"{scaled // 10**6}.{scaled % 10**6:06d}"


def _check_domain(order, *lotteries):
    for lottery in lotteries:
        if lottery.alternatives != order.alternatives:
            raise ValueError(
                f"lottery domain {sorted(lottery.alternatives)} does not match "
                f"alternatives {sorted(order.alternatives)} of order {order.render()}"
            )


def lottery_class_mass(p, S):
    """Return p(S), the exact total probability of alternatives in `S`."""
    S = frozenset(S)
    outside = S - p.alternatives
    if outside:
        raise ValueError(
            f"alternatives {sorted(outside)} are outside the lottery domain"
        )
    return sum((p[a] for a in S), Fraction(0))


def parse_lottery(text, alternatives=None):
    """Parse a lottery literal such as ``"a: 1/2, b: 1/2"``.

    Parameters
    ----------
    text : str
        comma separated ``alt: value`` entries; values are integers or
        fractions ``num/den``
    alternatives : iterable of str, optional
        domain of the lottery; alternatives missing from `text` get 0.
        If omitted, the domain is the set of alternatives in `text`.

    Returns
    -------
    Lottery
    """
    probs = {}
    for column, entry in _split_entries(text):
        alt, sep, value = entry.partition(":")
        alt, value = alt.strip(), value.strip()
        if not sep or not _ALT_PATTERN.fullmatch(alt):
            raise ProfileSyntaxError(
                f"malformed lottery entry {entry.strip()!r}", 1, column
            )
        if alt in probs:
            raise ProfileSyntaxError(
                f"duplicate alternative {alt!r} in lottery", 1, column
            )
        try:
            probs[alt] = Fraction(value)
        except ValueError:
            raise ProfileSyntaxError(
                f"malformed probability {value!r} for {alt!r}", 1, column
            ) from None
    if alternatives is not None:
        alternatives = frozenset(alternatives)
        unknown = set(probs) - alternatives
        if unknown:
            raise ValueError(f"lottery mentions unknown alternatives {sorted(unknown)}")
        probs.update({a: 0 for a in alternatives - set(probs)})
    return Lottery(probs)


def _split_entries(text):
    start = 0
    for part in text.split(","):
        if part.strip():
            yield start + 1, part
        start += len(part) + 1


def iter_weak_orders(alternatives):
    """Yield every weak order over `alternatives` exactly once.

    Weak orders are ordered set partitions. They are generated recursively
    by choosing the top class among the nonempty subsets (smaller subsets
    first, lexicographic within a size) and ordering the rest, so the
    sequence is canonical for a given alternative set.

    Parameters
    ----------
    alternatives : iterable of str

    Yields
    ------
    WeakOrder
    """
    alternatives = tuple(sorted(alternatives))
    for classes in _ordered_partitions(alternatives):
        yield WeakOrder(classes)


def _ordered_partitions(items):
    if not items:
        yield ()
        return
    for size in range(1, len(items) + 1):
        for top in combinations(items, size):
            rest = tuple(a for a in items if a not in top)
            for tail in _ordered_partitions(rest):
                yield (frozenset(top),) + tail
