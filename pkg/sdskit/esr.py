# -*- coding: utf-8 -*-
"""Egalitarian simultaneous reservation.

Every equivalence class E of some agent is a tower whose ceiling l(E) is a
lower bound on the probability of E. Agents climb their towers at unit
speed, starting with their top class. An agent at the ceiling of a tower
that is not frozen pushes it up at unit speed; several pushers do not push
faster. A tower freezes when its bound cannot rise any further without
making the system {p lottery, p(E) >= l(E) for all towers} infeasible.
Pushers of a frozen tower drop to the floor of the tower of their next
class. The run ends when all towers are frozen.

The simulation is exact and event driven: between two events all heights
and rising ceilings move linearly, and the next freeze time comes from a
linear program.
"""
import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from .base import BaseSDS
from .lp import Constraint, LinearProgram, feasible, solve
from .preferences import Lottery, _render_set

__all__ = [
    "EventKind",
    "EsrEvent",
    "EsrTrace",
    "Tower",
    "ClimberState",
    "EgalitarianSimultaneousReservation",
    "esr",
]

logger = logging.getLogger(__name__)

_DELTA = "delta"


def _var(alt):
    return f"p:{alt}"


class EventKind(Enum):
    """Kinds of events in an ESR run."""

    CEILING_HIT = "ceiling_hit"
    FREEZE = "freeze"
    TOWER_SWITCH = "tower_switch"
    TERMINATE = "terminate"


@dataclass(frozen=True)
class EsrEvent:
    """Event at an exact time; payload holds agents / towers involved."""

    time: Fraction
    kind: EventKind
    payload: dict

    def render(self):
        """One line description of the event."""
        p = self.payload
        if self.kind is EventKind.CEILING_HIT:
            what = f"agent {p['agent']} hits ceiling of {_render_set(p['tower'])}"
        elif self.kind is EventKind.FREEZE:
            what = f"freeze {_render_set(p['tower'])} at {p['ceiling']}"
        elif self.kind is EventKind.TOWER_SWITCH:
            to = "done" if p["to"] is None else _render_set(p["to"])
            what = f"agent {p['agent']} moves {_render_set(p['from'])} -> {to}"
        else:
            what = "terminate"
        return f"t={self.time}: {what}"

    def to_dict(self):
        """Structured representation of the event."""
        payload = {
            k: (sorted(v) if isinstance(v, frozenset) else
                str(v) if isinstance(v, Fraction) else v)
            for k, v in self.payload.items()
        }
        return {"time": str(self.time), "kind": self.kind.value, **payload}


@dataclass
class EsrTrace:
    """Sequence of events of an ESR run, times nondecreasing."""

    events: list = field(default_factory=list)

    def add(self, time, kind, **payload):
        event = EsrEvent(time, kind, payload)
        logger.debug(event.render())
        self.events.append(event)

    def of_kind(self, kind):
        """List of events of the given EventKind."""
        return [e for e in self.events if e.kind is kind]

    def render(self):
        """Text rendering, one event per line."""
        return "\n".join(event.render() for event in self.events)

    def to_dict(self):
        """Structured representation of the trace."""
        return {"events": [event.to_dict() for event in self.events]}


@dataclass
class Tower:
    """Tower of an equivalence class; its ceiling only rises until frozen."""

    cls: frozenset
    ceiling: Fraction = Fraction(0)
    frozen: bool = False


@dataclass
class ClimberState:
    """Position of one agent.

    Attributes
    ----------
    agent : int
    tower_index : int
        index of the agent's current class; equal to the number of classes
        once the agent has bounced off its last tower
    height : Fraction
        distance climbed in the current tower
    pushing : bool
        whether the agent is at the ceiling of a tower that is not frozen
    """

    agent: int
    tower_index: int = 0
    height: Fraction = Fraction(0)
    pushing: bool = False


class _Reservation:
    """State of one ESR run."""

    def __init__(self, profile):
        self.alternatives = profile.sorted_alternatives()
        self.classes = {agent: order.classes for agent, order in profile.orders()}
        self.towers = {}
        for classes in self.classes.values():
            for cls in classes:
                self.towers.setdefault(cls, Tower(cls))
        self.climbers = [ClimberState(agent) for agent in self.classes]
        self.time = Fraction(0)
        self.trace = EsrTrace()

    def tower_of(self, climber):
        classes = self.classes[climber.agent]
        if climber.tower_index >= len(classes):
            return None
        return self.towers[classes[climber.tower_index]]

    def active(self):
        return [c for c in self.climbers if self.tower_of(c) is not None]

    def bounds_lp(self, rising=()):
        """Lower bound system; towers in `rising` get the extra term delta."""
        variables = [_var(a) for a in self.alternatives] + [_DELTA]
        constraints = [Constraint({_var(a): 1 for a in self.alternatives}, "=", 1)]
        for cls in sorted(self.towers, key=sorted):
            tower = self.towers[cls]
            if tower.ceiling == 0 and cls not in rising:
                continue
            coeffs = {_var(a): 1 for a in cls}
            if cls in rising:
                coeffs[_DELTA] = -1
            constraints.append(Constraint(coeffs, ">=", tower.ceiling))
        return LinearProgram(variables, {_DELTA: 1}, constraints)

    def max_rise(self, rising):
        """Largest common rise of the ceilings in `rising`."""
        outcome = solve(self.bounds_lp(rising))
        if not outcome.is_optimal:
            raise RuntimeError(f"ESR bound system is {outcome.status}; this is a bug")
        return outcome.value

    def settle(self, climber):
        """Update a climber after arriving at or moving in its tower."""
        tower = self.tower_of(climber)
        while tower is not None and tower.frozen and climber.height == tower.ceiling:
            tower = self.switch(climber)
        if tower is None:
            climber.pushing = False
            return
        at_ceiling = climber.height == tower.ceiling and not tower.frozen
        if at_ceiling and not climber.pushing:
            self.trace.add(
                self.time, EventKind.CEILING_HIT, agent=climber.agent, tower=tower.cls
            )
        climber.pushing = at_ceiling

    def switch(self, climber):
        """Bounce off the current tower to the floor of the next one."""
        old = self.tower_of(climber)
        climber.tower_index += 1
        climber.height = Fraction(0)
        climber.pushing = False
        new = self.tower_of(climber)
        self.trace.add(
            self.time,
            EventKind.TOWER_SWITCH,
            agent=climber.agent,
            **{"from": old.cls, "to": None if new is None else new.cls},
        )
        return new

    def step(self):
        """Advance to the next event time and process all events there."""
        rising = {self.tower_of(c).cls for c in self.active() if c.pushing}
        candidates = []
        freeze_after = None
        if rising:
            freeze_after = self.max_rise(rising)
            candidates.append(freeze_after)
        for climber in self.active():
            tower = self.tower_of(climber)
            if not climber.pushing and tower.cls not in rising:
                candidates.append(tower.ceiling - climber.height)
        if not candidates:
            raise RuntimeError("ESR run stalled with unfrozen towers; this is a bug")

        dt = min(candidates)
        self.time += dt
        for climber in self.active():
            climber.height += dt
        for cls in rising:
            self.towers[cls].ceiling += dt

        if freeze_after is not None and dt == freeze_after:
            tight = [
                cls for cls in sorted(rising, key=sorted) if self.max_rise({cls}) == 0
            ]
            for cls in tight:
                self.towers[cls].frozen = True
                self.trace.add(
                    self.time,
                    EventKind.FREEZE,
                    tower=cls,
                    ceiling=self.towers[cls].ceiling,
                )

        for climber in self.climbers:
            self.settle(climber)

        if feasible(self.bounds_lp()) is None:
            raise RuntimeError(
                f"ESR lower bounds infeasible at t={self.time}; this is a bug"
            )

    def run(self):
        for climber in self.climbers:
            self.settle(climber)
        n_classes = sum(len(c) for c in self.classes.values())
        max_steps = 1 + len(self.towers) + 2 * n_classes
        n_steps = 0
        while not all(tower.frozen for tower in self.towers.values()):
            n_steps += 1
            if n_steps > max_steps:
                raise RuntimeError(
                    f"ESR did not terminate in {max_steps} steps; this is a bug"
                )
            self.step()
        self.trace.add(self.time, EventKind.TERMINATE)
        return self.select_lottery(), self.trace

    def select_lottery(self):
        """Feasible lottery: minimize each probability in alternative order."""
        lp = self.bounds_lp()
        values = {}
        for a in self.alternatives:
            outcome = solve(lp.with_objective({_var(a): -1}))
            values[a] = -outcome.value
            lp = lp.with_constraints(Constraint({_var(a): 1}, "=", values[a]))
        return Lottery(values)


def esr(profile):
    """Egalitarian simultaneous reservation.

    Parameters
    ----------
    profile : Profile

    Returns
    -------
    lottery : Lottery
        point of the final lower bound system obtained by minimizing the
        probabilities one alternative at a time, in lexicographic order
    trace : EsrTrace
        ceiling hits, freezes, tower switches and termination, exact times
    """
    return _Reservation(profile).run()


class EgalitarianSimultaneousReservation(BaseSDS):
    """Egalitarian simultaneous reservation, via exact event simulation."""

    # the final selection minimizes probabilities in alphabetical order
    _tags = {"rule_id": "esr", "neutral": False}

    def trace(self, profile):
        """Event trace of the rule on `profile`, as EsrTrace."""
        return esr(profile)[1]

    def _compute(self, profile):
        """Compute the rule's lottery for a valid profile.

        Parameters
        ----------
        profile : Profile

        Returns
        -------
        Lottery
        """
        return esr(profile)[0]
