# The MIT License (MIT)
#
# Copyright (c) 2026 The glpkit developers
#
# See LICENSE.md for the full license text.

"""Solovay paths over rooted finite J-models

A schedule stands in for the arithmetic derivation codes: the event at
step k says that k codes a derivation, at every level n >= its tag level,
refuting that the path's limit is the target world. The path starts at the
root 0 and moves to the target whenever the target lies <_n-below the
current world for such an n.
"""

import collections
import itertools
import logging

from glpkit import IndexRangeError
from glpkit import kripke

LOG = logging.getLogger("glpkit.solovay")

PROPERTY_START = "start"
PROPERTY_PREFIX = "prefix"
PROPERTY_EXISTENCE = "existence"
PROPERTY_UNIQUENESS = "uniqueness"
PROPERTY_DESCENT = "descent"

Event = collections.namedtuple("Event", ["level", "target"])

PathViolation = collections.namedtuple(
    "PathViolation", ["prop", "schedule", "detail"])


class SolovaySchedule(object):
    """At most one event per step
    """

    def __init__(self, events=None):
        """Solovay schedule

        :type events: dict
        :param events: step (int >= 0) to Event, or to a (level, target) pair
        """
        checked = {}
        for step, event in (events or {}).items():
            step = int(step)
            level, target = event
            if step < 0 or level < 0 or target < 0:
                raise ValueError("Negative step, level or target: %d %s" % (
                    step, tuple(event)))
            checked[step] = Event(int(level), int(target))
        self._events = dict(sorted(checked.items()))

    @property
    def events(self):
        """Step to Event, steps ascending
        """
        return dict(self._events)

    @property
    def max_step(self):
        """Largest step carrying an event, -1 for the empty schedule
        """
        return max(self._events) if self._events else -1

    def event_at(self, step):
        return self._events.get(step)

    def __len__(self):
        return len(self._events)

    def __eq__(self, other):
        return isinstance(other, SolovaySchedule) and \
            self._events == other._events

    def __hash__(self):
        return hash(tuple(self._events.items()))

    def __repr__(self):
        return "SolovaySchedule(%r)" % self._events


class SolovayPath(tuple):
    """The worlds s_0, s_1, ... visited by a path
    """

    @property
    def steps(self):
        return tuple(self)

    @property
    def last(self):
        return self[-1]

    def is_prefix_of(self, other):
        return len(self) <= len(other) and tuple(other[:len(self)]) == \
            tuple(self)


def _check_schedule(model, schedule):
    for step, event in schedule.events.items():
        if event.target >= model.world_count:
            raise IndexRangeError(
                "Event at step %d targets world %d of %d" % (
                    step, event.target, model.world_count))
        if event.level >= model.relation_count:
            raise IndexRangeError(
                "Event at step %d has level %d of %d" % (
                    step, event.level, model.relation_count))


def _fires(model, event, current):
    return any(model.holds(n, event.target, current)
               for n in range(event.level, model.relation_count))


def run_path(model, schedule, length):
    """Run the path recursion for length entries

    :type model: kripke.JModel
    :param model: Rooted model, root 0
    :type schedule: SolovaySchedule
    :type length: int
    :rtype: SolovayPath
    :raises IndexRangeError: if an event names a missing world or level
    """
    if length < 1:
        raise ValueError("Path length must be at least 1: %d" % length)
    _check_schedule(model, schedule)
    steps = [0]
    for step in range(length - 1):
        current = steps[-1]
        event = schedule.event_at(step)
        if event is not None and _fires(model, event, current):
            LOG.trace("Step %d moves %d -> %d", step, current, event.target)
            steps.append(event.target)
        else:
            steps.append(current)
    return SolovayPath(steps)


def limit_value(model, schedule):
    """The world the path settles in once every event has passed
    """
    return run_path(model, schedule, schedule.max_step + 2).last


def path_violations(model, path, schedule_index=None, descends=None):
    """Check a single path: start at the root, and s_i reflexively
    <<_0-below s_j for all j < i

    :param descends: Precomputed reflexive <<_0 pairs of model
    :rtype: list of PathViolation
    """
    violations = []
    if not path or path[0] != 0:
        violations.append(PathViolation(PROPERTY_START, schedule_index,
                                        tuple(path)))
    if descends is None:
        descends = _descends(model)
    for earlier, later in itertools.combinations(range(len(path)), 2):
        if (path[later], path[earlier]) not in descends:
            violations.append(PathViolation(
                PROPERTY_DESCENT, schedule_index,
                (earlier, path[earlier], later, path[later])))
    return violations


def _descends(model):
    return kripke.derived_relation(model, 0, kripke.Flavor.LL,
                                   reflexive=True)


class PathReport(object):
    """Outcome of check_path_properties
    """

    def __init__(self, violations, schedules_checked, paths_checked):
        self._violations = tuple(violations)
        self._schedules_checked = schedules_checked
        self._paths_checked = paths_checked

    @property
    def violations(self):
        return self._violations

    @property
    def passed(self):
        return not self._violations

    @property
    def schedules_checked(self):
        return self._schedules_checked

    @property
    def paths_checked(self):
        return self._paths_checked

    def __bool__(self):
        return self.passed


def _limit_violations(model, schedule, index, runs):
    """Runs that outlast every event must end at the limit
    """
    settled = [length for length in sorted(runs)
               if length > schedule.max_step + 1]
    if not settled:
        return []
    limit = limit_value(model, schedule)
    return [PathViolation(PROPERTY_UNIQUENESS, index,
                          (length, runs[length].last, limit))
            for length in settled if runs[length].last != limit]


def _schedule_violations(model, schedule, index, max_length, descends):
    violations = []
    runs = {}
    for length in range(1, max_length + 1):
        try:
            path = run_path(model, schedule, length)
        except IndexRangeError as exc:
            violations.append(PathViolation(PROPERTY_EXISTENCE, index,
                                            (length, str(exc))))
            continue
        runs[length] = path
        violations.extend(path_violations(model, path, index, descends))
    for shorter, longer in itertools.combinations(sorted(runs), 2):
        if not runs[shorter].is_prefix_of(runs[longer]):
            violations.append(PathViolation(PROPERTY_PREFIX, index,
                                            (shorter, longer)))
    for position in range(max_length):
        values = {path[position] for path in runs.values()
                  if len(path) > position}
        if len(values) > 1:
            violations.append(PathViolation(PROPERTY_UNIQUENESS, index,
                                            (position, sorted(values))))
    violations.extend(_limit_violations(model, schedule, index, runs))
    return violations


def check_path_properties(model, schedules, max_length):
    """Check prefix comparability, existence, uniqueness and descent

    Every schedule is run at every length 1..max_length. Existence fails
    when a run cannot be built, i.e. an event names a missing level or
    world. run_path is deterministic, so per-index values of separate runs
    agree whenever the prefix property holds; uniqueness additionally
    requires every run longer than the last event step + 1 to end at
    limit_value.

    :type model: kripke.JModel
    :type schedules: iterable of SolovaySchedule
    :rtype: PathReport
    """
    violations = []
    count = 0
    descends = _descends(model)
    for index, schedule in enumerate(schedules):
        violations.extend(_schedule_violations(model, schedule, index,
                                               max_length, descends))
        count += 1
    LOG.debug("Checked %d schedules up to length %d: %d violations", count,
              max_length, len(violations))
    return PathReport(violations, count, count * max_length)


def enumerate_schedules(model, max_events, max_step):
    """Every schedule with at most max_events events on steps < max_step

    Levels range over the model's relations and targets over its worlds.
    Order: event count, then steps, then (level, target) choices.

    :rtype: generator of SolovaySchedule
    """
    choices = [Event(level, target)
               for level in range(model.relation_count)
               for target in range(model.world_count)]
    for count in range(max_events + 1):
        for steps in itertools.combinations(range(max_step), count):
            for events in itertools.product(choices, repeat=count):
                yield SolovaySchedule(dict(zip(steps, events)))
