# The MIT License (MIT)
#
# Copyright (c) 2026 The glpkit developers
#
# See LICENSE.md for the full license text.

"""Finite J-frames and models

A pair (u, w) in relation n means u <_n w: u lies below w and is
accessible from w by the modality n. Relations are stored per world as
bitmasks of the worlds below it.
"""

import collections
import enum
import functools
import itertools
import logging

import networkx

from glpkit import IndexRangeError
from glpkit.syntax import Bottom, Box, Implies, Variable

LOG = logging.getLogger("glpkit.kripke")

CONDITION_ORDER = 1
CONDITION_PRESERVE = 2
CONDITION_DESCEND = 3
CONDITION_STRATIFIED = 4


class Flavor(enum.Enum):
    """Which relation derived_relation computes
    """
    LL = "LL"
    LLL = "LLL"
    APPROX = "Approx"

    def __str__(self):
        return self.value


Violation = collections.namedtuple(
    "Violation", ["condition", "kind", "levels", "witness"])
Violation.__doc__ = """A failed frame condition with its witness worlds"""

FrameReport = collections.namedtuple(
    "FrameReport", ["is_j_frame", "is_stratified", "violations"])


def _bits(mask):
    """Worlds of a bitmask in ascending order
    """
    world = 0
    while mask:
        if mask & 1:
            yield world
        mask >>= 1
        world += 1


def _mask(worlds):
    result = 0
    for world in worlds:
        result |= 1 << world
    return result


def _lowest(mask):
    return (mask & -mask).bit_length() - 1


class JModel(object):
    """A finite multi-relational model
    """

    def __init__(self, world_count, relations, valuation=None):
        """Build a model from explicit pairs

        :type world_count: int
        :param world_count: Worlds are 0..world_count-1
        :type relations: list
        :param relations: One iterable of (u, w) pairs per relation,
         (u, w) meaning u <_n w
        :type valuation: dict
        :param valuation: Variable name to iterable of worlds
        :raises IndexRangeError: if a pair or valuation names a missing world
        """
        if world_count < 1:
            raise ValueError("A model needs at least one world")
        if not relations:
            raise ValueError("A model needs at least one relation")
        below = []
        for pairs in relations:
            masks = [0] * world_count
            for lower, upper in pairs:
                self._check_world(lower, world_count)
                self._check_world(upper, world_count)
                masks[upper] |= 1 << lower
            below.append(tuple(masks))
        masks = {}
        for name, worlds in (valuation or {}).items():
            worlds = list(worlds)
            for world in worlds:
                self._check_world(world, world_count)
            masks[name] = _mask(worlds)
        self._init(world_count, tuple(below), masks)

    def _init(self, world_count, below, valuation_masks):
        self._world_count = world_count
        self._below = below
        self._valuation = dict(sorted(valuation_masks.items()))

    @classmethod
    def from_masks(cls, world_count, below, valuation_masks=None):
        """Build a model directly from below-masks

        :param below: below[n][w] is the bitmask of worlds u with u <_n w
        """
        model = cls.__new__(cls)
        model._init(world_count, tuple(tuple(masks) for masks in below),
                    dict(valuation_masks or {}))
        return model

    @staticmethod
    def _check_world(world, world_count):
        if not 0 <= world < world_count:
            raise IndexRangeError("World %d outside 0..%d" % (
                world, world_count - 1))

    @property
    def world_count(self):
        return self._world_count

    @property
    def relation_count(self):
        return len(self._below)

    @property
    def full_mask(self):
        return (1 << self._world_count) - 1

    @property
    def below_masks(self):
        """below_masks[n][w] is the bitmask of the worlds <_n-below w
        """
        return self._below

    def below(self, n, world):
        return self._below[n][world]

    def holds(self, n, lower, upper):
        """True iff lower <_n upper
        """
        return bool(self._below[n][upper] >> lower & 1)

    @property
    def relations(self):
        """Sorted (u, w) pairs per relation

        :rtype: tuple
        """
        return tuple(tuple((lower, upper)
                           for lower in range(self._world_count)
                           for upper in range(self._world_count)
                           if masks[upper] >> lower & 1)
                     for masks in self._below)

    @property
    def valuation(self):
        """Variable name to sorted list of worlds, names sorted
        """
        return {name: list(_bits(mask))
                for name, mask in self._valuation.items()}

    @property
    def valuation_masks(self):
        return dict(self._valuation)

    def valuation_mask(self, name):
        """Worlds where name holds; absent variables hold nowhere
        """
        return self._valuation.get(name, 0)

    def _key(self):
        return (self._world_count, self._below,
                tuple((name, mask) for name, mask in self._valuation.items()
                      if mask))

    def __eq__(self, other):
        return isinstance(other, JModel) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return "JModel(%d, %r, %r)" % (self._world_count, self.relations,
                                       self.valuation)


def _order_violations(model):
    for n, masks in enumerate(model.below_masks):
        for world in range(model.world_count):
            if masks[world] >> world & 1:
                yield Violation(CONDITION_ORDER, "irreflexive", (n,),
                                (world,))
        for upper in range(model.world_count):
            for middle in _bits(masks[upper]):
                missing = masks[middle] & ~masks[upper]
                if missing:
                    yield Violation(CONDITION_ORDER, "transitive", (n,),
                                    (_lowest(missing), middle, upper))


def _preserve_violations(lower_masks, upper_masks, n, m):
    for upper in range(len(upper_masks)):
        for world in _bits(upper_masks[upper]):
            differ = lower_masks[world] ^ lower_masks[upper]
            if differ:
                yield Violation(CONDITION_PRESERVE, "preserve", (n, m),
                                (world, upper, _lowest(differ)))


def _descend_violations(lower_masks, upper_masks, n, m):
    for top in range(len(lower_masks)):
        for middle in _bits(lower_masks[top]):
            missing = upper_masks[middle] & ~lower_masks[top]
            if missing:
                yield Violation(CONDITION_DESCEND, "descend", (n, m),
                                (_lowest(missing), middle, top))


def _pair_violations(lower_masks, upper_masks, n, m):
    yield from _preserve_violations(lower_masks, upper_masks, n, m)
    yield from _descend_violations(lower_masks, upper_masks, n, m)


def _frame_violations(model):
    yield from _order_violations(model)
    below = model.below_masks
    for m in range(model.relation_count):
        for n in range(m):
            yield from _pair_violations(below[n], below[m], n, m)


def validate_j_frame(model):
    """Check the J-frame conditions and stratification

    Condition 1: every relation is irreflexive and transitive.
    Condition 2: for n < m and w <_m v, w and v have the same
    <_n-predecessors; witness (w, v, u) with u in exactly one of them.
    Condition 3: for n < m, w <_m v <_n u implies w <_n u; witness (w, v, u).
    Stratification (reported as condition 4) is only checked on J-frames.

    :type model: JModel
    :rtype: FrameReport
    """
    violations = list(_frame_violations(model))
    is_j_frame = not violations
    is_stratified = False
    if is_j_frame:
        is_stratified, witness = is_stratified_with_witness(model)
        if not is_stratified:
            level, lower, upper = witness
            violations.append(Violation(CONDITION_STRATIFIED, "stratified",
                                        (level,), (lower, upper)))
    LOG.trace("Frame %r: J=%s stratified=%s", model.relations, is_j_frame,
              is_stratified)
    return FrameReport(is_j_frame, is_stratified, violations)


def _check_level(model, n):
    if not 0 <= n < model.relation_count:
        raise IndexRangeError("Relation index %d outside 0..%d" % (
            n, model.relation_count - 1))


def _ll_masks(model, n):
    """Below-masks of << n; n == N gives the empty relation
    """
    result = [0] * model.world_count
    for masks in model.below_masks[n:]:
        for world, mask in enumerate(masks):
            result[world] |= mask
    return result


def _lll_masks(model, n):
    lower = _ll_masks(model, n)
    upper = _ll_masks(model, n + 1)
    result = list(lower)
    # w <<<_n v when w <<_n u and v <<_{n+1} u for some u
    for top in range(model.world_count):
        for first in _bits(lower[top]):
            for second in _bits(upper[top]):
                result[second] |= 1 << first
    return result


def _as_pairs(masks, reflexive):
    pairs = {(lower, upper) for upper, mask in enumerate(masks)
             for lower in _bits(mask)}
    if reflexive:
        pairs.update((world, world) for world in range(len(masks)))
    return frozenset(pairs)


def _approx_classes(model, n):
    graph = networkx.Graph()
    graph.add_nodes_from(range(model.world_count))
    graph.add_edges_from(_as_pairs(_ll_masks(model, n), False))
    return tuple(sorted((frozenset(component) for component in
                         networkx.connected_components(graph)), key=min))


def _class_masks(model, n):
    """Bitmask of the ~n class of every world
    """
    result = [0] * model.world_count
    for component in _approx_classes(model, n):
        mask = _mask(component)
        for world in component:
            result[world] = mask
    return result


def derived_relation(model, n, flavor, reflexive=False):
    """Compute <<_n, <<<_n or the partition into ~n classes

    :type model: JModel
    :type n: int
    :type flavor: Flavor
    :param reflexive: Add the diagonal to LL and LLL
    :rtype: frozenset of pairs, or tuple of frozensets for APPROX
    :raises IndexRangeError: if n >= N
    """
    _check_level(model, n)
    if flavor is Flavor.APPROX:
        return _approx_classes(model, n)
    if flavor is Flavor.LL:
        return _as_pairs(_ll_masks(model, n), reflexive)
    return _as_pairs(_lll_masks(model, n), reflexive)


def class_relation(model, n):
    """The relation [w]_{n+1} <_n [v]_{n+1} between classes

    :rtype: frozenset
    :return: (lower class, upper class) pairs of frozensets
    """
    _check_level(model, n)
    classes = _approx_classes(model, n + 1)
    return frozenset(
        (lower, upper) for lower in classes for upper in classes
        if any(model.below(n, world) & _mask(lower) for world in upper))


def is_stratified_with_witness(model):
    """Stratification check returning (bool, (n, w, v) or None)

    The condition is vacuous at n = N-1, where ~N is the identity.
    """
    for n in range(model.relation_count - 1):
        classes = _class_masks(model, n + 1)
        masks = model.below_masks[n]
        class_below = []
        for upper in range(model.world_count):
            union = 0
            for member in _bits(classes[upper]):
                union |= masks[member]
            class_below.append(union)
        for lower in range(model.world_count):
            for upper in range(model.world_count):
                if class_below[upper] & classes[lower] and \
                        not masks[upper] >> lower & 1:
                    return False, (n, lower, upper)
    return True, None


def is_stratified(model):
    """True iff every class-level <_n edge is realized by all members

    :rtype: bool
    """
    return is_stratified_with_witness(model)[0]


def _eval_mask(model, f, memo):
    key = id(f)
    if key in memo:
        return memo[key]
    if isinstance(f, Bottom):
        result = 0
    elif isinstance(f, Variable):
        result = model.valuation_mask(f.name)
    elif isinstance(f, Implies):
        result = (~_eval_mask(model, f.antecedent, memo) & model.full_mask) \
            | _eval_mask(model, f.consequent, memo)
    elif isinstance(f, Box):
        n = f.index.as_int()
        if n >= model.relation_count:
            raise IndexRangeError("Box index %d but the model has %d"
                                  " relations" % (n, model.relation_count))
        body = _eval_mask(model, f.body, memo)
        result = 0
        for world, mask in enumerate(model.below_masks[n]):
            if not mask & ~body:
                result |= 1 << world
    else:
        raise TypeError("Not a formula: %r" % (f,))
    memo[key] = result
    return result


def eval_mask(model, f):
    """Truth set of f as a bitmask

    :raises NonFiniteIndexError: for an infinite box index
    :raises IndexRangeError: for a box index >= N
    """
    return _eval_mask(model, f, {})


def eval_formula(model, f):
    """The set of worlds where f is true

    :type model: JModel
    :rtype: frozenset
    """
    return frozenset(_bits(eval_mask(model, f)))


def valid_on(model, f):
    """True iff f holds at every world
    """
    return eval_mask(model, f) == model.full_mask


def add_root(model):
    """Add a new <_0-maximal world 0 above every old world

    Old world w becomes w+1; the root gets no other edges and satisfies no
    variable.

    :rtype: JModel
    """
    below = []
    for n, masks in enumerate(model.below_masks):
        shifted = [0] + [mask << 1 for mask in masks]
        if n == 0:
            shifted[0] = model.full_mask << 1
        below.append(shifted)
    valuation = {name: mask << 1
                 for name, mask in model.valuation_masks.items()}
    return JModel.from_masks(model.world_count + 1, below, valuation)


def is_rooted(model):
    """True if every world other than 0 is <_0-below world 0
    """
    return model.below(0, 0) == model.full_mask & ~1


def _is_transitive(masks):
    return all(masks[middle] & ~masks[upper] == 0
               for upper in range(len(masks))
               for middle in _bits(masks[upper]))


@functools.lru_cache(maxsize=None)
def strict_orders(world_count):
    """Every irreflexive transitive relation on world_count worlds

    Each relation is a tuple of below-masks; the list is in lexicographic
    order of those tuples.

    :rtype: tuple
    """
    choices = []
    for world in range(world_count):
        others = [other for other in range(world_count) if other != world]
        choices.append(sorted(_mask(subset)
                              for size in range(len(others) + 1)
                              for subset in itertools.combinations(others,
                                                                   size)))
    orders = tuple(masks for masks in itertools.product(*choices)
                   if _is_transitive(masks))
    LOG.debug("%d strict orders on %d worlds", len(orders), world_count)
    return orders


def _extensions(chosen, orders):
    """Strict orders that can follow chosen without breaking 2 or 3
    """
    top = len(chosen)
    for masks in orders:
        if all(next(_pair_violations(lower, masks, n, top), None) is None
               for n, lower in enumerate(chosen)):
            yield masks


def _relation_tuples(orders, relation_count):
    def extend(chosen):
        if len(chosen) == relation_count:
            yield tuple(chosen)
            return
        for masks in _extensions(chosen, orders):
            yield from extend(chosen + [masks])

    yield from extend([])


def enumerate_frames(max_worlds, relation_count, stratified_only=False):
    """Every J-frame with at most max_worlds worlds and N relations

    Worlds ascending, then relation tuples in lexicographic order with
    relation 0 most significant.

    :rtype: generator of JModel with an empty valuation
    """
    if max_worlds < 1 or relation_count < 1:
        raise ValueError("Need max_worlds >= 1 and relation_count >= 1")
    for world_count in range(1, max_worlds + 1):
        orders = strict_orders(world_count)
        for below in _relation_tuples(orders, relation_count):
            frame = JModel.from_masks(world_count, below)
            if stratified_only and not is_stratified(frame):
                continue
            yield frame


def valuations(world_count, names):
    """Every valuation of names on world_count worlds, in lexicographic
    order of the mask tuples
    """
    for masks in itertools.product(range(1 << world_count),
                                   repeat=len(names)):
        yield dict(zip(names, masks))


def enumerate_models(max_worlds, relation_count, names,
                     stratified_only=False):
    """Every J-frame of enumerate_frames with every valuation of names

    :type names: list
    :param names: Variable names, used in sorted order
    :rtype: generator of JModel
    """
    names = sorted(names)
    for frame in enumerate_frames(max_worlds, relation_count,
                                  stratified_only):
        for valuation in valuations(frame.world_count, names):
            yield JModel.from_masks(frame.world_count, frame.below_masks,
                                    valuation)
