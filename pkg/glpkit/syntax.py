# The MIT License (MIT)
#
# Copyright (c) 2026 The glpkit developers
#
# See LICENSE.md for the full license text.

"""Modal formulas over ordinal-indexed boxes

The core AST has four node types: Bottom, Variable, Implies and Box.
Negation, conjunction, disjunction, top and diamonds are sugar expanded at
construction time, so structural equality is the only equality used.
"""

import dataclasses
import functools
import logging

import lark

from glpkit import IndexRangeError
from glpkit import ordinal

LOG = logging.getLogger("glpkit.syntax")

FORMULA_RULES = r"""
?formula: disjunction "->" formula -> implies
        | disjunction
?disjunction: disjunction "|" conjunction -> disj
            | conjunction
?conjunction: conjunction "&" unary -> conj
            | unary
?unary: "~" unary -> neg
      | "[" ord "]" unary -> box
      | "<" ord ">" unary -> diamond
      | primary
?primary: VAR -> variable
        | "F" -> bottom
        | "T" -> top
        | "(" formula ")"
VAR: /[a-z][a-z0-9_]*/
"""


@dataclasses.dataclass(frozen=True)
class Bottom(object):
    """The constant false
    """
    pass


@dataclasses.dataclass(frozen=True)
class Variable(object):
    """A propositional variable
    """
    name: str


@dataclasses.dataclass(frozen=True)
class Implies(object):
    """Material implication
    """
    antecedent: object
    consequent: object


@dataclasses.dataclass(frozen=True)
class Box(object):
    """The modality [index]
    """
    index: ordinal.OrdinalNotation
    body: object

    def __post_init__(self):
        if not isinstance(self.index, ordinal.OrdinalNotation):
            raise TypeError("Box index must be an OrdinalNotation: %r" %
                            (self.index,))


BOTTOM = Bottom()
TOP = Implies(BOTTOM, BOTTOM)


def _as_index(index):
    if isinstance(index, int):
        return ordinal.from_int(index)
    return index


def box(index, body):
    """[index]body; index may be an int or an OrdinalNotation
    """
    return Box(_as_index(index), body)


def implies(a, b):
    return Implies(a, b)


def neg(f):
    return Implies(f, BOTTOM)


def top():
    return TOP


def conj(a, b):
    return neg(Implies(a, neg(b)))


def disj(a, b):
    return Implies(neg(a), b)


def diamond(index, body):
    """<index>body, i.e. ~[index]~body
    """
    return neg(Box(_as_index(index), neg(body)))


def conj_all(formulas):
    """Left-nested conjunction; the empty conjunction is T
    """
    formulas = list(formulas)
    if not formulas:
        return TOP
    return functools.reduce(conj, formulas)


def _is_negation(f):
    return isinstance(f, Implies) and f.consequent == BOTTOM


def format_formula(f):
    """Print fully parenthesized canonical text

    Sugar is recognized on the way out, so ~[0]~p prints as <0>p; the text
    always parses back to the same tree.

    :rtype: str
    """
    if isinstance(f, Bottom):
        return "F"
    if isinstance(f, Variable):
        return f.name
    if isinstance(f, Box):
        return "[%s]%s" % (ordinal.format_ordinal(f.index),
                           format_formula(f.body))
    if f == TOP:
        return "T"
    if f.consequent == BOTTOM:
        inner = f.antecedent
        if isinstance(inner, Box) and _is_negation(inner.body):
            return "<%s>%s" % (ordinal.format_ordinal(inner.index),
                               format_formula(inner.body.antecedent))
        if isinstance(inner, Implies) and _is_negation(inner.consequent):
            return "(%s & %s)" % (format_formula(inner.antecedent),
                                  format_formula(inner.consequent.antecedent))
        return "~" + format_formula(inner)
    return "(%s -> %s)" % (format_formula(f.antecedent),
                           format_formula(f.consequent))


class FormulaTransformer(ordinal.OrdinalTransformer):
    """Builds core formulas from formula parse trees
    """

    @staticmethod
    def implies(children):
        return Implies(children[0], children[1])

    @staticmethod
    def disj(children):
        return disj(children[0], children[1])

    @staticmethod
    def conj(children):
        return conj(children[0], children[1])

    @staticmethod
    def neg(children):
        return neg(children[0])

    @staticmethod
    def box(children):
        return Box(children[0], children[1])

    @staticmethod
    def diamond(children):
        return diamond(children[0], children[1])

    @staticmethod
    def variable(children):
        return Variable(str(children[0]))

    @staticmethod
    def bottom(_children):
        return BOTTOM

    @staticmethod
    def top(_children):
        return TOP


@functools.lru_cache(maxsize=None)
def _formula_parser():
    return lark.Lark(FORMULA_RULES + ordinal.ORDINAL_RULES +
                     ordinal.COMMON_RULES, start="formula", parser="lalr")


def parse_formula(text):
    """Parse the ASCII formula grammar

    :type text: str
    :rtype: Bottom, Variable, Implies or Box
    :raises ParseError: on syntax errors, with position
    """
    result = ordinal.parse_with(_formula_parser(), FormulaTransformer(text),
                                text)
    LOG.trace("Parsed formula %r", text)
    return result


def _children(f):
    if isinstance(f, Implies):
        return f.antecedent, f.consequent
    if isinstance(f, Box):
        return f.body,
    return ()


def subformula_list(f):
    """All subtrees of f, children before parents, first occurrence only

    :rtype: list
    """
    seen = set()
    ordered = []

    def visit(node):
        for child in _children(node):
            visit(child)
        if node not in seen:
            seen.add(node)
            ordered.append(node)

    visit(f)
    return ordered


def subformulas(f):
    """The set of all subtrees of f, including f

    :rtype: frozenset
    """
    return frozenset(subformula_list(f))


def variables(f):
    """Sorted names of the variables occurring in f
    """
    return sorted({sub.name for sub in subformula_list(f)
                   if isinstance(sub, Variable)})


def modalities(f):
    """Sorted, duplicate-free list of all box indices in f
    """
    return sorted({sub.index for sub in subformula_list(f)
                   if isinstance(sub, Box)})


def max_index(f):
    """Largest box index of a condensed formula, None when box-free

    :raises NonFiniteIndexError: if some index is infinite
    """
    indices = [index.as_int() for index in modalities(f)]
    return max(indices) if indices else None


def map_indices(f, function):
    """Rewrite every box index of f with function
    """
    if isinstance(f, Implies):
        return Implies(map_indices(f.antecedent, function),
                       map_indices(f.consequent, function))
    if isinstance(f, Box):
        return Box(function(f.index), map_indices(f.body, function))
    return f


def erase_indices(f):
    """Set every box index to 0, leaving the propositional skeleton
    """
    return map_indices(f, lambda _index: ordinal.ZERO)


class CondensationMap(object):
    """The occurring modalities lambda_0 < ... < lambda_N of a formula
    """

    def __init__(self, levels=()):
        """Condensation map

        :type levels: iterable
        :param levels: strictly increasing OrdinalNotation values
        """
        levels = tuple(levels)
        for lower, upper in zip(levels, levels[1:]):
            if not lower < upper:
                raise ValueError("Condensation map must be strictly"
                                 " increasing: %s, %s" % (lower, upper))
        self._levels = levels
        self._positions = {level: index for index, level in enumerate(levels)}

    @property
    def levels(self):
        return self._levels

    def position(self, level):
        """Index i with lambda_i = level
        """
        return self._positions[level]

    def __getitem__(self, index):
        if not 0 <= index < len(self._levels):
            raise IndexRangeError(
                "Index %d outside condensation map of length %d" % (
                    index, len(self._levels)))
        return self._levels[index]

    def __len__(self):
        return len(self._levels)

    def __iter__(self):
        return iter(self._levels)

    def __eq__(self, other):
        return isinstance(other, CondensationMap) and \
            self._levels == other._levels

    def __hash__(self):
        return hash(self._levels)

    def __repr__(self):
        return "CondensationMap([%s])" % ", ".join(
            ordinal.format_ordinal(level) for level in self._levels)


def condense(f):
    """Replace each occurring modality lambda_i by i

    :rtype: tuple
    :return: (condensed formula, CondensationMap)
    """
    condensation = CondensationMap(modalities(f))
    condensed = map_indices(
        f, lambda index: ordinal.from_int(condensation.position(index)))
    LOG.debug("Condensed %s with %r", format_formula(f), condensation)
    return condensed, condensation


def lift_index(index, condensation):
    """lambda_i for the finite index i

    :raises IndexRangeError: if index is infinite or >= len(condensation)
    """
    if not index.is_finite:
        raise IndexRangeError("Cannot lift infinite index %s" % index)
    return condensation[index.as_int()]


def lift(f, condensation):
    """Replace each finite index i by lambda_i

    :raises IndexRangeError: if an index is infinite or >= len(map)
    """
    return map_indices(f, lambda index: lift_index(index, condensation))


def big_m(f):
    """The conjunction of [n]psi -> [m]psi over boxed subformulas

    Conjuncts are ordered by subformula (children first) and then by m;
    the empty conjunction is T.

    :raises NonFiniteIndexError: if f is not condensed
    """
    top_index = max_index(f)
    if top_index is None:
        return TOP
    clauses = []
    for sub in subformula_list(f):
        if isinstance(sub, Box):
            for upper in range(sub.index.as_int() + 1, top_index + 1):
                clauses.append(Implies(sub, box(upper, sub.body)))
    return conj_all(clauses)


def m_plus_conjuncts(f):
    """[M, [0]M, ..., [N]M] with N = 0 for box-free f
    """
    monotonicity = big_m(f)
    top_index = max_index(f) or 0
    return [monotonicity] + [box(index, monotonicity)
                             for index in range(top_index + 1)]


def m_plus(f):
    """M(f) & [0]M(f) & ... & [N]M(f)
    """
    return conj_all(m_plus_conjuncts(f))
