# The MIT License (MIT)
#
# Copyright (c) 2026 The glpkit developers
#
# See LICENSE.md for the full license text.

"""Ordinal notations below epsilon_0 in Cantor normal form

A notation is a tuple of (exponent, coefficient) terms whose exponents are
themselves notations, strictly decreasing from head to tail. Notations are
always stored canonical, so equality is structural equality.
"""

import collections
import enum
import functools
import logging

import lark

from glpkit import NonFiniteIndexError
from glpkit import ParseError

LOG = logging.getLogger("glpkit.ordinal")

ORDINAL_RULES = r"""
ord: term ("+" term)*
term: base ("*" NAT)?
?base: NAT -> finite
     | "w" -> omega
     | "w" "^" atom -> omega_power
?atom: NAT -> finite
     | "w" -> omega
     | "(" ord ")"
NAT: /[0-9]+/
"""

COMMON_RULES = r"""
%import common.WS
%ignore WS
"""


class Ordering(enum.Enum):
    """Result of comparing two notations
    """
    LESS = "Less"
    EQUAL = "Equal"
    GREATER = "Greater"

    def __str__(self):
        return self.value


@functools.total_ordering
class OrdinalNotation(object):
    """An ordinal below epsilon_0 in Cantor normal form

    The empty term list denotes 0; a natural number n > 0 is the single
    term (0, n).
    """
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=()):
        """Build a notation from canonical terms

        :type terms: iterable
        :param terms: (exponent, coefficient) pairs, exponents strictly
         decreasing and coefficients >= 1
        :raises ValueError: if the terms are not canonical
        """
        terms = tuple((exponent, int(coefficient))
                      for exponent, coefficient in terms)
        for index, (exponent, coefficient) in enumerate(terms):
            if not isinstance(exponent, OrdinalNotation):
                raise TypeError("Exponent must be an OrdinalNotation: %r" %
                                (exponent,))
            if coefficient < 1:
                raise ValueError("Coefficient must be at least 1: %d" %
                                 coefficient)
            if index > 0 and compare(terms[index - 1][0],
                                     exponent) is not Ordering.GREATER:
                raise ValueError("Exponents must be strictly decreasing")
        self._terms = terms
        self._hash = hash(terms)

    @classmethod
    def from_summands(cls, summands):
        """Normalize an arbitrary sum of omega-powers

        Summands are added left to right with ordinal addition, so a smaller
        power followed by a larger one is absorbed (1+w = w) and equal
        exponents merge (w+w = w*2).

        :type summands: iterable
        :param summands: (exponent, coefficient) pairs in any order
        :rtype: OrdinalNotation
        """
        result = []
        for exponent, coefficient in summands:
            if coefficient < 1:
                raise ValueError("Coefficient must be at least 1: %d" %
                                 coefficient)
            while result and compare(result[-1][0],
                                     exponent) is Ordering.LESS:
                result.pop()
            if result and result[-1][0] == exponent:
                result[-1] = (exponent, result[-1][1] + coefficient)
            else:
                result.append((exponent, coefficient))
        return cls(result)

    @property
    def terms(self):
        """The canonical (exponent, coefficient) terms

        :rtype: tuple
        """
        return self._terms

    @property
    def is_zero(self):
        return not self._terms

    @property
    def is_finite(self):
        """True for natural numbers (including 0)
        """
        return self.is_zero or (len(self._terms) == 1 and
                                self._terms[0][0].is_zero)

    @property
    def least_exponent(self):
        """Exponent of the last CNF term, None for 0
        """
        return self._terms[-1][0] if self._terms else None

    def as_int(self):
        """Return the natural number this notation denotes

        :raises NonFiniteIndexError: if the notation is infinite
        """
        if self.is_zero:
            return 0
        if not self.is_finite:
            raise NonFiniteIndexError(
                "Not a natural number: %s" % format_ordinal(self))
        return self._terms[0][1]

    def __eq__(self, other):
        if not isinstance(other, OrdinalNotation):
            return NotImplemented
        return self._terms == other._terms

    def __lt__(self, other):
        if not isinstance(other, OrdinalNotation):
            return NotImplemented
        return compare(self, other) is Ordering.LESS

    def __hash__(self):
        return self._hash

    def __str__(self):
        return format_ordinal(self)

    def __repr__(self):
        return "OrdinalNotation(%r)" % format_ordinal(self)


OrdinalPair = collections.namedtuple("OrdinalPair", ["first", "second"])

ZERO = OrdinalNotation()


def from_int(value):
    """Return the notation of a natural number

    :type value: int
    :param value: A natural number
    :rtype: OrdinalNotation
    """
    if value < 0:
        raise ValueError("Ordinals are non-negative: %d" % value)
    return ZERO if value == 0 else OrdinalNotation([(ZERO, value)])


def omega_power(exponent, coefficient=1):
    """Return w^exponent*coefficient
    """
    return OrdinalNotation([(exponent, coefficient)])


ONE = from_int(1)
OMEGA = omega_power(ONE)


def compare(a, b):
    """Compare two canonical notations

    Leading exponents are compared recursively, then coefficients, then
    the tails.

    :type a: OrdinalNotation
    :type b: OrdinalNotation
    :rtype: Ordering
    """
    for (exp_a, coef_a), (exp_b, coef_b) in zip(a.terms, b.terms):
        order = compare(exp_a, exp_b)
        if order is not Ordering.EQUAL:
            return order
        if coef_a != coef_b:
            return Ordering.LESS if coef_a < coef_b else Ordering.GREATER
    if len(a.terms) == len(b.terms):
        return Ordering.EQUAL
    return Ordering.LESS if len(a.terms) < len(b.terms) else Ordering.GREATER


def one_plus(a):
    """Return 1+a; infinite notations absorb the 1
    """
    if a.is_finite:
        return from_int(a.as_int() + 1)
    return a


def omega_left_multiply(a):
    """Return w*a by left distributivity over the CNF terms
    """
    # one_plus is monotone and strict on finite exponents, so the result
    # stays canonical.
    return OrdinalNotation((one_plus(exponent), coefficient)
                           for exponent, coefficient in a.terms)


def is_omega_absorbing(a):
    """True iff w*a = a, i.e. a is 0 or its last exponent is infinite
    """
    return omega_left_multiply(a) == a


def prec_prime(p, q):
    """The pairing order on (ordinal, natural) pairs

    :type p: OrdinalPair
    :type q: OrdinalPair
    :rtype: bool
    """
    order = compare(p.first, q.first)
    if order is Ordering.EQUAL:
        return p.second < q.second
    return order is Ordering.LESS


def format_ordinal(a):
    """Print the canonical ASCII form, e.g. ``w^w*2+3``
    """
    if a.is_zero:
        return "0"
    return "+".join(_format_term(exponent, coefficient)
                    for exponent, coefficient in a.terms)


def _format_term(exponent, coefficient):
    if exponent.is_zero:
        return str(coefficient)
    if exponent == ONE:
        base = "w"
    elif exponent.is_finite or exponent == OMEGA:
        base = "w^" + format_ordinal(exponent)
    else:
        base = "w^(" + format_ordinal(exponent) + ")"
    return base if coefficient == 1 else "%s*%d" % (base, coefficient)


class OrdinalTransformer(lark.Transformer):
    """Builds OrdinalNotation values from ordinal parse trees
    """

    def __init__(self, text):
        super().__init__()
        self._text = text

    def ord(self, children):
        summands = []
        for child in children:
            summands.extend(child.terms)
        return OrdinalNotation.from_summands(summands)

    def term(self, children):
        base = children[0]
        if len(children) == 1:
            return base
        token = children[1]
        factor = int(token)
        if factor == 0:
            raise ParseError("coefficient 0", self._text,
                             _token_position(token, self._text))
        if base.is_zero:
            return base
        exponent, coefficient = base.terms[0]
        return omega_power(exponent, coefficient * factor)

    @staticmethod
    def finite(children):
        return from_int(int(children[0]))

    @staticmethod
    def omega(_children):
        return OMEGA

    @staticmethod
    def omega_power(children):
        return omega_power(children[0])


@functools.lru_cache(maxsize=None)
def _ordinal_parser():
    return lark.Lark(ORDINAL_RULES + COMMON_RULES, start="ord",
                     parser="lalr")


def parse_with(parser, transformer, text):
    """Parse text with a lark parser and transform the tree

    Shared by the ordinal and formula parsers so both report errors the
    same way.

    :raises ParseError: on any syntax error, with its position
    """
    try:
        tree = parser.parse(text)
    except lark.exceptions.UnexpectedInput as exc:
        raise ParseError("syntax error", text,
                         _error_position(exc, text)) from None
    try:
        return transformer.transform(tree)
    except lark.exceptions.VisitError as exc:
        if isinstance(exc.orig_exc, ParseError):
            raise exc.orig_exc from None
        raise


def parse_ordinal(text):
    """Parse the ASCII ordinal grammar into a canonical notation

    Non-canonical sums are normalized, e.g. ``w+w`` becomes ``w*2``.

    :type text: str
    :rtype: OrdinalNotation
    :raises ParseError: on syntax errors and zero coefficients
    """
    result = parse_with(_ordinal_parser(), OrdinalTransformer(text), text)
    LOG.trace("Parsed ordinal %r as %s", text, result)
    return result


def _token_position(token, text):
    position = getattr(token, "start_pos", None)
    return len(text) if position is None else position


def _error_position(exc, text):
    position = getattr(exc, "pos_in_stream", None)
    if position is None or position < 0:
        token = getattr(exc, "token", None)
        return _token_position(token, text) if token is not None else len(
            text)
    return position
