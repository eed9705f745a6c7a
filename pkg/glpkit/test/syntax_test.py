# The MIT License (MIT)
#
# Copyright (c) 2026 The glpkit developers
#
# See LICENSE.md for the full license text.

"""Test Cases related to formulas, condensation and M+
"""

import unittest

from hypothesis import given

import glpkit.test
from glpkit import IndexRangeError
from glpkit import NonFiniteIndexError
from glpkit import ParseError
from glpkit import syntax
from glpkit.ordinal import OMEGA, ONE, ZERO, parse_ordinal
from glpkit.syntax import BOTTOM, TOP, Box, Implies, Variable

P = Variable("p")
Q = Variable("q")


def _f(text):
    return syntax.parse_formula(text)


class ParseFormulaTestCase(unittest.TestCase):
    """Test Cases for parse_formula and format_formula
    """

    def test_implication(self):
        """Test [0]p -> [w]p
        """
        self.assertEqual(_f("[0]p -> [w]p"),
                         Implies(Box(ZERO, P), Box(OMEGA, P)))

    def test_diamond_expansion(self):
        """Test <1>~p expands to ~[1]~~p
        """
        self.assertEqual(_f("<1>~p"),
                         syntax.neg(Box(ONE, syntax.neg(syntax.neg(P)))))

    def test_index_must_be_ordinal(self):
        """Test [p]q is a syntax error at the index
        """
        with self.assertRaises(ParseError) as cm:
            _f("[p]q")
        self.assertEqual(cm.exception.position, 1)

    def test_associativity(self):
        """Test -> is right-associative, & and | left-associative
        """
        r = Variable("r")
        self.assertEqual(_f("p -> q -> r"), Implies(P, Implies(Q, r)))
        self.assertEqual(_f("p & q & r"),
                         syntax.conj(syntax.conj(P, Q), r))
        self.assertEqual(_f("p | q & r"),
                         syntax.disj(P, syntax.conj(Q, r)))

    def test_constants(self):
        """Test F, T and variables with digits and underscores
        """
        self.assertEqual(_f("F"), BOTTOM)
        self.assertEqual(_f("T"), TOP)
        self.assertEqual(_f("T"), syntax.neg(BOTTOM))
        self.assertEqual(_f("x_1"), Variable("x_1"))
        self.assertEqual(_f("w"), Variable("w"))

    def test_ordinal_indices(self):
        """Test box indices use the ordinal grammar
        """
        self.assertEqual(_f("[w^w*2+3]p").index, parse_ordinal("w^w*2+3"))
        self.assertEqual(_f("[w+w]p").index, parse_ordinal("w*2"))

    def test_format(self):
        """Test sugar is recognized on output
        """
        self.assertEqual(syntax.format_formula(_f("<w>T -> <1>T")),
                         "(<w>T -> <1>T)")
        self.assertEqual(syntax.format_formula(_f("p & ~q")), "(p & ~q)")
        self.assertEqual(syntax.format_formula(_f("[0][1]F")), "[0][1]F")
        self.assertEqual(syntax.format_formula(_f("p | q")), "(~p -> q)")

    def test_box_requires_ordinal(self):
        """Test Box refuses plain integers
        """
        with self.assertRaises(TypeError):
            Box(1, P)
        self.assertEqual(syntax.box(1, P), Box(ONE, P))

    @given(glpkit.test.formulas())
    def test_round_trip(self, f):
        """Test parse(print(f)) = f
        """
        self.assertEqual(_f(syntax.format_formula(f)), f)


class SubformulaTestCase(unittest.TestCase):
    """Test Cases for subformulas, variables and modalities
    """

    def test_subformulas(self):
        """Test the documented subformula sets
        """
        self.assertEqual(syntax.subformulas(BOTTOM), {BOTTOM})
        self.assertEqual(syntax.subformulas(_f("[0]p")), {_f("[0]p"), P})
        self.assertEqual(syntax.subformulas(_f("p -> q")),
                         {_f("p -> q"), P, Q})

    def test_subformula_list_order(self):
        """Test children come before parents, each once
        """
        self.assertEqual(syntax.subformula_list(_f("[0]p -> [0]p")),
                         [P, _f("[0]p"), _f("[0]p -> [0]p")])

    def test_modalities(self):
        """Test the documented modality lists
        """
        self.assertEqual(syntax.modalities(_f("<w>T -> <1>T")),
                         [ONE, OMEGA])
        self.assertEqual(syntax.modalities(_f("p & ~q")), [])
        self.assertEqual(syntax.modalities(_f("[0][w^w]p")),
                         [ZERO, parse_ordinal("w^w")])

    def test_variables(self):
        """Test variables are sorted and unique
        """
        self.assertEqual(syntax.variables(_f("[0]q -> (p & q)")), ["p", "q"])

    def test_max_index(self):
        """Test max_index on condensed and box-free formulas
        """
        self.assertIsNone(syntax.max_index(_f("p -> q")))
        self.assertEqual(syntax.max_index(_f("[2]p -> [0]q")), 2)
        with self.assertRaises(NonFiniteIndexError):
            syntax.max_index(_f("[w]p"))


class CondenseTestCase(unittest.TestCase):
    """Test Cases for condense and lift
    """

    def test_condense(self):
        """Test <w>T -> <1>T condenses to <1>T -> <0>T with map [1, w]
        """
        condensed, condensation = syntax.condense(_f("<w>T -> <1>T"))
        self.assertEqual(condensed, _f("<1>T -> <0>T"))
        self.assertEqual(condensation.levels, (ONE, OMEGA))
        self.assertEqual(repr(condensation), "CondensationMap([1, w])")

    def test_identity_condensation(self):
        """Test [0]p -> [1]p is already condensed
        """
        f = _f("[0]p -> [1]p")
        self.assertEqual(syntax.condense(f),
                         (f, syntax.CondensationMap([ZERO, ONE])))

    def test_box_free(self):
        """Test a box-free formula has the empty map
        """
        self.assertEqual(syntax.condense(P), (P, syntax.CondensationMap()))

    def test_lift(self):
        """Test lift inverts the documented condensation
        """
        condensation = syntax.CondensationMap([ONE, OMEGA])
        self.assertEqual(syntax.lift(_f("<1>T -> <0>T"), condensation),
                         _f("<w>T -> <1>T"))
        self.assertEqual(syntax.lift(P, syntax.CondensationMap()), P)

    def test_lift_out_of_range(self):
        """Test lifting [2]p with a map of length 2
        """
        with self.assertRaises(IndexRangeError) as cm:
            syntax.lift(_f("[2]p"), syntax.CondensationMap([ZERO, ONE]))
        self.assertEqual(str(cm.exception),
                         "Index 2 outside condensation map of length 2")
        with self.assertRaises(IndexRangeError):
            syntax.lift(_f("[w]p"), syntax.CondensationMap([ZERO, ONE]))

    def test_map_must_increase(self):
        """Test a non-increasing condensation map is refused
        """
        with self.assertRaises(ValueError):
            syntax.CondensationMap([OMEGA, ONE])
        with self.assertRaises(ValueError):
            syntax.CondensationMap([ONE, ONE])

    @given(glpkit.test.formulas())
    def test_condense_properties(self, f):
        """Test condensation uses 0..N, lifts back and keeps the skeleton
        """
        condensed, condensation = syntax.condense(f)
        indices = [index.as_int() for index in syntax.modalities(condensed)]
        self.assertEqual(indices, list(range(len(condensation))))
        self.assertEqual(len(condensation), len(syntax.modalities(f)))
        self.assertEqual(syntax.lift(condensed, condensation), f)
        self.assertEqual(syntax.erase_indices(condensed),
                         syntax.erase_indices(f))


class MonotonicityFormulaTestCase(unittest.TestCase):
    """Test Cases for big_m and m_plus
    """

    def test_big_m(self):
        """Test the documented M expansions
        """
        self.assertEqual(syntax.big_m(_f("[0]p -> [1]p")),
                         _f("[0]p -> [1]p"))
        self.assertEqual(syntax.big_m(_f("p & q")), TOP)
        self.assertEqual(syntax.big_m(_f("[1]p")), TOP)

    def test_big_m_order(self):
        """Test conjuncts are ordered by subformula, then by m
        """
        self.assertEqual(
            syntax.big_m(_f("[0]q -> [2][0]p")),
            syntax.conj_all([_f("[0]q -> [1]q"), _f("[0]q -> [2]q"),
                             _f("[0]p -> [1]p"), _f("[0]p -> [2]p")]))

    def test_m_plus(self):
        """Test the documented M+ expansions
        """
        monotonicity = _f("[0]p -> [1]p")
        self.assertEqual(syntax.m_plus(monotonicity),
                         syntax.conj_all([monotonicity,
                                          Box(ZERO, monotonicity),
                                          Box(ONE, monotonicity)]))
        self.assertEqual(syntax.m_plus(BOTTOM),
                         syntax.conj(TOP, Box(ZERO, TOP)))
        self.assertEqual(syntax.m_plus(_f("[0]p")),
                         syntax.conj(TOP, Box(ZERO, TOP)))

    def test_non_finite(self):
        """Test M refuses uncondensed formulas
        """
        with self.assertRaises(NonFiniteIndexError):
            syntax.big_m(_f("[w]p"))
        with self.assertRaises(NonFiniteIndexError):
            syntax.m_plus(_f("[0]p -> [w]p"))

    @given(glpkit.test.condensed_formulas(levels=3))
    def test_conjunct_count(self, f):
        """Test M+ has N+2 conjuncts and M is T for box-free formulas
        """
        top_index = syntax.max_index(f)
        conjuncts = syntax.m_plus_conjuncts(f)
        self.assertEqual(len(conjuncts), (top_index or 0) + 2)
        self.assertEqual(syntax.m_plus(f), syntax.conj_all(conjuncts))
        if top_index is None:
            self.assertEqual(syntax.big_m(f), TOP)
