# The MIT License (MIT)
#
# Copyright (c) 2026 The glpkit developers
#
# See LICENSE.md for the full license text.

"""Hilbert-style proofs: schema recognition, checking and lifting

Axioms are schemas matched by structural unification. Formula metavariables
and index metavariables are bound on first use and compared afterwards.
"""

import dataclasses
import enum
import itertools
import logging

from glpkit import ordinal
from glpkit import syntax
from glpkit.syntax import Bottom, Box, Implies, Variable

LOG = logging.getLogger("glpkit.hilbert")

REASON_EMPTY = "empty-proof"
REASON_BAD_REFERENCE = "bad-reference"
REASON_UNKNOWN_SCHEMA = "unknown-schema"
REASON_NOT_AN_AXIOM = "not-an-axiom"
REASON_HYP_UNDECLARED = "hyp-undeclared"
REASON_MP_MISMATCH = "mp-mismatch"
REASON_NEC_INDEX = "nec-index"
REASON_NEC_MISMATCH = "nec-mismatch"
REASON_LOEB_NOT_ALLOWED = "loeb-not-allowed"
REASON_LOEB_MISMATCH = "loeb-mismatch"
REASON_OUT_OF_LANGUAGE = "out-of-language"


class System(enum.Enum):
    """The proof systems understood by the checker
    """
    GLP_PREC = "GLP_prec"
    GLP_OMEGA = "GLP_omega"
    J = "J"
    GLBLACK = "GLBlack"

    def __str__(self):
        return self.value

    def admits_index(self, index):
        """True if a box with this index belongs to the system's language

        GLBlack has two modalities: 0 (the GL box) and 1 (the black box).
        """
        if self is System.GLP_PREC:
            return True
        if self is System.GLBLACK:
            return index in (ordinal.ZERO, ordinal.ONE)
        return index.is_finite

    def admits_formula(self, f):
        return all(self.admits_index(index) for index in syntax.modalities(f))


@dataclasses.dataclass(frozen=True)
class Meta(object):
    """Formula metavariable inside a schema pattern
    """
    name: str


@dataclasses.dataclass(frozen=True)
class MetaBox(object):
    """Box whose index is a metavariable
    """
    index: str
    body: object


def _unify(pattern, f, formulas, indices):
    if isinstance(pattern, Meta):
        bound = formulas.setdefault(pattern.name, f)
        return bound == f
    if isinstance(pattern, MetaBox):
        if not isinstance(f, Box):
            return False
        if indices.setdefault(pattern.index, f.index) != f.index:
            return False
        return _unify(pattern.body, f.body, formulas, indices)
    if isinstance(pattern, Implies):
        return isinstance(f, Implies) and \
            _unify(pattern.antecedent, f.antecedent, formulas, indices) and \
            _unify(pattern.consequent, f.consequent, formulas, indices)
    if isinstance(pattern, Box):
        return isinstance(f, Box) and pattern.index == f.index and \
            _unify(pattern.body, f.body, formulas, indices)
    return pattern == f


def _atoms(f, found):
    if isinstance(f, Implies):
        _atoms(f.antecedent, found)
        _atoms(f.consequent, found)
    elif isinstance(f, (Variable, Box)):
        found.setdefault(f, len(found))
    return found


def _truth(f, atoms, assignment):
    if isinstance(f, Bottom):
        return False
    if isinstance(f, Implies):
        return not _truth(f.antecedent, atoms, assignment) or \
            _truth(f.consequent, atoms, assignment)
    return assignment[atoms[f]]


def is_tautology(f):
    """True iff f holds under every assignment to its atoms

    Variables and boxed subformulas are the atoms; nothing below a box
    is looked at.

    :rtype: bool
    """
    atoms = _atoms(f, {})
    return all(_truth(f, atoms, assignment)
               for assignment in itertools.product((False, True),
                                                   repeat=len(atoms)))


class Schema(object):
    """A named axiom schema

    A schema without a pattern stands for all propositional tautologies.
    """

    def __init__(self, name, pattern=None, condition=None):
        """Axiom schema

        :type name: str
        :param name: The schema name used in proof files
        :param pattern: Pattern formula built from Meta and MetaBox nodes
        :param condition: Side condition on the bound index metavariables
        """
        self._name = name
        self._pattern = pattern
        self._condition = condition

    def __repr__(self):
        return "Schema(%r)" % self._name

    @property
    def name(self):
        return self._name

    def matches(self, f):
        """True if f is an instance satisfying the side condition
        """
        if self._pattern is None:
            return is_tautology(f)
        indices = {}
        if not _unify(self._pattern, f, {}, indices):
            return False
        return self._condition is None or self._condition(indices)


def _precedes(indices, lower, upper):
    return ordinal.compare(indices[lower],
                           indices[upper]) is ordinal.Ordering.LESS


def _mdiamond(index, body):
    return syntax.neg(MetaBox(index, syntax.neg(body)))


_A = Meta("A")
_B = Meta("B")
_K_PATTERN = Implies(MetaBox("x", Implies(_A, _B)),
                     Implies(MetaBox("x", _A), MetaBox("x", _B)))
_LOEB_PATTERN = Implies(MetaBox("x", Implies(MetaBox("x", _A), _A)),
                        MetaBox("x", _A))

TAUTOLOGY = Schema("tautology")
K = Schema("K", _K_PATTERN)
LOEB = Schema("Loeb", _LOEB_PATTERN)
MONOTONE = Schema(
    "monotone", Implies(_mdiamond("z", _A), _mdiamond("x", _A)),
    lambda indices: _precedes(indices, "x", "z"))
NEG_INTROSPECT = Schema(
    "neg-introspect",
    Implies(_mdiamond("x", _A), MetaBox("z", _mdiamond("x", _A))),
    lambda indices: _precedes(indices, "x", "z"))
J6 = Schema(
    "J6", Implies(MetaBox("n", _A), MetaBox("m", MetaBox("n", _A))),
    lambda indices: indices["n"] <= indices["m"])
J7 = Schema(
    "J7", Implies(MetaBox("n", _A), MetaBox("n", MetaBox("m", _A))),
    lambda indices: _precedes(indices, "n", "m"))
GLB1 = Schema("GLB1", Implies(syntax.box(0, _A), syntax.box(1, _A)))
GLB2 = Schema("GLB2", Implies(
    syntax.box(1, Implies(_A, _B)),
    Implies(syntax.box(1, _A), syntax.box(1, _B))))
GLB3 = Schema("GLB3", Implies(syntax.box(1, _A),
                              syntax.box(1, syntax.box(1, _A))))
# in GLBlack, K and Loeb belong to the GL box only
_K_BLACK = Schema("K", _K_PATTERN,
                  lambda indices: indices["x"] == ordinal.ZERO)
_LOEB_BLACK = Schema("Loeb", _LOEB_PATTERN,
                     lambda indices: indices["x"] == ordinal.ZERO)

_SYSTEM_SCHEMAS = {
    System.GLP_PREC: (TAUTOLOGY, K, LOEB, MONOTONE, NEG_INTROSPECT),
    System.GLP_OMEGA: (TAUTOLOGY, K, LOEB, MONOTONE, NEG_INTROSPECT),
    System.J: (TAUTOLOGY, K, LOEB, J6, J7),
    System.GLBLACK: (TAUTOLOGY, _K_BLACK, _LOEB_BLACK, GLB1, GLB2, GLB3),
}


def schemas(system):
    """The schemas of a system in recognition order

    :rtype: tuple
    """
    return _SYSTEM_SCHEMAS[system]


def schema_names(system):
    return [schema.name for schema in _SYSTEM_SCHEMAS[system]]


def recognize_axiom(f, system):
    """Name of the first schema of system that f instantiates

    :type system: System
    :rtype: str or None
    """
    if not system.admits_formula(f):
        return None
    for schema in _SYSTEM_SCHEMAS[system]:
        if schema.matches(f):
            return schema.name
    return None


def matches_schema(f, name, system):
    """True if f is an instance of the schema called name in system

    :raises KeyError: if system has no schema with that name
    """
    for schema in _SYSTEM_SCHEMAS[system]:
        if schema.name == name:
            return system.admits_formula(f) and schema.matches(f)
    raise KeyError(name)


@dataclasses.dataclass(frozen=True)
class Axiom(object):
    schema: str


@dataclasses.dataclass(frozen=True)
class Hypothesis(object):
    pass


@dataclasses.dataclass(frozen=True)
class ModusPonens(object):
    """From A (antecedent line) and A -> B (implication line) infer B

    Line numbers are 1-based.
    """
    antecedent: int
    implication: int


@dataclasses.dataclass(frozen=True)
class Necessitation(object):
    premise: int
    index: ordinal.OrdinalNotation


@dataclasses.dataclass(frozen=True)
class LoebRule(object):
    """From [0]A -> A infer A (GLBlack only)
    """
    premise: int
    index: ordinal.OrdinalNotation = ordinal.ZERO


@dataclasses.dataclass(frozen=True)
class ProofLine(object):
    formula: object
    justification: object


@dataclasses.dataclass(frozen=True)
class HilbertProof(object):
    """A proof: its system, its lines and the hypotheses it may cite
    """
    system: System
    lines: tuple
    hypotheses: tuple = ()

    @property
    def conclusion(self):
        """The proved formula, i.e. the last line's formula
        """
        return self.lines[-1].formula if self.lines else None


@dataclasses.dataclass(frozen=True)
class CheckResult(object):
    """Accepted, or Rejected with the first offending line and a reason
    """
    accepted: bool
    line: int = 0
    reason: str = ""

    def __bool__(self):
        return self.accepted

    def __str__(self):
        if self.accepted:
            return "Accepted"
        return "Rejected(%d, %s)" % (self.line, self.reason)


def _premises(justification):
    if isinstance(justification, ModusPonens):
        return justification.antecedent, justification.implication
    if isinstance(justification, (Necessitation, LoebRule)):
        return justification.premise,
    return ()


def _check_line(proof, number, line):
    justification = line.justification
    for premise in _premises(justification):
        if not 1 <= premise < number:
            return REASON_BAD_REFERENCE

    def formula_at(premise):
        return proof.lines[premise - 1].formula

    if isinstance(justification, Axiom):
        try:
            matched = matches_schema(line.formula, justification.schema,
                                     proof.system)
        except KeyError:
            return REASON_UNKNOWN_SCHEMA
        return None if matched else REASON_NOT_AN_AXIOM
    if isinstance(justification, Hypothesis):
        return None if line.formula in proof.hypotheses else \
            REASON_HYP_UNDECLARED
    if isinstance(justification, ModusPonens):
        expected = Implies(formula_at(justification.antecedent), line.formula)
        return None if formula_at(justification.implication) == expected \
            else REASON_MP_MISMATCH
    if isinstance(justification, Necessitation):
        if not proof.system.admits_index(justification.index):
            return REASON_NEC_INDEX
        expected = Box(justification.index, formula_at(justification.premise))
        return None if line.formula == expected else REASON_NEC_MISMATCH
    if isinstance(justification, LoebRule):
        if proof.system is not System.GLBLACK or \
                justification.index != ordinal.ZERO:
            return REASON_LOEB_NOT_ALLOWED
        expected = Implies(Box(ordinal.ZERO, line.formula), line.formula)
        return None if formula_at(justification.premise) == expected \
            else REASON_LOEB_MISMATCH
    raise TypeError("Unknown justification: %r" % (justification,))


def check_proof(proof):
    """Check every line of a proof, stopping at the first failure

    :type proof: HilbertProof
    :rtype: CheckResult
    """
    if not proof.lines:
        return CheckResult(False, 0, REASON_EMPTY)
    for hypothesis in proof.hypotheses:
        if not proof.system.admits_formula(hypothesis):
            LOG.debug("Hypothesis %s is outside %s",
                      syntax.format_formula(hypothesis), proof.system)
            return CheckResult(False, 0, REASON_OUT_OF_LANGUAGE)
    for number, line in enumerate(proof.lines, start=1):
        reason = _check_line(proof, number, line)
        LOG.trace("Line %d %s: %s", number,
                  syntax.format_formula(line.formula), reason or "ok")
        if reason is not None:
            LOG.debug("Proof in %s rejected at line %d: %s", proof.system,
                      number, reason)
            return CheckResult(False, number, reason)
    return CheckResult(True)


def lift_proof(proof, condensation):
    """Replace every index i of a GLP_omega proof by lambda_i

    :type proof: HilbertProof
    :type condensation: syntax.CondensationMap
    :rtype: HilbertProof
    :return: The same proof in GLP_prec
    :raises IndexRangeError: if an index is >= len(condensation)
    """
    if proof.system is not System.GLP_OMEGA:
        raise ValueError("Only GLP_omega proofs can be lifted, not %s" %
                         proof.system)
    lines = []
    for line in proof.lines:
        justification = line.justification
        if isinstance(justification, Necessitation):
            justification = Necessitation(
                justification.premise,
                syntax.lift_index(justification.index, condensation))
        lines.append(ProofLine(syntax.lift(line.formula, condensation),
                               justification))
    hypotheses = tuple(syntax.lift(hypothesis, condensation)
                       for hypothesis in proof.hypotheses)
    return HilbertProof(System.GLP_PREC, tuple(lines), hypotheses)
