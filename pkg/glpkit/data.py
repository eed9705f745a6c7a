# The MIT License (MIT)
#
# Copyright (c) 2026 The glpkit developers
#
# See LICENSE.md for the full license text.

"""Configuration data and the JSON document formats

Models, proofs, schedules and outcomes are plain JSON objects. Documents
are built with a fixed key order and written with two-space indentation,
so output is byte-identical for identical input.
"""

import functools
import glob
import json
import logging
import os

import lark

from glpkit import FormatError
from glpkit import hilbert
from glpkit import kripke
from glpkit import ordinal
from glpkit import solovay
from glpkit import syntax

LOG = logging.getLogger("glpkit.data")

CORPUS_DIR = os.path.join(os.path.dirname(os.path.realpath(__file__)),
                          "corpus")

RULE_RULES = r"""
?rule: "axiom:" SCHEMA -> axiom
     | "hyp" -> hyp
     | "mp" NAT NAT -> mp
     | "nec" NAT "[" ord "]" -> nec
     | "loeb" NAT ("[" ord "]")? -> loeb
SCHEMA: /[A-Za-z][A-Za-z0-9_-]*/
"""


class ConfigData(object):
    """ConfigData
    """

    def __init__(self, max_worlds=4, concurrent_workers=1,
                 stratified_only=False, corpus_dir=None):
        """Configuration data (global)

        :type max_worlds: int
        :param max_worlds: Default countermodel search bound
        :type concurrent_workers: int
        :param concurrent_workers: Number of concurrent Searchers
        :type stratified_only: bool
        :param stratified_only: Search stratified frames only
        :type corpus_dir: str
        :param corpus_dir: Proof corpus directory, None for the packaged one
        """
        self._max_worlds = int(max_worlds)
        if self._max_worlds <= 0:
            raise ValueError('Max worlds must be greater than 0')
        self._concurrent_workers = int(concurrent_workers)
        if self._concurrent_workers <= 0:
            raise ValueError('Concurrent workers must be greater than 0')
        self._stratified_only = bool(stratified_only)
        self._corpus_dir = corpus_dir or CORPUS_DIR

    @property
    def max_worlds(self):
        """Max Worlds property

        :return: The default search bound
        """
        return self._max_worlds

    @property
    def concurrent_workers(self):
        """Concurrent Workers property

        :return: The number of concurrent workers
        """
        return self._concurrent_workers

    @property
    def stratified_only(self):
        return self._stratified_only

    @property
    def corpus_dir(self):
        return self._corpus_dir


def dumps(document):
    """Serialize a document the way every command writes it
    """
    return json.dumps(document, indent=2)


def read_json(path):
    """Load a JSON document from path

    :raises FormatError: if the file is not JSON
    :raises OSError: if the file cannot be read
    """
    with open(path, "r") as document_f:
        try:
            return json.load(document_f)
        except ValueError as exc:
            raise FormatError("%s is not valid JSON: %s" % (path, exc)) \
                from None


def _require(document, key, kind):
    if not isinstance(document, dict) or key not in document:
        raise FormatError("%s document must contain %r" % (kind, key))
    return document[key]


def _natural(value, what):
    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise FormatError("%s must be a natural number: %r" % (what, value))
    return value


def model_to_dict(model):
    """{worlds, relations, valuation} with sorted pairs and names
    """
    return {
        "worlds": model.world_count,
        "relations": [[list(pair) for pair in pairs]
                      for pairs in model.relations],
        "valuation": model.valuation,
    }


def model_from_dict(document):
    """Build a JModel from a model document

    :raises FormatError: if the document is malformed
    :raises IndexRangeError: if it names a world that does not exist
    """
    worlds = _natural(_require(document, "worlds", "Model"), "worlds")
    relations = _require(document, "relations", "Model")
    valuation = document.get("valuation", {})
    if not isinstance(relations, list) or not isinstance(valuation, dict):
        raise FormatError("Model relations must be a list and valuation"
                          " an object")
    try:
        pairs = [[(_natural(lower, "world"), _natural(upper, "world"))
                  for lower, upper in relation] for relation in relations]
        valuation = {str(name): [_natural(world, "world") for world in ws]
                     for name, ws in valuation.items()}
        return kripke.JModel(worlds, pairs, valuation)
    except (TypeError, ValueError) as exc:
        if isinstance(exc, FormatError):
            raise
        raise FormatError("Malformed model: %s" % exc) from None


class RuleTransformer(ordinal.OrdinalTransformer):
    """Builds justifications from rule parse trees
    """

    @staticmethod
    def axiom(children):
        return hilbert.Axiom(str(children[0]))

    @staticmethod
    def hyp(_children):
        return hilbert.Hypothesis()

    @staticmethod
    def mp(children):
        return hilbert.ModusPonens(int(children[0]), int(children[1]))

    @staticmethod
    def nec(children):
        return hilbert.Necessitation(int(children[0]), children[1])

    @staticmethod
    def loeb(children):
        index = children[1] if len(children) > 1 else ordinal.ZERO
        return hilbert.LoebRule(int(children[0]), index)


@functools.lru_cache(maxsize=None)
def _rule_parser():
    return lark.Lark(RULE_RULES + ordinal.ORDINAL_RULES +
                     ordinal.COMMON_RULES, start="rule", parser="lalr")


def parse_rule(text):
    """Parse a rule such as ``mp 2 3`` or ``nec 1 [w]``

    :raises ParseError: on syntax errors
    """
    return ordinal.parse_with(_rule_parser(), RuleTransformer(text), text)


def format_rule(justification):
    if isinstance(justification, hilbert.Axiom):
        return "axiom:%s" % justification.schema
    if isinstance(justification, hilbert.Hypothesis):
        return "hyp"
    if isinstance(justification, hilbert.ModusPonens):
        return "mp %d %d" % (justification.antecedent,
                             justification.implication)
    if isinstance(justification, hilbert.Necessitation):
        return "nec %d [%s]" % (justification.premise,
                                ordinal.format_ordinal(justification.index))
    if justification.index == ordinal.ZERO:
        return "loeb %d" % justification.premise
    return "loeb %d [%s]" % (justification.premise,
                             ordinal.format_ordinal(justification.index))


def proof_to_dict(proof):
    document = {"system": proof.system.value}
    if proof.hypotheses:
        document["hypotheses"] = [syntax.format_formula(hypothesis)
                                  for hypothesis in proof.hypotheses]
    document["lines"] = [
        {"formula": syntax.format_formula(line.formula),
         "rule": format_rule(line.justification)} for line in proof.lines]
    return document


def proof_from_dict(document):
    """Build a HilbertProof from a proof document

    :raises FormatError: for an unknown system or malformed lines
    :raises ParseError: for unparsable formulas or rules
    """
    system = _require(document, "system", "Proof")
    try:
        system = hilbert.System(system)
    except ValueError:
        raise FormatError("Unknown proof system: %r" % system) from None
    lines = _require(document, "lines", "Proof")
    hypotheses = document.get("hypotheses", [])
    if not isinstance(lines, list) or not isinstance(hypotheses, list):
        raise FormatError("Proof lines and hypotheses must be lists")
    return hilbert.HilbertProof(
        system,
        tuple(hilbert.ProofLine(
            syntax.parse_formula(_require(line, "formula", "Proof line")),
            parse_rule(_require(line, "rule", "Proof line")))
            for line in lines),
        tuple(syntax.parse_formula(text) for text in hypotheses))


def schedule_to_dict(schedule):
    return {"events": {
        str(step): {"level": event.level, "target": event.target}
        for step, event in schedule.events.items()}}


def schedule_from_dict(document):
    events = _require(document, "events", "Schedule")
    if not isinstance(events, dict):
        raise FormatError("Schedule events must be an object")
    try:
        return solovay.SolovaySchedule({
            int(step): solovay.Event(
                _natural(_require(event, "level", "Event"), "level"),
                _natural(_require(event, "target", "Event"), "target"))
            for step, event in events.items()})
    except ValueError as exc:
        if isinstance(exc, FormatError):
            raise
        raise FormatError("Malformed schedule: %s" % exc) from None


def outcome_to_dict(outcome):
    """{status, evidence} for a DecisionOutcome
    """
    evidence = outcome.evidence
    if hasattr(evidence, "lines"):
        evidence = {"proof": proof_to_dict(evidence)}
    elif hasattr(evidence, "world"):
        evidence = {"model": model_to_dict(evidence.model),
                    "world": evidence.world}
    else:
        evidence = {"bounds": {"max_worlds": evidence.max_worlds,
                               "stratified_only": evidence.stratified_only}}
    return {"status": str(outcome.status), "evidence": evidence}


def outcome_from_dict(document):
    """Rebuild a DecisionOutcome from an outcome document
    """
    # decide imports this module
    from glpkit import decide

    status = _require(document, "status", "Outcome")
    try:
        status = decide.Status(status)
    except ValueError:
        raise FormatError("Unknown status: %r" % status) from None
    evidence = _require(document, "evidence", "Outcome")
    if status is decide.Status.THEOREM:
        proof = proof_from_dict(_require(evidence, "proof", "Evidence"))
        return decide.DecisionOutcome(status, proof)
    if status is decide.Status.NON_THEOREM:
        model = model_from_dict(_require(evidence, "model", "Evidence"))
        world = _natural(_require(evidence, "world", "Evidence"), "world")
        return decide.DecisionOutcome(status,
                                      decide.Countermodel(model, world))
    bounds = _require(evidence, "bounds", "Evidence")
    return decide.DecisionOutcome(status, decide.Bounds(
        _natural(_require(bounds, "max_worlds", "Bounds"), "max_worlds"),
        bool(_require(bounds, "stratified_only", "Bounds"))))


def read_model(path):
    return model_from_dict(read_json(path))


def read_proof(path):
    return proof_from_dict(read_json(path))


def read_schedule(path):
    return schedule_from_dict(read_json(path))


def load_corpus(directory=None):
    """Read every ``*.json`` proof of directory in file name order

    :rtype: list of hilbert.HilbertProof
    """
    directory = directory or CORPUS_DIR
    proofs = []
    for path in sorted(glob.glob(os.path.join(directory, "*.json"))):
        proofs.append(read_proof(path))
        LOG.debug("Loaded %s", path)
    LOG.debug("Loaded %d proofs from %s", len(proofs), directory)
    return proofs
