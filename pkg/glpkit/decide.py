# The MIT License (MIT)
#
# Copyright (c) 2026 The glpkit developers
#
# See LICENSE.md for the full license text.

"""Decision pipeline: condense, relativize to M+, search, certify

A formula f is a GLP_prec theorem iff its condensation g is a GLP_omega
theorem iff J proves M+(g) -> g. Theorems are only reported with a checked
proof; non-theorems with a J-model and a world satisfying M+(g) & ~g.
"""

import collections
import dataclasses
import enum
import logging

import glpkit.threads.search_manager
from glpkit import GlpError
from glpkit import IndexRangeError
from glpkit import data
from glpkit import hilbert
from glpkit import kripke
from glpkit import syntax

LOG = logging.getLogger("glpkit.decide")

DEFAULT_MAX_WORLDS = 4


class Status(enum.Enum):
    THEOREM = "Theorem"
    NON_THEOREM = "NonTheorem"
    UNKNOWN = "Unknown"

    def __str__(self):
        return self.value


Countermodel = collections.namedtuple("Countermodel", ["model", "world"])

Bounds = collections.namedtuple("Bounds", ["max_worlds", "stratified_only"])


@dataclasses.dataclass(frozen=True)
class DecisionOutcome(object):
    """A status with its evidence

    The evidence is a HilbertProof for THEOREM, a Countermodel for
    NON_THEOREM and the exhausted Bounds for UNKNOWN.
    """
    status: Status
    evidence: object


class ProofStore(object):
    """Proofs indexed by system and conclusion
    """

    def __init__(self, proofs=()):
        self._proofs = collections.OrderedDict()
        for proof in proofs:
            self.add(proof)

    @classmethod
    def from_directory(cls, directory=None):
        """Load every proof document of a directory, the packaged corpus
        by default
        """
        return cls(data.load_corpus(directory))

    def add(self, proof):
        key = (proof.system, proof.conclusion)
        self._proofs.setdefault(key, []).append(proof)

    def find(self, f, system):
        """First accepted hypothesis-free proof of f in system

        :rtype: hilbert.HilbertProof or None
        """
        for proof in self._proofs.get((system, f), ()):
            if not proof.hypotheses and hilbert.check_proof(proof):
                return proof
        return None

    def __iter__(self):
        for proofs in self._proofs.values():
            yield from proofs

    def __len__(self):
        return sum(len(proofs) for proofs in self._proofs.values())


def relation_count(g):
    """Relations needed to evaluate the condensed formula g
    """
    top_index = syntax.max_index(g)
    return 1 if top_index is None else top_index + 1


def countermodel_target(g):
    """M+(g) & ~g
    """
    return syntax.conj(syntax.m_plus(g), syntax.neg(g))


def _lowest_world(mask):
    return (mask & -mask).bit_length() - 1


def search_frame(frame, target, names):
    """Try every valuation of names on frame

    :return: (valuation number, Countermodel) for the first valuation where
     target holds somewhere, at its least world; None otherwise
    """
    for number, valuation in enumerate(
            kripke.valuations(frame.world_count, names)):
        model = kripke.JModel.from_masks(frame.world_count,
                                         frame.below_masks, valuation)
        mask = kripke.eval_mask(model, target)
        if mask:
            return number, Countermodel(model, _lowest_world(mask))
    return None


def _search_sequential(frames, target, names):
    for number, frame in enumerate(frames):
        LOG.trace("Searching frame %d: %r", number, frame.relations)
        hit = search_frame(frame, target, names)
        if hit is not None:
            return hit[1]
    return None


def _search_parallel(frames, target, names, workers):
    manager = glpkit.threads.search_manager.SearchManager(
        frames, target, names, workers)
    manager.start()
    manager.join()
    if manager.failures:
        raise GlpError("%d search batches failed" % manager.failures)
    result = manager.result
    return None if result is None else result[1]


def find_countermodel(g, max_worlds=DEFAULT_MAX_WORLDS,
                      stratified_only=False, workers=1):
    """First J-model and world satisfying M+(g) & ~g

    Frames come from kripke.enumerate_frames; within a frame valuations
    are tried in order and the least satisfying world is reported.

    :param g: A condensed formula
    :type max_worlds: int
    :param stratified_only: Only search stratified frames
    :type workers: int
    :param workers: Searcher threads; 1 searches in this thread
    :rtype: Countermodel or None
    :raises NonFiniteIndexError: if g is not condensed
    """
    target = countermodel_target(g)
    names = syntax.variables(g)
    frames = kripke.enumerate_frames(max_worlds, relation_count(g),
                                     stratified_only)
    if workers > 1:
        hit = _search_parallel(frames, target, names, workers)
    else:
        hit = _search_sequential(frames, target, names)
    LOG.debug("Countermodel search for %s up to %d worlds: %s",
              syntax.format_formula(g), max_worlds,
              "absent" if hit is None else "world %d of %r" % (
                  hit.world, hit.model))
    return hit


def _axiom_proof(f):
    name = hilbert.recognize_axiom(f, hilbert.System.GLP_PREC)
    if name is None:
        return None
    return hilbert.HilbertProof(
        hilbert.System.GLP_PREC,
        (hilbert.ProofLine(f, hilbert.Axiom(name)),))


def _corpus_proof(f, condensed, condensation, corpus):
    proof = corpus.find(f, hilbert.System.GLP_PREC)
    if proof is not None:
        return proof
    proof = corpus.find(condensed, hilbert.System.GLP_OMEGA)
    if proof is None:
        return None
    try:
        lifted = hilbert.lift_proof(proof, condensation)
    except IndexRangeError:
        return None
    return lifted if hilbert.check_proof(lifted) else None


def decide(f, max_worlds=DEFAULT_MAX_WORLDS, corpus=None,
           stratified_only=False, workers=1):
    """Decide f as far as certificates and the search bound allow

    :param f: Any formula
    :type corpus: ProofStore
    :rtype: DecisionOutcome
    """
    condensed, condensation = syntax.condense(f)
    proof = _axiom_proof(f)
    if proof is None and corpus is not None:
        proof = _corpus_proof(f, condensed, condensation, corpus)
    if proof is not None:
        LOG.info("%s is a theorem", syntax.format_formula(f))
        return DecisionOutcome(Status.THEOREM, proof)
    hit = find_countermodel(condensed, max_worlds, stratified_only, workers)
    if hit is not None:
        LOG.info("%s is refuted at world %d", syntax.format_formula(f),
                 hit.world)
        return DecisionOutcome(Status.NON_THEOREM, hit)
    LOG.info("%s is undecided up to %d worlds", syntax.format_formula(f),
             max_worlds)
    return DecisionOutcome(Status.UNKNOWN,
                           Bounds(max_worlds, stratified_only))


def verify_outcome(outcome, f):
    """Re-check the evidence of an outcome independently

    :rtype: bool
    """
    if outcome.status is Status.THEOREM:
        proof = outcome.evidence
        return isinstance(proof, hilbert.HilbertProof) and \
            proof.system is hilbert.System.GLP_PREC and \
            not proof.hypotheses and proof.conclusion == f and \
            bool(hilbert.check_proof(proof))
    if outcome.status is Status.NON_THEOREM:
        model, world = outcome.evidence
        if not kripke.validate_j_frame(model).is_j_frame:
            return False
        condensed = syntax.condense(f)[0]
        try:
            truth = kripke.eval_formula(model, countermodel_target(condensed))
        except GlpError as exc:
            LOG.debug("Evidence does not evaluate: %s", exc)
            return False
        return world in truth
    return True
