# The MIT License (MIT)
#
# Copyright (c) 2026 The glpkit developers
#
# See LICENSE.md for the full license text.

"""glpkit.test shared functions and hypothesis strategies
"""
import configparser
import json
import tempfile

from hypothesis import strategies

from glpkit import kripke
from glpkit import ordinal
from glpkit import syntax


def write_config(conf_type, config_text, args):
    """Helper function which calls get_config_path() and do_write_config()

    :type conf_type: str
    :param conf_type: Type of file, used in the temp file name
    :type config_text: str
    :param config_text: Text to write to the config file
    :type args: dict
    :param args: kwargs to format config_text
    :return: Absolute path to the temp config file
    """
    path = get_config_path(conf_type)
    do_write_config(path, config_text, args)
    return path


def get_config_path(conf_type, suffix=".conf"):
    """Acquires and returns a standard named temp file

    :type conf_type: str
    :param conf_type: Type of file, used in the temp file name
    :return: Absolute path to the temp file
    """
    return tempfile.mkstemp(suffix=suffix, prefix="glpkit_%s_" % conf_type)[1]


def do_write_config(config_path, config_text, args):
    """Helper function to write the test config data

    :type config_path: str
    :param config_path: Absolute path to the temp config file
    :type config_text: str
    :param config_text: Text to write to the config file
    :type args: dict
    :param args: kwargs to format config_text
    """
    with open(config_path, "w") as config_f:
        config_f.writelines(config_text.format(**args))


def get_config_parser(path):
    """Helper function to return a ConfigParser

    :type path: str
    :param path: Absolute path to the temp config file
    """
    with open(path) as path_f:
        cfg_parser = configparser.ConfigParser()
        cfg_parser.read_file(path_f)
        return cfg_parser


def write_document(doc_type, document):
    """Write a JSON document (model, proof, schedule) to a temp file

    :type doc_type: str
    :param doc_type: Type of document, used in the temp file name
    :param document: Anything json.dump accepts
    :return: Absolute path to the temp file
    """
    path = get_config_path(doc_type, suffix=".json")
    with open(path, "w") as document_f:
        json.dump(document, document_f)
    return path


def random_ordinal(rng, rank=3):
    """A pseudo-random notation whose exponents nest at most rank deep

    :type rng: random.Random
    """
    if rank == 0 or rng.random() < 0.25:
        return ordinal.from_int(rng.randint(0, 5))
    return ordinal.OrdinalNotation.from_summands(
        (random_ordinal(rng, rank - 1), rng.randint(1, 4))
        for _ in range(rng.randint(1, 3)))


def ordinals(rank=3):
    """Strategy for canonical notations of bounded rank
    """
    naturals = strategies.integers(min_value=0, max_value=20).map(
        ordinal.from_int)
    if rank == 0:
        return naturals
    summands = strategies.lists(
        strategies.tuples(ordinals(rank - 1),
                          strategies.integers(min_value=1, max_value=4)),
        max_size=3)
    return strategies.one_of(
        naturals, summands.map(ordinal.OrdinalNotation.from_summands))


def formulas(indices=None, names=("p", "q")):
    """Strategy for core formulas

    :param indices: Strategy for box indices, small ordinals by default
    :param names: Variable names to draw from
    """
    if indices is None:
        indices = ordinals(2)
    leaves = strategies.one_of(
        strategies.just(syntax.BOTTOM),
        strategies.sampled_from(names).map(syntax.Variable))

    def extend(children):
        return strategies.one_of(
            strategies.builds(syntax.Implies, children, children),
            strategies.builds(syntax.Box, indices, children))

    return strategies.recursive(leaves, extend, max_leaves=8)


def condensed_formulas(levels=2, names=("p", "q")):
    """Strategy for formulas with finite indices below levels
    """
    return formulas(strategies.integers(
        min_value=0, max_value=levels - 1).map(ordinal.from_int), names)


def models(max_worlds=3, relation_count=2, names=("p", "q")):
    """Strategy drawing from the enumerated J-models
    """
    return strategies.sampled_from(list(kripke.enumerate_models(
        max_worlds, relation_count, names)))


def stratified_frame():
    """Worlds a=0, b=1, c=2 with a <_2 b and a, b <_1 c
    """
    return kripke.JModel(3, [[], [(0, 2), (1, 2)], [(0, 1)]])


def two_world_model(valuation=None):
    """World 1 <_0 world 0
    """
    return kripke.JModel(2, [[(1, 0)]], valuation)
