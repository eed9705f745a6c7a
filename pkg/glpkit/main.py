# The MIT License (MIT)
#
# Copyright (c) 2026 The glpkit developers
#
# See LICENSE.md for the full license text.

"""This is the main script for glpkit
"""

import argparse
import configparser
import json
import logging
import sys

import glpkit.data
from glpkit import ConfigError
from glpkit import FormatError
from glpkit import GlpError
from glpkit import UsageError
from glpkit import decide
from glpkit import hilbert
from glpkit import kripke
from glpkit import ordinal
from glpkit import solovay
from glpkit import syntax

CONFIG_MAX_WORLDS = "MaxWorlds"
CONFIG_CONCURRENT_WORKERS = "ConcurrentWorkers"
CONFIG_STRATIFIED_ONLY = "StratifiedOnly"
CONFIG_CORPUS_DIR = "CorpusDir"

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2

LOG = logging.getLogger("glpkit")


class ArgumentParser(argparse.ArgumentParser):
    """ArgumentParser raising UsageError instead of exiting
    """

    def error(self, message):
        raise UsageError("%s: %s" % (self.prog, message))


def main_func():
    """Main function
    """
    start_logger()
    code, text = run(sys.argv[1:])
    if text:
        sys.stdout.write(text)
    sys.exit(code)


def run(argv):
    """Run one command

    :type argv: list
    :param argv: The command line without the program name
    :rtype: tuple
    :return: (exit code, output text)
    """
    try:
        args = get_parser().parse_args(argv)
        format_logger(parse_log_level(args.log_level))
        config_data = read_config_file(args.config)
        return args.handler(args, config_data)
    except (GlpError, OSError) as exc:
        LOG.error("%s", exc)
        return EXIT_USAGE, ""
    except SystemExit as exc:
        # --help
        return exc.code or EXIT_OK, ""
    # pylint: disable=broad-except
    except Exception as ex:
        LOG.error("Uncaught exception in run()")
        LOG.exception(ex)
        return EXIT_NEGATIVE, ""


def parse_log_level(value):
    """Turn an int or a level name (TRACE included) into a level

    :raises UsageError: for unknown names
    """
    try:
        return int(value)
    except ValueError:
        try:
            # int() will raise if getLevelName() returns "Level %s" (unknown)
            return int(logging.getLevelName(str(value).upper()))
        except ValueError:
            raise UsageError("Unrecognized logging level: %s" % value) \
                from None


def read_config_file(path):
    """Read the optional config file

    :type path: str
    :param path: Path to the INI file, None for the defaults
    :rtype: glpkit.data.ConfigData
    """
    if path is None:
        return glpkit.data.ConfigData()
    cfg_parser = configparser.ConfigParser()
    with open(path, "r") as config_f:
        try:
            cfg_parser.read_file(config_f)
        except configparser.Error as exc:
            raise ConfigError("Unreadable config %s: %s" % (path, exc)) \
                from None
    return read_config(cfg_parser)


def read_config(cfg_parser):
    """Read and process the [DEFAULT] section

    :type cfg_parser: configparser.ConfigParser
    :param cfg_parser: The ConfigParser for the config
    :raises ConfigError: for invalid values
    """
    defaults = cfg_parser["DEFAULT"]
    try:
        return glpkit.data.ConfigData(
            defaults.getint(CONFIG_MAX_WORLDS, fallback=4),
            defaults.getint(CONFIG_CONCURRENT_WORKERS, fallback=1),
            defaults.getboolean(CONFIG_STRATIFIED_ONLY, fallback=False),
            defaults.get(CONFIG_CORPUS_DIR, fallback=None))
    except ValueError as exc:
        raise ConfigError("Invalid config value: %s" % exc) from None


def _lines(*lines):
    return "".join("%s\n" % line for line in lines)


def _emit(args, document, *lines):
    if args.json:
        return glpkit.data.dumps(document) + "\n"
    return _lines(*lines)


def _bool_text(value):
    return "true" if value else "false"


def _ordinal_pair(text):
    first, separator, second = text.rpartition(",")
    if not separator:
        raise UsageError("Expected <ordinal>,<n>: %r" % text)
    try:
        second = int(second)
    except ValueError:
        raise UsageError("Expected a natural number after ',': %r" %
                         text) from None
    return ordinal.OrdinalPair(ordinal.parse_ordinal(first), second)


def cmd_ordinal_cmp(args, _config_data):
    order = ordinal.compare(ordinal.parse_ordinal(args.left),
                            ordinal.parse_ordinal(args.right))
    return EXIT_OK, _emit(args, {"ordering": str(order)}, order)


def _ordinal_map(args, function, key, render):
    results = [(text, function(ordinal.parse_ordinal(text)))
               for text in args.ordinals]
    document = {"results": [{"input": text, key: render(value, True)}
                            for text, value in results]}
    return EXIT_OK, _emit(args, document,
                          *[render(value, False) for _, value in results])


def _render_ordinal(value, _as_json):
    return ordinal.format_ordinal(value)


def _render_bool(value, as_json):
    return value if as_json else _bool_text(value)


def cmd_ordinal_omul(args, _config_data):
    return _ordinal_map(args, ordinal.omega_left_multiply, "result",
                        _render_ordinal)


def cmd_ordinal_one_plus(args, _config_data):
    return _ordinal_map(args, ordinal.one_plus, "result", _render_ordinal)


def cmd_ordinal_absorbing(args, _config_data):
    return _ordinal_map(args, ordinal.is_omega_absorbing, "absorbing",
                        _render_bool)


def cmd_ordinal_prec(args, _config_data):
    result = ordinal.prec_prime(_ordinal_pair(args.left),
                                _ordinal_pair(args.right))
    return EXIT_OK, _emit(args, {"prec": result}, _bool_text(result))


def _format_map(condensation):
    return [ordinal.format_ordinal(level) for level in condensation]


def cmd_parse(args, _config_data):
    f = syntax.parse_formula(args.formula)
    text = syntax.format_formula(f)
    document = {
        "formula": text,
        "variables": syntax.variables(f),
        "modalities": [ordinal.format_ordinal(index)
                       for index in syntax.modalities(f)],
    }
    return EXIT_OK, _emit(args, document, text)


def cmd_condense(args, _config_data):
    condensed, condensation = syntax.condense(
        syntax.parse_formula(args.formula))
    text = syntax.format_formula(condensed)
    levels = _format_map(condensation)
    return EXIT_OK, _emit(args, {"formula": text, "map": levels}, text,
                          "map: [%s]" % ", ".join(levels))


def cmd_mplus(args, _config_data):
    f = syntax.parse_formula(args.formula)
    monotonicity = syntax.format_formula(syntax.big_m(f))
    text = syntax.format_formula(syntax.m_plus(f))
    document = {"formula": syntax.format_formula(f), "m": monotonicity,
                "m_plus": text}
    return EXIT_OK, _emit(args, document, text)


def cmd_check_proof(args, _config_data):
    proof = glpkit.data.read_proof(args.file)
    if args.system is not None:
        proof = hilbert.HilbertProof(hilbert.System(args.system),
                                     proof.lines, proof.hypotheses)
    result = hilbert.check_proof(proof)
    if result:
        document = {"status": "Accepted"}
    else:
        document = {"status": "Rejected", "line": result.line,
                    "reason": result.reason}
    code = EXIT_OK if result else EXIT_NEGATIVE
    return code, _emit(args, document, result)


def _outcome_lines(outcome):
    evidence = outcome.evidence
    lines = [str(outcome.status)]
    if outcome.status is decide.Status.THEOREM:
        lines.append("system: %s" % evidence.system)
        for number, line in enumerate(evidence.lines, start=1):
            lines.append("%d. %s  [%s]" % (
                number, syntax.format_formula(line.formula),
                glpkit.data.format_rule(line.justification)))
    elif outcome.status is decide.Status.NON_THEOREM:
        lines.append("world: %d" % evidence.world)
        lines.append("model: %s" % json.dumps(
            glpkit.data.model_to_dict(evidence.model)))
    else:
        lines.append("bounds: max_worlds=%d stratified_only=%s" % (
            evidence.max_worlds, _bool_text(evidence.stratified_only)))
    return lines


def cmd_decide(args, config_data):
    f = syntax.parse_formula(args.formula)
    max_worlds = config_data.max_worlds if args.max_worlds is None else \
        args.max_worlds
    workers = config_data.concurrent_workers if args.parallel is None else \
        args.parallel
    if max_worlds < 1 or workers < 1:
        raise UsageError("--max-worlds and --parallel must be at least 1")
    corpus = decide.ProofStore.from_directory(
        args.corpus or config_data.corpus_dir)
    outcome = decide.decide(
        f, max_worlds, corpus,
        args.stratified_only or config_data.stratified_only, workers)
    return EXIT_OK, _emit(args, glpkit.data.outcome_to_dict(outcome),
                          *_outcome_lines(outcome))


def _violation_dict(violation):
    return {"condition": violation.condition, "kind": violation.kind,
            "levels": list(violation.levels),
            "witness": list(violation.witness)}


def cmd_model_validate(args, _config_data):
    report = kripke.validate_j_frame(glpkit.data.read_model(args.file))
    document = {"is_j_frame": report.is_j_frame,
                "is_stratified": report.is_stratified,
                "violations": [_violation_dict(violation)
                               for violation in report.violations]}
    lines = ["J-frame: %s" % _bool_text(report.is_j_frame),
             "stratified: %s" % _bool_text(report.is_stratified)]
    lines.extend("condition %d %s levels=%s witness=%s" % (
        violation.condition, violation.kind, list(violation.levels),
        list(violation.witness)) for violation in report.violations)
    code = EXIT_OK if report.is_j_frame else EXIT_NEGATIVE
    return code, _emit(args, document, *lines)


def cmd_model_check(args, _config_data):
    model = glpkit.data.read_model(args.file)
    worlds = sorted(kripke.eval_formula(model,
                                        syntax.parse_formula(args.formula)))
    valid = len(worlds) == model.world_count
    document = {"worlds": worlds, "valid": valid}
    return EXIT_OK, _emit(args, document,
                          "worlds: %s" % " ".join(map(str, worlds)),
                          "valid: %s" % _bool_text(valid))


def _rooted_model(path):
    model = glpkit.data.read_model(path)
    if not kripke.validate_j_frame(model).is_j_frame:
        raise FormatError("%s is not a J-frame" % path)
    if not kripke.is_rooted(model):
        raise FormatError("%s is not rooted: some world is not <_0-below 0"
                          % path)
    return model


def cmd_solovay_run(args, _config_data):
    if args.steps < 1:
        raise UsageError("--steps must be at least 1")
    model = _rooted_model(args.model)
    schedule = glpkit.data.read_schedule(args.schedule)
    path = solovay.run_path(model, schedule, args.steps)
    limit = solovay.limit_value(model, schedule)
    document = {"path": list(path), "limit": limit}
    return EXIT_OK, _emit(args, document,
                          "path: %s" % " ".join(map(str, path)),
                          "limit: %d" % limit)


def cmd_solovay_props(args, _config_data):
    if args.max_events < 0 or args.max_steps < 0:
        raise UsageError("--max-events and --max-steps must be >= 0")
    model = _rooted_model(args.model)
    schedules = list(solovay.enumerate_schedules(model, args.max_events,
                                                 args.max_steps))
    report = solovay.check_path_properties(model, schedules,
                                           args.max_steps + 1)
    document = {
        "passed": report.passed,
        "schedules": report.schedules_checked,
        "violations": [{"property": violation.prop,
                        "schedule": violation.schedule,
                        "detail": list(violation.detail)}
                       for violation in report.violations]}
    lines = ["passed: %s" % _bool_text(report.passed),
             "schedules: %d" % report.schedules_checked]
    lines.extend("%s schedule=%s detail=%s" % (
        violation.prop, violation.schedule, list(violation.detail))
        for violation in report.violations)
    code = EXIT_OK if report.passed else EXIT_NEGATIVE
    return code, _emit(args, document, *lines)


def _add_subparser(subparsers, name, handler, common, help_text):
    parser = subparsers.add_parser(name, parents=[common], help=help_text)
    parser.set_defaults(handler=handler)
    return parser


def _add_ordinal_commands(subparsers, common):
    ordinal_parser = subparsers.add_parser("ordinal",
                                           help="ordinal notations")
    commands = ordinal_parser.add_subparsers(dest="ordinal_command",
                                             required=True)
    parser = _add_subparser(commands, "cmp", cmd_ordinal_cmp, common,
                            "compare two ordinals")
    parser.add_argument("left")
    parser.add_argument("right")
    for name, handler, help_text in (
            ("omul", cmd_ordinal_omul, "w*a"),
            ("one-plus", cmd_ordinal_one_plus, "1+a"),
            ("absorbing", cmd_ordinal_absorbing, "is w*a = a")):
        parser = _add_subparser(commands, name, handler, common, help_text)
        parser.add_argument("ordinals", nargs="+")
    parser = _add_subparser(commands, "prec", cmd_ordinal_prec, common,
                            "pairing order on <ordinal>,<n> pairs")
    parser.add_argument("left")
    parser.add_argument("right")


def _add_model_commands(subparsers, common):
    model_parser = subparsers.add_parser("model", help="J-models")
    commands = model_parser.add_subparsers(dest="model_command",
                                           required=True)
    parser = _add_subparser(commands, "validate", cmd_model_validate,
                            common, "check the J-frame conditions")
    parser.add_argument("file")
    parser = _add_subparser(commands, "check", cmd_model_check, common,
                            "evaluate a formula")
    parser.add_argument("file")
    parser.add_argument("formula")


def _add_solovay_commands(subparsers, common):
    solovay_parser = subparsers.add_parser("solovay", help="Solovay paths")
    commands = solovay_parser.add_subparsers(dest="solovay_command",
                                             required=True)
    parser = _add_subparser(commands, "run", cmd_solovay_run, common,
                            "run one path")
    parser.add_argument("model")
    parser.add_argument("schedule")
    parser.add_argument("--steps", type=int, required=True)
    parser = _add_subparser(commands, "props", cmd_solovay_props, common,
                            "check the path properties")
    parser.add_argument("model")
    parser.add_argument("--max-events", type=int, dest="max_events",
                        required=True)
    parser.add_argument("--max-steps", type=int, dest="max_steps",
                        required=True)


def get_parser():
    """Build the command line parser

    :rtype: ArgumentParser
    """
    common = ArgumentParser(add_help=False)
    common.add_argument("--json", dest="json", action="store_true",
                        default=False, help="JSON output [false]")
    parser = ArgumentParser(
        description="glpkit - transfinite provability logic toolkit",
        prog="glpkit")
    parser.add_argument("-c", "--config", type=str, dest="config",
                        default=None, required=False, help="config file")
    parser.add_argument("-l", "--log", type=str, dest="log_level",
                        default="WARNING", required=False,
                        help="log level [WARNING]")
    subparsers = parser.add_subparsers(dest="command", required=True)
    _add_ordinal_commands(subparsers, common)
    for name, handler, help_text in (
            ("parse", cmd_parse, "print a formula canonically"),
            ("condense", cmd_condense, "condense a formula"),
            ("mplus", cmd_mplus, "print M+ of a condensed formula")):
        parser_ = _add_subparser(subparsers, name, handler, common,
                                 help_text)
        parser_.add_argument("formula")
    parser_ = _add_subparser(subparsers, "check-proof", cmd_check_proof,
                             common, "check a proof file")
    parser_.add_argument("file")
    parser_.add_argument("--system", default=None,
                         choices=[system.value for system in hilbert.System])
    parser_ = _add_subparser(subparsers, "decide", cmd_decide, common,
                             "decide a formula")
    parser_.add_argument("formula")
    parser_.add_argument("--max-worlds", type=int, dest="max_worlds",
                         default=None)
    parser_.add_argument("--stratified-only", dest="stratified_only",
                         action="store_true", default=False)
    parser_.add_argument("--corpus", default=None)
    parser_.add_argument("--parallel", type=int, default=None)
    _add_model_commands(subparsers, common)
    _add_solovay_commands(subparsers, common)
    return parser


def start_logger():
    """Start the logger, using sys.stderr and logging all messages
    """
    # Log everything to stderr initially
    _config_logger("%(message)s", sys.stderr, logging.NOTSET)


def format_logger(level):
    """Formats the logger

    :type level: int
    :param level: The logging level
    """
    # stdout carries command output only
    _config_logger("%(asctime)s %(name)-32s: %(levelname)-6s: %(message)s",
                   sys.stderr, level)


def _config_logger(log_format, stream, level):
    """Configure the logger instance

    :type log_format: str
    :param log_format: The log format to use
    :type stream: _io.TextIOWrapper
    :param stream: The stream to log to
    :type level: int
    :param level: The logging level
    """
    root_logger = logging.getLogger("glpkit")
    root_logger.setLevel(level)
    for hdlr in list(root_logger.handlers):
        root_logger.removeHandler(hdlr)
    formatter = logging.Formatter(log_format)
    hdlr = logging.StreamHandler(stream)
    hdlr.setFormatter(formatter)
    root_logger.addHandler(hdlr)


if __name__ == "__main__":
    main_func()
