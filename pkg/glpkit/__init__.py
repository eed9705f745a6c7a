# The MIT License (MIT)
#
# Copyright (c) 2026 The glpkit developers
#
# See LICENSE.md for the full license text.

"""glpkit module

Decision, refutation and certification tools for transfinite
provability logic.
"""

import logging


class Logger(logging.getLoggerClass()):
    """glpkit Logger class
    """
    TRACE = 5
    LOG_NAME_TRACE = "TRACE"

    def __init__(self, name, level=logging.NOTSET):
        """Add our custom level
        """
        super().__init__(name, level)
        logging.addLevelName(Logger.TRACE, Logger.LOG_NAME_TRACE)

    def trace(self, msg, *args, **kwargs):
        """Log at our custom level

        :param msg: msg passed to _log()
        :param args: args passed to _log()
        :param kwargs: kwargs passed to _log()
        """
        if self.isEnabledFor(Logger.TRACE):
            self._log(Logger.TRACE, msg, args, **kwargs)


logging.setLoggerClass(Logger)


class GlpError(Exception):
    """Base class of every error raised by glpkit
    """
    pass


class ParseError(GlpError, ValueError):
    """Syntax error in an ordinal, formula or proof rule

    :type text: str
    :param text: The text being parsed
    :type position: int
    :param position: 0-based offset of the offending character
    """

    def __init__(self, message, text, position):
        super().__init__("%s at position %d in %r" % (message, position, text))
        self.text = text
        self.position = position


class IndexRangeError(GlpError, IndexError):
    """A modality index or world lies outside the permitted range
    """
    pass


class NonFiniteIndexError(GlpError, ValueError):
    """A finite (condensed) index was required but an infinite one was found
    """
    pass


class FormatError(GlpError, ValueError):
    """Malformed model, proof, schedule or outcome document
    """
    pass


class ConfigError(GlpError, AttributeError):
    """Special exception for configuration problems

    Specifically used to facilitate unittests (instead of calling sys.exit)
    """
    pass


class UsageError(GlpError):
    """Command-line usage problem
    """
    pass
