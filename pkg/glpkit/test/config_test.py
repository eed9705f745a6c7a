# The MIT License (MIT)
#
# Copyright (c) 2026 The glpkit developers
#
# See LICENSE.md for the full license text.

"""Test Cases related to reading the config
"""

import os
import random
import unittest

import glpkit.data
import glpkit.main
import glpkit.test
from glpkit import ConfigError

CONFIG_EMPTY = """
[DEFAULT]
"""

CONFIG_VALID = """
[DEFAULT]
MaxWorlds = {MaxWorlds}
ConcurrentWorkers = {ConcurrentWorkers}
StratifiedOnly = True
CorpusDir = {CorpusDir}
"""

CONFIG_ZERO_WORKERS = """
[DEFAULT]
ConcurrentWorkers = 0
"""

CONFIG_ZERO_WORLDS = """
[DEFAULT]
MaxWorlds = 0
"""

CONFIG_INVALID_WORLDS = """
[DEFAULT]
MaxWorlds = many
"""

CONFIG_INVALID_STRATIFIED = """
[DEFAULT]
StratifiedOnly = perhaps
"""

CONFIG_NO_SECTION = """
MaxWorlds = 3
"""

CONFIG_DATA = {
    "MaxWorlds": random.randint(1, 5),
    "ConcurrentWorkers": random.randint(2, 16),
    "CorpusDir": "/tmp/glpkit_corpus",
}


class ReadConfigTestCase(unittest.TestCase):
    """Test Cases for read_config and read_config_file
    """

    @classmethod
    def setUpClass(cls):
        """Gets temp file paths for our config files
        """
        cls._empty = glpkit.test.write_config(
            "config", CONFIG_EMPTY, CONFIG_DATA)
        cls._valid = glpkit.test.write_config(
            "config", CONFIG_VALID, CONFIG_DATA)
        cls._zero_workers = glpkit.test.write_config(
            "config", CONFIG_ZERO_WORKERS, CONFIG_DATA)
        cls._zero_worlds = glpkit.test.write_config(
            "config", CONFIG_ZERO_WORLDS, CONFIG_DATA)
        cls._invalid_worlds = glpkit.test.write_config(
            "config", CONFIG_INVALID_WORLDS, CONFIG_DATA)
        cls._invalid_stratified = glpkit.test.write_config(
            "config", CONFIG_INVALID_STRATIFIED, CONFIG_DATA)
        cls._no_section = glpkit.test.write_config(
            "config", CONFIG_NO_SECTION, CONFIG_DATA)

    @classmethod
    def tearDownClass(cls):
        """Cleans up our test config files
        """
        os.remove(cls._empty)
        os.remove(cls._valid)
        os.remove(cls._zero_workers)
        os.remove(cls._zero_worlds)
        os.remove(cls._invalid_worlds)
        os.remove(cls._invalid_stratified)
        os.remove(cls._no_section)

    def test_defaults(self):
        """Test an empty [DEFAULT] section gives the defaults
        """
        config_data = glpkit.main.read_config(
            glpkit.test.get_config_parser(self._empty))
        self.assertEqual(config_data.max_worlds, 4)
        self.assertEqual(config_data.concurrent_workers, 1)
        self.assertFalse(config_data.stratified_only)
        self.assertEqual(config_data.corpus_dir, glpkit.data.CORPUS_DIR)

    def test_no_config_file(self):
        """Test no config file gives the defaults
        """
        config_data = glpkit.main.read_config_file(None)
        self.assertEqual(config_data.max_worlds, 4)
        self.assertEqual(config_data.concurrent_workers, 1)

    def test_valid(self):
        """Test every key is read
        """
        config_data = glpkit.main.read_config_file(self._valid)
        self.assertEqual(config_data.max_worlds, CONFIG_DATA["MaxWorlds"])
        self.assertEqual(config_data.concurrent_workers,
                         CONFIG_DATA["ConcurrentWorkers"])
        self.assertTrue(config_data.stratified_only)
        self.assertEqual(config_data.corpus_dir, CONFIG_DATA["CorpusDir"])

    def test_zero_workers(self):
        """Test config with ConcurrentWorkers = 0
        """
        with self.assertRaises(ConfigError) as cm:
            glpkit.main.read_config(
                glpkit.test.get_config_parser(self._zero_workers))
        self.assertEqual(
            str(cm.exception),
            "Invalid config value: Concurrent workers must be greater than 0")

    def test_zero_worlds(self):
        """Test config with MaxWorlds = 0
        """
        with self.assertRaises(ConfigError) as cm:
            glpkit.main.read_config(
                glpkit.test.get_config_parser(self._zero_worlds))
        self.assertEqual(
            str(cm.exception),
            "Invalid config value: Max worlds must be greater than 0")

    def test_invalid_worlds(self):
        """Test a MaxWorlds value that is not a number
        """
        with self.assertRaises(ConfigError) as cm:
            glpkit.main.read_config(
                glpkit.test.get_config_parser(self._invalid_worlds))
        self.assertTrue(str(cm.exception).startswith(
            "Invalid config value: "))

    def test_invalid_stratified(self):
        """Test a StratifiedOnly value that is not a boolean
        """
        with self.assertRaises(ConfigError) as cm:
            glpkit.main.read_config(
                glpkit.test.get_config_parser(self._invalid_stratified))
        self.assertEqual(str(cm.exception),
                         "Invalid config value: Not a boolean: perhaps")

    def test_no_section(self):
        """Test a file with no section header
        """
        with self.assertRaises(ConfigError) as cm:
            glpkit.main.read_config_file(self._no_section)
        self.assertTrue(str(cm.exception).startswith(
            "Unreadable config %s" % self._no_section))

    def test_missing_file(self):
        """Test a config file that does not exist
        """
        self.assertRaises(OSError, glpkit.main.read_config_file,
                          "/nonexistent/glpkit.conf")
