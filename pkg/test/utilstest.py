#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
#    Project: Cascading binary hypothesis testing
#
#    Copyright (C) the pyCBT developers
#
#    This program is free software: you can redistribute it and/or modify
#    it under the terms of the GNU General Public License as published by
#    the Free Software Foundation, either version 3 of the License, or
#    (at your option) any later version.
#
#    This program is distributed in the hope that it will be useful,
#    but WITHOUT ANY WARRANTY; without even the implied warranty of
#    MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
#    GNU General Public License for more details.
#
#    You should have received a copy of the GNU General Public License
#    along with this program.  If not, see <http://www.gnu.org/licenses/>.
#

__author__ = "pyCBT developers"
__license__ = "GPLv3+"
__copyright__ = "the pyCBT developers"
__date__ = "2026-10-18"

import os
import sys
import shutil
import tempfile
import threading
import logging
import importlib.util
from argparse import ArgumentParser

logging.basicConfig(level=logging.WARNING)
logger = logging.getLogger("pyCBT.utilstest")


class UtilsTest(object):
    """
    Static class providing useful stuff for preparing tests.

    pyCBT is loaded from the directory given by BUILDPYTHONPATH (build tree,
    containing pyCBT/) or directly from pyCBT-src in the source tree.
    """
    options = None
    test_home = os.path.dirname(os.path.abspath(__file__))
    sem = threading.Semaphore()
    name = "pyCBT"
    if os.environ.get("BUILDPYTHONPATH"):
        pyCBT_home = os.path.join(os.path.abspath(os.environ["BUILDPYTHONPATH"]), name)
    else:
        pyCBT_home = os.path.join(os.path.dirname(test_home), "pyCBT-src")
    logger.info("pyCBT Home is: %s", pyCBT_home)

    if name in sys.modules and \
            os.path.dirname(os.path.abspath(sys.modules[name].__file__)) == pyCBT_home:
        pyCBT = sys.modules[name]
    else:
        for key in list(sys.modules):
            if key == name or key.startswith(name + "."):
                sys.modules.pop(key)
        logger.info("Loading pyCBT")
        spec = importlib.util.spec_from_file_location(name, os.path.join(pyCBT_home, "__init__.py"),
                                                      submodule_search_locations=[pyCBT_home])
        pyCBT = importlib.util.module_from_spec(spec)
        sys.modules[name] = pyCBT
        spec.loader.exec_module(pyCBT)

    @classmethod
    def tempdir(cls, prefix="pyCBT_"):
        """
        Fresh temporary directory, removed with UtilsTest.cleanup
        """
        return tempfile.mkdtemp(prefix=prefix)

    @staticmethod
    def cleanup(directory):
        shutil.rmtree(directory, ignore_errors=True)

    @classmethod
    def get_options(cls):
        """
        Parse the command line to analyse options ... returns options

        Unknown arguments (from a test runner) are ignored.
        """
        if cls.options is None:
            parser = ArgumentParser(usage="Tests for pyCBT")
            parser.add_argument("-d", "--debug", dest="debug", help="run in debugging mode",
                                default=False, action="store_true")
            parser.add_argument("-i", "--info", dest="info", help="run in more verbose mode ",
                                default=False, action="store_true")
            cls.options = parser.parse_known_args()[0]
        return cls.options

    @classmethod
    def get_logger(cls, filename=__file__):
        """
        small helper function that initialized the logger and returns it
        """
        options = cls.get_options()
        dirname, basename = os.path.split(os.path.abspath(filename))
        basename = os.path.splitext(basename)[0]
        level = logging.WARN
        if options.debug:
            level = logging.DEBUG
        elif options.info:
            level = logging.INFO
        mylogger = logging.getLogger(basename)
        logger.setLevel(level)
        mylogger.setLevel(level)
        logging.getLogger("pyCBT").setLevel(level)
        mylogger.debug("tests loaded from file: %s", basename)
        return mylogger


getLogger = UtilsTest.get_logger
