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
__date__ = "18/10/2026"
__status__ = "beta"
__docformat__ = 'restructuredtext'
__doc__ = """
Writers for the artifacts of the command line tools: CSV tables, JSON
documents and the run manifest recording how they were produced.

CSV files carry no time stamp so that reruns give identical bytes; the time
stamp lives in the manifest only.
"""

import json
import logging
import os
import threading
import time
import numpy

logger = logging.getLogger("pyCBT.io")

CSV_FORMAT = "%.12g"


def getIsoTime(forceTime=None):
    """
    @param forceTime: enforce a given time (current by default)
    @type forceTime: float
    @return: the time as an ISO8601 string with the local UTC offset
    @rtype: string
    """
    if forceTime is None:
        forceTime = time.time()
    localtime = time.localtime(forceTime)
    offset = localtime.tm_gmtoff // 60
    return "%s%s%02i:%02i" % (time.strftime("%Y-%m-%dT%H:%M:%S", localtime),
                              "-" if offset < 0 else "+", abs(offset) // 60, abs(offset) % 60)


class Writer(object):
    """
    Abstract class for writers: owns the destination file name
    """
    def __init__(self, filename):
        self.filename = filename
        if os.path.exists(filename):
            logger.warning("Destination file %s exists, overwriting", filename)
        self._sem = threading.Semaphore()

    def __repr__(self):
        return "Generic writer on file %s" % (self.filename)

    def init(self):
        """
        Creates the directory that will host the output file
        """
        with self._sem:
            dirname = os.path.dirname(self.filename)
            if dirname and not os.path.exists(dirname):
                os.makedirs(dirname)

    def write(self, data):
        raise NotImplementedError


class CsvWriter(Writer):
    """
    Comma separated table with a header row and 12 significant digits
    """
    def __init__(self, filename, columns):
        Writer.__init__(self, filename)
        self.columns = list(columns)

    def __repr__(self):
        return "CSV writer on file %s" % (self.filename)

    def write(self, data):
        """
        @param data: 2D array with one column per name
        """
        data = numpy.atleast_2d(numpy.asarray(data, dtype=numpy.float64))
        if data.shape[1] != len(self.columns):
            raise ValueError("%s columns expected, got %s" % (len(self.columns), data.shape[1]))
        self.init()
        with self._sem:
            numpy.savetxt(self.filename, data, fmt=CSV_FORMAT, delimiter=",",
                          header=",".join(self.columns), comments="")
        logger.info("Wrote %s rows to %s", data.shape[0], self.filename)


class JsonWriter(Writer):
    def __repr__(self):
        return "JSON writer on file %s" % (self.filename)

    def write(self, data):
        self.init()
        with self._sem:
            with open(self.filename, "w") as f:
                json.dump(data, f, indent=4, sort_keys=True)
                f.write(os.linesep)
        logger.info("Wrote %s", self.filename)


class RunManifest(object):
    """
    Provenance of one command run: command, configuration, outputs,
    parameters, seed, version and time stamp.
    """
    def __init__(self, command, config_path=None, parameters=None, seed=None, version=None):
        self.command = command
        self.config_path = config_path
        self.parameters = dict(parameters or {})
        self.seed = seed
        self.version = version
        self.outputs = []

    def __repr__(self):
        return "RunManifest of %s: %s" % (self.command, ", ".join(self.outputs))

    def add_output(self, filename):
        self.outputs.append(os.path.basename(filename))

    def get_config(self, timestamp=None):
        return {"command": self.command,
                "config": self.config_path,
                "outputs": list(self.outputs),
                "parameters": self.parameters,
                "seed": self.seed,
                "version": self.version,
                "timestamp": getIsoTime(timestamp)}

    def save(self, directory, timestamp=None):
        """
        Write <command>.manifest.json in directory

        @return: path of the manifest
        """
        filename = os.path.join(directory, "%s.manifest.json" % self.command)
        JsonWriter(filename).write(self.get_config(timestamp))
        return filename
