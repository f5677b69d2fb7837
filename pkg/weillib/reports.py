"""Verdicts and run reports for the verification commands.

A check is *exact* (compared by CycloNumber equality, tolerance None) or
*numeric* (compared after complex embedding, with its tolerance recorded).
"""
from __future__ import absolute_import, division, print_function

import collections
import logging


class Verdict(collections.namedtuple('Verdict',
                                     'check passed tolerance detail')):
    """Outcome of one check."""
    __slots__ = ()

    def to_dict(self):
        return {"check": self.check, "passed": bool(self.passed),
                "tolerance": self.tolerance, "detail": self.detail}


def verdict(check, passed, tolerance=None, **detail):
    return Verdict(check, bool(passed), tolerance, detail)


def exact_verdict(check, expected, observed, **detail):
    """Exact comparison of two values (or lists of values)."""
    detail.update(expected=expected, observed=observed)
    return verdict(check, expected == observed, None, **detail)


def bound_verdict(check, value, limit, tolerance, **detail):
    """Numeric check value <= limit + tolerance."""
    detail.update(value=value, limit=limit)
    return verdict(check, value <= limit + tolerance, tolerance, **detail)


class SuiteResult(object):
    """Results and verdicts of one verification suite or case."""

    def __init__(self, name, results=None, verdicts=None):
        self.name = name
        self.results = collections.OrderedDict(results or ())
        self.verdicts = list(verdicts or ())

    @property
    def passed(self):
        return all(v.passed for v in self.verdicts)

    def add(self, key, value):
        self.results[key] = value

    def check(self, item):
        self.verdicts.append(item)
        if not item.passed:
            logging.warning("%s: check %s failed: %s", self.name, item.check,
                            item.detail)
        return item.passed

    def extend(self, other, prefix=None):
        """Merge another suite's results and verdicts, namespaced."""
        prefix = other.name if prefix is None else prefix
        self.results[prefix] = other.results
        for item in other.verdicts:
            self.verdicts.append(item._replace(check="%s/%s"
                                               % (prefix, item.check)))


class RunReport(SuiteResult):
    """Everything one command produced.

    The wall-clock duration is recorded only on request, so that by default
    a report is byte-identical across runs and worker counts.
    """

    def __init__(self, command, field=None, parameters=None):
        super(RunReport, self).__init__(command)
        self.command = command
        self.field = field
        self.parameters = collections.OrderedDict(parameters or ())
        self.duration = None

    @property
    def exit_code(self):
        return 0 if self.passed else 1

    def summary(self):
        failed = [v.check for v in self.verdicts if not v.passed]
        if failed:
            return "%d of %d checks failed: %s" % (
                len(failed), len(self.verdicts), ", ".join(failed))
        return "All %d checks passed" % len(self.verdicts)
