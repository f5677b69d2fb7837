"""Serialize run reports as JSON, CSV or plain text.

Exact values keep their exactness: a rational is written as a pair of
decimal strings ["num", "den"] and a CycloNumber as its order plus the
rational coefficients of its power-basis form. Floating-point
approximations are rounded to 12 decimal places and 12 significant digits
so that output is stable across platforms.
"""
from __future__ import absolute_import, division, print_function

import collections
import json
import numbers
from fractions import Fraction

import numpy as np
import pandas as pd

from . import core
from ._version import __version__
from .charsum import CharacterSpec, SumSeries
from .cyclo import CycloNumber
from .gf.field import FieldElement, FieldSpec
from .lpoly import LPolynomial
from .reports import Verdict
from .seqcorr import SequenceProfile
from .symfun import MultiPoly, SymCoeffs


def _approx(value):
    value = float("%.12g" % round(value, 12))
    return 0.0 if value == 0 else value


def fmt_fraction(value):
    value = Fraction(value)
    return [str(value.numerator), str(value.denominator)]


def fmt_complex(value):
    value = complex(value)
    return [_approx(value.real), _approx(value.imag)]


def to_jsonable(obj):
    """Convert results into plain JSON types."""
    if isinstance(obj, CycloNumber):
        return {"order": obj.order,
                "coeffs": [fmt_fraction(c) for c in obj.coeffs],
                "approx": fmt_complex(obj.embed_complex())}
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, numbers.Integral):
        return int(obj)
    if isinstance(obj, Fraction):
        return fmt_fraction(obj)
    if isinstance(obj, numbers.Real):
        return _approx(obj)
    if isinstance(obj, numbers.Complex):
        return fmt_complex(obj)
    if isinstance(obj, FieldElement):
        return {"code": obj.code, "coeffs": list(obj.coeffs)}
    if isinstance(obj, FieldSpec):
        return obj.to_dict()
    if isinstance(obj, CharacterSpec):
        return obj.to_dict()
    if isinstance(obj, SumSeries):
        return {"meta": to_jsonable(obj.meta),
                "values": to_jsonable(obj.values)}
    if isinstance(obj, LPolynomial):
        return {"coeffs": to_jsonable(obj.coeffs), "degree": obj.degree,
                "context": to_jsonable(obj.context)}
    if isinstance(obj, SymCoeffs):
        return {"kind": obj.kind, "arity": obj.arity,
                "values": to_jsonable(obj.values)}
    if isinstance(obj, SequenceProfile):
        return to_jsonable(obj.to_dict())
    if isinstance(obj, MultiPoly):
        return str(obj)
    if isinstance(obj, Verdict):
        return to_jsonable(obj.to_dict())
    if isinstance(obj, pd.DataFrame):
        return to_jsonable(obj.to_dict(orient="records"))
    if isinstance(obj, np.ndarray):
        return to_jsonable(obj.tolist())
    if isinstance(obj, dict):
        return {str(key): to_jsonable(value) for key, value in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(value) for value in obj]
    if obj is None or isinstance(obj, str):
        return obj
    raise TypeError("Cannot serialize %r" % (obj,))


def report_to_dict(report):
    out = collections.OrderedDict([
        ("command", report.command),
        ("version", __version__),
        ("field", report.field),
        ("parameters", report.parameters),
        ("results", report.results),
        ("verdicts", report.verdicts),
        ("passed", report.passed),
    ])
    if report.duration is not None:
        out["duration"] = report.duration
    return to_jsonable(out)


# Supported formats:

def fmt_json(report):
    return json.dumps(report_to_dict(report), sort_keys=True, indent=2) + "\n"


def report_table(report):
    """A DataFrame view of a report: its "table" result if there is one,
    otherwise one row per result key and per verdict."""
    table = report.results.get("table")
    if isinstance(table, pd.DataFrame):
        return table
    rows = []
    for key, value in report.results.items():
        rows.append({"section": "result", "name": key,
                     "value": json.dumps(to_jsonable(value), sort_keys=True),
                     "passed": ""})
    for item in report.verdicts:
        rows.append({"section": "verdict", "name": item.check,
                     "value": json.dumps(to_jsonable(item.detail),
                                         sort_keys=True),
                     "passed": item.passed})
    return pd.DataFrame(rows, columns=["section", "name", "value", "passed"])


def fmt_text(report):
    lines = ["%s (WeilKit %s)" % (report.command, __version__)]
    if report.field:
        lines.append("field: p=%d e=%d modulus=%s" % (
            report.field["p"], report.field["e"],
            ",".join(map(str, report.field["modulus"]))))
    for key, value in report.parameters.items():
        lines.append("%s: %s" % (key, _text_value(value)))
    for key, value in report.results.items():
        if isinstance(value, pd.DataFrame):
            lines.append("%s:\n%s" % (key, value.to_string(index=False)))
        else:
            lines.append("%s: %s" % (key, _text_value(value)))
    for item in report.verdicts:
        lines.append("[%s] %s" % ("PASS" if item.passed else "FAIL",
                                  item.check))
    if report.verdicts:
        lines.append(report.summary())
    if report.duration is not None:
        lines.append("duration: %.3f s" % report.duration)
    return "\n".join(lines) + "\n"


def _text_value(value):
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_text_value(v) for v in value) + "]"
    if isinstance(value, dict):
        return "{" + ", ".join("%s: %s" % (k, _text_value(v))
                               for k, v in value.items()) + "}"
    return str(value)


EXPORT_FORMATS = {
    'json': fmt_json,
    'text': fmt_text,
}


def emit_report(report, fmt, outfname=None):
    """Write a report to `outfname` (default stdout) in the given format."""
    if fmt == 'csv':
        core.write_dataframe(outfname, report_table(report))
    elif fmt in EXPORT_FORMATS:
        core.write_text(outfname, EXPORT_FORMATS[fmt](report))
    else:
        raise ValueError("Unknown output format %r" % fmt)
