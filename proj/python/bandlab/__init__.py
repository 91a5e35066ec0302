"""Exact bands, o-closed and s-closed ideals in pre-Riesz spaces.

Rationals are passed as ints, ``fractions.Fraction`` or strings "p/q" and
returned as strings. Predicate results are dictionaries with ``verdict``
("yes", "no" or "unknown"), ``witnesses`` and ``justification``.
"""

import json
from fractions import Fraction

from ._bandlab import InputError, Space, example_names, random_cone
from . import _bandlab

__all__ = [
    "InputError",
    "Space",
    "analyze",
    "example_names",
    "random_cone",
    "run_example",
    "to_fractions",
]


def _predicate(name):
    def method(self, *args):
        return json.loads(getattr(self, "_" + name)(*args))

    method.__name__ = name
    return method


for _name in ("is_lattice_rdp", "is_pervasive", "is_band", "is_directed", "is_solid", "is_s_closed", "is_o_closed"):
    setattr(Space, _name, _predicate(_name))


def to_fractions(values):
    """Converts (nested lists of) rational strings to Fractions."""
    if isinstance(values, str):
        return Fraction(values)
    return [to_fractions(v) for v in values]


def run_example(name):
    """Runs a named function-space example; returns (exit_code, report)."""
    code, text = _bandlab._run_example(name)
    return code, json.loads(text)


def analyze(text, seed=1, budget=0):
    """Analyzes instance text; returns (exit_code, report)."""
    code, report = _bandlab._analyze_text(text, seed, budget)
    return code, json.loads(report)
