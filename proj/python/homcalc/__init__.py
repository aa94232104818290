"""Exact checks for Hom-Lie algebras and Hom-Lie algebroids.

Instances are passed as dicts (or JSON text) in the same format the
``homcalc`` command line tool reads; reports come back as dicts.
"""

import json

from . import _core
from ._core import ParseError, PreconditionError, StructureError

__all__ = [
    "ParseError",
    "PreconditionError",
    "StructureError",
    "builtin",
    "builtin_names",
    "check",
    "convert",
    "differential",
    "proptest",
    "reconstruct",
    "run",
]


def _text(instance):
    return instance if isinstance(instance, str) else json.dumps(instance)


def builtin(name):
    return json.loads(_core.builtin(name))


def builtin_names():
    return list(_core.builtin_names())


def check(instance, seed=7, trials=8, max_degree=2):
    return json.loads(_core.check(_text(instance), seed, trials, max_degree))


def differential(instance, s, function, args):
    """Value of d^s(function) on one section, as a polynomial string."""
    return _core.differential(_text(instance), s, function, args)


def reconstruct(instance, seed=7, trials=8, max_degree=2):
    """Round trip; returns {"report": ..., "algebroid": ... or None}."""
    return json.loads(_core.reconstruct(_text(instance), seed, trials, max_degree))


def convert(instance, target, seed=7, trials=8, max_degree=2):
    return json.loads(_core.convert(_text(instance), target, seed, trials, max_degree))


def run(*args):
    """Runs the command line tool in-process; returns (exit_code, stdout, stderr)."""
    return _core.run([str(a) for a in args])


def proptest(builtin_name, seed=7, trials=8):
    code, out, err = run("proptest", "--builtin", builtin_name, "--seed", seed,
                         "--trials", trials, "--emit", "json")
    if code == 2:
        raise ValueError(err.strip())
    return json.loads(out)
