"""Exact K3 period, connection and modular-form computations."""

import json
from fractions import Fraction

from . import _core

__all__ = [
    "suites",
    "model_params",
    "run",
    "periods",
    "form",
    "mirror_map",
    "connection",
    "pairing",
    "frame",
    "series_coefficients",
]

suites = _core.suites
model_params = _core.model_params


def run(model="all", suite="all", K=10, qmax=30):
    """Return (exit_code, report) for the selected suites."""
    code, text = _core.run(model, suite, K, qmax)
    return code, json.loads(text)


def periods(model, K=10, which="all"):
    return json.loads(_core.emit("period", which, model, 0, K, 0))


def form(name, level, qmax=30):
    return json.loads(_core.emit("form", name, "e6", level, 0, qmax))


def mirror_map(model, K=10):
    return json.loads(_core.emit("mirror-map", "", model, 0, K, 0))


def connection(model, source="printed"):
    return json.loads(_core.connection(model, source))


def pairing(model, source="printed"):
    return json.loads(_core.pairing(model, source))


def frame(model, K=8):
    return json.loads(_core.frame(model, K))


def series_coefficients(series):
    """{"n,m": "p/q"} -> {(n, m): Fraction}"""
    out = {}
    for key, value in series.items():
        n, m = key.split(",")
        out[(int(n), int(m))] = Fraction(value)
    return out
