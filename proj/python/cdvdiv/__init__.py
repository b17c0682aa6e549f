"""Python access to the cdv library: classification, divisor reports, quadruple lists."""

import json

from ._core import NormalFormError, ParseError, candidate_weights, classify, genus, normalize, weights
from . import _core

__all__ = [
    "NormalFormError",
    "ParseError",
    "analyze",
    "candidate_weights",
    "classify",
    "corpus",
    "genus",
    "lemmas",
    "normalize",
    "weights",
]


def analyze(polynomial, seed=0, truncation=None, max_weight=None):
    """Full report as a dict, same layout as ``cdvdiv analyze --format json`` minus the header."""
    return json.loads(_core.analyze_json(polynomial, seed, truncation, max_weight))


def lemmas(type_name, max_m=32):
    return json.loads(_core.lemmas_json(type_name, max_m))


def corpus(seed=0):
    return json.loads(_core.corpus_json(seed))
