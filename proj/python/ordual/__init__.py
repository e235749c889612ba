"""Order-theoretic dualities on finite posets.

Posets are passed as JSON documents (text, or a dict that is serialised
first). Subsets and valuations are bit strings, index 0 first.
"""

import json

from . import _ordual
from ._ordual import Error, closed_family, closure_of

__all__ = [
    "Error",
    "c1o2_family",
    "closed_family",
    "closure_of",
    "dual",
    "duplicate",
    "generate_exhaustive",
    "generate_random",
    "monotone_valuations",
    "orthovaluations",
    "validate",
    "verify",
]


def _text(document):
    return document if isinstance(document, str) else json.dumps(document)


def validate(document):
    return json.loads(_ordual.validate(_text(document)))


def monotone_valuations(document):
    return _ordual.monotone_valuations(_text(document))


def orthovaluations(document):
    return _ordual.orthovaluations(_text(document))


def dual(document):
    return json.loads(_ordual.dual(_text(document)))


def duplicate(document):
    return json.loads(_ordual.duplicate(_text(document)))


def c1o2_family(document):
    return _ordual.c1o2_family(_text(document))


def verify(document, claim, strict=False, **caps):
    return json.loads(_ordual.verify(_text(document), claim, strict, **caps))


def generate_exhaustive(n):
    return [json.loads(d) for d in _ordual.generate_exhaustive(n)]


def generate_random(n, seed=0, count=1):
    return [json.loads(d) for d in _ordual.generate_random(n, seed, count)]
