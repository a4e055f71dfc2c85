"""Universal localisations of Nakayama algebras."""

import json

from . import _nakloc
from ._nakloc import NaklocError, canonical_spec, count_noncrossing


def localise(algebra, sigma=""):
    return json.loads(_nakloc.localise(algebra, sigma))


def enumerate(algebra, what):
    return json.loads(_nakloc.enumerate(algebra, what))


def hasse(algebra, what):
    return json.loads(_nakloc.hasse(algebra, what))


def verify(nmax, hmax, oracle=False):
    return json.loads(_nakloc.verify(nmax, hmax, oracle))


__all__ = ["NaklocError", "canonical_spec", "count_noncrossing", "enumerate", "hasse", "localise", "verify"]
