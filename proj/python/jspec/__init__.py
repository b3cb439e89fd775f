"""Combinatorics of the category J, T-data, Day convolution and prolonged spectra.

Documents are plain dicts in the JSON schemas used by the ``jspec`` tool
("jfunctor.v1", "tdatum.v1", "spectrum.v1", "coend.v1"). Ordinal entries are
1-based. Malformed documents raise ``SchemaError``, a ``ValueError``.
"""

import json

from . import _jspec
from ._jspec import SchemaError

__all__ = [
    "SchemaError",
    "count_hom",
    "enumerate_hom",
    "compose",
    "decompose",
    "validate_functor",
    "validate_tdatum",
    "tdatum_to_functor",
    "functor_to_tdatum",
    "random_tdatum",
    "day_convolve",
    "compare_monoidal",
    "prolong",
    "validate_spectrum",
    "components",
    "components_dot",
    "run_suite",
]


def _text(doc):
    return doc if isinstance(doc, str) else json.dumps(doc)


def count_hom(src, dst):
    return _jspec.count_hom(tuple(src), tuple(dst))


def enumerate_hom(src, dst):
    return json.loads(_jspec.enumerate_hom(tuple(src), tuple(dst)))


def compose(g, f):
    """g o f."""
    return json.loads(_jspec.compose(_text(g), _text(f)))


def decompose(f):
    """Canonical (a, b, p) with f = (a, b) o Psi."""
    return json.loads(_jspec.decompose(_text(f)))


def validate_functor(functor):
    return json.loads(_jspec.validate_functor(_text(functor)))


def validate_tdatum(datum):
    return json.loads(_jspec.validate_tdatum(_text(datum)))


def tdatum_to_functor(datum):
    return json.loads(_jspec.tdatum_to_functor(_text(datum)))


def functor_to_tdatum(functor):
    return json.loads(_jspec.functor_to_tdatum(_text(functor)))


def random_tdatum(window=(2, 2), seed=1):
    return json.loads(_jspec.random_tdatum(tuple(window), seed))


def day_convolve(x, y, at, classes=False):
    """Coend classes of X (*) Y at one object; X and Y may be functors or data."""
    return json.loads(_jspec.day_convolve(_text(x), _text(y), tuple(at), classes))


def compare_monoidal(x, y, at):
    return json.loads(_jspec.compare_monoidal(_text(x), _text(y), tuple(at)))


def prolong(datum, K):
    return json.loads(_jspec.prolong(_text(datum), list(K)))


def validate_spectrum(spectrum, p_max=2):
    return json.loads(_jspec.validate_spectrum(_text(spectrum), p_max))


def components(window):
    """{(m, n): n - m} over the window."""
    return _jspec.components(tuple(window))


def components_dot(window):
    return _jspec.components_dot(tuple(window))


def run_suite(window=(2, 2), seed=1, samples=5):
    return json.loads(_jspec.run_suite(tuple(window), seed, samples))
