"""Exact CGA spinor polynomial factorization, python front end."""

from __future__ import annotations

import json
from fractions import Fraction

from . import _core
from ._core import SpinorfactError

__all__ = [
    "Multivector",
    "SpinorfactError",
    "motion",
    "norm",
    "family",
    "trajectory_point",
    "cocircular",
    "classify",
    "verify",
    "suite_names",
]


def _frac(s: str) -> Fraction:
    return Fraction(s)


def _text(x) -> str:
    return str(Fraction(x))


class Multivector:
    """Multivector with exact rational coefficients keyed by blade name."""

    def __init__(self, terms=None):
        if isinstance(terms, str):
            terms = {terms: 1}
        elif isinstance(terms, (int, Fraction)):
            terms = {"1": terms}
        terms = terms or {}
        self._json = _core.add(json.dumps({k: _text(v) for k, v in terms.items()}), "{}")

    @classmethod
    def _wrap(cls, text: str) -> "Multivector":
        m = cls.__new__(cls)
        m._json = text
        return m

    @staticmethod
    def _coerce(x) -> "Multivector":
        return x if isinstance(x, Multivector) else Multivector(x)

    def terms(self) -> dict[str, Fraction]:
        return {k: _frac(v) for k, v in json.loads(self._json).items()}

    def __mul__(self, other):
        return Multivector._wrap(_core.multiply(self._json, Multivector._coerce(other)._json))

    def __rmul__(self, other):
        return Multivector._wrap(_core.multiply(Multivector._coerce(other)._json, self._json))

    def __add__(self, other):
        return Multivector._wrap(_core.add(self._json, Multivector._coerce(other)._json))

    __radd__ = __add__

    def __neg__(self):
        return self * -1

    def __sub__(self, other):
        return self + (-Multivector._coerce(other))

    def __eq__(self, other):
        return isinstance(other, Multivector) and self.terms() == other.terms()

    def __hash__(self):
        return hash(frozenset(self.terms().items()))

    def reverse(self) -> "Multivector":
        return Multivector._wrap(_core.reverse(self._json))

    def grade(self, k: int) -> "Multivector":
        return Multivector._wrap(_core.grade(self._json, k))

    def to_json(self) -> str:
        return self._json

    def __repr__(self):
        return f"Multivector({self._json})"

    @classmethod
    def point(cls, x, y, z) -> "Multivector":
        return cls._wrap(_core.encode_point([_text(x), _text(y), _text(z)]))

    def decode_point(self) -> tuple[Fraction, Fraction, Fraction]:
        return tuple(_frac(c) for c in _core.decode_point(self._json))


def motion(name: str) -> list[Multivector]:
    """Coefficients c_0, c_1, ... of a named motion."""
    return [Multivector._wrap(json.dumps(c)) for c in json.loads(_core.motion(name))]


def norm(name: str) -> list[Fraction]:
    return [_frac(c) for c in json.loads(_core.norm(name))]


def family(name: str, params) -> tuple[Multivector, Multivector]:
    h1, h2 = _core.family(name, [_text(p) for p in params])
    return Multivector._wrap(h1), Multivector._wrap(h2)


def trajectory_point(name: str, point, t):
    p = _core.trajectory_point(name, [_text(c) for c in point], _text(t))
    return None if p is None else tuple(_frac(c) for c in p)


def cocircular(points) -> bool:
    return _core.cocircular([[_text(c) for c in p] for p in points])


def classify(a, b) -> tuple[str, Fraction]:
    kind, witness = _core.classify(Multivector._coerce(a)._json, Multivector._coerce(b)._json)
    return kind, _frac(witness)


def suite_names() -> list[str]:
    return list(_core.suite_names())


def verify(suite: str, **config) -> dict:
    """Runs a verification suite and returns the report as a dict."""
    return json.loads(_core.verify(suite, json.dumps(config) if config else ""))
