"""Exact Kundt-structure checks on metric Lie algebras.

Scalars cross the boundary as strings ("1/2", "1+2*sqrt2"); plain ints and
fractions.Fraction are accepted wherever a vector or parameter is expected.
"""
from fractions import Fraction

from ._core import InputError, Model as _Model, catalog_ids, enumerate, metric_names, verify_paper

__all__ = ["InputError", "Model", "catalog_ids", "enumerate", "metric_names", "verify_paper", "load"]


def _s(x):
    return str(Fraction(x)) if isinstance(x, (int, Fraction)) else str(x)


def _vec(v):
    return [_s(x) for x in v]


class Model:
    """A Lie algebra with one metric."""

    def __init__(self, core):
        self._m = core

    @classmethod
    def from_catalog(cls, id, metric, **params):
        return cls(_Model.from_catalog(id, metric, {k: _s(v) for k, v in params.items()}))

    @classmethod
    def from_document(cls, text):
        return cls(_Model.from_document(text))

    labels = property(lambda self: self._m.labels)
    dim = property(lambda self: self._m.dim)
    metric = property(lambda self: self._m.metric)

    def bracket(self, x, y):
        return self._m.bracket(_vec(x), _vec(y))

    def product(self, x, y):
        return self._m.product(_vec(x), _vec(y))

    def check_pair(self, basis):
        return self._m.check_pair([_vec(b) for b in basis])

    def check_vector(self, v):
        return self._m.check_vector(_vec(v))

    def classify(self):
        return self._m.classify()

    def curvature(self):
        return self._m.curvature()

    def flow(self, v0, t_end=10.0, dt=1e-3):
        return self._m.flow([float(x) for x in v0], t_end, dt)

    def leaf_defect(self, h_basis, v0, t_end=10.0, dt=1e-3):
        return self._m.leaf_defect([[float(x) for x in b] for b in h_basis], [float(x) for x in v0], t_end, dt)

    def to_document(self):
        return self._m.to_document()


def load(id, metric, **params):
    return Model.from_catalog(id, metric, **params)
