"""Exact words, products and q-series for multiple zeta value models."""

import json
from fractions import Fraction

from . import _core
from ._core import MzvError, Poly, map_names, suite_names, suite_description

__all__ = [
    "MzvError", "Poly", "parse", "product", "apply_map", "map_names", "coproduct", "antipode",
    "zeta_q", "eval_word", "rota_baxter_ooz", "zeta_classical", "suite_names",
    "suite_description", "run_suite", "export_vectors", "terms",
]


def _lam(lam):
    return str(Fraction(lam))


def parse(text, alphabet="H", lam=1):
    """Parse an expression over alphabet h (x0, x1), H (p, y) or pdy."""
    return Poly(text, alphabet, _lam(lam))


def terms(p):
    """{word: Fraction} for a Poly."""
    return {w: Fraction(c) for w, c in p.terms()}


def product(name, u, v, lam=1):
    return _core.product(name, u, v, _lam(lam))


def apply_map(name, p):
    return _core.apply_map(name, p)


def coproduct(kind, p):
    """List of (left, right, Fraction); kind is deconcat, square-op or infinitesimal."""
    return [(a, b, Fraction(c)) for a, b, c in _core.coproduct(kind, p)]


def antipode(p, lam=1):
    return _core.antipode(p, _lam(lam))


def zeta_q(model, comp, order=20):
    """Coefficients of q^0..q^order."""
    return [Fraction(c) for c in _core.zeta_q(model, list(comp), order)]


def eval_word(model, p, order=20):
    return [Fraction(c) for c in _core.eval_word(model, p, order)]


def rota_baxter_ooz(comp, order=20):
    return [Fraction(c) for c in _core.rota_baxter_ooz(list(comp), order)]


def zeta_classical(comp, cutoff=100000):
    """(partial sum, tail bound)."""
    return _core.zeta_classical(list(comp), cutoff)


def run_suite(name, max_weight=5, order=30, threads=0):
    return json.loads(_core.run_suite(name, max_weight, order, threads))


def export_vectors(name, max_weight=5, order=30):
    return [json.loads(line) for line in _core.export_vectors(name, max_weight, order).splitlines()]
