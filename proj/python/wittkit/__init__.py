"""Exact computations with alternating matrices, elementary Witt classes and
unimodular rows over quotients of polynomial rings.

Matrices are lists of rows of polynomial strings, certificates are dicts in
the same shape as the certificate documents read by the ``wittkit`` CLI
(1-based transvection indices).
"""
import json

from . import _wittkit
from ._wittkit import (
    BudgetExceeded,
    NotAlternating,
    NotInvertible,
    ParseError,
    PreconditionViolation,
    RingMismatch,
    SizeMismatch,
    WittkitError,
)

__all__ = [
    "Ring", "pfaffian", "det", "certify_row", "vaserstein", "swan_towber_complete", "koszul_homotopy",
    "eta", "eta_product_cert", "symplectic_reduce", "field_equiv_cert", "verify_equiv", "groebner_basis",
    "run_command", "WittkitError", "ParseError", "BudgetExceeded", "RingMismatch", "SizeMismatch",
    "NotAlternating", "NotInvertible", "PreconditionViolation",
]


class Ring:
    """Quotient ring k[vars]/(relations); ``field`` is "QQ" or a prime p."""

    def __init__(self, field="QQ", vars=(), relations=(), order="grevlex"):
        if field in ("QQ", "rationals"):
            fspec = {"kind": "rationals"}
        else:
            fspec = {"kind": "prime-field", "p": int(field)}
        spec = {"field": fspec, "vars": list(vars), "order": order, "relations": list(relations)}
        self._ring = _wittkit.Ring(json.dumps(spec))

    @classmethod
    def from_spec(cls, spec):
        ring = cls.__new__(cls)
        ring._ring = _wittkit.Ring(json.dumps(spec))
        return ring

    @property
    def spec(self):
        return json.loads(self._ring.spec_json())

    def describe(self):
        return self._ring.describe()

    def basis(self):
        return self._ring.basis()

    def reduce(self, poly):
        return self._ring.reduce(poly)

    def __repr__(self):
        return f"Ring({self.describe()})"


def _enc(value):
    return json.dumps(value)


def _strs(values):
    return [str(v) for v in values]


def _mat(rows):
    return json.dumps([_strs(r) for r in rows])


def _opt(values):
    return None if values is None else _enc(_strs(values))


def pfaffian(ring, g):
    return _wittkit.pfaffian(ring._ring, _mat(g))


def det(ring, g):
    return _wittkit.det(ring._ring, _mat(g))


def certify_row(ring, row):
    """Bezout witness of ``row`` or None when the entries do not generate the unit ideal."""
    return json.loads(_wittkit.certify_row(ring._ring, _enc(_strs(row))))


def vaserstein(ring, row, witness=None):
    return json.loads(_wittkit.vaserstein(ring._ring, _enc(_strs(row)), _opt(witness)))


def swan_towber_complete(ring, row, witness=None):
    return json.loads(_wittkit.swan_towber_complete(ring._ring, _enc(_strs(row)), _opt(witness)))


def koszul_homotopy(ring, row, syzygy, witness=None):
    return json.loads(_wittkit.koszul_homotopy(ring._ring, _enc(_strs(row)), _enc(_strs(syzygy)), _opt(witness)))


def eta(ring, g):
    return json.loads(_wittkit.eta(ring._ring, _mat(g)))


def eta_product_cert(ring, a, b):
    return json.loads(_wittkit.eta_product_cert(ring._ring, _mat(a), _mat(b)))


def symplectic_reduce(ring, g):
    """Returns {"canonical": ..., "certificate": ...}; the certificate proves canonical ~ g."""
    return json.loads(_wittkit.symplectic_reduce(ring._ring, _mat(g)))


def field_equiv_cert(ring, g, g2):
    return json.loads(_wittkit.field_equiv_cert(ring._ring, _mat(g), _mat(g2)))


def verify_equiv(ring, g, g2, cert):
    """Returns {"accepted": bool, "reason": str, "mismatch": [i, j] or None}."""
    return json.loads(_wittkit.verify_equiv(ring._ring, _mat(g), _mat(g2), _enc(cert)))


def groebner_basis(ring, generators):
    """Reduced basis of the ideal generated by ``generators`` and the ring's relations."""
    return _wittkit.groebner_basis(ring._ring, _enc(_strs(generators)))


def run_command(subcommand, ring=None, inputs=(), cert=None, structured=True):
    """Runs one CLI subcommand in-process; returns (exit_code, report_text)."""
    return _wittkit.run_command(subcommand, None if ring is None else str(ring), [str(p) for p in inputs],
                                None if cert is None else str(cert), structured)
