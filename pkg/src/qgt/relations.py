"""Defining relations of the quantum group, as residues over any generator
context: a `gens` object exposing E(i), F(i), K(i, e), and scalar(c), whose
values multiply, add, and subtract in some target algebra.

Used to verify representations and embeddings in other coordinate systems.
"""
from __future__ import annotations

from qgt.scalar import QMQI, QScalar


def defining_relations(gens, N):
    """Yield (name, residue) pairs; each residue must be zero."""
    qmqi_inv = gens.scalar(QMQI.inv())
    for i in range(1, N + 1):
        yield ("K[%d]*K[%d]^-1 = 1" % (i, i), gens.K(i, 1) * gens.K(i, -1) - gens.K(i, 0))
        for j in range(i + 1, N + 1):
            yield (
                "[K[%d],K[%d]] = 0" % (i, j),
                gens.K(i) * gens.K(j) - gens.K(j) * gens.K(i),
            )
    for i in range(1, N + 1):
        for j in range(1, N):
            c = (i == j) - (i == j + 1)
            yield (
                "K[%d]E[%d] = q^%d E[%d]K[%d]" % (i, j, c, j, i),
                gens.K(i) * gens.E(j) - (gens.E(j) * gens.K(i)) * QScalar.q_power(c),
            )
            yield (
                "K[%d]F[%d] = q^%d F[%d]K[%d]" % (i, j, -c, j, i),
                gens.K(i) * gens.F(j) - (gens.F(j) * gens.K(i)) * QScalar.q_power(-c),
            )
    for i in range(1, N):
        for j in range(1, N):
            lhs = gens.E(i) * gens.F(j) - gens.F(j) * gens.E(i)
            if i == j:
                cartan = gens.K(i) * gens.K(i + 1, -1) - gens.K(i + 1) * gens.K(i, -1)
                yield ("[E[%d],F[%d]] = cartan" % (i, j), lhs - qmqi_inv * cartan)
            else:
                yield ("[E[%d],F[%d]] = 0" % (i, j), lhs)
    for i in range(1, N):
        for j in range(1, N):
            if abs(i - j) > 1:
                yield (
                    "[E[%d],E[%d]] = 0" % (i, j),
                    gens.E(i) * gens.E(j) - gens.E(j) * gens.E(i),
                )
                yield (
                    "[F[%d],F[%d]] = 0" % (i, j),
                    gens.F(i) * gens.F(j) - gens.F(j) * gens.F(i),
                )
            elif abs(i - j) == 1:
                yield ("serre E[%d]E[%d]" % (i, j), _serre(gens.E(i), gens.E(j)))
                yield ("serre F[%d]F[%d]" % (i, j), _serre(gens.F(i), gens.F(j)))


def _serre(a, b):
    qpqi = QScalar.q_power(1) + QScalar.q_power(-1)
    return a * a * b - (a * b * a) * qpqi + b * a * a
