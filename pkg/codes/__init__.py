"""
Hybrid Stabilizer Codes Application

Exact GF(2) machinery for codes that protect quantum and classical
information together.

MODULES:
- pauli:      n-qubit Pauli operators in packed symplectic form
- gf2:        bit-packed linear algebra over GF(2)
- stabilizer: signed stabilizer groups, centralizers, logical operators,
              intersections and the minimum-weight scan
- hybrid:     hybrid stabilizer codes, unions of stabilizer codes,
              detectability and distance
- families:   the distance-2 family, Gottesman codes, seed codes and
              the pasting construction

CONVENTIONS:
  Qubit q is bit q of the X and Z masks; the leftmost character of a
  Pauli string is qubit 0. A Pauli operator is i^phase X^x Z^z, so Y
  carries one unit of phase.

USAGE:
    from codes.pauli import pauli_from_string
    from codes.hybrid import HybridCode, distance

    H = HybridCode.from_strings(['XXX', 'ZZI'], ['IIX'])
    distance(H)
"""
