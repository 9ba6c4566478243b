"""
hybridqec: hybrid quantum-classical stabilizer codes.

Apps:
- codes:  Pauli algebra, stabilizer groups, hybrid codes, code families
- oracle: exact dense-matrix cross-checks (small n)
- bounds: weight enumerators and linear-programming bounds
"""

__version__ = '1.0.0'
