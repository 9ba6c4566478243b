"""
Enumerators and Bounds Application

- enumerators: per-pair and aggregate weight distributions of unions of
  stabilizer codes, Krawtchouk polynomials, MacWilliams and shadow transforms
- simplex:     exact rational phase-one simplex with Farkas certificates
- lp:          the hybrid linear program over symmetrized pair classes,
               feasibility decisions and (K, M) sweeps

All values are Fractions; nothing is rounded.
"""
