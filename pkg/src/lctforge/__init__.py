"""Exact-arithmetic verification toolkit for log canonical threshold
bounds on orbifold del Pezzo surfaces.

Everything computes over Fraction; nothing here ever goes through a
float.  The subpackages split roughly as:

- ``rational``    small helpers for parsing/printing fractions
- ``linprog``     exact simplex over the rationals
- ``sparsepoly``  multivariate polynomials with Fraction coefficients
- ``localineq``   local inequality engines (hypothesis checks,
                  multiplicity refutations, classical bounds)
- ``surfaces``    weighted hypersurface ledgers and their consistency
                  audit
- ``resolution``  du Val resolution chains and coefficient bounds
- ``lattice``     Picard-lattice involutions, untwisting, orbit data
- ``polyid``      polynomial identity files
- ``certs``       the certificate language and its checkers
- ``cli``         the ``lctforge`` command line tool
"""

from pathlib import Path


def data_path(*parts):
    """Path to a bundled data file, e.g. data_path('ledgers',
    'wps-11-21-29-37-d95.ledger')."""
    return Path(__file__).parent / "data" / Path(*parts)


__version__ = "0.1.0"
