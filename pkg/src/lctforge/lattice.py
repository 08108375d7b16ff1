"""Blow-up Picard lattices, an untwisting involution, and orbit data.

The lattice is Z H + Z E_1 + ... + Z E_k with H^2 = 1, E_i^2 = -1 and
everything else orthogonal.  The involution implemented here acts on
the rank-2 sublattice spanned by H and E = E_1 + ... + E_6 of a six
point blow-up, by H -> 5H - 2E and E -> 12H - 5E; composing a mobile
system with it rescales its degree invariant mu and the multiplicity
at the distinguished orbit, which is what ``untwist`` computes.

Group orbit minima are shipped as a small literal table with sources;
nothing here computes orbits.  For callers who have explicit matrix
generators, ``check_matrix_invariance`` tests polynomial invariance
exactly.
"""

from dataclasses import dataclass
from fractions import Fraction

from .rational import rat_str
from .sparsepoly import SparsePoly


class PicClass:
    """h*H + sum e_i*E_i in the blow-up lattice."""

    def __init__(self, h, e):
        self.h = Fraction(h)
        self.e = tuple(Fraction(v) for v in e)

    def dot(self, other):
        if len(self.e) != len(other.e):
            raise ValueError(
                f"rank mismatch: {len(self.e)} vs {len(other.e)} "
                "exceptional classes"
            )
        return self.h * other.h - sum(
            a * b for a, b in zip(self.e, other.e)
        )

    def __eq__(self, other):
        if not isinstance(other, PicClass):
            return NotImplemented
        return self.h == other.h and self.e == other.e

    def __hash__(self):
        return hash((self.h, self.e))

    def __repr__(self):
        return f"PicClass({rat_str(self.h)}, {self.e})"


def apply_involution(c):
    """The untwisting involution on span(H, E1+...+E6).

    Classes with unequal exceptional coefficients do not lie in that
    sublattice and are rejected.
    """
    if len(c.e) != 6:
        raise ValueError(
            f"involution lives on a 6-point blow-up, class has {len(c.e)}"
        )
    s = c.e[0]
    if any(v != s for v in c.e):
        raise ValueError(
            "class is outside span(H, E): exceptional coefficients differ"
        )
    # H -> 5H - 2E, E -> 12H - 5E  (E = E1+...+E6)
    h = 5 * c.h + 12 * s
    t = -(2 * c.h + 5 * s)
    return PicClass(h, (t,) * 6)


class SingularUntwistError(Exception):
    pass


def untwist(mu, mult):
    """Degree invariant and orbit multiplicity after one untwist.

    mu' = 3 / (15/mu - 12*mult),  mult' = 6/mu - 5*mult.
    """
    mu, mult = Fraction(mu), Fraction(mult)
    if mu <= 0:
        raise ValueError("mu must be positive")
    den = 15 / mu - 12 * mult
    if den <= 0:
        raise SingularUntwistError(
            f"15/mu - 12*mult = {rat_str(den)} is not positive"
        )
    return (3 / den, 6 / mu - 5 * mult)


def pukhlikov_bound(sigma0, sigma1, c, form):
    """The two quadratic multiplicity bounds from the path-count setup."""
    sigma0, sigma1, c = Fraction(sigma0), Fraction(sigma1), Fraction(c)
    num = (2 * sigma0 + sigma1 - c) ** 2
    if form == "with_sigma0":
        if sigma0 == 0:
            raise ValueError("with_sigma0 form needs sigma0 != 0")
        return num / ((sigma0 + sigma1) * sigma0)
    if form == "without_sigma0":
        if sigma0 + sigma1 == 0:
            raise ValueError("without_sigma0 form needs sigma0+sigma1 != 0")
        return num / (sigma0 + sigma1)
    raise ValueError(
        f"unknown form {form!r} (want 'with_sigma0' or 'without_sigma0')"
    )


# ------------------------------------------------------------- orbit data


@dataclass(frozen=True)
class OrbitDatum:
    group: str
    space: str
    min_orbit: int
    known_orbit_sizes: frozenset
    source: str


_ORBIT_TABLE = {
    ("A5", "P1"): OrbitDatum(
        "A5", "P1", 12, frozenset({12, 20, 30}),
        "icosahedron: vertex, face and edge orbits (classical; "
        "Klein 1884)",
    ),
    ("A5", "P2"): OrbitDatum(
        "A5", "P2", 6, frozenset({6}),
        "icosahedral plane action; six-point orbit of the invariant "
        "conic pencil (Springer 1977)",
    ),
    ("A5", "conic"): OrbitDatum(
        "A5", "conic", 12, frozenset({12, 20, 30}),
        "invariant conic carries the P1 action (Springer 1977)",
    ),
    ("A6", "P2"): OrbitDatum(
        "A6", "P2", 12, frozenset({12}),
        "Valentiner plane action (Yau-Yu 1993)",
    ),
    ("PSL(2,7)", "P2"): OrbitDatum(
        "PSL(2,7)", "P2", 12, frozenset({12}),
        "Klein quartic plane action (Springer 1977; Yau-Yu 1993)",
    ),
    ("A5", "quintic del Pezzo"): OrbitDatum(
        "A5", "quintic del Pezzo", 6, frozenset({6}),
        "point stabilizers of order at most 10 force orbits of at "
        "least six points",
    ),
}


def min_orbit_size(group, space):
    """Orbit datum (minimal size plus the known orbit sizes) for a
    shipped (group, space) pair."""
    try:
        return _ORBIT_TABLE[(group, space)]
    except KeyError:
        known = ", ".join(
            f"({g}, {s})" for g, s in sorted(_ORBIT_TABLE)
        )
        raise ValueError(
            f"no orbit datum for ({group}, {space}); shipped pairs: {known}"
        ) from None


def superrigidity_orbit_test(k_squared, min_orbit):
    """Sufficient criterion: every orbit at least as big as K^2."""
    k_squared = Fraction(k_squared)
    if k_squared <= 0:
        raise ValueError("K^2 must be positive")
    return Fraction(min_orbit) >= k_squared


def check_matrix_invariance(matrix, poly):
    """Exact test that poly(M x) = poly(x) for a rational square matrix.

    The matrix is a list of rows acting on the variables; correctness
    of the matrix as a group element is the caller's business.
    """
    n = poly.arity
    rows = [[Fraction(v) for v in row] for row in matrix]
    if len(rows) != n or any(len(r) != n for r in rows):
        raise ValueError(f"need a {n}x{n} matrix for arity {n}")
    images = []
    for i in range(n):
        img = SparsePoly(n)
        for j in range(n):
            if rows[i][j]:
                img = img + rows[i][j] * SparsePoly.variable(n, j)
        images.append(img)
    out = SparsePoly(n)
    for expo, coeff in poly.terms.items():
        term = SparsePoly.constant(n, coeff)
        for var, power in enumerate(expo):
            if power:
                term = term * images[var] ** power
        out = out + term
    return out == poly
