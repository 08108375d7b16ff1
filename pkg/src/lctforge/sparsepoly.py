"""Sparse multivariate polynomials with exact rational coefficients.

Terms live in a dict mapping exponent tuples to nonzero Fractions.  The
arity is fixed per polynomial; zero coefficients are dropped on sight so
equality of dicts is equality of polynomials.  Reporting (repr, equality
witnesses, degree profiles) uses graded lexicographic order.
"""

from dataclasses import dataclass
from fractions import Fraction

from .rational import rat_str


def _gradedlex_key(expo):
    return (sum(expo), expo)


class SparsePoly:
    def __init__(self, arity, terms=None):
        if arity < 1:
            raise ValueError("arity must be at least 1")
        self.arity = arity
        self.terms = {}
        if terms:
            for expo, coeff in terms.items():
                expo = tuple(int(e) for e in expo)
                if len(expo) != arity:
                    raise ValueError(
                        f"exponent {expo} has length {len(expo)}, expected {arity}"
                    )
                if any(e < 0 for e in expo):
                    raise ValueError(f"negative exponent in {expo}")
                coeff = Fraction(coeff)
                if coeff != 0:
                    self.terms[expo] = self.terms.get(expo, Fraction(0)) + coeff
                    if self.terms[expo] == 0:
                        del self.terms[expo]

    @classmethod
    def zero(cls, arity):
        return cls(arity)

    @classmethod
    def constant(cls, arity, value):
        return cls(arity, {(0,) * arity: Fraction(value)})

    @classmethod
    def monomial(cls, arity, coeff, expo):
        return cls(arity, {tuple(expo): Fraction(coeff)})

    @classmethod
    def variable(cls, arity, index):
        expo = [0] * arity
        expo[index] = 1
        return cls(arity, {tuple(expo): Fraction(1)})

    def is_zero(self):
        return not self.terms

    def _check_arity(self, other):
        if self.arity != other.arity:
            raise ValueError(
                f"arity mismatch: {self.arity} vs {other.arity}"
            )

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SparsePoly.constant(self.arity, other)
        self._check_arity(other)
        out = dict(self.terms)
        for expo, c in other.terms.items():
            s = out.get(expo, Fraction(0)) + c
            if s == 0:
                out.pop(expo, None)
            else:
                out[expo] = s
        return SparsePoly(self.arity, out)

    __radd__ = __add__

    def __neg__(self):
        return SparsePoly(self.arity, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SparsePoly.constant(self.arity, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return SparsePoly(
                self.arity, {e: c * v for e, v in self.terms.items()}
            )
        self._check_arity(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                expo = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(expo, Fraction(0)) + c1 * c2
                if s == 0:
                    out.pop(expo, None)
                else:
                    out[expo] = s
        return SparsePoly(self.arity, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = SparsePoly.constant(self.arity, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self.arity == other.arity and self.terms == other.terms

    def __hash__(self):
        return hash((self.arity, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return "SparsePoly(0)"
        bits = []
        for expo in sorted(self.terms, key=_gradedlex_key, reverse=True):
            coeff = self.terms[expo]
            mono = "*".join(
                f"x{i}^{e}" if e > 1 else f"x{i}"
                for i, e in enumerate(expo)
                if e
            )
            if mono:
                bits.append(f"{rat_str(coeff)}*{mono}")
            else:
                bits.append(rat_str(coeff))
        return "SparsePoly(" + " + ".join(bits) + ")"


@dataclass(frozen=True)
class Equal:
    pass


@dataclass(frozen=True)
class Unequal:
    witness: tuple


def poly_equal(lhs, rhs):
    """Compare two polynomials term by term.

    Returns Equal() or Unequal(witness) where the witness is the
    graded-lex greatest exponent whose coefficients differ, i.e. the
    leading monomial of the difference.
    """
    if lhs.arity != rhs.arity:
        raise ValueError(f"arity mismatch: {lhs.arity} vs {rhs.arity}")
    diff = lhs - rhs
    if diff.is_zero():
        return Equal()
    witness = max(diff.terms, key=_gradedlex_key)
    return Unequal(witness)


def weighted_degree_profile(poly, weights):
    """Set of distinct weighted degrees over the terms of poly."""
    weights = tuple(int(w) for w in weights)
    if len(weights) != poly.arity:
        raise ValueError(
            f"{len(weights)} weights for arity {poly.arity}"
        )
    return {sum(w * e for w, e in zip(weights, expo)) for expo in poly.terms}
