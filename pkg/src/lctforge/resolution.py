"""A_n resolution chains and the arithmetic that lives on them.

A chain is n (-2)-curves E_1..E_n meeting consecutively.  On top of it:
the nonnegativity systems 2a_j - (neighbors) >= 0 bounding strict
transform coefficients, the coefficient formula along a tower of smooth
blow-ups, and exact pairing of classes pi*(-k K) + sum e_i E_i.
"""

from dataclasses import dataclass
from fractions import Fraction

from .linprog import Infeasible, LinearProgram, Optimal, lp_optimize


class ResolutionChain:
    """Chain of n (-2)-curves: E_i^2 = -2, E_i.E_{i+1} = 1, rest 0."""

    def __init__(self, n):
        if n < 1:
            raise ValueError("chain length must be at least 1")
        self.n = n

    def entry(self, i, j):
        """Intersection E_i.E_j with 1-based indices."""
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise ValueError(f"index out of range for A_{self.n}")
        if i == j:
            return Fraction(-2)
        if abs(i - j) == 1:
            return Fraction(1)
        return Fraction(0)

    def matrix(self):
        return [
            [self.entry(i, j) for j in range(1, self.n + 1)]
            for i in range(1, self.n + 1)
        ]

    def __repr__(self):
        return f"ResolutionChain(A_{self.n})"


def an_chain(n):
    return ResolutionChain(n)


class DuValInfeasibleError(Exception):
    """The coefficient system has no solution; carries the offending
    constraint rows so the caller can see what clashed."""

    def __init__(self, constraints):
        self.constraints = tuple(constraints)
        rows = "; ".join(
            " ".join(str(c) for c in coeffs) + f" {rel} {bound}"
            for coeffs, rel, bound in self.constraints
        )
        super().__init__(f"infeasible coefficient system: {rows}")


def du_val_coefficient_bounds(chain, extra=()):
    """Exact per-variable maxima of a_1..a_n subject to the chain
    inequalities 2a_j - (neighbors) >= 0, a_j >= 0, and extra rows."""
    n = chain.n
    constraints = []
    for j in range(n):
        row = [Fraction(0)] * n
        row[j] = Fraction(2)
        if j > 0:
            row[j - 1] = Fraction(-1)
        if j + 1 < n:
            row[j + 1] = Fraction(-1)
        constraints.append((row, ">=", Fraction(0)))
    for j in range(n):
        row = [Fraction(0)] * n
        row[j] = Fraction(1)
        constraints.append((row, ">=", Fraction(0)))
    for coeffs, rel, bound in extra:
        coeffs = [Fraction(c) for c in coeffs]
        if len(coeffs) != n:
            raise ValueError(
                f"extra constraint has {len(coeffs)} coefficients, "
                f"expected {n}"
            )
        constraints.append((coeffs, rel, Fraction(bound)))
    maxima = []
    for i in range(n):
        objective = [Fraction(0)] * n
        objective[i] = Fraction(1)
        lp = LinearProgram(n, objective, "maximize", constraints)
        result = lp_optimize(lp)
        if isinstance(result, Infeasible):
            raise DuValInfeasibleError(constraints)
        if not isinstance(result, Optimal):
            raise ValueError(
                f"a_{i + 1} is unbounded above; add a cap constraint"
            )
        maxima.append(result.value)
    return maxima


@dataclass(frozen=True)
class TowerInput:
    a1: Fraction
    a2: Fraction
    m: tuple

    def __post_init__(self):
        object.__setattr__(self, "a1", Fraction(self.a1))
        object.__setattr__(self, "a2", Fraction(self.a2))
        ms = tuple(Fraction(v) for v in self.m)
        if any(v < 0 for v in ms):
            raise ValueError("multiplicities must be nonnegative")
        object.__setattr__(self, "m", ms)


def tower_coefficients(t, n):
    """Exceptional coefficients along a tower of n blow-ups.

    Entry i (1-based) is a1 + i*a2 - i + m_0 + ... + m_{i-1}, paired
    with a flag recording whether it lies in [0, 1].
    """
    if n < 1:
        raise ValueError("need at least one blow-up")
    if len(t.m) < n:
        raise ValueError(
            f"need {n} multiplicities, got {len(t.m)}"
        )
    out = []
    acc = Fraction(0)
    for i in range(1, n + 1):
        acc += t.m[i - 1]
        coeff = t.a1 + i * t.a2 - i + acc
        out.append((coeff, Fraction(0) <= coeff <= Fraction(1)))
    return out


@dataclass(frozen=True)
class ResClass:
    """pi*(-k K) + sum e_i E_i on a resolution with ambient K^2 = ksq."""

    k: Fraction
    ksq: Fraction
    e: tuple

    def __post_init__(self):
        object.__setattr__(self, "k", Fraction(self.k))
        object.__setattr__(self, "ksq", Fraction(self.ksq))
        object.__setattr__(self, "e", tuple(Fraction(v) for v in self.e))


def resolution_pairing(c1, c2, chain):
    """Exact pairing: pullbacks meet nothing exceptional, so the value
    is k1*k2*K^2 plus the chain form on the exceptional coefficients."""
    if len(c1.e) != chain.n or len(c2.e) != chain.n:
        raise ValueError(
            f"class lengths {len(c1.e)}, {len(c2.e)} do not match A_{chain.n}"
        )
    if c1.ksq != c2.ksq:
        raise ValueError("classes carry different ambient K^2 values")
    total = c1.k * c2.k * c1.ksq
    for i in range(chain.n):
        for j in range(chain.n):
            mij = chain.entry(i + 1, j + 1)
            if mij:
                total += c1.e[i] * c2.e[j] * mij
    return total
