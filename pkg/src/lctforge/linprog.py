"""Exact linear programming over the rationals.

Small dense simplex with Bland's rule, meant for the tiny systems that
show up in du Val coefficient bounds and case analyses (a handful of
variables, a handful of rows).  Variables are free: any sign bound you
want must be written as an explicit constraint row.  All arithmetic is
Fraction arithmetic, so results are exact and deterministic.

When the optimal face is not a single point, ``lp_optimize`` returns the
lexicographically smallest optimizer, found by re-solving with the
objective pinned and each coordinate minimized in turn.  (On an optimal
face that is unbounded in some coordinate direction the refinement keeps
the incumbent value for that coordinate; the shipped uses are all
bounded.)
"""

from dataclasses import dataclass
from fractions import Fraction

RELATIONS = ("<=", ">=", "=")


class LinearProgram:
    """max/min of a linear objective subject to linear rows.

    constraints is a list of (coeffs, relation, bound) triples with
    relation one of '<=', '>=', '='.  No implicit bounds of any kind.
    """

    def __init__(self, n_vars, objective, sense, constraints):
        if n_vars < 0:
            raise ValueError("n_vars must be nonnegative")
        if sense not in ("maximize", "minimize"):
            raise ValueError(f"unknown sense {sense!r}")
        objective = [Fraction(c) for c in objective]
        if len(objective) != n_vars:
            raise ValueError(
                f"objective has {len(objective)} coefficients, expected {n_vars}"
            )
        rows = []
        for k, (coeffs, rel, bound) in enumerate(constraints):
            coeffs = [Fraction(c) for c in coeffs]
            if len(coeffs) != n_vars:
                raise ValueError(
                    f"constraint {k} has {len(coeffs)} coefficients, expected {n_vars}"
                )
            if rel not in RELATIONS:
                raise ValueError(f"constraint {k}: unknown relation {rel!r}")
            rows.append((coeffs, rel, Fraction(bound)))
        self.n_vars = n_vars
        self.objective = objective
        self.sense = sense
        self.constraints = rows

    def __repr__(self):
        return (
            f"LinearProgram(n_vars={self.n_vars}, sense={self.sense!r}, "
            f"{len(self.constraints)} constraints)"
        )


@dataclass(frozen=True)
class Optimal:
    value: Fraction
    witness: tuple


@dataclass(frozen=True)
class Infeasible:
    pass


@dataclass(frozen=True)
class Unbounded:
    pass


def _pivot(tab, basis, row, col):
    piv = tab[row][col]
    tab[row] = [x / piv for x in tab[row]]
    for i in range(len(tab)):
        if i != row and tab[i][col] != 0:
            f = tab[i][col]
            tab[i] = [a - f * b for a, b in zip(tab[i], tab[row])]
    basis[row] = col


def _run_simplex(tab, basis, cost, banned=()):
    """Maximize cost over the canonical tableau in place (Bland's rule)."""
    m = len(tab)
    ncols = len(cost)
    while True:
        cb = [cost[b] for b in basis]
        entering = -1
        for j in range(ncols):
            if j in banned:
                continue
            r = cost[j] - sum(cb[i] * tab[i][j] for i in range(m))
            if r > 0:
                entering = j
                break
        if entering < 0:
            return "optimal"
        leave = -1
        best = None
        for i in range(m):
            if tab[i][entering] > 0:
                ratio = tab[i][-1] / tab[i][entering]
                if best is None or ratio < best or (
                    ratio == best and basis[i] < basis[leave]
                ):
                    best = ratio
                    leave = i
        if leave < 0:
            return "unbounded"
        _pivot(tab, basis, leave, entering)


def _solve_max(n, objective, constraints):
    """Raw two-phase solve of max objective; free vars split as u - v.

    Returns ('optimal', value, witness) / ('infeasible',) / ('unbounded',).
    """
    rows = []
    for coeffs, rel, bound in constraints:
        row = [Fraction(0)] * (2 * n)
        for i, c in enumerate(coeffs):
            row[i] = c
            row[n + i] = -c
        if bound < 0:
            row = [-x for x in row]
            bound = -bound
            rel = {"<=": ">=", ">=": "<=", "=": "="}[rel]
        rows.append((row, rel, bound))
    # columns: u_0..u_{n-1}, v_0..v_{n-1}, then one or two extra columns
    # per row (slack/surplus and possibly an artificial)
    tab = []
    basis = []
    art_set = set()
    n_extra = 0
    for row, rel, bound in rows:
        line = list(row) + [Fraction(0)] * n_extra
        if rel == "<=":
            line.append(Fraction(1))
            n_extra += 1
            basis.append(2 * n + n_extra - 1)
        elif rel == ">=":
            line.append(Fraction(-1))
            line.append(Fraction(1))
            n_extra += 2
            art_set.add(2 * n + n_extra - 1)
            basis.append(2 * n + n_extra - 1)
        else:
            line.append(Fraction(1))
            n_extra += 1
            art_set.add(2 * n + n_extra - 1)
            basis.append(2 * n + n_extra - 1)
        line.append(bound)
        tab.append(line)
    total = 2 * n + n_extra
    for line in tab:
        while len(line) < total + 1:
            line.insert(-1, Fraction(0))
    if art_set:
        cost1 = [Fraction(0)] * total
        for j in art_set:
            cost1[j] = Fraction(-1)
        _run_simplex(tab, basis, cost1)
        worth = sum(tab[i][-1] for i in range(len(tab)) if basis[i] in art_set)
        if worth != 0:
            return ("infeasible",)
        # drive any leftover zero-level artificials out of the basis
        drop_rows = []
        for i in range(len(tab)):
            if basis[i] in art_set:
                for j in range(total):
                    if j not in art_set and tab[i][j] != 0:
                        _pivot(tab, basis, i, j)
                        break
                else:
                    drop_rows.append(i)
        for i in sorted(drop_rows, reverse=True):
            del tab[i]
            del basis[i]
    cost2 = [Fraction(0)] * total
    for i, c in enumerate(objective):
        cost2[i] = c
        cost2[n + i] = -c
    status = _run_simplex(tab, basis, cost2, banned=art_set)
    if status == "unbounded":
        return ("unbounded",)
    point = [Fraction(0)] * total
    for i, b in enumerate(basis):
        point[b] = tab[i][-1]
    witness = tuple(point[i] - point[n + i] for i in range(n))
    value = sum(c * w for c, w in zip(objective, witness))
    return ("optimal", value, witness)


def lp_optimize(lp):
    """Solve lp exactly.  Returns Optimal, Infeasible, or Unbounded."""
    if lp.sense == "maximize":
        obj = lp.objective
    else:
        obj = [-c for c in lp.objective]
    res = _solve_max(lp.n_vars, obj, lp.constraints)
    if res[0] == "infeasible":
        return Infeasible()
    if res[0] == "unbounded":
        return Unbounded()
    _, value_max, witness = res
    value = value_max if lp.sense == "maximize" else -value_max
    # lexicographic refinement: pin the objective, then minimize each
    # coordinate in turn so ties at degenerate vertices break the same
    # way every run
    pinned = list(lp.constraints) + [(lp.objective, "=", value)]
    w = list(witness)
    for i in range(lp.n_vars):
        goal = [Fraction(0)] * lp.n_vars
        goal[i] = Fraction(-1)
        sub = _solve_max(lp.n_vars, goal, pinned)
        if sub[0] == "optimal":
            w[i] = -sub[1]
        fix = [Fraction(0)] * lp.n_vars
        fix[i] = Fraction(1)
        pinned.append((fix, "=", w[i]))
    return Optimal(value, tuple(w))
