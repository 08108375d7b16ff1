"""Local inequality machinery for log canonical threshold arguments.

The centerpiece is a six-parameter family of hypotheses (A, B, M, N,
alpha, beta) under which two multiplicity thresholds M + A*a1 - a2 and
N + B*a2 - a1 control local non-log-canonicity at a smooth point.  This
module checks the hypotheses exactly, derives the standard consequences,
solves for the (alpha, beta) vertex used in applications, and evaluates
the classical multiplicity bounds that accompany these arguments.
"""

from dataclasses import dataclass
from fractions import Fraction

from .rational import rat_str


@dataclass(frozen=True)
class ThmIParams:
    A: Fraction
    B: Fraction
    M: Fraction
    N: Fraction
    alpha: Fraction
    beta: Fraction

    def __post_init__(self):
        for name in ("A", "B", "M", "N", "alpha", "beta"):
            value = Fraction(getattr(self, name))
            if value < 0:
                raise ValueError(f"{name} must be nonnegative, got {value}")
            object.__setattr__(self, name, value)


@dataclass(frozen=True)
class Check:
    name: str
    lhs: Fraction
    relation: str
    rhs: Fraction
    holds: bool


@dataclass(frozen=True)
class HypothesisReport:
    checks: tuple
    overall: bool


def _report(checks):
    return HypothesisReport(tuple(checks), all(c.holds for c in checks))


# ---------------------------------------------------------------- hypotheses


def check_theorem_I_hypotheses(p):
    """The four hypothesis bullets, with the disjunction as one check."""
    A, B, M, N = p.A, p.B, p.M, p.N
    al, be = p.alpha, p.beta
    checks = []

    lhs = A * (B - 1)
    rhs = max(M, N)
    checks.append(Check(
        "A*(B-1) >= 1 >= max(M,N)",
        lhs, ">= 1 >=", rhs,
        lhs >= 1 and 1 >= rhs,
    ))

    lhs = al * (A + M - 1)
    rhs = A * A * (B + N - 1) * be
    checks.append(Check(
        "alpha*(A+M-1) >= A^2*(B+N-1)*beta",
        lhs, ">=", rhs, lhs >= rhs,
    ))

    lhs = al * (1 - M) + A * be
    checks.append(Check(
        "alpha*(1-M) + A*beta >= A",
        lhs, ">=", A, lhs >= A,
    ))

    first = 2 * M + A * N
    second = al * (B + 1 - M * B - N) + be * (A + 1 - A * N - M)
    goal = A * B - 1
    name = ("2*M+A*N <= 2 or "
            "alpha*(B+1-M*B-N) + beta*(A+1-A*N-M) >= A*B-1")
    if first <= 2:
        checks.append(Check(name, first, "<=", Fraction(2), True))
    elif second >= goal:
        checks.append(Check(name, second, ">=", goal, True))
    else:
        checks.append(Check(name, first, "<=", Fraction(2), False))

    return _report(checks)


def implied_inequalities_lemma20(p):
    """Six consequences of the hypothesis set.

    All of them must hold whenever check_theorem_I_hypotheses passes;
    a false entry in the returned report is a genuine violation of the
    lemma, not a property of the input.
    """
    if not check_theorem_I_hypotheses(p).overall:
        raise ValueError(
            "implied_inequalities_lemma20 needs parameters that pass "
            "check_theorem_I_hypotheses"
        )
    A, B, M, N = p.A, p.B, p.M, p.N
    al, be = p.alpha, p.beta
    one = Fraction(1)
    rows = [
        ("B > 1", B, ">", one),
        ("A+M >= 1", A + M, ">=", one),
        (
            "alpha*(B+1-M*B-N) + beta*(A+1-A*N-M) >= A*B-1",
            al * (B + 1 - M * B - N) + be * (A + 1 - A * N - M),
            ">=",
            A * B - 1,
        ),
        ("beta*(1-N) + B*alpha >= B", be * (1 - N) + B * al, ">=", B),
        (
            "alpha*(2-M)/(A+1) + beta*(2-N)/(B+1) >= 1",
            al * (2 - M) / (A + 1) + be * (2 - N) / (B + 1),
            ">=",
            one,
        ),
        (
            "alpha*(2-M)*B + beta*(1-N)*(A+1) >= B*(A+1)",
            al * (2 - M) * B + be * (1 - N) * (A + 1),
            ">=",
            B * (A + 1),
        ),
    ]
    checks = []
    for name, lhs, rel, rhs in rows:
        holds = lhs > rhs if rel == ">" else lhs >= rhs
        checks.append(Check(name, lhs, rel, rhs, holds))
    return _report(checks)


# ---------------------------------------------------------------- verdicts


@dataclass(frozen=True)
class Refuted:
    pass


@dataclass(frozen=True)
class Inconclusive:
    pass


@dataclass(frozen=True)
class NotApplicable:
    reason: str


def theorem_I_refute(p, a1, a2, m1, m2):
    """Test whether both multiplicity conclusions fail, i.e. whether a
    hypothetical non-log-canonical center at the smooth point is refuted.

    a1, a2 are the boundary coefficients along the two curves; m1, m2
    are the exact local pairing values a certificate asserts for
    mult(D.curve1) and mult(D.curve2).
    """
    a1, a2, m1, m2 = Fraction(a1), Fraction(a2), Fraction(m1), Fraction(m2)
    if a1 < 0 or a2 < 0:
        raise ValueError("a1 and a2 must be nonnegative")
    report = check_theorem_I_hypotheses(p)
    if not report.overall:
        bad = [c.name for c in report.checks if not c.holds]
        return NotApplicable("hypotheses fail: " + "; ".join(bad))
    gate = p.alpha * a1 + p.beta * a2
    if gate > 1:
        return NotApplicable(
            f"alpha*a1 + beta*a2 = {rat_str(gate)} > 1"
        )
    t1 = p.M + p.A * a1 - a2
    t2 = p.N + p.B * a2 - a1
    if m1 <= t1 and m2 <= t2:
        return Refuted()
    return Inconclusive()


@dataclass(frozen=True)
class Infeasible:
    reason: str


def vertex_alpha_beta(A, B, M, N):
    """Solve for (alpha, beta) making hypothesis checks 2 and 3 exact
    equalities, then validate the full hypothesis set.

    Returns (alpha, beta) or Infeasible(reason).
    """
    A, B, M, N = Fraction(A), Fraction(B), Fraction(M), Fraction(N)
    for name, value in (("A", A), ("B", B), ("M", M), ("N", N)):
        if value < 0:
            raise ValueError(f"{name} must be nonnegative, got {value}")
    if M >= 1:
        return Infeasible(f"need M < 1, got M = {rat_str(M)}")
    if A + M <= 1:
        return Infeasible(f"need A+M > 1, got A+M = {rat_str(A + M)}")
    # alpha*(A+M-1) - A^2*(B+N-1)*beta = 0
    # alpha*(1-M)   + A*beta           = A
    det = (A + M - 1) * A + A * A * (B + N - 1) * (1 - M)
    if det == 0:
        return Infeasible("singular 2x2 system (determinant 0)")
    alpha = A ** 3 * (B + N - 1) / det
    beta = A * (A + M - 1) / det
    if alpha < 0 or beta < 0:
        return Infeasible(
            f"solution has a negative entry: alpha = {rat_str(alpha)}, "
            f"beta = {rat_str(beta)}"
        )
    report = check_theorem_I_hypotheses(ThmIParams(A, B, M, N, alpha, beta))
    if not report.overall:
        bad = [c.name for c in report.checks if not c.holds]
        return Infeasible("hypotheses fail at vertex: " + "; ".join(bad))
    return (alpha, beta)


# ---------------------------------------------------------------- bounds


def corti_bound(a1, a2, eps):
    """Multiplicity bound for a mobile-times-mobile local intersection."""
    a1, a2, eps = Fraction(a1), Fraction(a2), Fraction(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    if a1 >= 0 or a2 >= 0:
        return 4 * (1 - a1) * (1 - a2) / (eps * eps)
    return 4 * (1 - a1 - a2) / (eps * eps)


@dataclass(frozen=True)
class EqualityProfile:
    kind: str
    required_multiplicity: Fraction


def mobile_bound_thmII(a1, eps):
    """Mobile self-intersection bound, plus the equality profiles.

    The profiles describe the only two shapes an equality case can
    take; they are returned for inspection, never asserted.
    """
    a1, eps = Fraction(a1), Fraction(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    if a1 >= Fraction(-1, 2):
        bound = (1 - 2 * a1) / (eps * eps)
    else:
        bound = -4 * a1 / (eps * eps)
    profiles = []
    if a1 < 0 and a1.denominator == 1:
        profiles.append(
            EqualityProfile("NegativeIntegerCoefficient", 2 / eps)
        )
    if a1 == 0:
        profiles.append(EqualityProfile("ZeroCoefficient", 1 / eps))
    return (bound, profiles)


def adjunction_refute(pairing, threshold):
    """Adjunction forces pairing > threshold at a non-log-canonical
    center on the curve; Refuted when that strict inequality fails."""
    pairing, threshold = Fraction(pairing), Fraction(threshold)
    if pairing <= threshold:
        return Refuted()
    return Inconclusive()


def lct_monomial(exponents, form):
    """Log canonical threshold of a diagonal form or a monomial product."""
    exps = [int(m) for m in exponents]
    if not exps:
        raise ValueError("need at least one exponent")
    if any(m <= 0 for m in exps):
        raise ValueError("exponents must be positive integers")
    if form == "diagonal":
        return min(Fraction(1), sum(Fraction(1, m) for m in exps))
    if form == "product":
        return min(Fraction(1, m) for m in exps)
    raise ValueError(f"unknown form {form!r} (want 'diagonal' or 'product')")
