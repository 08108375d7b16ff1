"""The certificate language: parse, pretty-print, run.

A certificate is a small text file that re-derives the numeric facts
of one proof step by step:

    cert "quintic surface, six-point orbit"
    # comments run to end of line
    let bound = 10/12
    assert bound < 1
    check orbit(group="A5", space="P2") expect 6

Three statement forms:

    let IDENT = expr
    assert expr REL expr         REL in  ==  <=  <  >=  >
    check NAME(key=value, ...) [expect expr]

Expressions are exact rationals: p/q literals, identifiers bound by
earlier lets, + - * /, parentheses, unary minus.  Check arguments may
also be quoted strings (file names, comma-separated vectors) or bare
words (mode switches like form=diagonal); a bare word that happens to
match a let binding is read as that binding.

Running a certificate never stops early: every step is evaluated and
reported, one line per step, so a broken certificate shows all of its
breakage at once.  The report format is fixed:

    step <n> <PASS|FAIL|ERROR> <description> [= <value>]
    ...
    overall <PASS|FAIL>
"""

from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
import re

from .rational import parse_rat, rat_str
from .localineq import (
    ThmIParams,
    check_theorem_I_hypotheses,
    implied_inequalities_lemma20,
    vertex_alpha_beta,
    theorem_I_refute,
    corti_bound,
    mobile_bound_thmII,
    adjunction_refute,
    lct_monomial,
    Refuted,
    NotApplicable,
    Infeasible as VertexInfeasible,
)
from .linprog import LinearProgram, lp_optimize, Optimal, Infeasible, Unbounded
from .resolution import (
    an_chain,
    du_val_coefficient_bounds,
    DuValInfeasibleError,
    TowerInput,
    tower_coefficients,
    ResClass,
    resolution_pairing,
)
from .lattice import (
    PicClass,
    apply_involution,
    untwist,
    SingularUntwistError,
    pukhlikov_bound,
    min_orbit_size,
    superrigidity_orbit_test,
)
from .surfaces import (
    amplitude,
    parse_ledger,
    ledger_consistency,
    LedgerParseError,
    LedgerGapError,
)
from .sparsepoly import Equal
from .polyid import parse_polyid, run_polyid, PolyIdParseError

RELATIONS = ("==", "<=", "<", ">=", ">")


class CertParseError(Exception):
    def __init__(self, line, column, message):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


# ------------------------------------------------------------------ AST


@dataclass(frozen=True)
class Num:
    value: Fraction

    def __post_init__(self):
        v = Fraction(self.value)
        if v < 0:
            raise ValueError("negative literal; wrap in Neg instead")
        object.__setattr__(self, "value", v)


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Neg:
    operand: object


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object


@dataclass(frozen=True)
class Str:
    value: str


@dataclass(frozen=True)
class LetStmt:
    name: str
    expr: object


@dataclass(frozen=True)
class AssertStmt:
    lhs: object
    relation: str
    rhs: object


@dataclass(frozen=True)
class CheckStmt:
    name: str
    args: tuple  # of (key, Num|Var|Neg|BinOp|Str) pairs, source order
    expect: object  # expression or None


@dataclass(frozen=True)
class Certificate:
    name: str
    steps: tuple


# ---------------------------------------------------------------- parser


class _Cursor:
    def __init__(self, text, lineno):
        self.text = text
        self.lineno = lineno
        self.pos = 0

    def fail(self, message):
        raise CertParseError(self.lineno, self.pos + 1, message)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos] in " \t":
            self.pos += 1

    def at_end(self):
        self.skip_ws()
        return self.pos >= len(self.text)

    def peek(self):
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, s):
        self.skip_ws()
        if self.text.startswith(s, self.pos):
            self.pos += len(s)
            return True
        return False

    def expect(self, s):
        if not self.take(s):
            self.fail(f"expected {s!r}")

    def match(self, pattern, what):
        self.skip_ws()
        m = re.compile(pattern).match(self.text, self.pos)
        if not m:
            self.fail(f"expected {what}")
        self.pos = m.end()
        return m.group(0)

    def ident(self, what="identifier"):
        return self.match(r"[A-Za-z_][A-Za-z0-9_]*", what)

    def string(self):
        self.skip_ws()
        if self.pos >= len(self.text) or self.text[self.pos] != '"':
            self.fail("expected string in double quotes")
        end = self.text.find('"', self.pos + 1)
        if end < 0:
            self.fail("unterminated string")
        value = self.text[self.pos + 1:end]
        self.pos = end + 1
        return value

    # expr := term (('+'|'-') term)*
    # term := factor (('*'|'/') factor)*
    # factor := '-' factor | atom
    # atom := NUMBER | IDENT | '(' expr ')'
    def expr(self):
        value = self.term()
        while True:
            if self.take("+"):
                value = BinOp("+", value, self.term())
            elif self.take("-"):
                value = BinOp("-", value, self.term())
            else:
                return value

    def term(self):
        value = self.factor()
        while True:
            if self.take("*"):
                value = BinOp("*", value, self.factor())
            elif self.take("/"):
                value = BinOp("/", value, self.factor())
            else:
                return value

    def factor(self):
        if self.take("-"):
            return Neg(self.factor())
        return self.atom()

    def atom(self):
        ch = self.peek()
        if ch == "(":
            self.expect("(")
            value = self.expr()
            self.expect(")")
            return value
        if ch.isdigit():
            lit = self.match(r"[0-9]+(?:/[0-9]+)?", "number")
            try:
                return Num(parse_rat(lit))
            except ZeroDivisionError:
                self.fail(f"zero denominator in literal {lit!r}")
        return Var(self.ident("number, identifier or '('"))


def _parse_check(cur):
    name = cur.ident("checker name")
    cur.expect("(")
    args = []
    seen = set()
    while True:
        key = cur.ident("argument name")
        if key in seen:
            cur.fail(f"duplicate argument {key!r}")
        seen.add(key)
        cur.expect("=")
        if cur.peek() == '"':
            value = Str(cur.string())
        else:
            value = cur.expr()
        args.append((key, value))
        if cur.take(","):
            continue
        cur.expect(")")
        break
    expect = None
    save = cur.pos
    if not cur.at_end():
        word = cur.ident("'expect' or end of line")
        if word != "expect":
            cur.pos = save
            cur.fail("expected 'expect' or end of line")
        expect = cur.expr()
    return CheckStmt(name, tuple(args), expect)


def parse_cert(text):
    """Parse certificate text into a Certificate; raises CertParseError."""
    name = None
    steps = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        cur = _Cursor(line, lineno)
        head = cur.ident("statement")
        if name is None:
            if head != "cert":
                cur.pos = 0
                cur.fail("certificate must open with: cert \"<name>\"")
            name = cur.string()
            if not cur.at_end():
                cur.fail("trailing text after certificate name")
            continue
        if head == "cert":
            cur.pos = 0
            cur.fail("duplicate cert line")
        elif head == "let":
            ident = cur.ident("name to bind")
            cur.expect("=")
            value = cur.expr()
            if not cur.at_end():
                cur.fail("trailing text")
            steps.append(LetStmt(ident, value))
        elif head == "assert":
            lhs = cur.expr()
            for rel in RELATIONS:
                if cur.take(rel):
                    break
            else:
                cur.fail("expected one of " + " ".join(RELATIONS))
            rhs = cur.expr()
            if not cur.at_end():
                cur.fail("trailing text")
            steps.append(AssertStmt(lhs, rel, rhs))
        elif head == "check":
            stmt = _parse_check(cur)
            if not cur.at_end():
                cur.fail("trailing text")
            steps.append(stmt)
        else:
            cur.pos = 0
            cur.fail(
                f"unknown statement {head!r} (want let, assert or check)"
            )
    if name is None:
        raise CertParseError(1, 1, "empty file: no cert line")
    return Certificate(name, tuple(steps))


# ---------------------------------------------------- pretty printing


def _prec(node):
    if isinstance(node, BinOp):
        return 1 if node.op in "+-" else 2
    return 3


def expr_str(node):
    """Canonical text for an expression; parses back to the same tree."""
    if isinstance(node, Num):
        return rat_str(node.value)
    if isinstance(node, Var):
        return node.name
    if isinstance(node, Neg):
        inner = expr_str(node.operand)
        if isinstance(node.operand, BinOp):
            inner = f"({inner})"
        return "-" + inner
    if isinstance(node, BinOp):
        left = expr_str(node.left)
        if _prec(node.left) < _prec(node):
            left = f"({left})"
        right = expr_str(node.right)
        if _prec(node.right) <= _prec(node):
            right = f"({right})"
        return f"{left} {node.op} {right}"
    raise ValueError(f"not an expression node: {node!r}")


def _stmt_str(stmt):
    if isinstance(stmt, LetStmt):
        return f"let {stmt.name} = {expr_str(stmt.expr)}"
    if isinstance(stmt, AssertStmt):
        return (
            f"assert {expr_str(stmt.lhs)} {stmt.relation} "
            f"{expr_str(stmt.rhs)}"
        )
    if isinstance(stmt, CheckStmt):
        parts = []
        for key, value in stmt.args:
            if isinstance(value, Str):
                parts.append(f'{key}="{value.value}"')
            else:
                parts.append(f"{key}={expr_str(value)}")
        text = f"check {stmt.name}({', '.join(parts)})"
        if stmt.expect is not None:
            text += f" expect {expr_str(stmt.expect)}"
        return text
    raise ValueError(f"not a statement: {stmt!r}")


def cert_str(cert):
    """Canonical text of a certificate; reparsing gives an equal tree."""
    lines = [f'cert "{cert.name}"']
    lines.extend(_stmt_str(s) for s in cert.steps)
    return "\n".join(lines) + "\n"


# ------------------------------------------------------------ evaluation


class _EvalError(Exception):
    pass


def eval_expr(node, env):
    if isinstance(node, Num):
        return node.value
    if isinstance(node, Var):
        if node.name not in env:
            raise _EvalError(f"unbound identifier {node.name!r}")
        return env[node.name]
    if isinstance(node, Neg):
        return -eval_expr(node.operand, env)
    if isinstance(node, BinOp):
        left = eval_expr(node.left, env)
        right = eval_expr(node.right, env)
        if node.op == "+":
            return left + right
        if node.op == "-":
            return left - right
        if node.op == "*":
            return left * right
        if right == 0:
            raise _EvalError("division by zero")
        return left / right
    raise _EvalError(f"cannot evaluate {node!r}")


_REL_TESTS = {
    "==": lambda a, b: a == b,
    "<=": lambda a, b: a <= b,
    "<": lambda a, b: a < b,
    ">=": lambda a, b: a >= b,
    ">": lambda a, b: a > b,
}


@dataclass(frozen=True)
class StepResult:
    index: int
    status: str  # PASS | FAIL | ERROR
    description: str
    value: Fraction = None


@dataclass(frozen=True)
class RunReport:
    cert_name: str
    steps: tuple

    @property
    def overall(self):
        return all(s.status == "PASS" for s in self.steps)

    def render(self):
        lines = []
        for s in self.steps:
            text = f"step {s.index} {s.status} {s.description}"
            if s.value is not None:
                text += f" = {rat_str(s.value)}"
            lines.append(text)
        lines.append("overall " + ("PASS" if self.overall else "FAIL"))
        return "\n".join(lines) + "\n"

    def to_json(self):
        return {
            "cert": self.cert_name,
            "overall": "PASS" if self.overall else "FAIL",
            "steps": [
                {
                    "step": s.index,
                    "status": s.status,
                    "description": s.description,
                    "value": None if s.value is None else rat_str(s.value),
                }
                for s in self.steps
            ],
        }


# -------------------------------------------------------------- checkers


class _CheckerError(Exception):
    pass


def _need(args, key):
    if key not in args:
        raise _CheckerError(f"missing argument {key!r}")
    return args.pop(key)


def _rat(args, key):
    v = _need(args, key)
    if not isinstance(v, Fraction):
        raise _CheckerError(f"argument {key!r} must be a rational")
    return v


def _text(args, key):
    v = _need(args, key)
    if not isinstance(v, str):
        raise _CheckerError(f"argument {key!r} must be text")
    return v


def _int(args, key):
    v = _rat(args, key)
    if v.denominator != 1:
        raise _CheckerError(f"argument {key!r} must be an integer")
    return int(v)


def _flag(args, key, default):
    if key not in args:
        return default
    v = args.pop(key)
    if v == "true":
        return True
    if v == "false":
        return False
    raise _CheckerError(f"argument {key!r} must be true or false")


def _csv_rats(text, what):
    try:
        return [parse_rat(tok) for tok in text.split(",")]
    except ValueError as exc:
        raise _CheckerError(f"bad {what}: {exc}") from None


def _numbered(args, prefix):
    """Pop prefix1, prefix2, ... in numeric order."""
    keys = []
    for key in args:
        if key.startswith(prefix) and key[len(prefix):].isdigit():
            keys.append((int(key[len(prefix):]), key))
    keys.sort()
    return [(k, args.pop(key)) for k, key in keys]


def _row(text, n):
    """Parse 'c1,...,cn REL p/q' into a constraint triple."""
    for rel in ("<=", ">=", "="):
        if rel in text:
            left, _, right = text.partition(rel)
            coeffs = _csv_rats(left, "coefficient list")
            if len(coeffs) != n:
                raise _CheckerError(
                    f"row has {len(coeffs)} coefficients, expected {n}"
                )
            return (coeffs, rel, parse_rat(right))
    raise _CheckerError(f"no relation in row {text!r}")


def _params(args):
    return ThmIParams(
        A=_rat(args, "A"), B=_rat(args, "B"),
        M=_rat(args, "M"), N=_rat(args, "N"),
        alpha=_rat(args, "alpha"), beta=_rat(args, "beta"),
    )


def _report_outcome(report):
    bad = [c.name for c in report.checks if not c.holds]
    if bad:
        return False, None, "failing: " + "; ".join(bad)
    return True, None, f"{len(report.checks)} checks"


def _chk_theorem_I_hyp(args, ctx):
    return _report_outcome(check_theorem_I_hypotheses(_params(args)))


def _chk_lemma_2_0(args, ctx):
    return _report_outcome(implied_inequalities_lemma20(_params(args)))


def _chk_vertex_ab(args, ctx):
    p = _params(args)
    got = vertex_alpha_beta(p.A, p.B, p.M, p.N)
    if isinstance(got, VertexInfeasible):
        return False, None, got.reason
    alpha, beta = got
    if (alpha, beta) == (p.alpha, p.beta):
        return True, None, None
    return False, None, (
        f"vertex is alpha={rat_str(alpha)}, beta={rat_str(beta)}"
    )


def _chk_theorem_I_refute(args, ctx):
    a1 = _rat(args, "a1")
    a2 = _rat(args, "a2")
    m1 = _rat(args, "m1")
    m2 = _rat(args, "m2")
    verdict = theorem_I_refute(_params(args), a1, a2, m1, m2)
    if isinstance(verdict, Refuted):
        return True, None, None
    if isinstance(verdict, NotApplicable):
        return False, None, "not applicable: " + verdict.reason
    return False, None, "inconclusive"


def _chk_corti_bound(args, ctx):
    value = corti_bound(_rat(args, "a1"), _rat(args, "a2"),
                        _rat(args, "eps"))
    return True, value, None


def _chk_thm2_bound(args, ctx):
    bound, profiles = mobile_bound_thmII(_rat(args, "a1"),
                                         _rat(args, "eps"))
    detail = None
    if profiles:
        detail = "; ".join(
            f"equality profile {p.kind} needs multiplicity "
            f"{rat_str(p.required_multiplicity)}"
            for p in profiles
        )
    return True, bound, detail


def _chk_lct_monomial(args, ctx):
    form = _text(args, "form")
    exps = [v for _, v in _numbered(args, "m")]
    if not exps:
        raise _CheckerError("need exponents m1=, m2=, ...")
    ints = []
    for v in exps:
        if not isinstance(v, Fraction) or v.denominator != 1:
            raise _CheckerError("exponents must be integers")
        ints.append(int(v))
    return True, lct_monomial(ints, form), None


def _chk_adjunction_refute(args, ctx):
    pairing = _rat(args, "pairing")
    threshold = _rat(args, "threshold")
    verdict = adjunction_refute(pairing, threshold)
    if isinstance(verdict, Refuted):
        return True, None, None
    return False, None, (
        f"inconclusive: pairing {rat_str(pairing)} exceeds "
        f"{rat_str(threshold)}"
    )


def _chk_lp_max(args, ctx):
    n = _int(args, "n")
    objective = _csv_rats(_text(args, "obj"), "objective")
    if len(objective) != n:
        raise _CheckerError(
            f"objective has {len(objective)} coefficients, expected {n}"
        )
    nonneg = _flag(args, "nonneg", True)
    constraints = []
    for _, v in _numbered(args, "r"):
        if not isinstance(v, str):
            raise _CheckerError('rows must be strings like "1,0 <= 3/4"')
        constraints.append(_row(v, n))
    if nonneg:
        for j in range(n):
            row = [Fraction(0)] * n
            row[j] = Fraction(1)
            constraints.append((row, ">=", Fraction(0)))
    lp = LinearProgram(n, objective, "maximize", constraints)
    result = lp_optimize(lp)
    if isinstance(result, Infeasible):
        return False, None, "infeasible"
    if isinstance(result, Unbounded):
        return False, None, "unbounded"
    witness = ", ".join(rat_str(x) for x in result.witness)
    return True, result.value, f"at ({witness})"


def _chk_du_val_bounds(args, ctx):
    n = _int(args, "n")
    extra = []
    for _, v in _numbered(args, "extra"):
        if not isinstance(v, str):
            raise _CheckerError("extra rows must be strings")
        extra.append(_row(v, n))
    stated = [_rat(args, f"max{i}") for i in range(1, n + 1)]
    try:
        maxima = du_val_coefficient_bounds(an_chain(n), extra)
    except DuValInfeasibleError:
        return False, None, "constraint system is infeasible"
    if maxima == stated:
        return True, None, f"maxima ({', '.join(map(rat_str, maxima))})"
    return False, None, (
        "computed maxima (" + ", ".join(map(rat_str, maxima)) + ")"
    )


def _chk_tower(args, ctx):
    a1 = _rat(args, "a1")
    a2 = _rat(args, "a2")
    m = _csv_rats(_text(args, "m"), "multiplicity list")
    i = _int(args, "i")
    coeffs = tower_coefficients(TowerInput(a1, a2, tuple(m)), i)
    value, inside = coeffs[i - 1]
    detail = "inside [0, 1]" if inside else "outside [0, 1]"
    return True, value, detail


def _chk_pairing(args, ctx):
    n = _int(args, "n")
    ksq = _rat(args, "ksq")
    k1 = _rat(args, "k1")
    e1 = _csv_rats(_text(args, "e1"), "e1")
    if "k2" in args or "e2" in args:
        k2 = _rat(args, "k2")
        e2 = _csv_rats(_text(args, "e2"), "e2")
    else:
        k2, e2 = k1, list(e1)
    chain = an_chain(n)
    c1 = ResClass(k1, ksq, tuple(e1))
    c2 = ResClass(k2, ksq, tuple(e2))
    return True, resolution_pairing(c1, c2, chain), None


def _chk_involution(args, ctx):
    h = _rat(args, "h")
    e = _rat(args, "e")
    expect_h = _rat(args, "expect_h")
    expect_e = _rat(args, "expect_e")
    image = apply_involution(PicClass(h, (e,) * 6))
    if image.h == expect_h and image.e[0] == expect_e:
        return True, None, None
    return False, None, (
        f"image is h={rat_str(image.h)}, e={rat_str(image.e[0])}"
    )


def _chk_untwist(args, ctx):
    mu = _rat(args, "mu")
    mult = _rat(args, "mult")
    expect = (_rat(args, "mu_prime"), _rat(args, "mult_prime"))
    try:
        got = untwist(mu, mult)
    except SingularUntwistError as exc:
        return False, None, str(exc)
    if got == expect:
        return True, None, None
    return False, None, (
        f"untwist gives mu'={rat_str(got[0])}, mult'={rat_str(got[1])}"
    )


def _chk_pukhlikov(args, ctx):
    value = pukhlikov_bound(
        _rat(args, "sigma0"), _rat(args, "sigma1"),
        _rat(args, "c"), _text(args, "form"),
    )
    return True, value, None


def _resolve(ctx, name):
    path = Path(name)
    if not path.is_absolute():
        path = ctx["dir"] / path
    return path


def _chk_ledger(args, ctx):
    path = _resolve(ctx, _text(args, "file"))
    report = ledger_consistency(parse_ledger(path.read_text()))
    return _report_outcome(report)


def _chk_poly_id(args, ctx):
    path = _resolve(ctx, _text(args, "file"))
    results = run_polyid(parse_polyid(path.read_text()))
    for desc, res in results:
        if not isinstance(res, Equal):
            return False, None, (
                f"{desc} differs at exponent {res.witness}"
            )
    return True, None, f"{len(results)} identities"


def _chk_amplitude(args, ctx):
    weights = _csv_rats(_text(args, "weights"), "weights")
    ints = []
    for w in weights:
        if w.denominator != 1:
            raise _CheckerError("weights must be integers")
        ints.append(int(w))
    return True, Fraction(amplitude(ints, _int(args, "d"))), None


def _chk_orbit(args, ctx):
    datum = min_orbit_size(_text(args, "group"), _text(args, "space"))
    sizes = ", ".join(str(s) for s in sorted(datum.known_orbit_sizes))
    return True, Fraction(datum.min_orbit), f"known orbits {{{sizes}}}"


def _chk_superrigid(args, ctx):
    ok = superrigidity_orbit_test(_rat(args, "ksq"),
                                  _rat(args, "min_orbit"))
    if ok:
        return True, None, None
    return False, None, "an orbit smaller than K^2 exists"


CHECKERS = {
    "theorem_I_hyp": _chk_theorem_I_hyp,
    "lemma_2_0": _chk_lemma_2_0,
    "vertex_ab": _chk_vertex_ab,
    "theorem_I_refute": _chk_theorem_I_refute,
    "corti_bound": _chk_corti_bound,
    "thm2_bound": _chk_thm2_bound,
    "lct_monomial": _chk_lct_monomial,
    "adjunction_refute": _chk_adjunction_refute,
    "lp_max": _chk_lp_max,
    "du_val_bounds": _chk_du_val_bounds,
    "tower": _chk_tower,
    "pairing": _chk_pairing,
    "involution": _chk_involution,
    "untwist": _chk_untwist,
    "pukhlikov": _chk_pukhlikov,
    "ledger": _chk_ledger,
    "poly_id": _chk_poly_id,
    "amplitude": _chk_amplitude,
    "orbit": _chk_orbit,
    "superrigid": _chk_superrigid,
}


# ------------------------------------------------------------------ run


def _arg_value(node, env):
    """A check argument: quoted text stays text, a bare unbound name is
    a mode word, anything else evaluates to a rational."""
    if isinstance(node, Str):
        return node.value
    if isinstance(node, Var) and node.name not in env:
        return node.name
    return eval_expr(node, env)


_CHECK_ERRORS = (
    _CheckerError,
    ValueError,
    OSError,
    ZeroDivisionError,
    LedgerParseError,
    LedgerGapError,
    PolyIdParseError,
)


def run_certificate(cert, base_dir=None):
    """Execute every step; returns a RunReport.

    base_dir anchors relative file="..." arguments; it defaults to the
    current directory.
    """
    ctx = {"dir": Path(base_dir) if base_dir is not None else Path(".")}
    env = {}
    steps = []
    for index, stmt in enumerate(cert.steps, start=1):
        if isinstance(stmt, LetStmt):
            desc = f"let {stmt.name}"
            try:
                value = eval_expr(stmt.expr, env)
            except _EvalError as exc:
                steps.append(StepResult(index, "ERROR", f"{desc}: {exc}"))
                continue
            env[stmt.name] = value
            steps.append(StepResult(index, "PASS", desc, value))
        elif isinstance(stmt, AssertStmt):
            desc = (
                f"assert {expr_str(stmt.lhs)} {stmt.relation} "
                f"{expr_str(stmt.rhs)}"
            )
            try:
                lhs = eval_expr(stmt.lhs, env)
                rhs = eval_expr(stmt.rhs, env)
            except _EvalError as exc:
                steps.append(StepResult(index, "ERROR", f"{desc}: {exc}"))
                continue
            if _REL_TESTS[stmt.relation](lhs, rhs):
                steps.append(StepResult(index, "PASS", desc))
            else:
                steps.append(StepResult(
                    index, "FAIL",
                    f"{desc} [{rat_str(lhs)} {stmt.relation} "
                    f"{rat_str(rhs)} is false]",
                ))
        else:
            desc = _stmt_str(stmt)
            if stmt.name not in CHECKERS:
                known = ", ".join(sorted(CHECKERS))
                steps.append(StepResult(
                    index, "ERROR",
                    f"{desc}: unknown checker {stmt.name!r} "
                    f"(known: {known})",
                ))
                continue
            try:
                args = {k: _arg_value(v, env) for k, v in stmt.args}
                expect = (None if stmt.expect is None
                          else eval_expr(stmt.expect, env))
            except _EvalError as exc:
                steps.append(StepResult(index, "ERROR", f"{desc}: {exc}"))
                continue
            try:
                ok, value, detail = CHECKERS[stmt.name](args, ctx)
                if args:
                    extra = ", ".join(sorted(args))
                    raise _CheckerError(f"unexpected argument(s): {extra}")
            except _CHECK_ERRORS as exc:
                steps.append(StepResult(index, "ERROR", f"{desc}: {exc}"))
                continue
            if expect is not None:
                if value is None:
                    steps.append(StepResult(
                        index, "ERROR",
                        f"{desc}: checker {stmt.name!r} returns no value "
                        "to compare against expect",
                    ))
                    continue
                if value != expect:
                    ok = False
                    note = f"computed {rat_str(value)}, expected " \
                           f"{rat_str(expect)}"
                    detail = f"{detail}; {note}" if detail else note
            if detail:
                desc = f"{desc}: {detail}"
            steps.append(StepResult(
                index, "PASS" if ok else "FAIL", desc, value,
            ))
    return RunReport(cert.name, tuple(steps))


def run_certificate_file(path):
    """Parse and run a certificate file; relative file arguments inside
    it resolve against the certificate's own directory."""
    path = Path(path)
    cert = parse_cert(path.read_text())
    return run_certificate(cert, base_dir=path.parent)
