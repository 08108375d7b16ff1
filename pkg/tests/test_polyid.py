import pytest

from lctforge import data_path
from lctforge.polyid import PolyIdParseError, parse_polyid, run_polyid
from lctforge.sparsepoly import Equal, Unequal, weighted_degree_profile


GOOD = """\
# binomial square, folded across lines
vars x y
poly big = x^2
  + 2*x*y
  + y^2
check big == (x + y)^2   # should hold
check big == x^2 + y^2
"""


def test_parse_and_run_synthetic():
    f = parse_polyid(GOOD)
    assert f.variables == ("x", "y")
    assert set(f.polys) == {"big"}
    results = run_polyid(f)
    assert len(results) == 2
    desc0, r0 = results[0]
    assert desc0 == "big == (x + y)^2"
    assert isinstance(r0, Equal)
    desc1, r1 = results[1]
    assert isinstance(r1, Unequal)
    # difference is 2*x*y, so the extremal exponent is (1, 1)
    assert r1.witness == (1, 1)


def test_rational_coefficients_and_unary_minus():
    f = parse_polyid(
        "vars t\n"
        "poly p = 1/2*t - -1/2*t\n"
        "check p == t\n"
    )
    assert isinstance(run_polyid(f)[0][1], Equal)


@pytest.mark.parametrize(
    "text,fragment",
    [
        ("poly f = 1\n", "must come before"),
        ("check 1 == 1\n", "must come before"),
        ("vars x\nvars y\n", "vars line given twice"),
        ("vars x x\n", "duplicate variable name"),
        ("vars\n", "at least one variable"),
        ("vars x\npoly x = 1\n", "already bound"),
        ("vars x\npoly f = x\npoly f = x\n", "already bound"),
        ("vars x\npoly f = w + x\n", "unknown name 'w'"),
        ("vars x\npoly f = x + x 3\n", "trailing text"),
        ("vars x\ncheck x == x junk\n", "trailing text"),
        ("  poly f = 1\n", "nothing to continue"),
        ("vars x\npoly f = 1/0\n", "zero denominator"),
        ("vars x\nfrobnicate x\n", "unknown directive"),
        ("# nothing here\n\n", "empty file: no vars line"),
        ("vars x\npoly f = (x\n", "expected ')'"),
        ("vars x\npoly f = x^\n", "exponent"),
    ],
)
def test_parse_errors(text, fragment):
    with pytest.raises(PolyIdParseError) as exc:
        parse_polyid(text)
    assert fragment in str(exc.value)


def test_parse_error_position():
    with pytest.raises(PolyIdParseError) as exc:
        parse_polyid("vars x\npoly f = x\npoly f = x\n")
    assert exc.value.line == 3


def load_bundled():
    path = data_path("polyid", "icosahedral-invariants.polyid")
    with open(path) as fh:
        return parse_polyid(fh.read())


def test_bundled_invariants_parse():
    f = load_bundled()
    assert f.variables == ("x", "y", "z")
    assert set(f.polys) == {"f2", "f6", "f10", "f15", "inner"}
    assert len(f.checks) == 2


def test_bundled_invariants_homogeneous():
    f = load_bundled()
    w = (1, 1, 1)
    assert weighted_degree_profile(f.polys["f2"], w) == {2}
    assert weighted_degree_profile(f.polys["f6"], w) == {6}
    assert weighted_degree_profile(f.polys["f10"], w) == {10}
    assert weighted_degree_profile(f.polys["f15"], w) == {15}
    assert weighted_degree_profile(f.polys["inner"], w) == {12}


def test_bundled_invariants_checks_hold():
    f = load_bundled()
    for description, result in run_polyid(f):
        assert isinstance(result, Equal), description
