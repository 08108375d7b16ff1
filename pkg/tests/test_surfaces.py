from fractions import Fraction as F

import pytest

from lctforge import data_path
from lctforge.sparsepoly import SparsePoly
from lctforge.surfaces import (
    amplitude,
    WeightedSurface,
    k_squared,
    check_quasihomogeneous,
    Pass,
    Fail,
    QuasiLine,
    CoordCut,
    anticanonical_pairing,
    SurfaceLedger,
    LedgerGapError,
    LedgerParseError,
    parse_ledger,
    ledger_consistency,
    bundled_surfaces,
)

LEDGER_NAMES = [
    "wps-11-21-29-37-d95",
    "wps-13-14-23-33-d79",
    "wps-11-17-24-31-d79",
    "wps-13-17-27-41-d95",
    "wps-14-17-29-41-d99",
]


def load(name):
    return parse_ledger(data_path("ledgers", name + ".ledger").read_text())


def test_amplitude():
    assert amplitude((11, 21, 29, 37), 95) == 3
    assert amplitude((13, 14, 23, 33), 79) == 4
    assert amplitude((14, 17, 29, 41), 99) == 2
    assert amplitude((1, 1, 1, 1), 5) == -1  # non-Fano is allowed
    with pytest.raises(ValueError):
        amplitude((0, 1, 1, 1), 3)
    with pytest.raises(ValueError):
        amplitude((1, 1, 1, 1), 0)


def test_weighted_surface_validation():
    s = WeightedSurface((1, 1, 2, 3), 6)
    assert s.amplitude == 1 and s.is_fano
    with pytest.raises(ValueError):
        WeightedSurface((1, 1, 2), 4)
    with pytest.raises(ValueError):
        WeightedSurface((1, 1, 2, 3), 6, SparsePoly.variable(3, 0))


def test_k_squared():
    s = WeightedSurface((11, 21, 29, 37), 95)
    assert k_squared(s) == F(285, 82621)
    assert k_squared(WeightedSurface((1, 1, 2, 3), 6)) == F(1)


def test_quasihomogeneous_bundled():
    for name, surf in bundled_surfaces().items():
        assert check_quasihomogeneous(surf) == Pass(), name


def test_quasihomogeneous_catches_bad_term():
    poly = SparsePoly(4, {(0, 1, 0, 2): 1, (1, 1, 1, 1): 1})
    s = WeightedSurface((11, 21, 29, 37), 95, poly)
    res = check_quasihomogeneous(s)
    assert isinstance(res, Fail)
    assert res.offending == ((1, 1, 1, 1),)
    with pytest.raises(ValueError):
        check_quasihomogeneous(WeightedSurface((1, 1, 2, 3), 6))


def test_bundled_surfaces_match_their_ledgers():
    for name, surf in bundled_surfaces().items():
        led = load(name)
        assert led.surface.weights == surf.weights
        assert led.surface.degree == surf.degree


def test_curve_descriptors():
    with pytest.raises(ValueError):
        QuasiLine(1, 1)
    with pytest.raises(ValueError):
        QuasiLine(0, 4)
    with pytest.raises(ValueError):
        CoordCut(2, 0)


def test_anticanonical_pairing_formulas():
    s = WeightedSurface((11, 21, 29, 37), 95)  # amplitude 3
    # x = t = 0 line sees the y and z weights
    assert anticanonical_pairing(s, QuasiLine(0, 3)) == F(3, 21 * 29)
    assert anticanonical_pairing(s, QuasiLine(0, 3)) == F(1, 203)
    # a cut x = 0 of residual degree e
    assert anticanonical_pairing(s, CoordCut(0, 58)) == \
        F(3 * 58, 21 * 29 * 37)
    # O(m) against the same line
    assert anticanonical_pairing(s, QuasiLine(0, 3), m=21) == F(21, 609)
    with pytest.raises(ValueError):
        anticanonical_pairing(s, "L_xt")
    with pytest.raises(ValueError):
        anticanonical_pairing(s, QuasiLine(0, 1), m=0)


def test_anticanonical_pairing_non_fano_needs_m():
    s = WeightedSurface((1, 1, 1, 1), 5)
    with pytest.raises(ValueError):
        anticanonical_pairing(s, QuasiLine(0, 1))
    assert anticanonical_pairing(s, QuasiLine(0, 1), m=2) == 2


# A small synthetic ledger for the sextic in P(1,1,2,3): one coordinate
# cut decomposed into a quasiline and a residual quintic cut, numbers
# chosen to satisfy every consistency rule.
SEXTIC_LEDGER = """\
surface weights=1,1,2,3 degree=6

curve L = line(x,y)      # x = y = 0
curve R = cut(x,5)
curve M = line(z,t)

decomp x = L + R

pair D.L = 1/6
pair D.R = 5/6
pair D.M = 1
pair L.R = 1/4
pair M.R = 1
self L = -1/12
self R = 7/12

point O_z index=2 type=1,1 on=L:1/2
"""


def test_parse_ledger_round_trip_fields():
    led = parse_ledger(SEXTIC_LEDGER)
    assert led.surface.weights == (1, 1, 2, 3)
    assert led.curves["L"] == QuasiLine(0, 1)
    assert led.curves["R"] == CoordCut(0, 5)
    assert led.decompositions == {0: ["L", "R"]}
    assert led.anticanonical["R"] == F(5, 6)
    assert led.self_intersections["L"] == F(-1, 12)
    assert led.pairing("L", "R") == F(1, 4)
    assert led.singular_points[0].name == "O_z"
    assert led.singular_points[0].on == (("L", F(1, 2)),)


def test_structural_zero_for_disjoint_lines():
    led = parse_ledger(SEXTIC_LEDGER)
    # L is x=y=0, M is z=t=0: all four coordinates used, never meet
    assert led.pairing("L", "M") == 0
    # unknown pair of non-disjoint curves stays unknown
    assert led.pairing("M", "R") == 1
    del led.pairings[frozenset(("M", "R"))]
    assert led.pairing("M", "R") is None


def test_synthetic_ledger_consistent():
    report = ledger_consistency(parse_ledger(SEXTIC_LEDGER))
    assert report.overall
    names = [c.name for c in report.checks]
    assert "C_x: (1/1)*(D.L) recovers L^2" in names
    assert "C_x: sum of D pairings over components" in names
    assert "C_x additivity against M" in names
    assert "O_z index equals the z weight" in names


def test_consistency_detects_wrong_self_intersection():
    text = SEXTIC_LEDGER.replace("self L = -1/12", "self L = -1/11")
    report = ledger_consistency(parse_ledger(text))
    assert not report.overall
    bad = [c for c in report.checks if not c.holds]
    assert len(bad) == 1
    assert "recovers L^2" in bad[0].name


def test_consistency_gap_error():
    text = SEXTIC_LEDGER.replace("pair L.R = 1/4\n", "")
    with pytest.raises(LedgerGapError) as exc:
        ledger_consistency(parse_ledger(text))
    assert "pair L.R" in exc.value.missing


@pytest.mark.parametrize("line,fragment", [
    ("curve L = line(x,y)", "surface line must come first"),
    ("surface weights=1,1,2 degree=6", "expected ','"),
    ("surface weights=1,1,2,3 degree=6\ncurve L = arc(x,y)",
     "unknown curve kind"),
    ("surface weights=1,1,2,3 degree=6\npair D.L = 1/6", "unknown curve"),
    ("surface weights=1,1,2,3 degree=6\ncurve L = line(x,y)\n"
     "pair D.L = 1/6\npair L.D = 1/6", "already given"),
    ("surface weights=1,1,2,3 degree=6\ncurve L = line(x,y)\n"
     "pair L.L = 1", "self line"),
    ("surface weights=1,1,2,3 degree=6\nbogus hello", "unknown directive"),
    ("surface weights=1,1,2,3 degree=6 extra", "trailing text"),
    ("surface weights=1,1,2,3 degree=6\ncurve L = line(x,y)\n"
     "self L = 1/0", "zero denominator"),
    ("", "empty ledger"),
])
def test_parse_ledger_errors(line, fragment):
    with pytest.raises(LedgerParseError) as exc:
        parse_ledger(line)
    assert fragment in str(exc.value)


def test_ledger_error_carries_position():
    with pytest.raises(LedgerParseError) as exc:
        parse_ledger("surface weights=1,1,2,3 degree=6\nbogus hello")
    assert exc.value.line == 2
    # column points just past the directive word it choked on
    assert exc.value.column == 6


def test_ledger_rejects_unknown_mention():
    with pytest.raises(ValueError):
        SurfaceLedger(
            WeightedSurface((1, 1, 2, 3), 6),
            {"L": QuasiLine(0, 1)}, {}, {}, {"ghost": F(1)}, {},
        )


@pytest.mark.parametrize("name", LEDGER_NAMES)
def test_bundled_ledgers_consistent(name):
    report = ledger_consistency(load(name))
    assert report.overall
    assert all(c.holds for c in report.checks)


def test_bundled_ledger_entry_values():
    """A few table entries pinned by hand against the weight formulas."""
    t1 = load("wps-11-21-29-37-d95")
    assert t1.anticanonical["L_xt"] == F(1, 7 * 29)
    assert t1.anticanonical["R_x"] == F(2, 7 * 37)
    assert t1.self_intersections["L_xt"] == F(-47, 21 * 29)
    t5 = load("wps-14-17-29-41-d99")
    assert t5.self_intersections["L_xt"] == F(-44, 17 * 29)
    t2 = load("wps-13-14-23-33-d79")
    assert t2.self_intersections["R_t"] == F(95, 14 * 23)
