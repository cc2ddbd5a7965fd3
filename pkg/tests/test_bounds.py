import math

import pytest

from kmm import bounds
from kmm.bounds import Region
from kmm.errors import ParseError, ValidationError


class TestFiniteBounds:
    def test_n5_k2(self):
        v = bounds.finite_bounds(5, 2)
        assert v.hamming_ok and v.gv_ok
        assert v.region is Region.UNKNOWN

    def test_n4_k2_gv_alone_proves_nothing(self):
        # both inequalities hold although no such state exists
        v = bounds.finite_bounds(4, 2)
        assert v.hamming_ok and v.gv_ok
        assert v.region is Region.UNKNOWN

    def test_n2_k1(self):
        v = bounds.finite_bounds(2, 1)
        assert v.hamming_ok and v.gv_ok

    def test_schmidt_cut(self):
        assert bounds.finite_bounds(3, 2).region is Region.IMPOSSIBLE

    def test_hamming_violation_is_impossible(self):
        v = bounds.finite_bounds(8, 4)
        assert not v.hamming_ok
        assert v.region is Region.IMPOSSIBLE

    def test_known_existing_cases_pass_hamming(self):
        for n, k in ((2, 1), (3, 1), (4, 1), (5, 2), (6, 3)):
            assert bounds.finite_bounds(n, k).hamming_ok

    def test_validation(self):
        with pytest.raises(ValidationError):
            bounds.finite_bounds(4, 0)
        with pytest.raises(ValidationError):
            bounds.finite_bounds(4, 5)


class TestRateFunction:
    def test_continuity_extension_at_zero(self):
        assert bounds.rate_function(0) == 1.0
        assert abs(bounds.rate_function(1e-12) - 1.0) < 1e-9

    def test_negative_at_three_quarters(self):
        assert bounds.rate_function(0.75) < 0

    def test_root_value(self):
        assert abs(bounds.rate_function(0.18929)) < 1e-4

    def test_domain(self):
        for x in (-0.1, 1.0, 1.5):
            with pytest.raises(ValidationError):
                bounds.rate_function(x)

    def test_strictly_decreasing_on_grid(self):
        xs = [0.01 + 1e-3 * i for i in range(int((0.74 - 0.01) / 1e-3) + 1)]
        vals = [bounds.rate_function(x) for x in xs]
        assert all(b < a for a, b in zip(vals, vals[1:]))


class TestRoot:
    def test_value(self):
        assert abs(bounds.root_x0(1e-10) - 0.18929) <= 1e-5

    def test_bracket_sign_change(self):
        x0 = bounds.root_x0()
        assert bounds.rate_function(x0 - 1e-6) > 0 > bounds.rate_function(x0 + 1e-6)

    def test_guaranteed_k_at_n100(self):
        assert math.floor(0.189 * 100) == 18
        assert math.floor(bounds.root_x0() * 100) == 18

    def test_tol_validation(self):
        with pytest.raises(ValidationError):
            bounds.root_x0(1e-15)


class TestAsymptoticRegion:
    def test_examples(self):
        assert bounds.asymptotic_region(0.10) is Region.EXISTS
        assert bounds.asymptotic_region(0.45) is Region.IMPOSSIBLE
        assert bounds.asymptotic_region(0.25) is Region.UNKNOWN

    def test_boundaries(self):
        x0 = bounds.root_x0()
        assert bounds.asymptotic_region(x0 - 1e-3) is Region.EXISTS
        assert bounds.asymptotic_region(2 * x0 + 1e-3) is Region.IMPOSSIBLE

    def test_validation(self):
        for ratio in (0.0, -0.2, 0.51):
            with pytest.raises(ValidationError):
                bounds.asymptotic_region(ratio)


class TestCodeTable:
    def test_accepts_known_rows(self):
        entries = bounds.parse_code_table(["2,1,1", "4,1,1", "6,3,3"])
        assert [(e.n, e.k_lower, e.k_upper) for e in entries] == [
            (2, 1, 1), (4, 1, 1), (6, 3, 3)]

    def test_header_and_blank_lines(self):
        entries = bounds.parse_code_table(["n,k_lower,k_upper", "", "5,1,2"])
        assert entries == [bounds.CodeTableEntry(5, 1, 2)]

    def test_malformed_row_reports_line(self):
        with pytest.raises(ParseError) as err:
            bounds.parse_code_table(["2,1,1", "4,x,1"])
        assert err.value.line == 2

    def test_bad_bounds_rejected(self):
        with pytest.raises(ParseError):
            bounds.parse_code_table(["4,2,1"])
        with pytest.raises(ParseError):
            bounds.parse_code_table(["4,1,3"])  # k_upper above floor(n/2)

    def test_chart_series(self):
        entries, chart = bounds.ingest_code_table(["2,1,1", "6,3,3"])
        names = [s["name"] for s in chart["series"]]
        assert names == ["gv_asymptote", "hamming_asymptote",
                         "constructive_lower", "constructive_upper"]
        gv = chart["series"][0]["points"]
        assert gv[0][0] == 1 and len(gv) == 6
        x0 = bounds.root_x0()
        assert abs(gv[-1][1] - 6 * x0) < 1e-12
