"""CLI behavior: JSON payloads, exit codes, round-trips, determinism."""

import json

import pytest

from mdsx.cli import main
from mdsx.serialize import code_from_spec


@pytest.fixture
def spec_file(tmp_path):
    def write(payload, name="spec.json"):
        p = tmp_path / name
        p.write_text(json.dumps(payload), encoding="utf-8")
        return str(p)
    return write


GRS_SPEC = {"field": {"p": 5, "m": 1},
            "code": {"type": "grs", "nodes": [0, 1, 2, 3], "k": 2}}
EX1_SPEC = {"field": {"p": 2, "m": 2},
            "code": {"type": "dual",
                     "inner": {"type": "egrs", "nodes": [0, 1, 2, 3],
                               "k": 3}}}


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


class TestBuild:
    def test_grs_summary(self, capsys, spec_file):
        rc, out, err = run(capsys, ["build", spec_file(GRS_SPEC)])
        assert rc == 0
        payload = json.loads(out)
        assert (payload["n"], payload["k"], payload["d"]) == (4, 2, 3)
        assert payload["mds"] is True
        assert "[4,2,3]" in err

    def test_egrs_summary(self, capsys, spec_file):
        spec = {"field": {"p": 2, "m": 2},
                "code": {"type": "egrs", "nodes": [0, 1, 2, 3], "k": 3}}
        rc, out, _ = run(capsys, ["build", spec_file(spec), "--json"])
        payload = json.loads(out)
        assert (payload["n"], payload["k"], payload["d"]) == (5, 3, 3)
        assert payload["mds"] is True

    def test_round_trip_same_code(self, capsys, spec_file):
        rc, out, _ = run(capsys, ["build", spec_file(GRS_SPEC)])
        emitted = json.loads(out)
        _, original = code_from_spec(GRS_SPEC)
        _, reloaded = code_from_spec(
            {"field": emitted["field"], "code": emitted["code"]})
        assert original.same_code(reloaded)

    def test_malformed_file_exits_2(self, capsys, tmp_path):
        p = tmp_path / "broken.json"
        p.write_text('{"field": {"p": 5,,}', encoding="utf-8")
        rc, _, err = run(capsys, ["build", str(p)])
        assert rc == 2
        assert ":" in err  # carries line/column info

    def test_invalid_spec_exits_2(self, capsys, spec_file):
        bad = {"field": {"p": 5, "m": 1}, "code": {"type": "nonsense"}}
        rc, _, err = run(capsys, ["build", spec_file(bad)])
        assert rc == 2

    def test_noncanonical_modulus_rejected(self, capsys, spec_file):
        bad = dict(GRS_SPEC)
        bad["field"] = {"p": 2, "m": 2, "modulus": [1, 0, 1]}
        rc, _, err = run(capsys, ["build", spec_file(bad)])
        assert rc == 2


class TestCovering:
    def test_example_1(self, capsys, spec_file):
        rc, out, _ = run(capsys, ["covering", spec_file(EX1_SPEC)])
        assert rc == 0
        payload = json.loads(out)
        assert payload["rho"] == 3

    def test_deep_holes_flag(self, capsys, spec_file):
        rc, out, _ = run(capsys,
                         ["covering", spec_file(EX1_SPEC), "--deep-holes"])
        payload = json.loads(out)
        assert len(payload["representatives"]) \
            == payload["num_deep_hole_cosets"]

    def test_budget_exit_3(self, capsys, spec_file):
        rc, _, err = run(capsys,
                         ["covering", spec_file(GRS_SPEC), "--budget", "3"])
        assert rc == 3
        assert "budget" in err.lower()

    def test_full_space_rho_zero(self, capsys, spec_file):
        spec = {"field": {"p": 5, "m": 1},
                "code": {"type": "generator",
                         "matrix": {"rows": 2, "cols": 2,
                                    "entries": [[1, 0], [0, 1]]}}}
        rc, out, _ = run(capsys, ["covering", spec_file(spec)])
        assert json.loads(out)["rho"] == 0


class TestOtherCommands:
    def test_mindist(self, capsys, spec_file):
        rc, out, _ = run(capsys, ["mindist", spec_file(GRS_SPEC)])
        assert json.loads(out)["d"] == 3

    def test_weights(self, capsys, spec_file):
        spec = {"field": {"p": 2, "m": 2},
                "code": {"type": "extend",
                         "inner": {"type": "cyclic", "u": 2},
                         "u": [1, 1, 1, 1, 1]}}
        rc, out, _ = run(capsys, ["weights", spec_file(spec)])
        assert json.loads(out)["weights"] == [1, 0, 0, 0, 45, 0, 18]

    def test_dual(self, capsys, spec_file):
        rc, out, _ = run(capsys, ["dual", spec_file(GRS_SPEC)])
        payload = json.loads(out)
        assert (payload["n"], payload["k"], payload["d"]) == (4, 2, 3)

    def test_dual_of_full_space_round_trips(self, capsys, spec_file):
        spec = {"field": {"p": 5, "m": 1},
                "code": {"type": "generator",
                         "matrix": {"rows": 2, "cols": 2,
                                    "entries": [[1, 0], [0, 1]]}}}
        rc, out, _ = run(capsys, ["dual", spec_file(spec)])
        payload = json.loads(out)
        assert (payload["n"], payload["k"], payload["d"]) == (2, 0, None)
        assert payload["mds"] is False
        # the emitted zero-code spec is itself ingestable
        rc2, out2, _ = run(capsys, ["build", spec_file(
            {"field": payload["field"], "code": payload["code"]},
            name="zero.json")])
        assert rc2 == 0
        assert json.loads(out2)["k"] == 0

    def test_extend_u(self, capsys, spec_file):
        rc, out, _ = run(capsys, ["extend", spec_file(GRS_SPEC),
                                  "--u", "0,3,3,4"])
        payload = json.loads(out)
        assert (payload["n"], payload["k"], payload["d"]) == (5, 2, 4)
        assert payload["mds"] is True

    def test_extend_g(self, capsys, spec_file):
        # the column is applied to the canonical generator; (4,1) is the
        # image of the coefficient-extension vector under it
        rc, out, _ = run(capsys, ["extend", spec_file(GRS_SPEC),
                                  "--g", "4,1"])
        payload = json.loads(out)
        assert (payload["n"], payload["k"], payload["d"]) == (5, 2, 4)

    def test_extend_needs_exactly_one(self, capsys, spec_file):
        rc, _, _ = run(capsys, ["extend", spec_file(GRS_SPEC)])
        assert rc == 2

    def test_deep_holes_vector(self, capsys, spec_file):
        dual_spec = {"field": {"p": 5, "m": 1},
                     "code": {"type": "dual", "inner": GRS_SPEC["code"]}}
        rc, out, _ = run(capsys, ["deep-holes", spec_file(dual_spec),
                                  "--vector", "0,3,3,4"])
        payload = json.loads(out)
        assert payload["is_deep_hole"] is True
        assert payload["distance"] == payload["rho"] == 2

    def test_set_check_scan(self, capsys):
        rc, out, _ = run(capsys, ["set-check", "--field", "2", "3",
                                  "--k", "3"])
        payload = json.loads(out)
        assert all(v is False for v in payload["verdicts"].values())

    def test_set_check_single_delta(self, capsys):
        rc, out, _ = run(capsys, ["set-check", "--field", "2", "2",
                                  "--k", "2", "--delta", "0"])
        assert json.loads(out)["verdicts"] == {"0": True}

    def test_set_check_pole_form(self, capsys):
        # reciprocal 2-products of (3 - a) for a in {0,1,2} over GF(5)
        # are {1,2,3}; delta = 0 and 4 avoid them
        rc, out, _ = run(capsys, ["set-check", "--field", "5", "1",
                                  "--elements", "0,1,2", "--k", "2",
                                  "--pi", "3"])
        verdicts = json.loads(out)["verdicts"]
        assert verdicts == {"0": True, "1": False, "2": False,
                            "3": False, "4": True}

    def test_generator_shorthand_spec(self, capsys, spec_file):
        spec = {"field": {"p": 5, "m": 1},
                "generator": {"rows": 2, "cols": 4,
                              "entries": [[1, 1, 1, 1], [0, 1, 2, 3]]}}
        rc, out, _ = run(capsys, ["build", spec_file(spec)])
        payload = json.loads(out)
        assert (payload["n"], payload["k"], payload["d"]) == (4, 2, 3)

    def test_example_3_covering(self, capsys, spec_file):
        spec = {"field": {"p": 2, "m": 3},
                "code": {"type": "dual",
                         "inner": {"type": "egrs",
                                   "nodes": [0, 1, 2, 3, 4, 5, 6, 7],
                                   "k": 4}}}
        rc, out, _ = run(capsys, ["covering", spec_file(spec)])
        payload = json.loads(out)
        assert payload["rho"] == 3 and (payload["n"], payload["k"]) == (9, 5)


class TestVerify:
    def test_pass_exit_zero(self, capsys):
        rc, out, _ = run(capsys, ["verify", "examples-1-2-3"])
        assert rc == 0
        assert json.loads(out)["passed"] is True

    def test_reduced_params(self, capsys):
        rc, out, _ = run(capsys, ["verify", "thm7-identity", "--qs", "4",
                                  "--samples", "3", "--seed", "1"])
        assert rc == 0
        payload = json.loads(out)
        assert payload["params"] == {"qs": [4], "samples": 3, "seed": 1}

    def test_unknown_suite_exits_2(self, capsys):
        rc, _, _ = run(capsys, ["verify", "no-such-suite"])
        assert rc == 2

    def test_unknown_suite_raises_in_api(self):
        import pytest as _pytest
        from mdsx.errors import UnknownSuite
        from mdsx.suites import run_suite
        with _pytest.raises(UnknownSuite):
            run_suite("no-such-suite")

    def test_reports_are_byte_stable(self, capsys):
        _, out1, _ = run(capsys, ["verify", "prs-conjecture", "--qs", "4,5",
                                  "--json"])
        _, out2, _ = run(capsys, ["verify", "prs-conjecture", "--qs", "4,5",
                                  "--json"])
        assert out1 == out2

    def test_build_outputs_byte_stable(self, capsys, spec_file):
        path = spec_file(EX1_SPEC)
        _, out1, _ = run(capsys, ["build", path, "--json"])
        _, out2, _ = run(capsys, ["build", path, "--json"])
        assert out1 == out2

    def test_build_output_is_a_fixed_point(self, capsys, tmp_path):
        # feeding the emitted spec back in reproduces it byte for byte
        p1 = tmp_path / "first.json"
        p1.write_text(json.dumps(GRS_SPEC), encoding="utf-8")
        _, out1, _ = run(capsys, ["build", str(p1), "--json"])
        p2 = tmp_path / "second.json"
        p2.write_text(out1, encoding="utf-8")
        _, out2, _ = run(capsys, ["build", str(p2), "--json"])
        assert out1 == out2


class TestUsage:
    def test_no_command(self, capsys):
        assert main([]) == 2

    def test_missing_file(self, capsys):
        rc, _, err = run(capsys, ["build", "/nonexistent/path.json"])
        assert rc == 2
