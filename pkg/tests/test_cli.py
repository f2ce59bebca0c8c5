import json

import pytest
from click.testing import CliRunner

from frobgrow.cli import main


@pytest.fixture
def runner():
    return CliRunner()


def invoke(runner, *args):
    return runner.invoke(main, list(args), catch_exceptions=False)


CONE_RING = {
    "prime": 2,
    "variables": [
        {"name": "x", "weight": 1},
        {"name": "y", "weight": 1},
        {"name": "z", "weight": 1},
    ],
    "relations": ["z^2+x*y"],
    "ideal": ["x", "z"],
    "minimal_prime": ["x", "z"],
}


class TestPseq:
    def test_text_output(self, runner):
        res = invoke(runner, "pseq", "--p", "2", "--r", "1,t,1", "--n", "2",
                     "--format", "text")
        assert res.exit_code == 0
        assert "P_1 = t" in res.output
        assert "P_2 = t^2 + 1 = (t + 1)^2" in res.output

    def test_json_deterministic_without_timings(self, runner):
        args = ("pseq", "--p", "3", "--r", "1,t,1", "--n", "5", "--no-timings")
        a = invoke(runner, *args)
        b = invoke(runner, *args)
        assert a.exit_code == 0 and a.output == b.output
        payload = json.loads(a.output)
        assert "timings" not in payload and len(payload["rows"]) == 5

    def test_csv_has_header(self, runner):
        res = invoke(runner, "pseq", "--p", "2", "--r", "1,t,1", "--n", "1",
                     "--format", "csv")
        assert res.exit_code == 0
        assert res.output.splitlines()[0] == "n,P,degree,factors"

    def test_negative_n_is_input_error(self, runner):
        res = invoke(runner, "pseq", "--p", "2", "--r", "1,t,1", "--n", "-1")
        assert res.exit_code == 2

    def test_bad_rspec_is_input_error(self, runner):
        res = invoke(runner, "pseq", "--p", "2", "--r", "1,t", "--n", "1")
        assert res.exit_code == 2


class TestCensus:
    def test_cumulative_counts_increase(self, runner):
        res = invoke(runner, "census", "--p", "2", "--r", "1,t,1", "--e", "2..5",
                     "--no-timings")
        assert res.exit_code == 0
        counts = [
            r["new_and_old_distinct_irreducibles"]
            for r in json.loads(res.output)["rows"]
        ]
        assert counts == sorted(counts) and len(set(counts)) == len(counts)

    def test_needs_family_or_rspec(self, runner):
        res = invoke(runner, "census", "--p", "2", "--e", "2..3")
        assert res.exit_code == 2

    def test_bad_range_is_input_error(self, runner):
        res = invoke(runner, "census", "--p", "2", "--r", "1,t,1", "--e", "5..2")
        assert res.exit_code == 2


class TestHq:
    def test_katzman_q4(self, runner):
        res = invoke(runner, "hq", "--family", "katzman", "--p", "2", "--q", "4",
                     "--no-timings")
        assert res.exit_code == 0
        cert = json.loads(res.output)["certificate"]
        assert cert["h_text"] == "t^4 + t" and not cert["partial"]

    def test_family_xor_ring_file(self, runner):
        res = invoke(runner, "hq", "--p", "2", "--q", "2")
        assert res.exit_code == 2


class TestDecompose:
    def test_katzman_verifies(self, runner):
        res = invoke(runner, "decompose", "--family", "katzman", "--p", "2",
                     "--q", "4", "--no-timings")
        assert res.exit_code == 0
        report = json.loads(res.output)["report"]
        assert report["intersection_verified"] and report["method"] == "certified"
        assert [c["tau"] for c in report["embedded"]] == ["t", "t + 1", "t^2 + t + 1"]

    def test_method_option(self, runner):
        res = invoke(runner, "decompose", "--family", "katzman", "--p", "2",
                     "--q", "2", "--method", "groebner", "--no-timings")
        assert res.exit_code == 0
        assert json.loads(res.output)["report"]["method"] == "groebner"

    def test_wrong_h_fails_verification(self, runner):
        res = invoke(runner, "decompose", "--family", "katzman", "--p", "2",
                     "--q", "4", "--h", "t", "--method", "groebner")
        assert res.exit_code == 1

    def test_budget_exhaustion_is_exit_3(self, runner):
        res = invoke(runner, "decompose", "--family", "katzman", "--p", "2",
                     "--q", "4", "--method", "groebner", "--gb-pairs", "1")
        assert res.exit_code == 3

    def test_closed_form_needs_sequence_family(self, runner):
        res = invoke(runner, "decompose", "--family", "katzman", "--p", "2",
                     "--q", "2", "--h", "closed-form")
        assert res.exit_code == 2

    def test_output_file(self, runner, tmp_path):
        out = tmp_path / "report.json"
        res = invoke(runner, "decompose", "--family", "katzman", "--p", "2",
                     "--q", "2", "--no-timings", "--output", str(out))
        assert res.exit_code == 0 and res.output == ""
        assert json.loads(out.read_text())["command"] == "decompose"


class TestVerifyLemmas:
    def test_passes(self, runner):
        res = invoke(runner, "verify-lemmas", "--p", "3", "--r", "1,t,1",
                     "--n", "2", "--panel", "3", "--no-timings")
        assert res.exit_code == 0
        assert json.loads(res.output)["report"]["all_pass"]


class TestSaturate:
    def test_ring_file(self, runner, tmp_path):
        ring = tmp_path / "cone.json"
        ring.write_text(json.dumps(CONE_RING))
        res = invoke(runner, "saturate", "--ring-file", str(ring), "--p", "2",
                     "--z", "y", "--q-list", "2,4,8", "--no-timings")
        assert res.exit_code == 0
        payload = json.loads(res.output)
        assert payload["rows"] == [
            {"q": 2, "N_q": 1},
            {"q": 4, "N_q": 2},
            {"q": 8, "N_q": 4},
        ]
        assert payload["max_ratio"] == 0.5

    def test_missing_ring_file(self, runner, tmp_path):
        res = invoke(runner, "saturate", "--ring-file", str(tmp_path / "no.json"),
                     "--p", "2", "--z", "y", "--q-list", "2")
        assert res.exit_code == 2

    def test_malformed_ring_file(self, runner, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("{\"prime\": 2}")
        res = invoke(runner, "saturate", "--ring-file", str(bad), "--p", "2",
                     "--z", "y", "--q-list", "2")
        assert res.exit_code == 2

    def test_bad_q_list(self, runner, tmp_path):
        ring = tmp_path / "cone.json"
        ring.write_text(json.dumps(CONE_RING))
        res = invoke(runner, "saturate", "--ring-file", str(ring), "--p", "2",
                     "--z", "y", "--q-list", "two")
        assert res.exit_code == 2


class TestWitness:
    def test_matches_sequence(self, runner):
        res = invoke(runner, "witness", "--family", "ss5", "--p", "3", "--q", "3",
                     "--no-timings")
        assert res.exit_code == 0
        payload = json.loads(res.output)
        assert payload["matches"] and payload["generator"] == "t"

    def test_groebner_method_agrees(self, runner):
        a = invoke(runner, "witness", "--family", "ss5", "--p", "2", "--q", "2",
                   "--method", "module", "--no-timings")
        b = invoke(runner, "witness", "--family", "ss5", "--p", "2", "--q", "2",
                   "--method", "groebner", "--no-timings")
        assert a.exit_code == b.exit_code == 0
        assert json.loads(a.output)["generator"] == json.loads(b.output)["generator"]
