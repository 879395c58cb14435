import json

from maxgdelta.cli import main
from maxgdelta.schemas import Report


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestExitCodes:
    def test_pass_is_zero(self, capsys):
        code, out, _ = run(capsys, "order", "x(4,11)", "s[1,5,7,11]")
        assert code == 0
        assert "x(4,11) <= s[1,5,7,11]: True" in out

    def test_parse_error_is_usage(self, capsys):
        code, _, err = run(capsys, "order", "x(4,11", "s[1]")
        assert code == 64
        assert "offset 6" in err

    def test_unknown_flag_is_usage(self, capsys):
        code, _, err = run(capsys, "order", "x(1,1)", "x(1,2)", "--frobnicate")
        assert code == 64

    def test_unknown_command_is_usage(self, capsys):
        code, _, _ = run(capsys, "nonsense")
        assert code == 64

    def test_missing_file_is_usage(self, capsys):
        code, _, err = run(capsys, "poset-verify", "/nope/missing.json")
        assert code == 64
        assert "no such file" in err

    def test_fail_is_one(self, tmp_path, capsys):
        bad = tmp_path / "bad.json"
        bad.write_text(json.dumps({"elements": ["a", "b", "c"], "leq": [["a", "b"], ["b", "c"]]}))
        code, out, _ = run(capsys, "poset-verify", str(bad))
        assert code == 1
        assert "transitivity" in out

    def test_indeterminate_is_two(self, tmp_path, capsys):
        fam = tmp_path / "fam.json"
        fam.write_text(json.dumps({"opens": [{"families": [{"kind": "explicit_list", "elems": ["s[2]"]}]}]}))
        code, out, _ = run(capsys, "diag", str(fam), "--depth", "1", "--budget", "10")
        assert code == 2
        assert "level" in out


class TestCommands:
    def test_order_json_round_trips(self, capsys):
        code, out, _ = run(capsys, "--json", "order", "s[1,2]", "s[2,1]")
        assert code == 0
        report = Report.model_validate_json(out)
        assert report.detail["has_upper_bound"] is False

    def test_l_check(self, capsys):
        code, out, _ = run(capsys, "l-check", "x(3,w)")
        assert code == 0
        assert "maximal: True" in out and "compact: False" in out

    def test_poset_verify_valid(self, tmp_path, capsys):
        f = tmp_path / "p.json"
        f.write_text(json.dumps({"elements": ["a", "b"], "leq": [["a", "b"]]}))
        code, out, _ = run(capsys, "poset-verify", str(f))
        assert code == 0 and "valid partial order" in out

    def test_poset_gdelta(self, tmp_path, capsys):
        f = tmp_path / "p.json"
        f.write_text(json.dumps({"elements": ["a", "b", "c"], "leq": [["a", "b"], ["b", "c"]]}))
        code, out, _ = run(capsys, "poset-gdelta", str(f), "--maximals")
        assert code == 0 and "True" in out
        code, _, _ = run(capsys, "poset-gdelta", str(f), "--set", "a,b")
        assert code == 1

    def test_sup_fixture(self, capsys):
        code, out, _ = run(capsys, "sup", "--fixture", "chain-pair", "--chain", "x")
        assert code == 0
        assert "no sup" in out and "xw" in out and "yw" in out
        code, out, _ = run(
            capsys, "sup", "--fixture", "chain-pair", "--order", "extended", "--chain", "x"
        )
        assert "sup = xw" in out

    def test_sup_poset(self, tmp_path, capsys):
        f = tmp_path / "p.json"
        f.write_text(json.dumps({"elements": ["a", "b", "t"], "leq": [["a", "t"], ["b", "t"]]}))
        code, out, _ = run(capsys, "sup", "--poset", str(f), "--elems", "a,b")
        assert code == 0 and "sup = t" in out

    def test_sup_requires_exactly_one_source(self, capsys):
        code, _, err = run(capsys, "sup", "--chain", "x")
        assert code == 64

    def test_diag_writes_certificate(self, tmp_path, capsys):
        out_path = tmp_path / "cert.json"
        code, out, _ = run(capsys, "diag", "canonical", "--depth", "6", "--out", str(out_path))
        assert code == 0
        assert "refuted at depth 6" in out
        doc = json.loads(out_path.read_text())
        assert doc["prefix"] == [1, 2, 3, 4, 5, 6]

    def test_cert_verify_round_trip(self, tmp_path, capsys):
        out_path = tmp_path / "cert.json"
        run(capsys, "diag", "canonical", "--depth", "5", "--out", str(out_path))
        code, out, _ = run(capsys, "cert-verify", str(out_path), "--family", "canonical")
        assert code == 0 and "certificate valid" in out
        doc = json.loads(out_path.read_text())
        doc["levels"][2]["n"] = 1
        doc["prefix"][2] = 1
        out_path.write_text(json.dumps(doc))
        code, out, _ = run(capsys, "cert-verify", str(out_path), "--family", "canonical")
        assert code == 1 and "INVALID" in out

    def test_diag_deterministic_bytes(self, tmp_path, capsys):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        run(capsys, "diag", "canonical", "--depth", "16", "--out", str(a))
        run(capsys, "diag", "canonical", "--depth", "16", "--out", str(b))
        assert a.read_bytes() == b.read_bytes()

    def test_suites_seq_scope(self, capsys):
        code, out, _ = run(capsys, "suites", "seq", "--samples", "60")
        assert code == 0
        assert "seq-order-axioms" in out and "suites seq: pass" in out

    def test_family_file_diag(self, tmp_path, capsys):
        fam = tmp_path / "one.json"
        fam.write_text(
            json.dumps(
                {
                    "opens": [
                        {
                            "families": [
                                {"kind": "x_rank_at_least", "k": 2},
                                {"kind": "sigma_len_at_least", "k": 1},
                            ]
                        }
                    ]
                }
            )
        )
        code, out, _ = run(capsys, "diag", str(fam), "--depth", "1", "--out", str(tmp_path / "c.json"))
        assert code == 0
        assert "prefix: [2]" in out

    def test_bad_family_json_is_usage(self, tmp_path, capsys):
        fam = tmp_path / "bad.json"
        fam.write_text(json.dumps({"opens": [{"families": [{"kind": "mystery"}]}]}))
        code, _, err = run(capsys, "diag", str(fam), "--depth", "1")
        assert code == 64

    def test_unreachable_server_is_usage(self, capsys):
        code, _, err = run(
            capsys, "--server", "http://127.0.0.1:1", "order", "x(1,1)", "x(1,2)"
        )
        assert code == 64
        assert "cannot reach" in err
