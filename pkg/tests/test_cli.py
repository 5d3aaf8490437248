import json

from qpow.cli import main
from qpow.graph6 import emit_graph6, parse_graph6
from qpow.graphs import construct_gi
from qpow.search import enumerate_graphs


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestSpectrum:
    def test_q_k3(self, capsys):
        code, out, _ = run(capsys, "spectrum", "--graph6", "Bw", "--matrix", "Q")
        assert code == 0
        assert out.strip() == "4 1 1"

    def test_l_k3(self, capsys):
        code, out, _ = run(capsys, "spectrum", "--graph6", "Bw", "--matrix", "L")
        assert code == 0
        assert out.strip() == "3 3 0"

    def test_twelve_significant_digits(self, capsys):
        g6 = emit_graph6(construct_gi(4, 1, 1))
        code, out, _ = run(capsys, "spectrum", "--graph6", g6, "--matrix", "Q")
        assert code == 0
        # q1 = 2.5 + sqrt(17)/2 printed at 12 significant digits
        assert out.split()[0] == "4.56155281281"

    def test_bad_graph6_usage_error(self, capsys):
        code, _, err = run(capsys, "spectrum", "--graph6", "!!", "--matrix", "Q")
        assert code == 2 and err


class TestInvariant:
    def test_salpha(self, capsys):
        code, out, _ = run(capsys, "invariant", "--graph6", "Bw", "--name", "Salpha",
                           "--alpha", "2")
        assert code == 0 and out.strip() == "18"

    def test_salpha_missing_alpha(self, capsys):
        code, _, err = run(capsys, "invariant", "--graph6", "Bw", "--name", "Salpha")
        assert code == 2 and "--alpha" in err

    def test_kf(self, capsys):
        code, out, _ = run(capsys, "invariant", "--graph6", "Bg", "--name", "Kf")
        assert code == 0 and out.strip() == "4"

    def test_m1(self, capsys):
        code, out, _ = run(capsys, "invariant", "--graph6", "C~", "--name", "M1")
        assert code == 0 and out.strip() == "36"

    def test_disconnected_kf_usage_error(self, capsys):
        code, _, err = run(capsys, "invariant", "--graph6", "A?", "--name", "Kf")
        assert code == 2


class TestConstruct:
    def test_complete_summary(self, capsys):
        code, out, _ = run(capsys, "construct", "complete", "4")
        assert code == 0 and "n=4 m=6" in out

    def test_emit_roundtrip(self, capsys):
        code, out, _ = run(capsys, "construct", "gi", "6", "2", "2", "--emit", "graph6")
        assert code == 0
        assert parse_graph6(out.strip()) == construct_gi(6, 2, 2)

    def test_bipartite(self, capsys):
        code, out, _ = run(capsys, "construct", "bipartite", "2", "3", "--emit", "graph6")
        assert code == 0
        g = parse_graph6(out.strip())
        assert g.bipartition() == (2, 3)

    def test_param_count_error(self, capsys):
        code, _, err = run(capsys, "construct", "complete", "4", "5")
        assert code == 2

    def test_range_error(self, capsys):
        code, _, err = run(capsys, "construct", "gi", "5", "2", "2")
        assert code == 2


class TestBounds:
    def test_thm43(self, capsys):
        code, out, _ = run(capsys, "bounds", "--id", "thm43-upper", "--n", "5", "--k", "2",
                           "--alpha", "1")
        assert code == 0 and out.strip() == "16"

    def test_thm31_needs_parts(self, capsys):
        code, out, _ = run(capsys, "bounds", "--id", "thm31-lower", "--r", "2", "--s", "3",
                           "--alpha", "-1")
        assert code == 0 and out.strip() == "1.53333333333"
        code, _, err = run(capsys, "bounds", "--id", "thm31-lower", "--n", "5", "--alpha", "-1")
        assert code == 2

    def test_alias(self, capsys):
        code, out, _ = run(capsys, "bounds", "--id", "thm32", "--n", "4", "--alpha", "0.5")
        assert code == 0 and out.strip() == "4.82842712475"

    def test_alpha_out_of_range(self, capsys):
        code, _, err = run(capsys, "bounds", "--id", "thm32-upper", "--n", "4", "--alpha", "3")
        assert code == 2


class TestCheck:
    def test_inapplicable_exit_2(self, capsys):
        code, out, _ = run(capsys, "check", "--id", "thm32-upper", "--graph6", "C~",
                           "--alpha", "0.5")
        assert code == 2
        doc = json.loads(out)
        assert doc["applicable"] is False and "bipartite" in doc["reason"]

    def test_pass_exit_0(self, capsys):
        code, out, _ = run(capsys, "check", "--id", "thm41-upper", "--graph6", "C~",
                           "--alpha", "2")
        assert code == 0
        doc = json.loads(out)
        assert doc["equality"] is True

    def test_violation_exit_1(self, capsys):
        code, out, _ = run(capsys, "check", "--id", "conj44-lower", "--graph6", "Bg",
                           "--alpha", "-1", "--k", "2")
        assert code == 1
        doc = json.loads(out)
        assert doc["slack"] < 0

    def test_family_alias(self, capsys):
        code, out, _ = run(capsys, "check", "--id", "conj44", "--graph6", "Bg",
                           "--alpha", "-1", "--k", "2")
        assert code == 1

    def test_interlacing(self, capsys):
        code, out, _ = run(capsys, "check", "--id", "interlacing", "--graph6", "C~")
        assert code == 0 and json.loads(out)["passed"] is True

    def test_monotonicity(self, capsys):
        code, out, _ = run(capsys, "check", "--id", "monotonicity", "--graph6", "C~",
                           "--alpha", "1")
        assert code == 0

    def test_cospectral_inapplicable(self, capsys):
        code, out, _ = run(capsys, "check", "--id", "cospectral", "--graph6", "Bw")
        assert code == 2

    def test_identities(self, capsys):
        code, out, _ = run(capsys, "check", "--id", "identities", "--graph6", "C~")
        assert code == 0 and json.loads(out)["passed"] is True

    def test_unknown_id(self, capsys):
        code, _, err = run(capsys, "check", "--id", "bogus", "--graph6", "C~")
        assert code == 2

    def test_table_format(self, capsys):
        code, out, _ = run(capsys, "check", "--id", "thm41-upper", "--graph6", "C~",
                           "--alpha", "2", "--format", "table")
        assert code == 0 and "equality = True" in out


class TestScan:
    def test_clean_scan_exit_0(self, capsys):
        code, out, _ = run(capsys, "scan", "--id", "thm32", "--max-n", "5",
                           "--alpha-grid", "0.5,1")
        assert code == 0
        doc = json.loads(out)
        assert doc["graphs_scanned"] == 1 + 3 + 19 + 195
        assert doc["violations"] == []

    def test_violations_exit_1(self, capsys):
        code, out, _ = run(capsys, "scan", "--id", "conj44", "--max-n", "4",
                           "--alpha-grid", "-1")
        assert code == 1
        doc = json.loads(out)
        assert doc["violations"]
        assert all(v["reverified"] for v in doc["violations"])

    def test_csv_format(self, capsys):
        code, out, _ = run(capsys, "scan", "--id", "conj44", "--max-n", "4",
                           "--alpha-grid", "-1", "--format", "csv")
        assert code == 1
        assert out.splitlines()[0] == "graph6,n,k,alpha,bound_id,invariant,bound,margin"

    def test_table_format(self, capsys):
        code, out, _ = run(capsys, "scan", "--id", "thm41", "--max-n", "4",
                           "--alpha-grid", "1", "--format", "table")
        assert code == 0 and "scanned" in out

    def test_stream_input(self, tmp_path, capsys):
        lines = [emit_graph6(g) for g in enumerate_graphs(4, "connected")]
        path = tmp_path / "graphs.g6"
        path.write_text("\n".join(lines) + "\n")
        code, out, _ = run(capsys, "scan", "--id", "thm41", "--max-n", "4",
                           "--alpha-grid", "1,2", "--input", str(path))
        assert code == 0
        doc = json.loads(out)
        assert doc["source"] == "stream" and doc["graphs_scanned"] == 38

    def test_stream_errors_to_stderr(self, tmp_path, capsys):
        path = tmp_path / "bad.g6"
        path.write_text("Bw\n!!\n")
        code, out, err = run(capsys, "scan", "--id", "thm41", "--max-n", "4",
                             "--alpha-grid", "1", "--input", str(path))
        assert code == 0 and "line 2" in err

    def test_bad_grid(self, capsys):
        code, _, err = run(capsys, "scan", "--id", "thm32", "--max-n", "4",
                           "--alpha-grid", "zebra")
        assert code == 2

    def test_alpha_zero_rejected(self, capsys):
        code, _, err = run(capsys, "scan", "--id", "thm32", "--max-n", "4",
                           "--alpha-grid", "0")
        assert code == 2


class TestExitCodes:
    def test_usage_error(self, capsys):
        assert run(capsys, "spectrum", "--graph6", "Bw")[0] == 2  # missing --matrix

    def test_unknown_command(self, capsys):
        assert run(capsys, "frobnicate")[0] == 2

    def test_numerical_failure_exit_3(self, capsys, monkeypatch):
        from qpow import cli
        from qpow.spectra import EigensolverError

        def boom(g):
            raise EigensolverError("forced")

        monkeypatch.setitem(
            cli.__dict__, "q_spectrum", boom
        )
        code, _, err = run(capsys, "spectrum", "--graph6", "Bw", "--matrix", "Q")
        assert code == 3 and "numerical failure" in err
