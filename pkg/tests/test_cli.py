"""CLI contract: subcommands, JSON/CSV shapes, exit codes, determinism."""

import json

import pytest

from copsrobbers.cli import main
from copsrobbers.graphio import parse_graph


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestCopnumber:
    def test_petersen(self, capsys):
        code, out, _ = run(capsys, "copnumber", "--gen", "petersen")
        assert code == 0
        blob = json.loads(out)
        assert blob["cop_number"] == 3
        solve_json = blob["components"][0]["solve"]
        assert solve_json["k"] == 3 and solve_json["cop_win"] is True

    def test_cycle4(self, capsys):
        code, out, _ = run(capsys, "copnumber", "--gen", "cycle:4")
        assert code == 0
        assert json.loads(out)["cop_number"] == 2

    def test_missing_file_is_input_error(self, capsys):
        code, _, err = run(capsys, "copnumber", "--file", "does-not-exist.edges")
        assert code == 1
        assert err

    def test_state_limit_exit_code(self, capsys):
        code, _, err = run(
            capsys, "copnumber", "--gen", "petersen", "--state-limit", "10"
        )
        assert code == 2
        assert "limit" in err

    def test_no_source_is_input_error(self, capsys):
        code, _, _ = run(capsys, "copnumber")
        assert code == 1

    def test_bad_family_is_input_error(self, capsys):
        code, _, _ = run(capsys, "copnumber", "--gen", "nonsense:3")
        assert code == 1

    def test_out_file(self, capsys, tmp_path):
        target = tmp_path / "result.json"
        code, out, _ = run(
            capsys, "copnumber", "--gen", "path:4", "--out", str(target)
        )
        assert code == 0 and out == ""
        assert json.loads(target.read_text())["cop_number"] == 1

    def test_disconnected_file_sums_components(self, capsys, tmp_path):
        target = tmp_path / "two_triangles.edges"
        target.write_text("6\n0 1\n0 2\n1 2\n3 4\n3 5\n4 5\n")
        code, out, _ = run(capsys, "copnumber", "--file", str(target))
        blob = json.loads(out)
        assert code == 0
        assert blob["cop_number"] == 2
        assert len(blob["components"]) == 2
        # placements are reported in original vertex labels
        assert blob["components"][1]["solve"]["initial_placement"][0] in (3, 4, 5)


class TestBounds:
    def test_heawood_girth5_lower(self, capsys):
        code, out, _ = run(capsys, "bounds", "--gen", "heawood")
        blob = json.loads(out)
        assert code == 0
        assert blob["bounds"]["c_lower_girth5"]["value"] == 3

    def test_petersen_known_genus(self, capsys):
        code, out, _ = run(capsys, "bounds", "--gen", "petersen", "--genus", "1")
        blob = json.loads(out)
        assert blob["bounds"]["c_upper_schroder"]["value"] == 4
        assert blob["cop_upper_basis"] == "known-genus"
        assert blob["certificate"] is True

    def test_complete8_brackets_known_genus(self, capsys):
        code, out, _ = run(capsys, "bounds", "--gen", "complete:8")
        blob = json.loads(out)
        lo = blob["bounds"]["genus_lower"]["value"]
        hi = blob["bounds"]["genus_upper"]["value"]
        assert lo <= 2 <= hi


class TestGuard:
    def test_cycle6_clean(self, capsys):
        code, out, _ = run(
            capsys,
            "guard",
            "--gen", "cycle:6",
            "--path", "0,1,2,3",
            "--trials", "200",
            "--cop-start", "5",
        )
        blob = json.loads(out)
        assert code == 0
        assert blob["violations"] == 0

    def test_non_isometric_exit1(self, capsys):
        code, _, err = run(
            capsys, "guard", "--gen", "cycle:6", "--path", "0,1,2,3,4"
        )
        assert code == 1
        assert "isometric" in err

    def test_adversarial_grid(self, capsys):
        code, out, _ = run(
            capsys,
            "guard",
            "--gen", "grid:4,4",
            "--path", "0,1,2,3",
            "--policy", "adversarial",
            "--trials", "25",
            "--cop-start", "12",
        )
        blob = json.loads(out)
        assert code == 0
        assert blob["violations"] == 0
        assert blob["policy"] == "adversarial"

    def test_trace_files(self, capsys, tmp_path):
        traces = tmp_path / "traces"
        code, out, _ = run(
            capsys,
            "guard",
            "--gen", "cycle:6",
            "--path", "0,1,2,3",
            "--trials", "4",
            "--cop-start", "5",
            "--trace-dir", str(traces),
        )
        assert code == 0
        files = sorted(traces.iterdir())
        assert [f.name for f in files] == [f"trial_000{i}.json" for i in range(4)]
        blob = json.loads(files[0].read_text())
        assert blob["trace"][0] == {"step": 0, "mover": "cops", "positions": [5]}
        assert blob["outcome"] in ("captured", "survived")


class TestProbe:
    def test_deterministic_csv(self, capsys):
        args = ("probe", "--n", "12,16", "--seeds", "1,2", "--state-limit", "500000")
        code1, out1, _ = run(capsys, *args)
        code2, out2, _ = run(capsys, *args)
        assert code1 == code2 == 0
        assert out1 == out2
        assert out1.startswith("# copsrobbers probe")

    def test_columns_frozen(self, capsys):
        code, out, _ = run(capsys, "probe", "--n", "10", "--seeds", "3")
        rows = [line for line in out.splitlines() if not line.startswith("#")]
        assert rows[0] == (
            "n,seed,e,alpha_num,alpha_den,genus_upper,genus_lower,"
            "bkl_lower_ind,bkl_upper_ind,cop_number,error"
        )
        assert len(rows) == 2

    def test_rows_have_cop_numbers_at_desk_scale(self, capsys):
        code, out, _ = run(capsys, "probe", "--n", "14,18", "--seeds", "0,1,2")
        data_rows = [
            line.split(",")
            for line in out.splitlines()
            if line and not line.startswith(("#", "n,"))
        ]
        assert len(data_rows) == 6
        for row in data_rows:
            n, seed, e = int(row[0]), int(row[1]), int(row[2])
            genus_upper, cop = int(row[5]), row[9]
            assert cop != ""
            assert int(cop) <= 2 * genus_upper + 3

    def test_state_limit_goes_to_error_column(self, capsys):
        code, out, _ = run(
            capsys, "probe", "--n", "20", "--seeds", "0", "--state-limit", "50"
        )
        assert code == 0
        row = [
            line for line in out.splitlines() if line and not line.startswith(("#", "n,"))
        ][0]
        fields = row.split(",")
        assert fields[9] == ""  # cop_number missing
        assert "state-limit" in fields[10]

    def test_explicit_p(self, capsys):
        code, out, _ = run(
            capsys, "probe", "--n", "12", "--seeds", "5", "--p", "0.5"
        )
        assert code == 0
        assert "p=0.5" in out

    def test_metadata_lines(self, capsys):
        _, out, _ = run(capsys, "probe", "--n", "10", "--seeds", "0")
        assert "# rng: philox4x64\n" in out
        assert "# log: natural\n" in out

    def test_worker_pool_output_identical(self, capsys):
        base = ("probe", "--n", "10,14", "--seeds", "0,1")
        _, seq, _ = run(capsys, *base)
        _, par, _ = run(capsys, *base, "--workers", "2")
        assert seq == par


class TestGen:
    def test_round_trip(self, capsys, tmp_path):
        target = tmp_path / "g.edges"
        code, _, _ = run(capsys, "gen", "--gen", "grid:3,3", "--out", str(target))
        assert code == 0
        g = parse_graph(target.read_text())
        assert g.n == 9 and g.edge_count == 12

    def test_projective_labels_in_comments(self, capsys):
        code, out, _ = run(capsys, "gen", "--gen", "pg:2")
        assert code == 0
        assert "point(" in out and "line[" in out
        g = parse_graph(out)
        assert g.n == 14

    def test_gnp_spec(self, capsys):
        code, out, _ = run(capsys, "gen", "--gen", "gnp:12,0.5", "--seed", "9")
        assert code == 0
        g = parse_graph(out)
        assert g.n == 12

    def test_missing_gen_is_error(self, capsys):
        code, _, _ = run(capsys, "gen")
        assert code == 1


class TestParser:
    def test_bad_usage_exits_1(self, capsys):
        assert main(["copnumber", "--not-a-flag"]) == 1

    def test_version(self, capsys):
        assert main(["--version"]) == 0
