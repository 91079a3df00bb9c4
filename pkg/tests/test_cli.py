import json

import pytest

from wmpower import ecuador_document
from wmpower.cli import main


def write_game(tmp_path, name, quota, weights, players=None):
    obj = {"quota": str(quota), "weights": [str(w) for w in weights]}
    if players:
        obj["players"] = list(players)
    path = tmp_path / name
    path.write_text(json.dumps(obj))
    return str(path)


@pytest.fixture
def reference_game(tmp_path):
    return write_game(tmp_path, "ref.json", 51, (50, 46, 4, 1), "WXYZ")


class TestPower:
    def test_table_output(self, reference_game, capsys):
        assert main(["power", "--game", reference_game, "--index", "cm,hcm"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0].split() == ["index", "W", "X", "Y", "Z"]
        assert lines[1].split() == ["CM", "0.6068", "0.3453", "0.0381", "0.0098"]
        assert lines[2].split() == ["HCM", "0.5952", "0.3651", "0.0317", "0.0079"]

    def test_json_output_with_exact(self, reference_game, capsys):
        assert (
            main(
                [
                    "power",
                    "--game",
                    reference_game,
                    "--index",
                    "pg",
                    "--format",
                    "json",
                    "--exact",
                ]
            )
            == 0
        )
        payload = json.loads(capsys.readouterr().out)
        assert payload["indices"][0]["exact"] == ["1/3", "2/9", "2/9", "2/9"]

    def test_csv_output(self, reference_game, capsys):
        assert (
            main(
                ["power", "--game", reference_game, "--index", "ss", "--format", "csv"]
            )
            == 0
        )
        out = capsys.readouterr().out
        assert out.splitlines()[1] == "SS,0.5000,0.1667,0.1667,0.1667"

    def test_defaults_to_all_indices(self, reference_game, capsys):
        assert main(["power", "--game", reference_game]) == 0
        out = capsys.readouterr().out
        for label in ("SS", "BZ", "DP", "PG", "CM", "HCM"):
            assert any(line.startswith(label + " ") for line in out.splitlines())

    def test_missing_file_is_validation_failure(self, capsys):
        assert main(["power", "--game", "/does/not/exist.json"]) == 2
        assert "error:" in capsys.readouterr().err

    def test_invalid_game_is_validation_failure(self, tmp_path, capsys):
        path = write_game(tmp_path, "bad.json", 0, (1, 1))
        assert main(["power", "--game", path]) == 2
        assert "quota" in capsys.readouterr().err

    def test_unknown_index_is_usage_error(self, reference_game):
        with pytest.raises(SystemExit) as exc_info:
            main(["power", "--game", reference_game, "--index", "xx"])
        assert exc_info.value.code == 2

    def test_dictator_gets_everything(self, tmp_path, capsys):
        path = write_game(tmp_path, "dictator.json", 1, (1, 0, 0))
        assert main(["power", "--game", path, "--index", "pg"]) == 0
        assert capsys.readouterr().out.splitlines()[1].split()[1:] == [
            "1.0000", "0.0000", "0.0000",
        ]


class TestMwc:
    def test_lists_coalitions_with_names(self, tmp_path, capsys):
        path = write_game(tmp_path, "g.json", 4, (3, 2, 1), ("A", "B", "C"))
        assert main(["mwc", "--game", path]) == 0
        out = capsys.readouterr().out
        assert "2 minimal winning coalitions:" in out
        assert "{A, B}" in out
        assert "{A, C}" in out


class TestMerge:
    def test_mergeable_pair_prints_union(self, tmp_path, capsys):
        a = write_game(tmp_path, "a.json", 4, (3, 2, 0))
        b = write_game(tmp_path, "b.json", 4, (3, 0, 1))
        assert main(["merge", a, b]) == 0
        out = capsys.readouterr().out
        assert "WM-mergeable: yes" in out
        assert "union: [4; 3, 2, 1]" in out

    def test_check_only_suppresses_union(self, tmp_path, capsys):
        a = write_game(tmp_path, "a.json", 4, (3, 2, 0))
        b = write_game(tmp_path, "b.json", 4, (3, 0, 1))
        assert main(["merge", a, b, "--check-only"]) == 0
        assert "union:" not in capsys.readouterr().out

    def test_non_mergeable_pair_reports_failed_condition(self, tmp_path, capsys):
        a = write_game(tmp_path, "a.json", 5, (1, 2, 3))
        b = write_game(tmp_path, "b.json", 6, (1, 4, 5))
        assert main(["merge", a, b]) == 0
        out = capsys.readouterr().out
        assert "condition 1 (equal quotas): FAIL" in out
        assert "WM-mergeable: no" in out
        assert "union:" not in out

    def test_mismatched_player_counts(self, tmp_path, capsys):
        a = write_game(tmp_path, "a.json", 2, (1, 1))
        b = write_game(tmp_path, "b.json", 2, (1, 1, 1))
        assert main(["merge", a, b]) == 2

    def test_single_file_is_validation_failure(self, tmp_path, capsys):
        a = write_game(tmp_path, "a.json", 2, (1, 1))
        assert main(["merge", a]) == 2
        assert "two games" in capsys.readouterr().err


class TestAxioms:
    def test_thm1_suite_for_cm(self, capsys):
        assert main(["axioms", "--index", "cm", "--suite", "thm1"]) == 0
        out = capsys.readouterr().out
        assert "satisfied on this evidence: EFF, NP, SYMw, DPMw" in out

    def test_thm1_suite_flags_hcm(self, capsys):
        assert main(["axioms", "--index", "hcm", "--suite", "thm1"]) == 0
        out = capsys.readouterr().out
        assert "DPMw  FAIL" in out

    def test_thm2_suite_for_hcm_with_samples(self, capsys):
        assert (
            main(
                [
                    "axioms",
                    "--index",
                    "hcm",
                    "--suite",
                    "thm2",
                    "--samples",
                    "15",
                    "--seed",
                    "9",
                ]
            )
            == 0
        )
        out = capsys.readouterr().out
        assert "satisfied on this evidence: EFF, NP, SYMw, HCMw" in out

    def test_classic_suite_for_ss(self, capsys):
        assert main(["axioms", "--index", "ss", "--suite", "classic"]) == 0
        out = capsys.readouterr().out
        assert "TRA   PASS" in out

    def test_classic_suite_rejects_weight_only_indices(self, capsys):
        assert main(["axioms", "--index", "cm", "--suite", "classic"]) == 2

    def test_games_directory(self, tmp_path, capsys):
        write_game(tmp_path, "a.json", 4, (3, 2, 0))
        write_game(tmp_path, "b.json", 51, (50, 46, 4, 1))
        assert (
            main(["axioms", "--index", "cm", "--suite", "thm1", "--games", str(tmp_path)])
            == 0
        )
        assert "games: 2" in capsys.readouterr().out

    def test_empty_games_directory(self, tmp_path):
        assert (
            main(["axioms", "--index", "cm", "--suite", "thm1", "--games", str(tmp_path)])
            == 2
        )


class TestDemo:
    def test_single_period_table(self, capsys):
        assert (
            main(
                [
                    "demo",
                    "ecuador",
                    "--period",
                    "may21",
                    "--index",
                    "ss,dp,pg,cm,hcm",
                    "--digits",
                    "4",
                ]
            )
            == 0
        )
        out = capsys.readouterr().out
        assert "National Assembly of Ecuador, May 2021" in out
        assert "minimal winning coalitions: 11" in out
        rows = {
            line.split()[0]: line.split()[1:]
            for line in out.splitlines()
            if line and line.split()[0] in ("SS", "DP", "PG", "CM", "HCM")
        }
        assert rows["SS"] == ["0.4000", "0.2000", "0.1000", "0.1000", "0.1000", "0.1000"]
        assert rows["CM"] == ["0.3954", "0.1675", "0.1271", "0.1271", "0.0881", "0.0948"]

    def test_all_periods(self, capsys):
        assert main(["demo", "ecuador", "--period", "all", "--index", "hcm"]) == 0
        out = capsys.readouterr().out
        for period in ("May", "June", "July", "12 October", "26 October", "December"):
            assert f"National Assembly of Ecuador, {period} 2021" in out

    def test_unknown_period_is_usage_error(self):
        with pytest.raises(SystemExit) as exc_info:
            main(["demo", "ecuador", "--period", "sep21"])
        assert exc_info.value.code == 2


class TestUsageErrors:
    def test_unknown_subcommand(self):
        with pytest.raises(SystemExit) as exc_info:
            main(["frobnicate"])
        assert exc_info.value.code == 2

    def test_no_arguments(self):
        with pytest.raises(SystemExit) as exc_info:
            main([])
        assert exc_info.value.code == 2

    def test_console_entry_point_matches_module(self):
        # the documented invocation paths share one implementation
        from wmpower.cli import build_parser

        parser = build_parser()
        assert parser.prog == "wmpower"
