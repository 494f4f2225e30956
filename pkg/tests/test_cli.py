import csv
import io
import json
import subprocess
import sys

import pytest

from pfpower.cli import main, run


def test_dec_hcm_row():
    rows = list(csv.DictReader(io.StringIO(
        run(["indices", "--fixture", "dec_2021", "--indices", "hcm", "--format", "csv"]))))
    assert [r["rounded"] for r in rows] == [
        "0.5547", "0.1248", "0.1398", "0.0699", "0.0699", "0.0409"]
    assert [r["player"] for r in rows] == ["UNES", "MUPP", "BAN", "ID", "PSC", "IND"]


def test_json_carries_exact_rationals():
    out = json.loads(run(["indices", "--fixture", "dec_2021", "--indices", "hcm",
                          "--format", "json"]))
    unes = out["indices"]["hcm"]["UNES"]
    assert unes == {"num": 1222, "den": 2203, "rounded": "0.5547"}
    assert out["minimal_winning_count"] == 39


def test_single_player_every_index_is_one(tmp_path):
    p = tmp_path / "solo.json"
    p.write_text(json.dumps({"schema_version": 1, "form": "partition",
                             "players": [{"id": "x", "weight": 5}]}))
    rows = list(csv.DictReader(io.StringIO(
        run(["indices", "--spec", str(p), "--format", "csv"]))))
    assert len(rows) == 4
    assert all(r["rounded"] == "1.0000" for r in rows)


def test_mwec_row_counts():
    for label, count in (("jun_2021", 37), ("oct12_2021", 40)):
        out = run(["mwec", "--fixture", label, "--format", "csv"])
        assert len(out.strip().splitlines()) - 1 == count


def test_mwec_sorted_by_active_size():
    rows = list(csv.DictReader(io.StringIO(run(["mwec", "--fixture", "jun_2021",
                                                "--format", "csv"]))))
    sizes = [len(r["active"].split(";")) for r in rows]
    assert sizes == sorted(sizes)
    assert rows[0]["active"] == "UNES"


def test_ties_dec():
    out = json.loads(run(["ties", "--fixture", "dec_2021", "--format", "json"]))
    (row,) = out["partitions"]
    assert sorted(row["seats"], reverse=True) == [56, 56, 25]


def test_compare_cm_ban_row():
    labels = ["jun_2021", "jul_2021", "oct12_2021", "oct26_2021", "dec_2021"]
    rows = list(csv.DictReader(io.StringIO(
        run(["compare", *labels, "--indices", "cm", "--format", "csv"]))))
    ban = [r for r in rows if r["player"] == "BAN"]
    assert [r["period"] for r in ban] == labels
    assert [r["rounded"] for r in ban] == ["0.0889", "0.0973", "0.1167", "0.1201", "0.1301"]
    # deltas come from the exact values, not from the rounded cells
    assert ban[0]["delta"] == "" and ban[1]["delta"] == "+0.0085"


def test_compare_table_shows_deltas():
    out = run(["compare", "jun_2021", "dec_2021", "--indices", "pg"])
    line = next(x for x in out.splitlines() if x.startswith("MUPP"))
    assert "0.1111" in line and "0.1375 (+0.0264)" in line


@pytest.mark.parametrize("fmt", ["csv", "json", "table"])
def test_output_is_deterministic(fmt):
    argv = ["indices", "--fixture", "may_2021", "--format", fmt]
    assert run(argv) == run(argv)
    argv = ["mwec", "--fixture", "oct26_2021", "--format", fmt]
    assert run(argv) == run(argv)


def test_exit_codes(tmp_path, capsys):
    assert main(["validate", "--fixture", "may_2021"]) == 0
    assert main(["compare", "jun_2021"]) == 2
    bad = tmp_path / "bad.json"
    bad.write_text('{"schema_version": 1, "form": "partition", "players": []}')
    assert main(["mwec", "--spec", str(bad)]) == 2
    assert main(["mwec", "--spec", str(tmp_path / "missing.json")]) == 2
    big = tmp_path / "big.csv"
    big.write_text("id,weight\n" + "".join(f"p{i},{i + 1}\n" for i in range(13)))
    assert main(["mwec", "--spec", str(big)]) == 3
    assert "capacity" in capsys.readouterr().err


def test_tie_rule_override():
    out = run(["mwec", "--fixture", "may_2021", "--tie-rule", "ties_all_win",
               "--format", "csv"])
    assert len(out.strip().splitlines()) > 1
    with pytest.raises(SystemExit):
        run(["mwec", "--fixture", "may_2021", "--tie-rule", "coin"])


def test_csv_spec_with_quota(tmp_path):
    p = tmp_path / "players.csv"
    p.write_text("id,weight\na,2\nb,1\nc,1\n")
    out = run(["mwec", "--spec", str(p), "--quota", "3", "--format", "csv"])
    assert out.splitlines()[1:] == ["a;b", "a;c"]


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "pfpower", "validate", "--fixture", "dec_2021"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0
    assert "players: 6" in res.stdout
