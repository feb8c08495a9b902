import pytest

import dehnsurg as ds
from dehnsurg.cli import main

CORPUS = str(ds.bundled_corpus_path())


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_dedekind(capsys):
    code, out, _ = run(capsys, "dedekind", "1", "3")
    assert code == 0 and out == "1/18\n"


def test_lens(capsys):
    code, out, _ = run(capsys, "lens", "3", "1")
    assert code == 0 and out == "lambda=1/18 tau_cg=-2/3\n"


def test_alexander(capsys):
    code, out, _ = run(capsys, "alexander", "--knot", CORPUS, "--name", "trefoil_right")
    assert code == 0 and out == "T - 1 + T^-1\n"


def test_casson_walker(capsys):
    code, out, _ = run(
        capsys, "casson-walker", "--knot", CORPUS, "--name", "trefoil_right", "--slope", "1/1"
    )
    assert code == 0 and out == "-2\n"


def test_casson_walker_infinite_slope(capsys):
    code, out, _ = run(
        capsys, "casson-walker", "--knot", CORPUS, "--name", "trefoil_right", "--slope", "inf"
    )
    assert code == 0 and out == "0\n"


def test_casson_gordon(capsys):
    code, out, _ = run(
        capsys, "casson-gordon", "--knot", CORPUS, "--name", "trefoil_right", "--slope", "2/1"
    )
    assert code == 0 and out == "2\n"


def test_casson_gordon_verbose(capsys):
    code, out, _ = run(
        capsys,
        "casson-gordon",
        "--knot",
        CORPUS,
        "--name",
        "trefoil_right",
        "--slope",
        "2/1",
        "--verbose",
    )
    assert code == 0
    assert out.splitlines() == ["s(1,2)=0", "sigma(K,2)=-2", "2"]


def test_signature(capsys):
    code, out, _ = run(capsys, "signature", "--knot", CORPUS, "--name", "trefoil_right", "--m", "3")
    assert code == 0 and out == "-4\n"


def test_signature_singular_exits_1(capsys):
    code, _, err = run(capsys, "signature", "--knot", CORPUS, "--name", "trefoil_right", "--m", "6")
    assert code == 1
    assert "vanishes" in err


def test_hf_rank_both(capsys):
    code, out, _ = run(
        capsys,
        "hf-rank",
        "--knot",
        CORPUS,
        "--name",
        "trefoil_right",
        "--slope",
        "1/2",
        "--both",
    )
    assert code == 0 and out == "oracle=3 formula=3\n"


def test_hf_rank_single_modes(capsys):
    code, out, _ = run(
        capsys, "hf-rank", "--knot", CORPUS, "--name", "figure_eight", "--slope", "1/1", "--oracle"
    )
    assert code == 0 and out == "oracle=3\n"
    code, out, _ = run(
        capsys, "hf-rank", "--knot", CORPUS, "--name", "figure_eight", "--slope", "1/1", "--formula"
    )
    assert code == 0 and out == "formula=3\n"


def test_hf_rank_missing_data(capsys):
    code, _, err = run(
        capsys, "hf-rank", "--knot", CORPUS, "--name", "twist_5_2", "--slope", "1/1"
    )
    assert code == 1 and "no knot Floer data" in err


def test_distinguish(capsys):
    code, out, _ = run(
        capsys,
        "distinguish",
        "--knot",
        CORPUS,
        "--name",
        "trefoil_right",
        "--slopes",
        "1/1",
        "1/2",
    )
    assert code == 0
    assert out == "tag=DistinguishedByCassonWalker value1=-2 value2=-4\n"


def test_distinguish_unknot_cosmetic(capsys):
    code, out, _ = run(
        capsys, "distinguish", "--knot", CORPUS, "--name", "unknot", "--slopes", "5/2", "5/3"
    )
    assert code == 0 and out == "tag=UnknotCosmetic\n"


def test_distinguish_verbose(capsys):
    code, out, _ = run(
        capsys,
        "distinguish",
        "--knot",
        CORPUS,
        "--name",
        "trefoil_right",
        "--slopes",
        "5/1",
        "5/2",
        "--verbose",
    )
    assert code == 0
    lines = out.splitlines()
    assert "s(1,5)=1/5" in lines
    assert "s(2,5)=0" in lines
    assert "sigma(K,5)=-8" in lines
    assert lines[-1].startswith("tag=DistinguishedByCassonGordon")


def test_distinguish_negative_slopes(capsys):
    code, out, _ = run(
        capsys,
        "distinguish",
        "--knot",
        CORPUS,
        "--name",
        "trefoil_right",
        "--slopes",
        "-1/1",
        "-1/2",
    )
    assert code == 0
    assert out == "tag=DistinguishedByCassonWalker value1=-2 value2=-4\n"


def test_distinguish_mixed_sign_exits_1(capsys):
    code, _, err = run(
        capsys,
        "distinguish",
        "--knot",
        CORPUS,
        "--name",
        "trefoil_right",
        "--slopes",
        "-1/1",
        "1/2",
    )
    assert code == 1 and "mixed-sign" in err


def test_unknown_name_exits_1(capsys):
    code, _, err = run(capsys, "alexander", "--knot", CORPUS, "--name", "nonesuch")
    assert code == 1 and "no knot named" in err


def test_usage_error_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["dedekind", "1"])
    assert exc.value.code == 2
    capsys.readouterr()
    with pytest.raises(SystemExit) as exc:
        main(["casson-walker", "--knot", CORPUS, "--name", "unknot", "--slope", "x/y"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_sweep_cli(tmp_path, capsys):
    out_csv = tmp_path / "report.csv"
    code, out, _ = run(
        capsys,
        "sweep",
        "--knot",
        CORPUS,
        "--name",
        "trefoil_right",
        "--pmax",
        "4",
        "--qmax",
        "4",
        "--out",
        str(out_csv),
    )
    assert code == 0
    lines = out_csv.read_text().splitlines()
    assert lines[0] == "name,p,q1,q2,tag,witness1,witness2"
    assert "rows=" in out
    # identical second run, byte for byte
    run(capsys, "sweep", "--knot", CORPUS, "--name", "trefoil_right", "--pmax", "4", "--qmax", "4", "--out", str(out_csv) + ".2")
    assert out_csv.read_text() == (tmp_path / "report.csv.2").read_text()


def test_sweep_exit_code_on_inconclusive(tmp_path, capsys):
    # vanishing second derivative, no Floer data, not the alternating form:
    # pairs with equal Dedekind sums stay inconclusive and fail the sweep
    import json

    corpus = tmp_path / "mystery.json"
    corpus.write_text(json.dumps([{"name": "mystery", "alexander": {"a0": 7, "a": [-4, 1]}}]))
    code, out, err = run(
        capsys,
        "sweep",
        "--knot",
        str(corpus),
        "--pmax",
        "3",
        "--qmax",
        "3",
        "--out",
        str(tmp_path / "r.csv"),
    )
    assert code == 1
    assert "inconclusive" in err.lower()
