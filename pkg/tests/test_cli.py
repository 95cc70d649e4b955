import json
import subprocess
import sys
from pathlib import Path

import pytest

from neutre.cli import main

DATA = Path(__file__).parent / "data"


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_dict_check_reports_315(capsys):
    code, out, _ = run_cli(capsys, "dict-check")
    assert code == 0
    assert "315 entries OK" in out


def test_eval_identity(capsys, tmp_path):
    text = "le chat dort\nla nuit tombe\n"
    hyp = tmp_path / "h.txt"
    ref = tmp_path / "r.txt"
    hyp.write_text(text, encoding="utf-8")
    ref.write_text(text, encoding="utf-8")
    code, out, _ = run_cli(capsys, "eval", "--hyp", str(hyp), "--ref", str(ref))
    assert code == 0
    payload = json.loads(out)
    assert payload["wer"] == 0.0
    assert payload["bleu"] == 100.0


def test_usage_error_exit_1(capsys):
    code, _, err = run_cli(capsys, "rewrite")
    assert code == 1
    assert "usage" in err.lower()


def test_unknown_flag_exit_1(capsys):
    code, _, err = run_cli(capsys, "dict-check", "--frobnicate")
    assert code == 1


def test_data_error_exit_2(capsys, tmp_path):
    bad = tmp_path / "bad.tsv"
    bad.write_text("not a dictionary\n", encoding="utf-8")
    code, _, err = run_cli(capsys, "dict-check", "--dict", str(bad))
    assert code == 2
    assert "error" in err.lower()


def test_extract_end_to_end(capsys, tmp_path):
    corpus = tmp_path / "corpus.txt"
    corpus.write_text(
        "Les soldats marchent vers la ville.\n"
        "Il fait beau.\n"
        "Les policiers enquêtent.\n",
        encoding="utf-8",
    )
    out = tmp_path / "tagged.txt"
    stats = tmp_path / "stats.json"
    code, _, _ = run_cli(
        capsys, "extract", "--input", str(corpus), "--output", str(out), "--stats", str(stats)
    )
    assert code == 0
    lines = out.read_text(encoding="utf-8").splitlines()
    assert len(lines) == 2
    assert lines[0].startswith("<n-2,3,4,5>Les soldats</n>")
    payload = json.loads(stats.read_text(encoding="utf-8"))
    assert payload["lines_scanned"] == 3
    assert payload["lines_kept"] == 2


def test_rewrite_end_to_end(capsys, tmp_path):
    tagged = tmp_path / "tagged.txt"
    tagged.write_text(
        "<n-2,3,4,5>Les soldats</n> arrivèrent avec une lance à eau pour disperser les détenus.\n",
        encoding="utf-8",
    )
    conllu_text = (DATA / "golden" / "golden.conllu").read_text(encoding="utf-8")
    block = [b for b in conllu_text.split("\n\n") if "sent_id = g6" in b][0]
    conllu = tmp_path / "one.conllu"
    conllu.write_text(block + "\n", encoding="utf-8")
    out = tmp_path / "out.tsv"
    code, _, _ = run_cli(
        capsys,
        "rewrite",
        "--input", str(tagged),
        "--conllu", str(conllu),
        "--mode", "first",
        "--output", str(out),
    )
    assert code == 0
    rows = out.read_text(encoding="utf-8").splitlines()
    assert rows[0] == "source\tvariant_id\trewritten\tchange_log"
    source, variant_id, rewritten, log = rows[1].split("\t")
    assert variant_id == "2"
    assert rewritten == "L'armée arriva avec une lance à eau pour disperser les détenus."
    assert json.loads(log)[0]["role"] in ("determiner", "collective_noun", "finite_verb")


def test_rewrite_all_mode_emits_variants(capsys, tmp_path):
    tagged = tmp_path / "tagged.txt"
    tagged.write_text(
        "<n-2,3,4,5>Les soldats</n> arrivèrent avec une lance à eau pour disperser les détenus.\n",
        encoding="utf-8",
    )
    conllu_text = (DATA / "golden" / "golden.conllu").read_text(encoding="utf-8")
    block = [b for b in conllu_text.split("\n\n") if "sent_id = g6" in b][0]
    conllu = tmp_path / "one.conllu"
    conllu.write_text(block + "\n", encoding="utf-8")
    out = tmp_path / "out.tsv"
    code, _, _ = run_cli(
        capsys, "rewrite", "--input", str(tagged), "--conllu", str(conllu),
        "--mode", "all", "--output", str(out),
    )
    assert code == 0
    rows = out.read_text(encoding="utf-8").splitlines()[1:]
    assert [r.split("\t")[1] for r in rows] == ["2", "3", "4", "5"]


def test_rewrite_parallel_matches_serial(capsys, tmp_path):
    conllu_text = (DATA / "golden" / "golden.conllu").read_text(encoding="utf-8")
    block = [b for b in conllu_text.split("\n\n") if "sent_id = g6" in b][0]
    tagged = tmp_path / "tagged.txt"
    line = "<n-2,3,4,5>Les soldats</n> arrivèrent avec une lance à eau pour disperser les détenus."
    tagged.write_text((line + "\n") * 4, encoding="utf-8")
    conllu = tmp_path / "p.conllu"
    conllu.write_text(("\n\n".join([block] * 4)) + "\n", encoding="utf-8")
    serial = tmp_path / "serial.tsv"
    parallel = tmp_path / "parallel.tsv"
    assert run_cli(
        capsys, "rewrite", "--input", str(tagged), "--conllu", str(conllu),
        "--output", str(serial),
    )[0] == 0
    assert run_cli(
        capsys, "rewrite", "--input", str(tagged), "--conllu", str(conllu),
        "--output", str(parallel), "--jobs", "2",
    )[0] == 0
    assert serial.read_bytes() == parallel.read_bytes()


def test_score_deps_cli(capsys):
    code, out, _ = run_cli(
        capsys,
        "score-deps",
        "--gold", str(DATA / "depgold" / "depgold_gold.tsv"),
        "--tagged", str(DATA / "depgold" / "depgold_tagged.txt"),
        "--conllu", str(DATA / "depgold" / "depgold.conllu"),
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["f1"] >= 0.70


def test_score_deps_baseline_detector(capsys):
    code, out, _ = run_cli(
        capsys,
        "score-deps",
        "--gold", str(DATA / "depgold" / "depgold_gold.tsv"),
        "--tagged", str(DATA / "depgold" / "depgold_tagged.txt"),
        "--conllu", str(DATA / "depgold" / "depgold.conllu"),
        "--detector", "baseline",
    )
    assert code == 0
    assert json.loads(out)["f1"] < 0.5


def test_pairs_cli(capsys, tmp_path):
    tagged = tmp_path / "tagged.txt"
    tagged.write_text("<n-2,3,4,5>Les soldats</n> arrivèrent.\n", encoding="utf-8")
    conllu = tmp_path / "one.conllu"
    conllu.write_text(
        "# text = Les soldats arrivèrent.\n"
        "1\tLes\tle\tDET\t_\tNumber=Plur\t2\tdet\t_\t_\n"
        "2\tsoldats\tsoldat\tNOUN\t_\tGender=Masc|Number=Plur\t3\tnsubj\t_\t_\n"
        "3\tarrivèrent\tarriver\tVERB\t_\tMood=Ind|Number=Plur|Person=3|Tense=Past|VerbForm=Fin\t0\troot\t_\tSpaceAfter=No\n"
        "4\t.\t.\tPUNCT\t_\t_\t3\tpunct\t_\t_\n",
        encoding="utf-8",
    )
    out = tmp_path / "pairs.tsv"
    code, _, _ = run_cli(
        capsys, "pairs", "--input", str(tagged), "--conllu", str(conllu), "--output", str(out)
    )
    assert code == 0
    rows = out.read_text(encoding="utf-8").splitlines()
    assert len(rows) == 4
    assert rows[0] == "Les soldats arrivèrent.\tL'armée arriva."


def test_config_file_supplies_flags(capsys, tmp_path):
    corpus = tmp_path / "corpus.txt"
    corpus.write_text("Les policiers enquêtent.\n", encoding="utf-8")
    out = tmp_path / "tagged.txt"
    cfg = tmp_path / "neutre.toml"
    cfg.write_text(f'max_per_entry = 1\n# comment\n', encoding="utf-8")
    code, _, _ = run_cli(
        capsys, "extract", "--input", str(corpus), "--output", str(out), "--config", str(cfg)
    )
    assert code == 0
    assert out.read_text(encoding="utf-8").count("\n") == 1


def test_eval_with_labels(capsys, tmp_path):
    hyp = tmp_path / "h.txt"
    ref = tmp_path / "r.txt"
    hyp.write_text("a\n", encoding="utf-8")
    ref.write_text("a\n", encoding="utf-8")
    labels = tmp_path / "labels.tsv"
    labels.write_text("s1\tVERB,ADJ\n", encoding="utf-8")
    code, out, _ = run_cli(
        capsys, "eval", "--hyp", str(hyp), "--ref", str(ref), "--labels", str(labels)
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["labels"]["per_code"]["VERB"] == 1


def test_console_script_installed():
    proc = subprocess.run(
        [sys.executable, "-m", "neutre.cli", "dict-check"], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert "315 entries OK" in proc.stdout


def test_golden_pairs_through_cli(capsys, tmp_path):
    sources = (DATA / "golden" / "golden_sources.txt").read_text(encoding="utf-8")
    expected = (DATA / "golden" / "golden_expected.txt").read_text(encoding="utf-8")
    corpus = tmp_path / "corpus.txt"
    corpus.write_text(sources, encoding="utf-8")
    tagged = tmp_path / "tagged.txt"
    assert run_cli(capsys, "extract", "--input", str(corpus), "--output", str(tagged))[0] == 0
    out = tmp_path / "out.tsv"
    assert (
        run_cli(
            capsys,
            "rewrite",
            "--input", str(tagged),
            "--conllu", str(DATA / "golden" / "golden.conllu"),
            "--mode", "first",
            "--output", str(out),
        )[0]
        == 0
    )
    rewritten = [row.split("\t")[2] for row in out.read_text(encoding="utf-8").splitlines()[1:]]
    assert rewritten == expected.splitlines()


def test_rewrite_misaligned_conllu_is_data_error(capsys, tmp_path):
    tagged = tmp_path / "tagged.txt"
    tagged.write_text("<n-10>Les policiers</n> arrivèrent.\nuntagged extra line\n", encoding="utf-8")
    conllu_text = (DATA / "golden" / "golden.conllu").read_text(encoding="utf-8")
    block = [b for b in conllu_text.split("\n\n") if "sent_id = g6" in b][0]
    conllu = tmp_path / "one.conllu"
    conllu.write_text(block + "\n", encoding="utf-8")
    out = tmp_path / "out.tsv"
    code, _, err = run_cli(
        capsys, "rewrite", "--input", str(tagged), "--conllu", str(conllu), "--output", str(out)
    )
    assert code == 2


def test_neutre_data_env_overrides_resources(capsys, tmp_path, monkeypatch):
    alt = tmp_path / "resources"
    alt.mkdir()
    (alt / "dictionary.tsv").write_text(
        "id\tcollective\tcn_gender\tcn_number\tmember_plural\tmember_lemma\telision\tnotes\n"
        "1\tpolice\tf\tsg\tpoliciers\tpolicier\t0\t\n",
        encoding="utf-8",
    )
    monkeypatch.setenv("NEUTRE_DATA", str(alt))
    code, out, _ = run_cli(capsys, "dict-check")
    assert code == 0
    assert "1 entries OK" in out
