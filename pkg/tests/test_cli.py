import json
from pathlib import Path

from greenlint.cli import (
    EXIT_CLEAN,
    EXIT_FINDINGS,
    EXIT_USAGE,
    main,
)

from conftest import CLEAN_CORPUS, GOLDEN


def _recycle_project(tmp_path: Path) -> Path:
    proj = tmp_path / "proj"
    target = proj / "src" / "RecycleSample.java"
    target.parent.mkdir(parents=True)
    target.write_bytes((GOLDEN / "recycle" / "before.java").read_bytes())
    return proj


def test_check_reports_findings(tmp_path, capsys):
    proj = _recycle_project(tmp_path)
    assert main(["check", str(proj)]) == EXIT_FINDINGS
    out = capsys.readouterr().out
    assert "src/RecycleSample.java:" in out
    assert "[Recycle]" in out
    # nothing was rewritten
    assert (
        (proj / "src/RecycleSample.java").read_bytes()
        == (GOLDEN / "recycle" / "before.java").read_bytes()
    )


def test_check_json_payload(tmp_path, capsys):
    proj = _recycle_project(tmp_path)
    assert main(["check", str(proj), "--format", "json"]) == EXIT_FINDINGS
    payload = json.loads(capsys.readouterr().out)
    assert payload["version"] == "1"
    assert payload["mode"] == "check"
    assert len(payload["findings"]) == 1
    finding = payload["findings"][0]
    assert finding["rule"] == "Recycle"
    assert finding["file"] == "src/RecycleSample.java"
    assert finding["fixable"] is True
    assert finding["span"]["end"] > finding["span"]["start"]
    assert payload["summary"]["rules"]["Recycle"]["refactorings"] == 1


def test_check_clean_directory_exits_zero(capsys):
    assert main(["check", str(CLEAN_CORPUS)]) == EXIT_CLEAN
    assert capsys.readouterr().out == ""


def test_fix_then_check(tmp_path, capsys):
    proj = _recycle_project(tmp_path)
    assert main(["fix", str(proj)]) == EXIT_FINDINGS
    assert "1 refactoring(s) applied" in capsys.readouterr().out
    assert (
        (proj / "src/RecycleSample.java").read_bytes()
        == (GOLDEN / "recycle" / "after.java").read_bytes()
    )
    assert main(["check", str(proj)]) == EXIT_CLEAN


def test_fix_patch_dir(tmp_path, capsys):
    proj = _recycle_project(tmp_path)
    patches = tmp_path / "patches"
    assert main(["fix", str(proj), "--patch-dir", str(patches)]) == EXIT_FINDINGS
    patch = patches / "src" / "RecycleSample.java.patch"
    assert patch.is_file()
    text = patch.read_text()
    assert text.startswith("--- a/src/RecycleSample.java")
    assert "+        if (a != null) {" in text
    # the source file itself is untouched
    assert (
        (proj / "src/RecycleSample.java").read_bytes()
        == (GOLDEN / "recycle" / "before.java").read_bytes()
    )


def test_only_filter(tmp_path, capsys):
    proj = _recycle_project(tmp_path)
    assert main(["check", str(proj), "--only", "ViewHolder"]) == EXIT_CLEAN
    assert main(["check", str(proj), "--only", "Recycle,WakeLock"]) == EXIT_FINDINGS


def test_unknown_rule_is_usage_error(tmp_path, capsys):
    proj = _recycle_project(tmp_path)
    assert main(["check", str(proj), "--only", "Nonsense"]) == EXIT_USAGE
    err = capsys.readouterr().err
    assert "unknown rule" in err


def test_missing_path_is_usage_error(tmp_path, capsys):
    assert main(["check", str(tmp_path / "nope")]) == EXIT_USAGE


def test_missing_subcommand_is_usage_error(capsys):
    assert main([]) == EXIT_USAGE


def test_warnings_go_to_stderr_payload_to_stdout(tmp_path, capsys):
    proj = tmp_path / "proj"
    (proj / "src").mkdir(parents=True)
    (proj / "src" / "Latin.java").write_bytes(b"class A { // caf\xe9 }\n")
    assert main(["check", str(proj), "--format", "json"]) == EXIT_CLEAN
    captured = capsys.readouterr()
    json.loads(captured.out)  # stdout must stay machine-readable
    assert "not UTF-8" in captured.err


def test_corpus_command(tmp_path, capsys):
    root = tmp_path / "corpus"
    p1 = root / "alpha" / "src"
    p1.mkdir(parents=True)
    (p1 / "R.java").write_bytes((GOLDEN / "recycle" / "before.java").read_bytes())
    p2 = root / "beta" / "res" / "layout"
    p2.mkdir(parents=True)
    (p2 / "main.xml").write_bytes(
        (GOLDEN / "obsolete_layout_param" / "before.xml").read_bytes()
    )
    out = tmp_path / "summary.csv"
    assert main(["corpus", str(root), "--out", str(out)]) == EXIT_CLEAN
    lines = out.read_text().splitlines()
    assert lines[0].startswith("rule,total_refactorings")
    rows = {line.split(",")[0]: line for line in lines[1:]}
    assert rows["Recycle"] == "Recycle,1,1,50,1.0"
    assert rows["ObsoleteLayoutParam"] == "ObsoleteLayoutParam,1,1,50,1.0"
    assert rows["Any"] == "Any,2,2,100,1.0"


def test_corpus_requires_project_directories(tmp_path, capsys):
    empty = tmp_path / "corpus"
    empty.mkdir()
    assert main(["corpus", str(empty), "--out", str(tmp_path / "s.csv")]) == EXIT_USAGE
