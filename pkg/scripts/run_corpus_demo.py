#!/usr/bin/env python3
"""Build a scratch corpus from the bundled fixtures and run the full
pipeline over it: check, fix, re-check, then aggregate a frequency table.

Usage:
    python scripts/run_corpus_demo.py [--projects N] [--keep DIR]

With --keep the scratch tree is written to DIR and left on disk for
inspection; otherwise a temporary directory is used and cleaned up.
"""

from __future__ import annotations

import argparse
import shutil
import sys
import tempfile
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(REPO / "src"))

from greenlint.cli import main as greenlint_main  # noqa: E402

FIXTURES = REPO / "tests" / "fixtures" / "golden"
CASES = {
    "view_holder": "java",
    "draw_allocation": "java",
    "wake_lock": "java",
    "recycle": "java",
    "obsolete_layout_param": "xml",
}


def build_corpus(root: Path, projects: int) -> None:
    names = list(CASES)
    for i in range(projects):
        project = root / f"project-{i:02d}"
        case = names[i % len(names)]
        ext = CASES[case]
        source = FIXTURES / case / f"before.{ext}"
        if ext == "xml":
            target = project / "res" / "layout" / "main.xml"
        else:
            target = project / "src" / f"Sample{i}.java"
        target.parent.mkdir(parents=True)
        shutil.copyfile(source, target)


def run(args: list[str]) -> int:
    print(f"$ greenlint {' '.join(args)}")
    code = greenlint_main(args)
    print(f"  -> exit {code}\n")
    return code


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--projects", type=int, default=10)
    parser.add_argument("--keep", type=Path, default=None)
    opts = parser.parse_args()

    scratch = opts.keep or Path(tempfile.mkdtemp(prefix="greenlint-demo-"))
    corpus = scratch / "corpus"
    if corpus.exists():
        parser.error(f"{corpus} already exists; refusing to overwrite")
    build_corpus(corpus, opts.projects)
    print(f"built {opts.projects} demo projects under {corpus}\n")

    summary = scratch / "frequency.csv"
    run(["corpus", str(corpus), "--out", str(summary)])
    print(summary.read_text())

    sample = str(corpus / "project-00")
    if run(["check", sample]) != 1:
        print("expected findings in the unfixed sample project", file=sys.stderr)
        return 1
    run(["fix", sample])
    if run(["check", sample]) != 0:
        print("sample project still dirty after fixing", file=sys.stderr)
        return 1

    if opts.keep is None:
        shutil.rmtree(scratch)
    else:
        print(f"scratch tree kept at {scratch}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
