"""
The command line tool end to end
================================

Generate a corpus, benchmark it over a range of t, then color one
instance and verify the report. Everything runs in a temporary directory.
"""

import json
import subprocess
import sys
import tempfile
from pathlib import Path


def ptcolor(*args):
    proc = subprocess.run([sys.executable, "-m", "ptcolor", *map(str, args)], capture_output=True, text=True)
    return proc.returncode, proc.stdout


with tempfile.TemporaryDirectory() as tmp:
    corpus = Path(tmp) / "corpus"

    code, _ = ptcolor("generate", "random-3col-ptfree", "--n", 14, "--t", 6, "--p", 0.7, "--count", 5,
                      "--seed", 11, "--outdir", corpus)
    print("generate exit", code)
    ptcolor("generate", "tripartite", "--sizes", "10,12,14", "--outdir", corpus)

    code, table = ptcolor("bench", corpus, "--t", "6-8")
    print("bench exit", code)
    print(table)

    graph = corpus / "random-3col-ptfree-0000.graph"
    report = Path(tmp) / "report.json"
    code, _ = ptcolor("color", graph, "--t", 6, "--out", report)
    print("color exit", code, json.loads(report.read_text())["coloring"])
    print("verify exit", ptcolor("verify", graph, report)[0])

    # flip one endpoint of an edge to the color of the other; verify must refuse
    data = json.loads(report.read_text())
    u, w = map(int, graph.read_text().splitlines()[1].split())
    data["coloring"][w] = data["coloring"][u]
    report.write_text(json.dumps(data))
    print("verify after tampering exit", ptcolor("verify", graph, report)[0])
