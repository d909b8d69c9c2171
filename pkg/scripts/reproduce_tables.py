#!/usr/bin/env python3
"""Regenerate every published artifact into ./artifacts.

Writes the fan description, both type tables, the per-cone subdivisions,
the flip graph, and the consolidated verification report.  Everything is
deterministic; rerunning overwrites byte-identical files.
"""

import json
import pathlib
import sys

from tropd4.cli import main as cli_main
from tropd4.verify import full_report


def run(outdir):
    outdir.mkdir(parents=True, exist_ok=True)
    jobs = [
        (["fan"], "fan.json"),
        (["enumerate", "-n", "4", "--format", "dot"], "flip_graph.dot"),
        (["enumerate", "-n", "4", "--format", "json"],
         "pseudotriangulations.json"),
        (["classify-clusters"], "classes.json"),
        (["table1", "--format", "csv"], "table1.csv"),
        (["table2", "--format", "csv"], "table2.csv"),
    ]
    for argv, name in jobs:
        path = outdir / name
        code = cli_main(["--output", str(path)] + argv)
        if code != 0:
            return code
        print(f"wrote {path}")
    for labels in (("r3", "r9", "r10", "r12"),
                   ("r1", "r5", "r7", "r11", "r13")):
        name = "subdivision_" + "_".join(labels) + ".json"
        code = cli_main(["--output", str(outdir / name),
                         "subdivision", "--cone", ",".join(labels)])
        if code != 0:
            return code
        print(f"wrote {outdir / name}")
    report = full_report(seed=0)
    path = outdir / "verification_report.json"
    path.write_text(json.dumps(report, indent=2, sort_keys=True))
    print(f"wrote {path}")
    ok = not report["violations"]
    print("verification:", "PASS" if ok else "FAIL")
    return 0 if ok else 1


if __name__ == "__main__":
    target = pathlib.Path(sys.argv[1]) if len(sys.argv) > 1 \
        else pathlib.Path("artifacts")
    sys.exit(run(target))
