"""Shared CSV writer for the ladder scripts."""
import argparse
import csv
import json
import os
import sys

import schurasym


def parser(doc, default_name):
    p = argparse.ArgumentParser(description=doc)
    p.add_argument("--out", default=os.path.join("results", default_name))
    return p


def write(path, header, rows, config):
    os.makedirs(os.path.dirname(path) or ".", exist_ok=True)
    with open(path, "w", newline="") as fh:
        fh.write("# " + json.dumps({"config": config, "version": schurasym.__version__}, sort_keys=True) + "\n")
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        for r in rows:
            w.writerow([str(v) for v in r])
    print(f"wrote {len(rows)} rows to {path}", file=sys.stderr)
