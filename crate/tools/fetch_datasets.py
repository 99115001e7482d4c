#!/usr/bin/env python3
"""Build the benchmark CSV files under data/ from redistributable sources.

Sources:
  * keel-ds (PyPI)   -- KEEL repository copies of the UCI benchmark sets
  * pydataset (PyPI) -- MASS::biopsy, the 699-row Wisconsin breast cancer data
  * balance-scale    -- generated from its defining rule (the UCI file is the
                        full 5^4 factorial in lexicographic order)

Usage: python3 tools/fetch_datasets.py [--out data] [--cache DIR]

Needs `pip download` access. Existing files are overwritten.
"""

import argparse
import csv
import itertools
import os
import subprocess
import sys
import tarfile
import tempfile
import zipfile


def pip_download(package, dest):
    subprocess.run(
        [sys.executable, "-m", "pip", "download", "--no-deps", "-q", "-d", dest, package],
        check=True,
    )
    for name in os.listdir(dest):
        if name.lower().replace("-", "_").startswith(package.replace("-", "_")):
            return os.path.join(dest, name)
    raise RuntimeError(f"pip download produced no archive for {package}")


def read_keel(archive, name):
    with zipfile.ZipFile(archive) as z:
        raw = z.read(f"keel_ds/data/balanced/raw/{name}.dat").decode()
    return [[c.strip() for c in line.split(",")] for line in raw.splitlines() if line.strip()]


def read_biopsy(archive):
    with tarfile.open(archive) as outer:
        member = next(m for m in outer.getmembers() if m.name.endswith("resources.tar.gz"))
        inner = tarfile.open(fileobj=outer.extractfile(member))
        data = inner.extractfile("resources/rdata/csv/MASS/biopsy.csv").read().decode()
    rows = list(csv.reader(data.splitlines()))
    return rows[0], rows[1:]


def write(path, header, rows):
    with open(path, "w", newline="") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
    print(f"wrote {path} ({len(rows)} rows)")


def balance_rows():
    rows = []
    for lw, ld, rw, rd in itertools.product(range(1, 6), repeat=4):
        torque = lw * ld - rw * rd
        label = "L" if torque > 0 else ("R" if torque < 0 else "B")
        rows.append([lw, ld, rw, rd, label])
    return rows


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default=os.path.join(os.path.dirname(__file__), "..", "data"))
    ap.add_argument("--cache", default=None)
    args = ap.parse_args()
    os.makedirs(args.out, exist_ok=True)
    cache = args.cache or tempfile.mkdtemp(prefix="qnmc-data-")

    out = lambda name: os.path.join(args.out, name)

    write(out("balance.csv"), ["left_weight", "left_distance", "right_weight", "right_distance", "class"],
          balance_rows())

    keel = pip_download("keel-ds", os.path.join(cache, "keel"))

    rows = read_keel(keel, "banana")
    write(out("banana.csv"), ["at1", "at2", "class"], rows)

    rows = read_keel(keel, "bands")
    write(out("bands.csv"), [f"f{i}" for i in range(1, 20)] + ["class"], rows)

    # KEEL drops UCI attribute 2, which is identically zero; restore it so d = 34.
    rows = [r[:1] + ["0"] + r[1:] for r in read_keel(keel, "ionosphere")]
    write(out("ionosphere.csv"), [f"a{i:02}" for i in range(1, 35)] + ["class"], rows)

    rows = read_keel(keel, "pima")
    write(out("pima.csv"), ["preg", "plas", "pres", "skin", "insu", "mass", "pedi", "age", "class"], rows)

    board = {"x": "1", "o": "-1", "b": "0"}
    rows = [[board[c] for c in r[:-1]] + [r[-1]] for r in read_keel(keel, "tic-tac-toe")]
    write(out("tictac.csv"), [f"sq{i}" for i in range(1, 10)] + ["class"], rows)

    header, rows = read_biopsy(pip_download("pydataset", os.path.join(cache, "pydataset")))
    idx = {h: i for i, h in enumerate(header)}
    feats = [f"V{i}" for i in range(1, 10)]

    complete = [r for r in rows if "NA" not in r]
    write(out("breast_cancer_1.csv"), ["id"] + feats + ["class"],
          [[r[idx["ID"]]] + [r[idx[f]] for f in feats] + [r[idx["class"]]] for r in complete])

    # 16 missing bare-nuclei values; fill with the column median.
    present = sorted(int(r[idx["V6"]]) for r in rows if r[idx["V6"]] != "NA")
    median = str(present[len(present) // 2])
    write(out("breast_cancer_2.csv"), feats + ["class"],
          [[median if r[idx[f]] == "NA" else r[idx[f]] for f in feats] + [r[idx["class"]]] for r in rows])


if __name__ == "__main__":
    main()
