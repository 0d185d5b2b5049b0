#!/usr/bin/env python3
"""Regenerate the potential traces and probability-density rasters as data.

Writes, into --outdir:

* ``potential_a{a}.csv`` for a in {-0.6, 0, 2} — the deformed confinement
  potential V(rho);
* ``density_canonical_a{a}_n{n}_m{m}.csv`` (+ JSON sidecar) for the canonical
  branch over a in {-0.6, 0, 2} and (n, m) in {0,1}^2 — rotationally
  invariant rings;
* ``density_noncanonical_g{gamma}_{parity}.csv`` (+ sidecar) for the ground
  state at gamma in {1.0, 1.5}, both parities — the four-peak structure
  split by the confinement angles.

Every artifact embeds its full parameter set, so any file can be reproduced
from its own header.
"""

import argparse
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from pdmwire.cli import main as cli_main  # noqa: E402


def run(argv):
    code = cli_main(argv)
    if code != 0:
        raise SystemExit(f"command failed ({code}): {' '.join(argv)}")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--outdir", default="figure_data",
                    help="output directory (default: ./figure_data)")
    ap.add_argument("--ngrid", type=int, default=201,
                    help="raster resolution per side (default 201)")
    args = ap.parse_args()
    out = pathlib.Path(args.outdir)
    out.mkdir(parents=True, exist_ok=True)

    run(["potential", "--a=-0.6,0,2", "--rho-max", "4", "--npoints", "401",
         "--outdir", str(out)])
    print(f"wrote potential traces for a = -0.6, 0, 2 -> {out}")

    for a in ("-0.6", "0", "2"):
        for n in (0, 1):
            for m in (0, 1):
                path = out / f"density_canonical_a{a}_n{n}_m{m}.csv"
                run(["density", f"--a={a}", "--n", str(n), "--m", str(m),
                     "--ngrid", str(args.ngrid), "--out", str(path)])
        print(f"wrote canonical rasters for a = {a}")

    for gamma in ("1", "1.5"):
        for parity in ("even", "odd"):
            path = out / f"density_noncanonical_g{gamma}_{parity}.csv"
            run(["density", "--a=2", "--gamma", gamma, "--parity", parity,
                 "--ngrid", str(args.ngrid), "--out", str(path)])
        print(f"wrote non-canonical rasters for gamma = {gamma}")

    print(f"done: {sum(1 for _ in out.iterdir())} files in {out}")


if __name__ == "__main__":
    main()
