#!/usr/bin/env python3
"""Sweep acute shape space for characterization failures and time it."""

import argparse
import time

from fagnano import jsonio
from fagnano.theorem import scan_angle_space


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--resolution", type=int, default=200)
    parser.add_argument("--tol-angle", type=float, default=1e-9)
    parser.add_argument("--boundary-band", type=float, default=1e-6)
    parser.add_argument("--output", help="write the JSON report here")
    args = parser.parse_args()

    start = time.perf_counter()
    report = scan_angle_space(
        args.resolution, tol_angle=args.tol_angle, boundary_band=args.boundary_band
    )
    elapsed = time.perf_counter() - start
    print(
        f"resolution {report.grid_resolution}: {report.samples_tested} tested, "
        f"{report.samples_skipped} skipped near thresholds, "
        f"{len(report.counterexamples)} counterexamples in {elapsed:.2f}s"
    )
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(jsonio.dumps(report.to_document()))
        print(f"report written to {args.output}")
    return 0 if not report.counterexamples else 1


if __name__ == "__main__":
    raise SystemExit(main())
