#!/usr/bin/env python3
"""Generate a synthetic observed daily-confirmed CSV for calibration demos.

The series is the model's own output under a chosen transmission scale, so
`npiflow fit` run against it must recover that scale exactly - a quick
end-to-end sanity check of the calibration loop:

    python3 scripts/make_observed_fixture.py --scale 1.3 --out observed.csv
    npiflow fit observed.csv
"""

from __future__ import annotations

import argparse
from pathlib import Path

from npiflow.outputs import document_for_preset, simulate_request


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--scale", type=float, default=1.3)
    parser.add_argument("--preset", default="realistic")
    parser.add_argument("--out", type=Path, default=Path("observed.csv"))
    args = parser.parse_args()

    output = simulate_request(
        document_for_preset(args.preset),
        extra_overrides={"disease.transmission_scale": args.scale},
    )
    lines = ["date,value"] + [
        f"{date.isoformat()},{value!r}"
        for date, value in zip(output.dates, output.series["daily_confirmed"])
    ]
    args.out.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {len(lines) - 1} observations at scale {args.scale} to {args.out}")


if __name__ == "__main__":
    main()
