"""Sweep every graph on up to six vertices and tally the shift laws.

Also reports how often the half-shift hypothesis t_b >= ceil(3b/2) holds,
which decides when the conditional subadditivity statement has content.

Run: python3 demos/subadditivity_sweep.py [max_n]
"""

import sys

from edgebetti.scan import RunConfig, run_scan


def main(max_n=6):
    config = RunConfig(
        enumerate_n=max_n,
        laws=("subadditivity", "halfshift_bound", "hypothesis_subadditivity", "pd9"),
        timings=False,
    )
    summary, results = run_scan(config)
    print(f"{summary.graphs} graphs with 1..{max_n} vertices")
    for key, tally in sorted(summary.tallies.items()):
        print(f"  {key:32s} " + "  ".join(f"{k}={v}" for k, v in tally.items() if v))
    print("hypothesis frequencies:")
    for key, value in sorted(summary.hypothesis.items()):
        print(f"  {key}: {value}")
    print("extremal shifts:")
    for kind, per_i in sorted(summary.extremal.items()):
        for i, rec in per_i.items():
            print(f"  {kind} at i={i}: {rec['count']} graphs, first {rec['first']}")
    worst = max(results, key=lambda r: len(r.shifts))
    print(f"longest resolution: {worst.graph6} with shifts {worst.shifts}")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 6)
