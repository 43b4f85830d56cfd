#!/usr/bin/env python3
"""Run the provability-vs-winnability audit on the bundled corpus.

Each row gets an intuitionistic provability verdict and a uniform
winnability verdict of its choice translation over all elementary truth
assignments, probing split budgets 0..2. Provable rows must come out
winnable (anything else is an ANOMALY and a bug); unprovable-but-winnable
rows are the interesting separations.

Lowering --budget below 2 can flag provable rows that simply need more
splits than probed; the shipped corpus is anomaly-free at the default.

--separation additionally probes the six-atom separation candidate, whose
budget-2 search is capped; expect separation-witness or inconclusive.
"""

import argparse
import sys

from colgame import audit, audit_line, corpus_lines, render_audit

SEPARATION_CANDIDATE = (
    "(~p -> a \\/ b) /\\ (~q -> c \\/ d) /\\ ~(p /\\ q)"
    " -> (~p -> a) \\/ (~p -> b) \\/ (~q -> c) \\/ (~q -> d)"
)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--budget", type=int, default=2, help="largest split budget probed")
    ap.add_argument("--max-states", type=int, default=500000)
    ap.add_argument("--separation", action="store_true",
                    help="also probe the six-atom separation candidate")
    args = ap.parse_args(argv)

    rows = audit(corpus_lines(), budgets=range(args.budget + 1),
                 max_states=args.max_states)
    print(render_audit(rows))
    anomalies = [r for r in rows if r.classification == "ANOMALY"]
    witnesses = [r for r in rows if r.classification == "separation-witness"]
    print(f"\n{len(rows)} rows, {len(witnesses)} separation witnesses, "
          f"{len(anomalies)} anomalies", file=sys.stderr)

    if args.separation:
        row = audit_line(SEPARATION_CANDIDATE, budgets=range(args.budget + 1),
                         max_states=args.max_states)
        print("\nseparation candidate:", row.classification,
              f"(provable={row.provable}, winnable={row.winnable}, budget={row.budget})")

    return 1 if anomalies else 0


if __name__ == "__main__":
    raise SystemExit(main())
