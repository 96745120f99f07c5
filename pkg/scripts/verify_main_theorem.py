"""Run the kappa = mu check for n = 3..6 and print one summary line per n.

    python3 scripts/verify_main_theorem.py --trials 50 --seed 0 [--json out.json]
"""

import argparse
import json

from linkhomotopy.kappa import VerifyConfig, verify_injectivity, verify_main_theorem


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--trials", type=int, default=50)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-n", type=int, default=6)
    ap.add_argument("--json", help="write the full reports here")
    args = ap.parse_args()

    reports = []
    for n in range(3, args.max_n + 1):
        rep = verify_main_theorem(VerifyConfig(n, trials=args.trials, seed=args.seed))
        reports.append(rep)
        print(f"n={n}: {rep['trials']} trials, {len(rep['failures'])} failures, {rep['elapsed_ms']:.0f} ms")
    for n in (3, 4, 5):
        inj = verify_injectivity(n, sample=100, seed=args.seed)
        print(f"injectivity n={n}: {inj['distinct_inputs']} inputs -> {inj['distinct_outputs']} outputs")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(reports, fh, indent=2)
    raise SystemExit(0 if all(not r["failures"] for r in reports) else 1)


if __name__ == "__main__":
    main()
