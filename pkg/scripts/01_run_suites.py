"""
scripts/01_run_suites.py
Full-size verification run: every registered suite at production trial
counts, one JSONL file under data/ plus a summary table.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent))

from tabulate import tabulate
from tqdm import tqdm

from src.utils.logger import get_logger
from src.validation.suites import CONJECTURE_SUITES, SUITES, run_suite

log = get_logger("run_suites")

# conjecture searches want far more trials than the inequality suites
CONJECTURE_TRIALS = 100_000


def main():
    parser = argparse.ArgumentParser(description="Run every verification suite at full size")
    parser.add_argument("--trials", type=int, default=1000)
    parser.add_argument("--seed", type=int, default=1)
    parser.add_argument("--skip-conjectures", action="store_true")
    parser.add_argument("--output", default="data", help="Directory for the JSONL report")
    args = parser.parse_args()

    names = [n for n in SUITES if not (args.skip_conjectures and n in CONJECTURE_SUITES)]
    out_dir = Path(args.output)
    out_dir.mkdir(parents=True, exist_ok=True)
    out_path = out_dir / f"reports_seed{args.seed}.jsonl"

    rows = []
    with open(out_path, "w", encoding="utf-8") as f:
        for name in tqdm(names, desc="suites", unit="suite"):
            trials = CONJECTURE_TRIALS if name in CONJECTURE_SUITES else args.trials
            report = run_suite(name, trials, args.seed)
            f.write(report.to_json() + "\n")
            rows.append([
                name,
                report.trials,
                f"{report.worst_margin:.3e}",
                "PASS" if report.passed else "FAIL",
                "yes" if report.conjecture else "",
                report.runtime_ms,
            ])

    print("\n" + "=" * 65)
    print(f"VERIFICATION SUMMARY (seed={args.seed})")
    print("=" * 65)
    print(tabulate(rows, headers=["suite", "trials", "worst margin", "status", "conjecture", "ms"]))
    print("=" * 65)

    failed = [r[0] for r in rows if r[3] == "FAIL"]
    log.info(f"Reports → {out_path}")
    if failed:
        log.error(f"{len(failed)} suites failed: {', '.join(failed)}")
        sys.exit(3)


if __name__ == "__main__":
    main()
