#!/usr/bin/env python

"""Batch run of every verifier at its documented caps

Each theorem is checked once exhaustively and once over a seeded sample, and
every report becomes one CSV line in a log file under logs/. Reports with
violations are also dumped as JSON next to the log.

"""

import logging
from pathlib import Path
from os import getpid
from time import strftime

from crownlab import BACKGROUND, InstanceGenerator, dumps, verify

SEED = 7

# theorem id -> list of (mode, max_vertices, palette_cap, samples)
RUNS = {
    "end2": [("exhaustive", 8, 6, None)],
    "T1": [("exhaustive", 8, 6, None), ("sampled", 10, 7, 10_000)],
    "T2": [("exhaustive", 8, 6, None), ("sampled", 10, 7, 10_000)],
    "T3": [("exhaustive", 8, 6, None), ("sampled", 10, 7, 10_000)],
    "T4": [("exhaustive", 8, 6, None), ("sampled", 10, 7, 10_000)],
    "main": [("sampled", 10, 7, 10_000)],
    "5path-crown": [("sampled", 11, 7, 5_000)],
    "5path-nonequal": [("sampled", 11, 7, 5_000)],
}
RUNS.update({theorem: [("exhaustive", 8, 6, None)] for theorem in BACKGROUND})
RUNS["bohme"] = [("exhaustive", 9, 6, None)]
RUNS["wheel-parity"] = [("exhaustive", 10, 6, None)]

LOG_PATH = Path(__file__).parent.parent / "logs"


def setup_logger():
    LOG_FILE = LOG_PATH / strftime(f"verify_%m-%d-%y_%H.%M.%S_{getpid()}.csv")
    if not LOG_PATH.is_dir():
        LOG_PATH.mkdir()
    print(f"Logging results to {LOG_FILE}")
    logging.basicConfig(filename=LOG_FILE, format="%(message)s", level=logging.INFO)
    # Library loggers stay quiet in the CSV.
    logging.getLogger("crownlab").setLevel(logging.WARNING)
    logging.info("theorem,mode,max_vertices,palette,checked,skipped,violations,seconds")
    return LOG_FILE


def run_all(jobs=1):
    log_file = setup_logger()
    failed = []
    for theorem, runs in RUNS.items():
        for mode, max_n, palette, samples in runs:
            print(f"{theorem}: {mode} n<={max_n} palette<={palette}")
            gen = InstanceGenerator(
                mode=mode,
                max_vertices=max_n,
                palette_cap=palette,
                seed=SEED if mode == "sampled" else None,
                samples=samples or 0,
            )
            report = verify(theorem, gen, jobs=jobs)
            logging.info(
                f"{theorem},{mode},{max_n},{palette},{report.checked},{report.skipped},"
                f"{len(report.violations)},{report.wall_time:.2f}"
            )
            if not report.passed:
                failed.append(theorem)
                dump = log_file.with_name(f"{log_file.stem}_{theorem}_{mode}.json")
                dump.write_text(dumps(report.to_json(timing=True)))
    return failed


def main():
    failed = run_all(jobs=4)
    print(f"Failures: {failed}" if failed else "All verifiers passed")


if __name__ == "__main__":
    main()
