"""Split, profile, and baseline the records exported by demo 04."""

import sys
from collections import Counter
from pathlib import Path

from mcqforge.datatools import (
    PassageIndex,
    SplitSpec,
    baseline_accuracy,
    length_stats,
    shuffle_split,
)
from mcqforge.service import import_mc_records

OUT = Path(__file__).parent / "out"


def main():
    mc_path = OUT / "questions_mc.jsonl"
    if not mc_path.exists():
        sys.exit("run 04_annotation_session.py first")
    records = import_mc_records(mc_path)
    print(f"{len(records)} multiple-choice records")

    shuffle_split(records, SplitSpec(n_validation=1, n_test=1, seed=0))
    print("split:", dict(Counter(r["split"] for r in records)))

    print("\ntoken-length profile:")
    print(length_stats(records).to_tsv())

    passages = [r["support"] for r in records if r.get("support")]
    acc = baseline_accuracy(records, PassageIndex(passages), seed=0)
    print(f"IDF-overlap baseline over support passages: {acc:.2f}")
    print("(near 1.0 here: every answer appears verbatim in its passage,")
    print(" which is exactly the leak this baseline is meant to expose)")


if __name__ == "__main__":
    main()
