"""Simulate a small two-task annotation session and export the results.

Uses the store API directly (the HTTP layer adds nothing here) with a
stubbed suggestion model, then writes demos/out/questions_mc.jsonl and
demos/out/questions_da.jsonl.
"""

import json
from pathlib import Path

from mcqforge.forest import RankedSuggestion
from mcqforge.service import REJECT_ALL, AnnotationStore, export_dataset

OUT = Path(__file__).parent / "out"

PARAGRAPHS = [
    ("The heart pumps blood through the arteries of the body.",
     "Which organ pumps blood through the body?", "heart",
     ["lung", "valve"], ["liver"]),
    ("Plants use the sunlight to make sugar during photosynthesis.",
     "What do plants use to make sugar in their leaves?", "sunlight",
     ["water"], ["moonlight", "soil"]),
    ("Sound travels through the air as waves of pressure.",
     "What does sound travel through as waves of pressure?", "air",
     [], ["water", "rock", "metal"]),
    ("A magnet attracts iron objects from a short distance.",
     "What kind of objects does a magnet attract from nearby?", "iron",
     ["copper", "steel"], ["wooden"]),
]

FILLER = [
    "Clouds form when warm moist air rises and cools down.",
    "Rivers carry small stones toward the distant sea.",
    "The moon reflects light coming from the sun.",
    "Volcanoes release melted rock from deep underground.",
]


def fake_suggestions(question, answer):
    pool = ["lung", "valve", "water", "copper", "steel", "plastic"]
    return [RankedSuggestion(s, round(0.9 - 0.1 * i, 2))
            for i, s in enumerate(pool)]


def main():
    store_dir = OUT / "annotation-store"
    if (store_dir / "journal.jsonl").exists():
        (store_dir / "journal.jsonl").unlink()  # fresh session each run
    store = AnnotationStore(store_dir)
    store.set_suggester(fake_suggestions)

    texts = [row[0] for row in PARAGRAPHS] + FILLER
    for i, text in enumerate(texts):
        store.add_paragraph(f"p{i:02d}", text, exportable=True)

    # worker one writes questions; the first offer gets rejected outright
    # to show the paragraphs flowing back into the pool
    a = store.next_task1("writer")
    store.submit_task1(a.assignment_id, REJECT_ALL)
    for _, question, answer, _, _ in PARAGRAPHS:
        a = store.next_task1("writer")
        print(f"task1 offer: {a.paragraph_ids}")
        choice = a.paragraph_ids[0]
        r = store.submit_task1(a.assignment_id, choice,
                               question=question, answer=answer)
        print(f"  wrote {r['qa_id']} on {choice}: {question}")

    # worker two reviews; selected come from the model, written are fresh
    for _, _, _, selected, written in PARAGRAPHS:
        a = store.next_task2("reviewer")
        r = store.submit_task2(a.assignment_id, "pass",
                               selected=selected, written=written)
        print(f"task2 {a.qa_id} -> {r['mcq_id']}")

    stats = store.stats()
    print(f"\nstats: {json.dumps(stats, indent=2)}")

    for fmt, name in (("mc", "questions_mc.jsonl"),
                      ("direct_answer", "questions_da.jsonl")):
        counts = export_dataset(store, fmt, OUT / name, seed=0)
        print(f"exported {fmt}: {counts}")


if __name__ == "__main__":
    main()
