"""Rank distractor candidates for a few hand-picked questions.

Run 02_build_world_and_train.py first; this loads its outputs.
"""

import sys
from pathlib import Path

from mcqforge.embeddings import load_embeddings
from mcqforge.features import FeatureExtractor
from mcqforge.forest import load_model, suggest
from mcqforge.resources import load_resources
from mcqforge.universe import load_universe

OUT = Path(__file__).parent / "out"

PROBES = [
    ("Which particle carries a negative electric charge?", "electron"),
    ("Elements have orbitals that are filled with what?", "electrons"),
    ("Which organ pumps blood through the body?", "heart"),
    ("Which planet is famous for its large rings?", "saturn"),
]


def main():
    if not (OUT / "model.bin").exists():
        sys.exit("run 02_build_world_and_train.py first")
    resources = load_resources(OUT / "world")
    embeddings = load_embeddings(OUT / "world" / "embeddings.txt")
    extractor = FeatureExtractor(resources, embeddings)
    model = load_model(OUT / "model.bin", expect_layout=extractor.version)
    universe = load_universe(OUT / "world" / "universe.txt")

    for q, answer in PROBES:
        print(f"\nQ: {q}")
        print(f"   answer: {answer}")
        for s in suggest(model, q, answer, universe, extractor, k=6):
            print(f"   {s.score:.3f}  {s.surface}")


if __name__ == "__main__":
    main()
