"""Build the synthetic study world, train the ranking forest, save both.

Writes demos/out/world/ (resources, embeddings, universe, questions)
and demos/out/model.bin for the later demos to reuse.
"""

import time
from pathlib import Path

from mcqforge.forest import ForestParams, build_training_set, evaluate, save_model, train_forest
from mcqforge.sampledata import build_desk_world, write_desk_world

OUT = Path(__file__).parent / "out"


def main():
    print("building world (this synthesizes embeddings for ~20K words)...")
    world = build_desk_world(n_filler=20_000, dim=50, seed=0)
    write_desk_world(world, OUT / "world")
    print(f"  {len(world.questions)} questions, universe of {world.universe.size}")

    instances = build_training_set(world.questions, world.universe,
                                   world.extractor, seed=0)
    print(f"  {len(instances)} training instances (half good, half sampled bad)")

    t0 = time.perf_counter()
    model = train_forest(instances, ForestParams(n_trees=500, seed=0), n_jobs=4)
    print(f"trained 500 trees in {time.perf_counter() - t0:.1f}s")

    report = evaluate(model, instances)
    print(f"training accuracy {report['accuracy']:.3f} "
          f"(tp={report['tp']} fp={report['fp']} tn={report['tn']} fn={report['fn']})")

    save_model(model, OUT / "model.bin")
    print(f"model saved to {OUT / 'model.bin'}")


if __name__ == "__main__":
    main()
