#!/usr/bin/env python3
"""Search the bundled qubit ingredient space for concentration protocols and
print the Pareto front (gain vs post-selection probability).

    python scripts/search_ingredients.py --samples 10000 --seed 42
"""

import argparse
from pathlib import Path

import numpy as np

from weakprobe.config import build_space, load_space_config
from weakprobe.search import SearchConfig, pareto_filter, random_search

ROOT = Path(__file__).resolve().parent.parent


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--config", default=ROOT / "configs" / "r1_space.json")
    parser.add_argument("--seed", type=int, default=42)
    parser.add_argument("--samples", type=int, default=10000)
    parser.add_argument("--min-success", type=float, default=0.01)
    parser.add_argument("--top", type=int, default=10)
    args = parser.parse_args()

    space = build_space(load_space_config(args.config))
    config = SearchConfig(seed=args.seed, samples=args.samples, min_success=args.min_success)
    kept = random_search(space, config)
    front = pareto_filter(kept)

    print(f"{args.samples} samples, {len(kept)} feasible above min_success, front size {len(front)}")
    print(f"{'index':>7} {'obs':>4} {'Im(O_w)':>10} {'gain':>10} {'success':>10}")
    for r in front[: args.top]:
        print(
            f"{r.index:>7} {r.ingredients.observable_index:>4} "
            f"{r.weak_value.imag:>10.4f} {r.first_order_gain:>10.4f} "
            f"{r.success_probability_exact:>10.4f}"
        )
    if front:
        best = front[0]
        print(
            "\nhighest-gain ingredients: "
            f"pre={np.round(best.ingredients.pre.amplitudes, 4)}, "
            f"post={np.round(best.ingredients.post.amplitudes, 4)}"
        )


if __name__ == "__main__":
    main()
