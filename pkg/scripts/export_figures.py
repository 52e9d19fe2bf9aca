"""Write DOT files for the construction example and the maximal trees of (3,3,3,3,2,1^6)."""

import argparse
from dataclasses import dataclass
from pathlib import Path

from sombor.degseq import ReducedDegreeSequence
from sombor.extremal import alternating_greedy_tree
from sombor.graph import canonical_form, export_dot, sombor_index
from sombor.oracle import enumerate_trees, extremal_scan


@dataclass
class FigureConfig:
    out_dir: Path = Path("figures")
    construction: tuple = (5, 4, 4, 4, 3, 3, 3, 2)
    non_unique: tuple = (3, 3, 3, 3, 2, 1, 1, 1, 1, 1, 1)


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--out-dir", type=Path, default=FigureConfig.out_dir)
    cfg = FigureConfig(out_dir=p.parse_args().out_dir)
    cfg.out_dir.mkdir(parents=True, exist_ok=True)

    m = alternating_greedy_tree(ReducedDegreeSequence(cfg.construction))
    path = cfg.out_dir / "construction.dot"
    path.write_text(export_dot(m.tree))
    print(f"{path}: n={m.tree.n} SO={sombor_index(m.tree).value:.6f} labels={m.labels}")

    scan = extremal_scan(cfg.non_unique)
    maximal = [t for t in enumerate_trees(cfg.non_unique) if canonical_form(t) in scan.argmax]
    for i, t in enumerate(maximal):
        path = cfg.out_dir / f"maximal_{i}.dot"
        path.write_text(export_dot(t))
        print(f"{path}: SO={sombor_index(t).value:.6f} edges={list(t.edges())}")


if __name__ == "__main__":
    main()
