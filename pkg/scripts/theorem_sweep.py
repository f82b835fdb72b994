"""Count violations of every checked relationship over seeded random corpora.

    python scripts/theorem_sweep.py --multimaps 2000 --merges 200 --seed 1
"""

import argparse
import random
import time
from collections import Counter
from dataclasses import dataclass

from fuzzyks.classifiers import classify, cond_ks_molecule, fringe_witness_mismatch, separability_reports
from fuzzyks.delineation import delineate
from fuzzyks.distributed import component_union_violation, cond_gg, cond_ggg, merge
from fuzzyks.random_models import MergeConfig, MultimapConfig, random_merge_parts, random_multimap


@dataclass
class SweepConfig:
    seed: int = 0
    multimaps: int = 1000
    merges_per_mode: int = 100
    multimap: MultimapConfig = MultimapConfig()
    merge: MergeConfig = MergeConfig()


def sweep_multimaps(cfg: SweepConfig) -> tuple[Counter, Counter]:
    rng = random.Random(cfg.seed)
    violations, checked = Counter(), Counter()
    for _ in range(cfg.multimaps):
        mm = random_multimap(rng, cfg.multimap)
        result = delineate(mm)
        for c in classify(mm, result):
            checked[c.name] += 1
            violations[c.name] += c.violated
        for r in separability_reports(mm, result):
            if not r.hypothesis_met:
                continue
            checked[r.theorem] += 1
            for v in r.violations:
                violations[f"{r.theorem}: {v}"] += 1
        if cond_ks_molecule(mm):
            checked["fringe witnesses"] += 1
            violations["fringe witnesses"] += fringe_witness_mismatch(mm, result) is not None
    return violations, checked


def sweep_merges(cfg: SweepConfig) -> tuple[Counter, Counter]:
    rng = random.Random(cfg.seed + 1)
    violations, checked = Counter(), Counter()
    for mode in ("any", "disjoint_items", "disjoint_skills", "disjoint_both"):
        for _ in range(cfg.merges_per_mode):
            mr = merge(random_merge_parts(rng, mode, cfg.merge))
            ks = delineate(mr.merged).structure
            checked[f"merges ({mode})"] += 1
            violations["component inclusions/union"] += component_union_violation(mr) is not None
            for report in (cond_gg(mr, ks), cond_ggg(mr, ks)):
                for v in report.violations:
                    kind = v.split(": ", 1)[1]
                    violations[f"{report.proposition}: {kind}"] += 1
                    if mr.is_distributed:
                        violations[f"{report.proposition}: {kind} (distributed)"] += 1
    return violations, checked


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--multimaps", type=int, default=1000)
    parser.add_argument("--merges", type=int, default=100, help="merges per disjointness mode")
    args = parser.parse_args()
    cfg = SweepConfig(seed=args.seed, multimaps=args.multimaps, merges_per_mode=args.merges)

    for name, run in (("multimaps", sweep_multimaps), ("merges", sweep_merges)):
        start = time.perf_counter()
        violations, checked = run(cfg)
        print(f"== {name} ({time.perf_counter() - start:.1f}s)")
        for key, n in sorted(checked.items()):
            print(f"  checked {key}: {n}")
        bad = {k: v for k, v in violations.items() if v}
        if not bad:
            print("  no violations")
        for key, n in sorted(bad.items()):
            print(f"  VIOLATED {key}: {n}")


if __name__ == "__main__":
    main()
