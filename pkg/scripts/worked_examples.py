"""Print the delineation and every analysis for each named example."""

import argparse

from fuzzyks import catalog
from fuzzyks.cli import classification_doc, render_table, separability_doc
from fuzzyks.delineation import delineate
from fuzzyks.distributed import check_consistency, merge


def show_multimap(name, mm, verbose):
    result = delineate(mm)
    print(f"## {name}")
    for q in mm.items:
        print(f"  mu({q}) = {{{', '.join(str(c) for c in mm.mu[q])}}}")
    states = ", ".join("{" + ",".join(result.structure.ordered(k)) + "}" for k in result.structure.sorted_states())
    print(f"  states: {states}")
    if verbose:
        print(render_table(classification_doc(mm, result), 1))
        print(render_table(separability_doc(mm, result), 1))
    else:
        cls = classification_doc(mm, result)
        flags = {k: v for k, v in cls["structure"].items() if isinstance(v, bool)}
        print("  " + ", ".join(k for k, v in flags.items() if v))
    print()


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("names", nargs="*", help="restrict to these examples")
    parser.add_argument("-v", "--verbose", action="store_true", help="print every criterion and report")
    args = parser.parse_args()

    for name, build in catalog.MULTIMAPS.items():
        if not args.names or name in args.names:
            show_multimap(name, build(), args.verbose)
    for name, build in catalog.MERGES.items():
        if args.names and name not in args.names:
            continue
        parts = build()
        show_multimap(f"{name} (merged)", merge(parts).merged, args.verbose)
        report = check_consistency(parts)
        print(f"  consistent with its {len(parts)} parts: {report.consistent}\n")


if __name__ == "__main__":
    main()
