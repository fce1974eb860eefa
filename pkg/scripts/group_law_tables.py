#!/usr/bin/env python3
"""Synthesize the formal group law of each built-in pencil, certify that
its coefficients clear every denominator, and print the low-degree terms.

    python scripts/group_law_tables.py --deg 8
"""

import argparse
import sys
from dataclasses import dataclass

from wittkit.families import FAMILY_IDS, builtin_family, am_logarithm
from wittkit.formal_groups import group_law_from_logarithm, integrality_report
from wittkit.polynomials import format_value


@dataclass
class TableConfig:
    degree: int = 8
    families: tuple[str, ...] = FAMILY_IDS


def run(config: TableConfig) -> int:
    failures = 0
    for family_id in config.families:
        entry = builtin_family(family_id)
        log = am_logarithm(entry.family, config.degree)
        law = group_law_from_logarithm(log, config.degree)
        report = integrality_report(law)
        print(f"== {family_id} (total degree {config.degree}) ==")
        print(f"integral: {report.passed}")
        if not report.passed:
            failures += 1
            for i, j, value in report.failures:
                print(f"  denominator at t1^{i} t2^{j}: {format_value(value)}")
        for (i, j), c in law.as_integral().series.sorted_terms():
            if i + j <= 3:
                print(f"  [t1^{i} t2^{j}] {format_value(c)}")
    return 1 if failures else 0


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--deg", type=int, default=8)
    parser.add_argument("--family", action="append", default=None,
                        help="restrict to one family (repeatable)")
    args = parser.parse_args()
    families = tuple(args.family) if args.family else FAMILY_IDS
    return run(TableConfig(degree=args.deg, families=families))


if __name__ == "__main__":
    sys.exit(main())
