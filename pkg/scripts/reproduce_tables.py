"""Print the credibility tables of the bundled example families.

    python scripts/reproduce_tables.py
"""

from pathlib import Path

from crbr.evidence import credibility_table, dec4
from crbr.formula import parse, parse_base, render
from crbr.report import parse_family
from crbr.revision import OperatorKind, revise

DATA = Path(__file__).resolve().parent.parent / "data"

CASES = [
    # (base, family, mu); the listed family of the first case is consistent
    # with mu only under the biconditional reading
    ("ex2.base", "ex2.family", "a & (b <-> e)"),
    ("ex3.base", "ex3.family", "a & !e"),
]


def show(rows, label):
    for i, r in enumerate(rows, start=1):
        print(f"  {label}{i:<2} {str(list(r.subbase.indices)):<16} "
              f"m={dec4(r.mass)}  Bel={dec4(r.belief)}  ({r.mass}, {r.belief})")


def main():
    for base_file, family_file, mu_text in CASES:
        base = parse_base((DATA / base_file).read_text())
        family = parse_family((DATA / family_file).read_text(), base)
        mu = parse(mu_text)
        table = credibility_table(family)
        print(f"{base_file} + {family_file}, mu = {mu_text}")
        show(table.members, "B'")
        show(table.intersections, "X'")
        print(f"  m(B)={dec4(table.base_mass)}  k={dec4(table.conflict)} ({table.conflict})  "
              f"steps={[str(k) for k in table.step_conflicts]}")
        for kind in OperatorKind:
            if kind.credibility_based:
                print(f"  {kind.value}: {render(revise(base, mu, kind, family=family).result)}")
        print()


if __name__ == "__main__":
    main()
