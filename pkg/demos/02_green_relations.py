#!/usr/bin/env python3
"""Green's relations and the egg-box picture of a finite semigroup.

We build a completely simple semigroup as a Rees matrix construction over the
cyclic group Z_2, classify it, and print its egg-box diagram: one grid per
J-class, rows are R-classes, columns are L-classes, and idempotent H-cells
are starred.  A strong semilattice of groups (a Clifford semigroup) follows
for contrast: several J-classes, each a group.
"""

import numpy as np

from lef.approx import cyclic_table
from lef.cli import main as lef
from lef.constructors import (
    ReesSpec,
    SemilatticeSpec,
    rees_matrix,
    semilattice_semigroup,
)
from lef.fsg import MulTable, classify, green


def describe(name: str, mt: MulTable) -> None:
    info = classify(mt)
    print(f"\n== {name} (order {mt.order}) ==")
    for key in ("commutative", "group", "completely_simple", "clifford",
                "j_trivial"):
        print(f"  {key:>17}: {info[key]}")
    g = green(mt)
    print(f"  J/R/L/H classes: {len(g.j_classes)}/{len(g.r_classes)}"
          f"/{len(g.l_classes)}/{len(g.h_classes)}")


def eggbox_via_cli(mt: MulTable, path: str) -> None:
    import json

    with open(path, "w") as fh:
        json.dump(mt.to_json(), fh)
    lef(["green", "--table", path])


def main() -> None:
    spec = ReesSpec(
        group=cyclic_table(2),
        rows=("i1", "i2"),
        cols=("l1", "l2"),
        sandwich=((0, 0), (0, 1)),
    )
    rees = rees_matrix(spec)
    describe("Rees matrix semigroup M(Z2; 2x2)", rees)
    print("\n  egg-box diagram:")
    eggbox_via_cli(rees, "/tmp/demo_rees.json")

    meet = MulTable(np.array([[0, 0], [0, 1]]), labels=("bot", "top"))
    clifford = semilattice_semigroup(SemilatticeSpec(
        meet=meet,
        components={"bot": cyclic_table(3), "top": cyclic_table(3)},
        homs={("top", "bot"): (0, 2, 1)},  # negation: a group hom Z3 -> Z3
    ))
    describe("strong semilattice of two copies of Z3", clifford)
    print("\n  egg-box diagram:")
    eggbox_via_cli(clifford, "/tmp/demo_clifford.json")


if __name__ == "__main__":
    main()
