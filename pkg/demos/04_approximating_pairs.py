#!/usr/bin/env python3
"""Constructive approximating pairs: local embeddability made executable.

An approximating pair for a finite subset H of a semigroup is a finite
semigroup F plus an injection f that preserves every product staying inside
H.  This demo builds such pairs for three hosts -- the additive integers, a
Rees matrix semigroup over the integers, and a strong semilattice of copies
of the integers -- and runs the validity checker on each.
"""

import random

from lef.approx import (
    INT_GROUP,
    approx_integers,
    approx_rees,
    approx_semilattice,
    check_approximating_pair,
    rees_subset,
    semilattice_subset,
)
from lef.constructors import ReesSpec, SemilatticeSpec
from lef.fsg import MulTable, is_clifford

import numpy as np


def main() -> None:
    print("== integers ==")
    values = [-1, 4, 7]
    pair = approx_integers(values)
    print(f"  subset {values} of (Z, +)")
    print(f"  carrier: cyclic of order {pair.F.order}; map {pair.f}")

    print("\n== a Rees matrix semigroup over (Z, +) ==")
    spec = ReesSpec(
        group=INT_GROUP,
        rows=("i1", "i2"),
        cols=("l1", "l2"),
        sandwich=((0, 2), (-1, 1)),
    )
    triples = [("i1", 3, "l1"), ("i2", -2, "l2"), ("i1", 0, "l2")]
    H = rees_subset(spec, triples)
    pair = approx_rees(spec, H)
    result = check_approximating_pair(H, pair)
    print(f"  subset of {len(triples)} triples, carrier order {pair.F.order}")
    print(f"  checker: valid={result.valid}")

    print("\n== a strong semilattice of two copies of (Z, +) ==")
    meet = MulTable(np.array([[0, 0], [0, 1]]), labels=("bot", "top"))
    spec = SemilatticeSpec(
        meet=meet,
        components={"bot": INT_GROUP, "top": INT_GROUP},
        homs={("top", "bot"): lambda v: -v},
    )
    members = [("top", 2), ("bot", -1), ("top", 0)]
    H = semilattice_subset(spec, members)
    pair = approx_semilattice(spec, H)
    result = check_approximating_pair(H, pair)
    print(f"  subset {members}")
    print(f"  carrier order {pair.F.order}, Clifford={is_clifford(pair.F)}")
    print(f"  checker: valid={result.valid}")

    print("\n== a seeded randomized sweep (mirror of the acceptance run) ==")
    rng = random.Random(99)
    valid = 0
    for _ in range(25):
        nrows, ncols = rng.randint(1, 3), rng.randint(1, 3)
        spec = ReesSpec(
            group=INT_GROUP,
            rows=tuple(f"r{k}" for k in range(nrows)),
            cols=tuple(f"s{k}" for k in range(ncols)),
            sandwich=tuple(tuple(rng.randint(-3, 3) for _ in range(nrows))
                           for _ in range(ncols)),
        )
        members = sorted({
            (rng.choice(spec.rows), rng.randint(-3, 3), rng.choice(spec.cols))
            for _ in range(rng.randint(1, 5))
        })
        H = rees_subset(spec, members)
        if check_approximating_pair(H, approx_rees(spec, H)).valid:
            valid += 1
    print(f"  {valid}/25 random Rees instances valid")


if __name__ == "__main__":
    main()
