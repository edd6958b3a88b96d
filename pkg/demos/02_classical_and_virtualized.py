"""Classical diagrams have vanishing weights; virtualization breaks that.

Any planar diagram (here: braid closures) gets weight 0 at every crossing,
so P = 0.  Virtualizing a single crossing of the trefoil produces a knot
with unit Jones polynomial but P = t^2 + t^-2 - 2, certifying it
non-classical.  Virtualizing all three crossings kills P again, an example
of a virtualization the invariant cannot see.
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))
from conftest import braid_closure  # noqa: E402

from vknot import (  # noqa: E402
    affine_index_polynomial,
    crossing_weights,
    parse_signed,
    serialize,
    virtualize,
)

for name, word, strands in (
    ("trefoil   (sigma1^3)", [1, 1, 1], 2),
    ("figure-8  ((s1 s2^-1)^2)", [1, -2, 1, -2], 3),
    ("5_1       (sigma1^5)", [1, 1, 1, 1, 1], 2),
    ("5_2       (s1^3 s2 s1^-1 s2)", [1, 1, 1, 2, -1, 2], 3),
):
    code = braid_closure(word, strands)
    weights = [e.weight for e in crossing_weights(code).entries]
    print(f"{name:32s} weights {weights}  P = {affine_index_polynomial(code)}")

print()
trefoil = parse_signed("O1+ U2+ O3+ U1+ O2+ U3+")
one = virtualize(trefoil, {1})
allthree = virtualize(trefoil, {1, 2, 3})
print("trefoil, crossing 1 virtualized: ", serialize(one))
print("  P =", affine_index_polynomial(one))
print("trefoil, all crossings virtualized:", serialize(allthree))
print("  P =", affine_index_polynomial(allthree), " (invisible to the index)")
