"""Links, symbolic offsets, and labeled cobordism by smoothing.

A colorable link has a polynomial per coloring; weights are affine in the
per-component offsets, so the whole family is visible symbolically.
Crossings of weight zero can be smoothed while the labels ride along,
turning a knot into a labeled link.
"""

from vknot import (
    colorability,
    crossing_weights,
    lambda_coloring,
    link_pair_polynomial,
    parse_signed,
    propagate_coloring,
    serialize,
    serialize_coloring,
    smooth_zero_weight,
    symbolic_link_weights,
)

hopf = parse_signed("O1+ U2+ ; U1+ O2+")
print("Hopf link:", serialize(hopf), "| colorable:",
      colorability(hopf).colorable)
for w in symbolic_link_weights(hopf):
    print(f"  crossing {w.crossing}: W = {w}")
for offsets in ((0, 0), (1, 0), (2, -1)):
    coloring = propagate_coloring(hopf, offsets)
    print(f"  offsets {offsets}: labels {serialize_coloring(coloring)}  "
          f"P = {link_pair_polynomial(hopf, coloring)}")

bad = parse_signed("O1+ O2+ ; U1+ U2+")
print("uncolorable link:", serialize(bad),
      "imbalances:", colorability(bad).imbalances)
print()

kinked = parse_signed("O3+ U3+ O1+ O2+ U1+ U2+")
coloring = lambda_coloring(kinked)
weights = {e.crossing: e.weight for e in crossing_weights(kinked, coloring).entries}
print("kinked virtual trefoil:", serialize(kinked), "weights:", weights)
smoothed, carried = smooth_zero_weight(kinked, coloring)
print("zero-weight crossings smoothed:", serialize(smoothed))
print("labels carried along:         ", serialize_coloring(carried))
print()

trefoil = parse_signed("O1+ U2+ O3+ U1+ O2+ U3+")
smoothed, carried = smooth_zero_weight(trefoil, lambda_coloring(trefoil))
print("classical trefoil smooths completely:", repr(serialize(smoothed)),
      "labels:", serialize_coloring(carried))
