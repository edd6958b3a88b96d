"""Vassiliev invariants, the skein relation, and 4-valent graph expansion.

The exponential substitution t = e^x turns P into a series whose
coefficients v_n = (1/n!) sum sign(c) W(c)^n are finite-type invariants.
The skein difference P(K+) - P(K-) = t^W + t^-W - 2 extends P to graphs
with singular nodes; one node already forces v_1 = 0, and two nodes kill
the expansion entirely.
"""

from vknot import (
    affine_index_polynomial,
    graph_polynomial,
    make_singular,
    parse_signed,
    skein_difference,
    vassiliev_invariant,
    vassiliev_of_polynomial,
)

weights = [(-1, 2), (1, 1), (-1, -1)]
print("weight list [(-,2), (+,1), (-,-1)]:")
for n in (1, 2, 3, 4):
    print(f"  v_{n} =", vassiliev_invariant(weights, n))
print("(v_3 = -1 certifies a knot inequivalent to its reverse)")
print()

vt = parse_signed("O1+ O2+ U1+ U2+")
print("virtual trefoil v_1..v_4:",
      [str(vassiliev_invariant(vt, n)) for n in (1, 2, 3, 4)])
print("skein difference at crossing 1:", skein_difference(vt, 1))
print()

one_node = make_singular(vt, {1})
pg = graph_polynomial(one_node)
print("graph polynomial, crossing 1 singular:", pg)
print("  v_1 of the expansion:", vassiliev_of_polynomial(pg, 1), "(always 0)")
two_nodes = make_singular(vt, {1, 2})
print("graph polynomial, both crossings singular:",
      graph_polynomial(two_nodes),
      "(second differences cancel: the flat diagram never changes)")
