"""The finite algebra behind the labeling rule.

Exhaustive search over all N^6 affine operation pairs on Z/N shows the
flat biquandle axioms force the unary family star = p^-1 a + k,
sharp = p a - p k; the weight condition W+ + W- = 0 then forces p = 1,
which is exactly the increment/decrement rule of the index polynomial.
Preflats (axioms 1-2 only) are a strictly larger family and still give
move I/II invariants of colorings: doodle pre-invariants.
"""

from vknot import (
    basic_preflat,
    check_axioms,
    doodle_pre_invariant,
    enumerate_colorings,
    forget,
    make_affine,
    parse_signed,
    search_affine,
    unary_affine_params,
    weight_condition,
)

print("affine flat biquandles over Z/5 (r s k p q l):")
for params in search_affine(5):
    print("  ", params.as_line())
print()

alpha2 = make_affine(unary_affine_params(5, 2, 0))
print("alpha = 2 table: axioms pass:",
      check_axioms(alpha2).is_flat_biquandle,
      "| weight condition witness:", weight_condition(alpha2))
inc = make_affine(unary_affine_params(5, 1, 1))
print("alpha = 1 table: axioms pass:",
      check_axioms(inc).is_flat_biquandle,
      "| weight condition witness:", weight_condition(inc))
print()

preflat = basic_preflat(5, 2, 0)
report = check_axioms(preflat)
print("basic preflat q=2 over Z/5: axiom1/2 pass:", report.is_preflat,
      "| axiom 3 counterexample:", report.axiom3)
print("  weight condition still holds:", weight_condition(preflat) is None)
print()

code = parse_signed("O1+ O2+ U1+ U2+")
colorings = enumerate_colorings(forget(code), preflat)
print(f"virtual trefoil colorings under the q=2 preflat: {len(colorings)}")
for labels in colorings:
    vec = doodle_pre_invariant(code, preflat, labels)
    print(f"  labels {labels[0]} -> doodle vector {vec}")
