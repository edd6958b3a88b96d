import pytest

from vknot import (
    ChengColoring,
    colorability,
    forget,
    lambda_coloring,
    parse_signed,
    propagate_coloring,
    reverse,
    serialize_coloring,
    verify_coloring,
    writhe,
)
from vknot.errors import UncolorableError, ValidationError
from vknot.gauss_code import OVER

from conftest import random_knot_code, random_link_code

VT = "O1+ O2+ U1+ U2+"


def lambda_by_definition(code):
    """Independent oracle: per arc, enumerate crossings first met as
    overcrossings and sum their signs."""
    comp = code.components[0]
    n = len(comp)
    if n == 0:
        return ((0,),)
    labels = []
    for arc in range(n):
        seen = set()
        value = 0
        for step in range(1, n + 1):
            p = comp[(arc + step) % n]
            if p.crossing not in seen:
                seen.add(p.crossing)
                if p.role == OVER:
                    value += p.sign
        labels.append(value)
    return (tuple(labels),)


class TestLambdaColoring:
    def test_virtual_trefoil(self):
        assert lambda_coloring(parse_signed(VT)).labels == ((1, 0, 1, 2),)

    def test_kink(self):
        assert lambda_coloring(parse_signed("O1+ U1+")).labels == ((0, 1),)

    def test_empty_knot(self):
        assert lambda_coloring(parse_signed("()")).labels == ((0,),)

    def test_matches_definition_oracle(self, rng):
        for _ in range(60):
            code = random_knot_code(rng, rng.randrange(1, 8))
            assert lambda_coloring(code).labels == lambda_by_definition(code)

    def test_satisfies_propagation(self, rng):
        for _ in range(40):
            code = random_knot_code(rng, rng.randrange(1, 8))
            assert verify_coloring(code, lambda_coloring(code))

    def test_rejects_links(self):
        with pytest.raises(ValueError):
            lambda_coloring(parse_signed("O1+ U2+ ; U1+ O2+"))

    def test_reversal_identity(self, rng):
        # lambda(arc) + lambda(reversed arc) = writhe, matching arcs across
        # the reversal (arc i corresponds to reversed arc n-2-i)
        for _ in range(40):
            code = random_knot_code(rng, rng.randrange(1, 8))
            lam = lambda_coloring(code).labels[0]
            bar = lambda_coloring(reverse(code)).labels[0]
            w = writhe(code)
            n = len(lam)
            for i in range(n):
                assert lam[i] + bar[(n - 2 - i) % n] == w


class TestPropagateColoring:
    def test_hopf_base(self):
        coloring = propagate_coloring(parse_signed("O1+ U2+ ; U1+ O2+"), (0, 0))
        assert coloring.labels == ((-1, 0), (1, 0))

    def test_knot_offset_shifts_lambda(self, rng):
        for _ in range(20):
            code = random_knot_code(rng, rng.randrange(1, 7))
            k = rng.randrange(-5, 6)
            shifted = propagate_coloring(code, (k,))
            base = lambda_coloring(code)
            assert shifted.labels == tuple(
                tuple(l + k for l in comp) for comp in base.labels)

    def test_uncolorable(self):
        with pytest.raises(UncolorableError):
            propagate_coloring(parse_signed("O1+ O2+ ; U1+ U2+"), (0, 0))

    def test_wrong_offset_count(self):
        with pytest.raises(ValueError):
            propagate_coloring(parse_signed(VT), (0, 0))

    def test_valid_for_links(self, rng):
        produced = 0
        while produced < 20:
            code = random_link_code(rng, rng.randrange(1, 6), 2)
            if not colorability(code).colorable:
                continue
            produced += 1
            offsets = (rng.randrange(-3, 4), rng.randrange(-3, 4))
            assert verify_coloring(code, propagate_coloring(code, offsets))


class TestColorability:
    def test_knots_always_colorable(self, rng):
        for _ in range(30):
            code = random_knot_code(rng, rng.randrange(1, 8))
            report = colorability(code)
            assert report.colorable and report.imbalances == (0,)

    def test_hopf(self):
        report = colorability(parse_signed("O1+ U2+ ; U1+ O2+"))
        assert report.colorable and report.imbalances == (0, 0)

    def test_imbalanced(self):
        report = colorability(parse_signed("O1+ O2+ ; U1+ U2+"))
        assert not report.colorable
        assert report.imbalances == (-2, 2)

    def test_flat_codes_accepted(self):
        from vknot import parse_flat
        assert colorability(parse_flat("R1 R2 L1 L2")).colorable


class TestVerifyColoring:
    def test_canonical_accepted(self):
        code = parse_signed(VT)
        assert verify_coloring(code, ChengColoring(((1, 0, 1, 2),)))

    def test_wrong_labels_rejected(self):
        code = parse_signed(VT)
        assert not verify_coloring(code, ChengColoring(((0, 0, 0, 0),)))

    def test_empty_knot_any_label(self):
        assert verify_coloring(parse_signed("()"), ChengColoring(((7,),)))

    def test_shape_mismatch(self):
        with pytest.raises(ValidationError):
            verify_coloring(parse_signed(VT), ChengColoring(((1, 0),)))

    def test_two_colorings_differ_by_constant(self, rng):
        # any valid coloring of a connected component is a shift of lambda
        for _ in range(20):
            code = random_knot_code(rng, rng.randrange(1, 7))
            lam = lambda_coloring(code)
            shift = rng.randrange(-4, 5)
            assert verify_coloring(code, lam.shifted(shift))
            if len(lam.labels[0]) > 1:
                bent = list(lam.labels[0])
                bent[0] += 1
                assert not verify_coloring(code, ChengColoring((tuple(bent),)))


class TestSerialization:
    def test_format(self):
        coloring = ChengColoring(((-1, 0), (1, 0)))
        assert serialize_coloring(coloring) == "-1,0 ; 1,0"

    def test_single_component(self):
        assert serialize_coloring(ChengColoring(((1, 0, 1, 2),))) == "1,0,1,2"
