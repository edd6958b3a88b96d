"""Crossing weights, the affine index polynomial and its relatives.

At a crossing whose left-incoming arc is labeled ``a`` and right-incoming
arc ``b``, the outgoing labels are ``a - 1`` (right) and ``b + 1`` (left),
and the crossing carries

    W_plus = a - (b + 1)        W_minus = b - (a - 1) = -W_plus

The weight of a crossing in a signed diagram is W_plus or W_minus according
to its sign, equivalently label(over-in) - label(under-in) - sign.  Both
computations are performed and compared at every crossing to guard the
left/right convention.  The polynomial of a knot K is

    P_K(t) = sum over crossings of sign(c) * (t^W(c) - 1)

taken with the canonical lambda coloring; links use a supplied coloring and
give an invariant of the (diagram, coloring) pair.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .coloring import ChengColoring, colorability, incoming_label, \
    lambda_coloring, verify_coloring
from .diagram_ops import switch_crossings, writhe
from .errors import UncolorableError, ValidationError
from .gauss_code import LEFT, OVER, RIGHT, UNDER, FlatPassage, Passage, \
    SignedGaussCode, flat_role, validate
from .laurent import LaurentPolynomial


@dataclass(frozen=True)
class CrossingWeight:
    crossing: int
    sign: int
    w_plus: int
    w_minus: int
    weight: int


@dataclass(frozen=True)
class WeightTable:
    entries: tuple[CrossingWeight, ...]

    def by_id(self) -> dict[int, CrossingWeight]:
        return {e.crossing: e for e in self.entries}

    def signed_weights(self) -> list[tuple[int, int]]:
        return [(e.sign, e.weight) for e in self.entries]


def _crossing_map(code: SignedGaussCode) -> dict[int, dict[str, tuple[int, int]]]:
    """id -> {'O': (comp, pos), 'U': ..., 'L': ..., 'R': ...} plus sign."""
    out: dict[int, dict] = {}
    for ci, pi, p in code.passages():
        entry = out.setdefault(p.crossing, {"sign": p.sign})
        entry[p.role] = (ci, pi)
        entry[flat_role(p)] = (ci, pi)
    return out


def crossing_weights(code: SignedGaussCode, coloring: ChengColoring | None = None) -> WeightTable:
    """Weight table for a colored diagram (canonical coloring for knots).

    Each weight is computed twice, from the flat a/b formula and from the
    over/under label difference; a mismatch means the role conventions have
    drifted and raises AssertionError.
    """
    if coloring is None:
        coloring = lambda_coloring(code)
    if not verify_coloring(code, coloring):
        raise ValidationError("coloring does not satisfy the labeling rule")
    entries = []
    for cid, info in sorted(_crossing_map(code).items()):
        sign = info["sign"]
        a = incoming_label(coloring, *info[RIGHT])
        b = incoming_label(coloring, *info[LEFT])
        w_plus = a - (b + 1)
        w_minus = b - (a - 1)
        weight = w_plus if sign > 0 else w_minus
        over_in = incoming_label(coloring, *info[OVER])
        under_in = incoming_label(coloring, *info[UNDER])
        if weight != over_in - under_in - sign:
            raise AssertionError(f"weight convention mismatch at crossing {cid}")
        entries.append(CrossingWeight(cid, sign, w_plus, w_minus, weight))
    return WeightTable(tuple(entries))


def _polynomial_from_weights(table: WeightTable) -> LaurentPolynomial:
    coeffs: dict[int, int] = {}
    for e in table.entries:
        coeffs[e.weight] = coeffs.get(e.weight, 0) + e.sign
        coeffs[0] = coeffs.get(0, 0) - e.sign
    return LaurentPolynomial.from_dict(coeffs)


def affine_index_polynomial(code: SignedGaussCode) -> LaurentPolynomial:
    """P_K(t) for a one-component code, using the canonical coloring."""
    if len(code.components) != 1:
        raise ValueError("affine_index_polynomial needs a one-component code; "
                         "use link_pair_polynomial for links")
    return _polynomial_from_weights(crossing_weights(code))


def link_pair_polynomial(code: SignedGaussCode, coloring: ChengColoring) -> LaurentPolynomial:
    """The same weight sum over all crossings with a supplied coloring."""
    return _polynomial_from_weights(crossing_weights(code, coloring))


@dataclass(frozen=True)
class SymbolicWeight:
    """Crossing weight as constant + offset[plus] - offset[minus].

    Self-crossings have plus_component == minus_component, so their weight is
    the constant regardless of offsets.
    """

    crossing: int
    sign: int
    constant: int
    plus_component: int
    minus_component: int

    def evaluate(self, offsets) -> int:
        return self.constant + offsets[self.plus_component] - offsets[self.minus_component]

    def __str__(self) -> str:
        s = str(self.constant)
        if self.plus_component != self.minus_component:
            s += f" + off_{self.plus_component} - off_{self.minus_component}"
        return s


def symbolic_link_weights(code: SignedGaussCode) -> tuple[SymbolicWeight, ...]:
    """Weights as affine expressions in per-component offsets.

    Every arc label is offset[component] plus an integer determined by
    propagation, so each weight is affine in the offsets with unit
    coefficients.
    """
    report = colorability(code)
    if not report.colorable:
        raise UncolorableError(
            f"role imbalances {report.imbalances} prevent a coloring")
    # labels relative to a zero base entering each component's first passage
    rel = []
    for comp in code.components:
        labels = []
        current = 0
        for p in comp:
            current += 1 if flat_role(p) == LEFT else -1
            labels.append(current)
        rel.append(tuple(labels) if labels else (0,))
    relative = ChengColoring(tuple(rel))
    out = []
    for cid, info in sorted(_crossing_map(code).items()):
        sign = info["sign"]
        r_comp, _ = info[RIGHT]
        l_comp, _ = info[LEFT]
        a = incoming_label(relative, *info[RIGHT])
        b = incoming_label(relative, *info[LEFT])
        if sign > 0:
            out.append(SymbolicWeight(cid, sign, a - b - 1, r_comp, l_comp))
        else:
            out.append(SymbolicWeight(cid, sign, b - a + 1, l_comp, r_comp))
    return tuple(out)


def vassiliev_invariant(source, n: int) -> Fraction:
    """v_n = (1/n!) * sum of sign(c) * W(c)^n, as an exact rational.

    ``source`` is either a one-component code (weights computed internally)
    or an iterable of (sign, weight) pairs.
    """
    if n < 1:
        raise ValueError("order n must be >= 1")
    if isinstance(source, SignedGaussCode):
        pairs = crossing_weights(source).signed_weights()
    else:
        pairs = list(source)
    total = sum(sign * weight**n for sign, weight in pairs)
    return Fraction(total, factorial(n))


def vassiliev_of_polynomial(poly: LaurentPolynomial, n: int) -> Fraction:
    """Coefficient of x^n in P(e^x), times nothing else: (1/n!) sum a_i c_i^n."""
    if n < 1:
        raise ValueError("order n must be >= 1")
    return Fraction(sum(c * e**n for e, c in poly.terms), factorial(n))


def skein_difference(code: SignedGaussCode, cid: int) -> LaurentPolynomial:
    """P(K with crossing cid positive) - P(K with it negative).

    Equals t^W + t^-W - 2 where W is the positive version's W_plus at cid;
    the -2 is the writhe difference between the two diagrams.
    """
    if cid not in code.crossing_ids():
        raise ValueError(f"unknown crossing id {cid}")
    sign = next(p.sign for _ci, _pi, p in code.passages() if p.crossing == cid)
    plus = code if sign > 0 else switch_crossings(code, {cid})
    minus = switch_crossings(plus, {cid})
    return affine_index_polynomial(plus) - affine_index_polynomial(minus)


@dataclass(frozen=True)
class SingularCode:
    """A signed code in which some crossings are graphical nodes.

    Singular crossings carry only flat roles (FlatPassage); the rest are
    ordinary signed passages.
    """

    components: tuple[tuple[Passage | FlatPassage, ...], ...]

    def singular_ids(self) -> set[int]:
        return {p.crossing for comp in self.components for p in comp
                if isinstance(p, FlatPassage)}


def make_singular(code: SignedGaussCode, ids) -> SingularCode:
    """Flag the listed crossings as singular nodes, keeping flat roles."""
    ids = set(ids)
    unknown = ids - code.crossing_ids()
    if unknown:
        raise ValueError(f"unknown crossing ids {sorted(unknown)}")
    return SingularCode(tuple(
        tuple(FlatPassage(p.crossing, flat_role(p)) if p.crossing in ids else p
              for p in comp)
        for comp in code.components))


def validate_singular(g: SingularCode) -> list[str]:
    violations = []
    flat_seen: dict[int, list[str]] = {}
    signed: dict[int, list[Passage]] = {}
    for comp in g.components:
        for p in comp:
            if isinstance(p, FlatPassage):
                flat_seen.setdefault(p.crossing, []).append(p.role)
            else:
                signed.setdefault(p.crossing, []).append(p)
    for cid, roles in sorted(flat_seen.items()):
        if cid in signed:
            violations.append(f"crossing {cid} is both singular and signed")
        if sorted(roles) != [LEFT, RIGHT]:
            violations.append(f"singular crossing {cid} needs one L and one R passage")
    plain = SignedGaussCode(tuple(
        tuple(p for p in comp if isinstance(p, Passage)) for comp in g.components))
    violations.extend(validate(plain))
    return violations


def _resolve_singular(g: SingularCode, signs: dict[int, int]) -> SignedGaussCode:
    comps = []
    for comp in g.components:
        new_comp = []
        for p in comp:
            if isinstance(p, FlatPassage):
                s = signs[p.crossing]
                if s > 0:
                    role = OVER if p.role == RIGHT else UNDER
                else:
                    role = OVER if p.role == LEFT else UNDER
                new_comp.append(Passage(p.crossing, role, s))
            else:
                new_comp.append(p)
        comps.append(tuple(new_comp))
    return SignedGaussCode(tuple(comps))


def graph_polynomial(g: SingularCode) -> LaurentPolynomial:
    """Polynomial of a 4-valent graph diagram, by expanding each node as
    (positive resolution) - (negative resolution).

    The sum runs over all 2^m sign assignments with product-of-signs
    coefficients; with no singular nodes this is the ordinary polynomial.
    """
    violations = validate_singular(g)
    if violations:
        raise ValidationError("; ".join(violations))
    if len(g.components) != 1:
        raise ValueError("graph_polynomial needs a one-component code")
    ids = sorted(g.singular_ids())
    total = LaurentPolynomial.zero()
    for choice in itertools.product((1, -1), repeat=len(ids)):
        coefficient = 1
        for s in choice:
            coefficient *= s
        resolved = _resolve_singular(g, dict(zip(ids, choice)))
        total = total + affine_index_polynomial(resolved).scaled(coefficient)
    return total


@dataclass(frozen=True)
class FlatCertificate:
    """Result of checking every resolution of a flat knot.

    certified is True when no resolution has zero polynomial; witness is a
    zero-polynomial resolution otherwise.  polynomials lists all resolution
    values in enumeration order.
    """

    certified: bool
    witness: SignedGaussCode | None
    polynomials: tuple[LaurentPolynomial, ...]


def flat_nontriviality_certificate(flat) -> FlatCertificate:
    """Certify a flat knot nontrivial: every resolution has P != 0.

    A trivializable flat diagram would be overlaid by a trivializing isotopy
    for some resolution, so an all-nonzero sweep certifies the flat knot
    itself nontrivial.
    """
    from .gauss_code import resolutions

    if len(flat.components) != 1:
        raise ValueError("flat certificates are defined for one-component codes")
    polys = []
    witness = None
    for resolution in resolutions(flat):
        p = affine_index_polynomial(resolution)
        polys.append(p)
        if p.is_zero() and witness is None:
            witness = resolution
    return FlatCertificate(witness is None, witness, tuple(polys))
