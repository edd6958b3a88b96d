"""Signed and flat Gauss codes for virtual knot and link diagrams.

A diagram is stored purely combinatorially: every component is a cyclic
sequence of passages through classical crossings.  Virtual crossings are
never recorded, so purely virtual isotopy (detour moves) is the identity on
this representation; a virtual knot is exactly an equivalence class of these
codes under the classical move rewrites in :mod:`vknot.moves`.

Text grammar (tokens whitespace separated, ``;`` between components)::

    signed passage   O<id><+|->   or   U<id><+|->
    flat passage     L<id>        or   R<id>
    empty component  ()

Crossing ids are positive integers.  Every crossing occurs exactly twice,
once in each role, and both passages of a signed crossing carry the same
sign.  A component with no passages is a zero-crossing unknot component
(these arise as smoothing outputs).
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, replace

from .errors import ParseError, ValidationError

OVER = "O"
UNDER = "U"
LEFT = "L"
RIGHT = "R"


@dataclass(frozen=True)
class Passage:
    """One visit to a classical crossing: id, over/under role, sign."""

    crossing: int
    role: str
    sign: int


@dataclass(frozen=True)
class FlatPassage:
    """One visit to a flat crossing: id and left/right role.

    Role L is the strand that crosses to the left (its label gains one in a
    Cheng coloring); role R crosses to the right (its label drops by one).
    """

    crossing: int
    role: str


@dataclass(frozen=True)
class SignedGaussCode:
    """An oriented virtual knot or link diagram as cyclic passage sequences."""

    components: tuple[tuple[Passage, ...], ...]

    def crossing_ids(self) -> set[int]:
        return {p.crossing for comp in self.components for p in comp}

    def n_crossings(self) -> int:
        return len(self.crossing_ids())

    def passages(self):
        """Yield (component_index, position, passage) over the whole code."""
        for ci, comp in enumerate(self.components):
            for pi, p in enumerate(comp):
                yield ci, pi, p


@dataclass(frozen=True)
class FlatCode:
    """The underlying flat diagram: over/under information forgotten."""

    components: tuple[tuple[FlatPassage, ...], ...]

    def crossing_ids(self) -> set[int]:
        return {p.crossing for comp in self.components for p in comp}

    def n_crossings(self) -> int:
        return len(self.crossing_ids())

    def passages(self):
        for ci, comp in enumerate(self.components):
            for pi, p in enumerate(comp):
                yield ci, pi, p


_TOKEN_RE = re.compile(r"^([OULR])([0-9]+)([+-]?)$")


def _tokenize(text: str, signed: bool):
    kind = "signed" if signed else "flat"
    if text.strip() == "":
        return ()
    components = []
    for part in text.split(";"):
        tokens = part.split()
        if not tokens:
            raise ParseError("empty component must be written '()'")
        if tokens == ["()"]:
            components.append(())
            continue
        comp = []
        for tok in tokens:
            m = _TOKEN_RE.match(tok)
            if m is None:
                raise ParseError(f"bad token {tok!r}")
            letter, digits, sign = m.groups()
            cid = int(digits)
            if cid < 1:
                raise ParseError(f"crossing id must be >= 1 in {tok!r}")
            if signed:
                if letter not in (OVER, UNDER):
                    raise ParseError(f"token {tok!r} is not a {kind} passage")
                if sign not in ("+", "-"):
                    raise ParseError(f"signed passage {tok!r} needs a '+' or '-'")
                comp.append(Passage(cid, letter, 1 if sign == "+" else -1))
            else:
                if letter not in (LEFT, RIGHT):
                    raise ParseError(f"token {tok!r} is not a {kind} passage")
                if sign:
                    raise ParseError(f"flat passage {tok!r} must not carry a sign")
                comp.append(FlatPassage(cid, letter))
        components.append(tuple(comp))
    return tuple(components)


def parse_signed(text: str) -> SignedGaussCode:
    """Parse a signed Gauss code; token order defines the traversal order."""
    code = SignedGaussCode(_tokenize(text, signed=True))
    violations = validate(code)
    if violations:
        raise ValidationError("; ".join(violations))
    return code


def parse_flat(text: str) -> FlatCode:
    """Parse a flat code of L/R passages."""
    code = FlatCode(_tokenize(text, signed=False))
    violations = validate(code)
    if violations:
        raise ValidationError("; ".join(violations))
    return code


def _passage_str(p) -> str:
    if isinstance(p, Passage):
        return f"{p.role}{p.crossing}{'+' if p.sign > 0 else '-'}"
    return f"{p.role}{p.crossing}"


def serialize(code: SignedGaussCode | FlatCode) -> str:
    """Render a code in the text grammar; parse(serialize(x)) == x."""
    parts = []
    for comp in code.components:
        parts.append(" ".join(_passage_str(p) for p in comp) if comp else "()")
    return " ; ".join(parts)


def validate(code: SignedGaussCode | FlatCode) -> list[str]:
    """Return every violated structural invariant (empty list means valid)."""
    signed = isinstance(code, SignedGaussCode)
    roles = (OVER, UNDER) if signed else (LEFT, RIGHT)
    role_names = {OVER: "Over", UNDER: "Under", LEFT: "L", RIGHT: "R"}
    violations = []
    occurrences: dict[int, list] = {}
    for _ci, _pi, p in code.passages():
        if p.crossing < 1:
            violations.append(f"crossing id {p.crossing} is not positive")
        if p.role not in roles:
            violations.append(f"crossing {p.crossing} has invalid role {p.role!r}")
        if signed and p.sign not in (1, -1):
            violations.append(f"crossing {p.crossing} has invalid sign {p.sign!r}")
        occurrences.setdefault(p.crossing, []).append(p)
    for cid in sorted(occurrences):
        passages = occurrences[cid]
        if len(passages) != 2:
            violations.append(f"odd occurrence of {cid}" if len(passages) % 2
                              else f"crossing {cid} occurs {len(passages)} times")
        for role in roles:
            if sum(1 for p in passages if p.role == role) > 1:
                violations.append(
                    f"crossing {cid} appears with role {role_names[role]} twice")
        if signed and len({p.sign for p in passages}) > 1:
            violations.append(f"sign mismatch at {cid}")
    return violations


def _token_key(p) -> tuple[int, int, int]:
    # O and L sort before U and R; '+' before '-'
    if isinstance(p, Passage):
        return (1 if p.role == OVER else 2, p.crossing, 0 if p.sign > 0 else 1)
    return (1 if p.role == LEFT else 2, p.crossing, 0)


_SEPARATOR_KEY = (0, 0, 0)


def canonicalize(code):
    """Canonical representative of a code up to rotation, relabeling and
    component order.

    Crossing ids are renumbered 1..n by first appearance, and the result is
    the lexicographically smallest token stream over all rotations of each
    component and all component orderings.  Idempotent, so two codes describe
    the same diagram exactly when their canonical forms are equal.
    """
    comps = code.components
    if not comps:
        return code
    best_key = None
    best_comps = None
    for perm in itertools.permutations(range(len(comps))):
        ranges = [range(max(len(comps[ci]), 1)) for ci in perm]
        for rots in itertools.product(*ranges):
            relabel: dict[int, int] = {}
            key = []
            new_comps = []
            for ci, r in zip(perm, rots):
                comp = comps[ci]
                rotated = comp[r:] + comp[:r]
                new_comp = []
                for p in rotated:
                    cid = relabel.setdefault(p.crossing, len(relabel) + 1)
                    np = replace(p, crossing=cid)
                    new_comp.append(np)
                    key.append(_token_key(np))
                key.append(_SEPARATOR_KEY)
                new_comps.append(tuple(new_comp))
            tkey = tuple(key)
            if best_key is None or tkey < best_key:
                best_key = tkey
                best_comps = tuple(new_comps)
    return type(code)(best_comps)


def flat_role(p: Passage) -> str:
    """Left/right role of a signed passage.

    The over strand of a positive crossing is the one crossing to the right
    (its label decreases); flipping either the role or the sign flips the
    flat role.
    """
    if p.role == OVER:
        return RIGHT if p.sign > 0 else LEFT
    return LEFT if p.sign > 0 else RIGHT


def forget(code: SignedGaussCode) -> FlatCode:
    """Underlying flat diagram of a signed code."""
    return FlatCode(tuple(
        tuple(FlatPassage(p.crossing, flat_role(p)) for p in comp)
        for comp in code.components))


def resolutions(flat: FlatCode) -> list[SignedGaussCode]:
    """All 2^n assignments of over/under data compatible with a flat code.

    Per crossing the choice is (R passage = over, sign +) or
    (L passage = over, sign -); either way the flat role rule recovers the
    input, so forget() of every output equals ``flat``.  Output order is
    deterministic: crossings sorted by id, positive choice first.
    """
    ids = sorted(flat.crossing_ids())
    out = []
    for choice in itertools.product((1, -1), repeat=len(ids)):
        sign_of = dict(zip(ids, choice))
        comps = []
        for comp in flat.components:
            new_comp = []
            for p in comp:
                s = sign_of[p.crossing]
                if s > 0:
                    role = OVER if p.role == RIGHT else UNDER
                else:
                    role = OVER if p.role == LEFT else UNDER
                new_comp.append(Passage(p.crossing, role, s))
            comps.append(tuple(new_comp))
        out.append(SignedGaussCode(tuple(comps)))
    return out


def _pairings(slots: tuple[int, ...]):
    if not slots:
        yield ()
        return
    first, rest = slots[0], slots[1:]
    for i, second in enumerate(rest):
        for sub in _pairings(rest[:i] + rest[i + 1:]):
            yield ((first, second),) + sub


def all_flat_knot_codes(n_crossings: int) -> list[FlatCode]:
    """Every one-component flat code with exactly n crossings, one canonical
    representative per diagram class, in deterministic order.

    Exhaustive: all chord pairings of the 2n cyclic positions times both L/R
    assignments per crossing, deduplicated by canonical form.  Exponential;
    intended for small n.
    """
    if n_crossings == 0:
        return [FlatCode(((),))]
    seen = {}
    positions = tuple(range(2 * n_crossings))
    for pairing in _pairings(positions):
        for role_bits in itertools.product((LEFT, RIGHT), repeat=n_crossings):
            word: list[FlatPassage | None] = [None] * (2 * n_crossings)
            for cid, ((a, b), first_role) in enumerate(zip(pairing, role_bits), start=1):
                other = RIGHT if first_role == LEFT else LEFT
                word[a] = FlatPassage(cid, first_role)
                word[b] = FlatPassage(cid, other)
            canon = canonicalize(FlatCode((tuple(word),)))
            seen.setdefault(serialize(canon), canon)
    return [seen[k] for k in sorted(seen)]
