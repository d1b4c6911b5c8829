"""Twist words: the free currency for mapping classes in this package.

A word is a finite sequence of letters, each either a signed Dehn twist
on a named curve or a nonzero power of the rotation.  Words multiply in
reading order and compose right-to-left: in ``f1 f2`` the factor ``f2``
acts first.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .surface import (
    NamedCurve,
    check_genus,
    geometric_intersection,
    normalize_index,
    rotate,
)


@dataclass(frozen=True, slots=True)
class Twist:
    curve: NamedCurve
    exp: int  # +1 or -1

    def __post_init__(self):
        if self.exp not in (1, -1):
            raise ValueError(f"twist exponent must be +-1, got {self.exp}")

    def inverse(self) -> "Twist":
        return Twist(self.curve, -self.exp)


@dataclass(frozen=True, slots=True)
class Rot:
    power: int

    def __post_init__(self):
        if self.power == 0:
            raise ValueError("rotation power must be nonzero")


Letter = Twist | Rot


@dataclass(frozen=True, slots=True)
class TwistWord:
    letters: tuple[Letter, ...]
    genus: int

    def __post_init__(self):
        check_genus(self.genus)
        for l in self.letters:
            if isinstance(l, Twist) and not 1 <= l.curve.index <= self.genus:
                raise ValueError(f"curve index {l.curve.index} out of range for genus {self.genus}")

    def __mul__(self, other: "TwistWord") -> "TwistWord":
        if other.genus != self.genus:
            raise ValueError("cannot multiply words of different genus")
        return TwistWord(self.letters + other.letters, self.genus)

    def __len__(self):
        return len(self.letters)

    @property
    def is_twist_only(self) -> bool:
        return all(isinstance(l, Twist) for l in self.letters)

    def __str__(self):
        return format_word(self)


@dataclass(frozen=True, slots=True)
class RotNormalWord:
    """Equal element written as rotation^rot_power followed by twists only."""

    rot_power: int  # reduced mod genus into 0..g-1
    twists: tuple[Twist, ...]
    genus: int

    def to_word(self) -> TwistWord:
        head: tuple[Letter, ...] = (Rot(self.rot_power),) if self.rot_power else ()
        return TwistWord(head + self.twists, self.genus)


class WordSyntaxError(ValueError):
    def __init__(self, message: str, position: int, token: str):
        super().__init__(f"token {position}: {message}: {token!r}")
        self.position = position
        self.token = token


_TWIST_RE = re.compile(r"^([ABC])([0-9]+)(?:\^(-?[0-9]+))?$")
_ROT_RE = re.compile(r"^R(?:\^(-?[0-9]+))?$")


def parse(text: str, g: int) -> TwistWord:
    """Parse the word DSL: whitespace-separated tokens like ``A1``, ``B5^-1``, ``R^4``.

    Twist exponents beyond +-1 expand into repeated unit letters; indices
    are normalized mod g (a literal index 0 is rejected).
    """
    check_genus(g)
    letters: list[Letter] = []
    for pos, token in enumerate(text.split(), start=1):
        m = _ROT_RE.match(token)
        if m:
            power = int(m.group(1)) if m.group(1) is not None else 1
            if power == 0:
                raise WordSyntaxError("zero exponent", pos, token)
            letters.append(Rot(power))
            continue
        m = _TWIST_RE.match(token)
        if m:
            family, raw_index, raw_exp = m.group(1), int(m.group(2)), m.group(3)
            if raw_index == 0:
                raise WordSyntaxError("index 0 is not a valid curve index", pos, token)
            exp = int(raw_exp) if raw_exp is not None else 1
            if exp == 0:
                raise WordSyntaxError("zero exponent", pos, token)
            c = NamedCurve(family, normalize_index(raw_index, g))
            sign = 1 if exp > 0 else -1
            letters.extend([Twist(c, sign)] * abs(exp))
            continue
        if re.match(r"^[A-Za-z][0-9]+(\^-?[0-9]+)?$", token):
            raise WordSyntaxError("unknown family", pos, token)
        raise WordSyntaxError("malformed token", pos, token)
    return TwistWord(tuple(letters), g)


def format_word(w: TwistWord) -> str:
    """Inverse of parse: ``parse(format_word(w), g) == w``."""
    parts = []
    for l in w.letters:
        if isinstance(l, Rot):
            parts.append("R" if l.power == 1 else f"R^{l.power}")
        else:
            parts.append(f"{l.curve.family}{l.curve.index}" + ("" if l.exp == 1 else "^-1"))
    return " ".join(parts)


def invert(w: TwistWord) -> TwistWord:
    out: list[Letter] = []
    for l in reversed(w.letters):
        out.append(Rot(-l.power) if isinstance(l, Rot) else l.inverse())
    return TwistWord(tuple(out), w.genus)


def conjugate_by_rotation(w: TwistWord, m: int) -> TwistWord:
    """The word for rotation^m * w * rotation^-m; w must be twist-only."""
    if not w.is_twist_only:
        raise ValueError("conjugate_by_rotation needs a twist-only word; push rotations first")
    letters = tuple(Twist(rotate(l.curve, m, w.genus), l.exp) for l in w.letters)
    return TwistWord(letters, w.genus)


def push_rotations(w: TwistWord) -> RotNormalWord:
    """Move every rotation letter to the front using r t_c r^-1 = t_{r(c)}.

    Scanning right to left with the suffix already in the form R^m * T,
    a twist letter t prepends as the twist at the curve rotated by -m.
    """
    g = w.genus
    m = 0
    twists: list[Twist] = []
    for l in reversed(w.letters):
        if isinstance(l, Rot):
            m = (m + l.power) % g
        else:
            twists.insert(0, Twist(rotate(l.curve, -m, g), l.exp))
    return RotNormalWord(m % g, tuple(twists), g)


def _letter_key(l: Twist) -> tuple[int, int, int]:
    return ("ABC".index(l.curve.family), l.curve.index, 0 if l.exp > 0 else 1)


def letters_commute(a: Twist, b: Twist, g: int) -> bool:
    """Twists on distinct disjoint curves commute; same-curve letters are kept in order."""
    return a.curve != b.curve and geometric_intersection(a.curve, b.curve, g) == 0


def _cancel_pass(ls: list[Twist], g: int) -> bool:
    """Delete one pair t_c^e ... t_c^-e whose interior commutes with c. True if deleted."""
    for i, li in enumerate(ls):
        for j in range(i + 1, len(ls)):
            lj = ls[j]
            if lj.curve == li.curve:
                if lj.exp == -li.exp:
                    del ls[j]
                    del ls[i]
                    return True
                break
            if geometric_intersection(lj.curve, li.curve, g) != 0:
                break
    return False


def _lex_least(ls: list[Twist], g: int) -> list[Twist]:
    """Lexicographically least linearization of the trace of ls.

    Greedy: repeatedly remove the smallest letter among those that can be
    moved to the front (every earlier letter commutes with it).
    """
    rest = list(ls)
    out: list[Twist] = []
    while rest:
        best_i = None
        for i, l in enumerate(rest):
            if all(letters_commute(m, l, g) for m in rest[:i]):
                if best_i is None or _letter_key(l) < _letter_key(rest[best_i]):
                    best_i = i
        out.append(rest.pop(best_i))
    return out


def commuting_reduce(w: TwistWord) -> TwistWord:
    """Canonical form modulo disjoint-twist commutation and free cancellation.

    The output is the unique reduced representative of the commutation
    class of w, linearized in the fixed letter order (family, index,
    positive before negative).
    """
    if not w.is_twist_only:
        raise ValueError("commuting_reduce needs a twist-only word; push rotations first")
    ls = list(w.letters)
    while _cancel_pass(ls, w.genus):
        pass
    return TwistWord(tuple(_lex_least(ls, w.genus)), w.genus)


def canonical_key(w: TwistWord) -> tuple:
    """Hashable canonical key of a twist-only word (equal keys => equal in the group)."""
    r = commuting_reduce(w)
    return tuple((l.curve.family, l.curve.index, l.exp) for l in r.letters)


def normal_key(n: RotNormalWord) -> tuple:
    """Canonical key of a rotation-normal word: rotation power plus twist key."""
    return (n.rot_power % n.genus, canonical_key(TwistWord(n.twists, n.genus)))
