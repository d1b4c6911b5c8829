"""Symbolic action of twist words on named curves.

Three rules, applied in order, decide what a signed twist does to a
(possibly derived) curve:

R1  a twist on a curve disjoint from the whole support fixes the
    expression (a derived curve lives in a neighborhood of its support);
R2  the braid collapse t_c t_d(c) = d, and its inverse-signs twin, when
    the expression is a one-step derived curve;
R3  otherwise the letter joins the prefix and only the homology class is
    updated, by the transvection formula.

Anything the rules cannot resolve stays symbolic; the homology class is
kept exact throughout as the necessary-condition fallback.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .surface import (
    HomologyClass,
    NamedCurve,
    algebraic_intersection,
    geometric_intersection,
    homology_class,
    rotate,
    shift_class,
)
from .words import Twist, TwistWord


@dataclass(frozen=True, slots=True)
class CurveExpr:
    """A named curve, or a twist-word prefix applied to one, with its class."""

    prefix: tuple[Twist, ...]
    base: NamedCurve
    hclass: HomologyClass
    genus: int

    @property
    def is_named(self) -> bool:
        return not self.prefix

    def support(self) -> set[NamedCurve]:
        return {l.curve for l in self.prefix} | {self.base}

    def __str__(self):
        if self.is_named:
            return str(self.base)
        pre = " ".join(f"t_{l.curve}^{l.exp:+d}" for l in self.prefix)
        return f"({pre})({self.base})"


def named_expr(c: NamedCurve, g: int) -> CurveExpr:
    return CurveExpr((), c, homology_class(c, g), g)


def transvect(v: HomologyClass, w: HomologyClass, e: int) -> HomologyClass:
    """v + e<v,w>w, the homology effect of the twist with class w and sign e."""
    s = e * algebraic_intersection(v, w)
    if not s:
        return v
    return tuple(a + s * b for a, b in zip(v, w))


def apply_letter(l: Twist, x: CurveExpr) -> tuple[CurveExpr, str]:
    """Apply one signed twist; returns the new expression and the rule used."""
    g = x.genus
    if all(geometric_intersection(l.curve, s, g) == 0 for s in x.support()):
        return x, "R1"
    new_class = transvect(x.hclass, homology_class(l.curve, g), l.exp)
    if (
        len(x.prefix) == 1
        and l.curve == x.base
        and l.exp == x.prefix[0].exp
        and geometric_intersection(x.base, x.prefix[0].curve, g) == 1
    ):
        # Braid collapse: the resulting curve is named, and new_class is
        # its exact class image, which may be the negative of the stored
        # convention for that curve.
        return CurveExpr((), x.prefix[0].curve, new_class, g), "R2"
    return CurveExpr((l,) + x.prefix, x.base, new_class, g), "R3"


def rotate_expr(x: CurveExpr, m: int) -> CurveExpr:
    """Image of the expression under rotation^m."""
    g = x.genus
    prefix = tuple(Twist(rotate(l.curve, m, g), l.exp) for l in x.prefix)
    return CurveExpr(prefix, rotate(x.base, m, g), shift_class(x.hclass, m, g), g)


def apply_word(w: TwistWord, c: NamedCurve) -> tuple[CurveExpr, list[str]]:
    """Apply a twist-only word to a named curve, rightmost letter first."""
    if not w.is_twist_only:
        raise ValueError("apply_word needs a twist-only word; push rotations first")
    x = named_expr(c, w.genus)
    trace = []
    for l in reversed(w.letters):
        x, rule = apply_letter(l, x)
        trace.append(rule)
    return x, trace


RESOLVED = "resolved"
HOMOLOGY_ONLY = "homology-only"
STUCK = "stuck"
MISMATCH = "mismatch"


@dataclass(frozen=True, slots=True)
class ActionVerdict:
    """Outcome of one curve under an action claim."""

    status: str  # resolved | homology-only | stuck | mismatch
    input: NamedCurve
    expected: NamedCurve
    result: CurveExpr
    trace: tuple[str, ...] = field(default=())

    @property
    def ok(self) -> bool:
        return self.status == RESOLVED


def check_one(e_twists: TwistWord, e_rot: int, c: NamedCurve, expected: NamedCurve) -> ActionVerdict:
    """Check that the element (rotation^e_rot * e_twists) sends c to expected."""
    g = e_twists.genus
    x, trace = apply_word(e_twists, c)
    x = rotate_expr(x, e_rot)
    if x.is_named:
        status = RESOLVED if x.base == expected else MISMATCH
        return ActionVerdict(status, c, expected, x, tuple(trace))
    want = homology_class(expected, g)
    neg = tuple(-a for a in want)
    if x.hclass in (want, neg):
        return ActionVerdict(HOMOLOGY_ONLY, c, expected, x, tuple(trace))
    return ActionVerdict(STUCK, c, expected, x, tuple(trace))


def check_action_claim(
    e: TwistWord, inputs: list[NamedCurve], outputs: list[NamedCurve]
) -> list[ActionVerdict]:
    """Per-position verdicts for the claim e(inputs) = outputs."""
    if len(inputs) != len(outputs):
        raise ValueError("inputs and outputs must have equal length")
    from .words import push_rotations

    n = push_rotations(e)
    tw = TwistWord(n.twists, e.genus)
    return [check_one(tw, n.rot_power, c, out) for c, out in zip(inputs, outputs)]
