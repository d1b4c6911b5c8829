"""Standard curve system on the rotationally symmetric genus-g surface.

The surface carries 3g named simple closed curves a_1..a_g, b_1..b_g,
c_1..c_g (indices mod g) and an order-g rotation shifting every index by
one.  The only geometric data the rest of the package consumes is the
intersection pattern of that system and the first-homology classes of its
curves, both fixed here.
"""

from __future__ import annotations

from dataclasses import dataclass

MIN_GENUS = 3

FAMILIES = ("A", "B", "C")

# Vector of length 2g over the ordered basis (x_1..x_g, y_1..y_g).
HomologyClass = tuple[int, ...]


def check_genus(g: int) -> int:
    if not isinstance(g, int) or g < MIN_GENUS:
        raise ValueError(f"genus must be an integer >= {MIN_GENUS}, got {g!r}")
    return g


def normalize_index(i: int, g: int) -> int:
    """Reduce a curve index mod g into the canonical range 1..g."""
    return (i - 1) % g + 1


@dataclass(frozen=True, slots=True)
class NamedCurve:
    """One of the 3g standard curves: family 'A', 'B' or 'C' plus an index."""

    family: str
    index: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown curve family {self.family!r}")
        if self.index < 1:
            raise ValueError(f"curve index must be >= 1, got {self.index}")

    def __str__(self):
        return f"{self.family.lower()}_{self.index}"


def curve(family: str, index: int, g: int) -> NamedCurve:
    """Build a named curve with its index normalized mod g."""
    check_genus(g)
    return NamedCurve(family, normalize_index(index, g))


def rotate(c: NamedCurve, m: int, g: int) -> NamedCurve:
    """Image of c under the m-th power of the rotation: index shift by m."""
    return NamedCurve(c.family, normalize_index(c.index + m, g))


def geometric_intersection(c: NamedCurve, d: NamedCurve, g: int) -> int:
    """Geometric intersection number of two standard curves (0 or 1).

    The pattern of the standard system: a_i meets b_i, b_i meets c_i,
    c_i meets b_{i+1}, each exactly once; every other pair (including a
    curve with itself) is disjoint.
    """
    check_genus(g)
    ci, di = normalize_index(c.index, g), normalize_index(d.index, g)
    fams = {c.family, d.family}
    if fams == {"A", "B"}:
        return 1 if ci == di else 0
    if fams == {"B", "C"}:
        b = ci if c.family == "B" else di
        cc = di if c.family == "B" else ci
        if b == cc or b == normalize_index(cc + 1, g):
            return 1
        return 0
    return 0


def homology_class(c: NamedCurve, g: int) -> HomologyClass:
    """First-homology class of a named curve over the basis (x_*, y_*).

    Conventions: [a_i] = y_i, [b_i] = x_i, [c_i] = y_i - y_{i+1}.  The
    assignment is rotation-equivariant and reproduces the geometric
    intersection pattern through the symplectic form.
    """
    check_genus(g)
    v = [0] * (2 * g)
    i = normalize_index(c.index, g)
    if c.family == "A":
        v[g + i - 1] = 1
    elif c.family == "B":
        v[i - 1] = 1
    else:
        v[g + i - 1] = 1
        v[g + normalize_index(i + 1, g) - 1] = -1
    return tuple(v)


def algebraic_intersection(u: HomologyClass, v: HomologyClass) -> int:
    """Standard symplectic pairing <x_i, y_i> = 1, <y_i, x_i> = -1."""
    if len(u) != len(v) or len(u) % 2 != 0:
        raise ValueError(f"length mismatch: {len(u)} vs {len(v)}")
    g = len(u) // 2
    return sum(u[i] * v[g + i] - u[g + i] * v[i] for i in range(g))


def basis_class(kind: str, i: int, g: int) -> HomologyClass:
    """The basis vector x_i or y_i as a homology class."""
    v = [0] * (2 * g)
    v[(0 if kind == "x" else g) + i - 1] = 1
    return tuple(v)


def shift_class(v: HomologyClass, m: int, g: int) -> HomologyClass:
    """Cyclic index shift of a class, the homology action of rotation^m."""
    out = [0] * (2 * g)
    for i in range(g):
        out[(i + m) % g] = v[i]
        out[g + (i + m) % g] = v[g + i]
    return tuple(out)


def all_curves(g: int) -> list[NamedCurve]:
    check_genus(g)
    return [NamedCurve(f, i) for f in FAMILIES for i in range(1, g + 1)]
