"""Exact symplectic representation of twist words.

Dehn twists act on first homology as transvections u -> u + e<u,v>v and
the rotation acts as the cyclic index shift; both preserve the standard
form J.  Everything here is integer arithmetic, optionally reduced mod a
prime.  Multiplying by a letter matrix is implemented as the linear
action on columns, so building the matrix of a word costs O(len * g)
instead of a general matrix product per letter.
"""

from __future__ import annotations

from dataclasses import dataclass

from .surface import algebraic_intersection, check_genus, homology_class
from .words import Rot, Twist, TwistWord

Row = tuple[int, ...]


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def is_prime_power(q: int) -> bool:
    if q < 2:
        return False
    for p in range(2, q + 1):
        if p * p > q:
            return is_prime(q)
        if q % p == 0:
            while q % p == 0:
                q //= p
            return q == 1
    return False


def form_matrix(g: int) -> tuple[Row, ...]:
    """The standard form J over the basis (x_1..x_g, y_1..y_g)."""
    n = 2 * g
    rows = [[0] * n for _ in range(n)]
    for i in range(g):
        rows[i][g + i] = 1
        rows[g + i][i] = -1
    return tuple(tuple(r) for r in rows)


@dataclass(frozen=True, slots=True)
class SymplecticMatrix:
    """2g x 2g integer matrix with M^T J M = J, over Z or F_p."""

    entries: tuple[Row, ...]
    genus: int
    modulus: int | None = None

    @property
    def size(self) -> int:
        return 2 * self.genus

    def __mul__(self, other: "SymplecticMatrix") -> "SymplecticMatrix":
        if (other.genus, other.modulus) != (self.genus, self.modulus):
            raise ValueError("matrix size/modulus mismatch")
        n = self.size
        a, b = self.entries, other.entries
        bt = list(zip(*b))
        rows = tuple(
            tuple(sum(ra[k] * cb[k] for k in range(n)) for cb in bt) for ra in a
        )
        if self.modulus:
            rows = tuple(tuple(x % self.modulus for x in r) for r in rows)
        return SymplecticMatrix(rows, self.genus, self.modulus)

    def __pow__(self, n: int) -> "SymplecticMatrix":
        if n < 0:
            return self.inverse() ** (-n)
        result = identity(self.genus, self.modulus)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def inverse(self) -> "SymplecticMatrix":
        """Symplectic inverse M^-1 = -J M^T J (no general elimination needed)."""
        g, n = self.genus, self.size
        m = self.entries
        rows = [[0] * n for _ in range(n)]
        # (-J M^T J)[i][j] expanded blockwise: J swaps x/y blocks with signs.
        for i in range(n):
            for j in range(n):
                si = 1 if i < g else -1
                sj = 1 if j < g else -1
                ii = i + g if i < g else i - g
                jj = j + g if j < g else j - g
                rows[i][j] = si * sj * m[jj][ii]
        if self.modulus:
            rows = [[x % self.modulus for x in r] for r in rows]
        return SymplecticMatrix(tuple(tuple(r) for r in rows), self.genus, self.modulus)

    def is_identity(self) -> bool:
        return self == identity(self.genus, self.modulus)

    def is_symplectic(self) -> bool:
        """Check M^T J M = J by pairing columns under the form."""
        n, g, p = self.size, self.genus, self.modulus
        cols = list(zip(*self.entries))
        for a in range(n):
            for b in range(a, n):
                val = algebraic_intersection(cols[a], cols[b])
                want = 1 if (a < g and b == a + g) else 0
                if (val - want) % p if p else val - want:
                    return False
        return True

    def apply(self, vec: tuple[int, ...]) -> tuple[int, ...]:
        n = self.size
        out = tuple(sum(self.entries[i][k] * vec[k] for k in range(n)) for i in range(n))
        if self.modulus:
            out = tuple(x % self.modulus for x in out)
        return out


def identity(g: int, modulus: int | None = None) -> SymplecticMatrix:
    n = 2 * g
    rows = tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
    return SymplecticMatrix(rows, g, modulus)


def _transvect_columns(cols: list[list[int]], v: tuple[int, ...], e: int, g: int) -> None:
    """In place: each column u becomes u + e<u,v>v."""
    n = 2 * g
    support = [i for i in range(n) if v[i]]
    for u in cols:
        s = e * algebraic_intersection(tuple(u), v)
        if s:
            for i in support:
                u[i] += s * v[i]


def _rotate_columns(cols: list[list[int]], power: int, g: int) -> None:
    """In place: each column is shifted by the rotation's homology action."""
    m = power % g
    if m == 0:
        return
    for u in cols:
        xs = u[:g]
        ys = u[g:]
        u[:g] = xs[-m:] + xs[:-m]
        u[g:] = ys[-m:] + ys[:-m]


def twist_matrix(c, e: int, g: int, modulus: int | None = None) -> SymplecticMatrix:
    """Transvection along the homology class of c with sign e."""
    if e not in (1, -1):
        raise ValueError("twist sign must be +-1")
    check_genus(g)
    v = homology_class(c, g)
    n = 2 * g
    cols = [[1 if i == j else 0 for i in range(n)] for j in range(n)]
    _transvect_columns(cols, v, e, g)
    return _from_columns(cols, g, modulus)


def rotation_matrix(g: int, modulus: int | None = None) -> SymplecticMatrix:
    check_genus(g)
    n = 2 * g
    cols = [[1 if i == j else 0 for i in range(n)] for j in range(n)]
    _rotate_columns(cols, 1, g)
    return _from_columns(cols, g, modulus)


def _from_columns(cols: list[list[int]], g: int, modulus: int | None) -> SymplecticMatrix:
    n = 2 * g
    rows = tuple(
        tuple(cols[j][i] % modulus if modulus else cols[j][i] for j in range(n))
        for i in range(n)
    )
    return SymplecticMatrix(rows, g, modulus)


def apply_word_to_columns(w: TwistWord, cols: list[list[int]], modulus: int | None = None) -> None:
    """Multiply the matrix with the given columns by the word, letters right to left."""
    g = w.genus
    for letter in reversed(w.letters):
        if isinstance(letter, Rot):
            _rotate_columns(cols, letter.power, g)
        else:
            v = homology_class(letter.curve, g)
            _transvect_columns(cols, v, letter.exp, g)
        if modulus:
            for u in cols:
                for i in range(len(u)):
                    u[i] %= modulus


def word_matrix(w: TwistWord, modulus: int | None = None) -> SymplecticMatrix:
    """Homology action of a word: the product of its letter matrices."""
    g = w.genus
    n = 2 * g
    cols = [[1 if i == j else 0 for i in range(n)] for j in range(n)]
    apply_word_to_columns(w, cols, modulus)
    return _from_columns(cols, g, modulus)


def word_action_on_class(w: TwistWord, v: tuple[int, ...]) -> tuple[int, ...]:
    """Image of a homology class under the word, without building the matrix."""
    cols = [list(v)]
    apply_word_to_columns(w, cols)
    return tuple(cols[0])


def matrix_order(m: SymplecticMatrix, cutoff: int) -> int | None:
    """Least n <= cutoff with m^n = 1, or None when the cutoff is exceeded."""
    if cutoff < 1:
        raise ValueError("cutoff must be >= 1")
    ident = identity(m.genus, m.modulus)
    acc = m
    for n in range(1, cutoff + 1):
        if acc == ident:
            return n
        acc = acc * m
    return None


def word_order(w: TwistWord, cutoff: int) -> int | None:
    """matrix_order of word_matrix(w), powering by repeated word application."""
    if cutoff < 1:
        raise ValueError("cutoff must be >= 1")
    g = w.genus
    n = 2 * g
    cols = [[1 if i == j else 0 for i in range(n)] for j in range(n)]
    ident = [[1 if i == j else 0 for i in range(n)] for j in range(n)]
    for k in range(1, cutoff + 1):
        apply_word_to_columns(w, cols)
        if cols == ident:
            return k
    return None


def default_cutoff(g: int) -> int:
    """Default order-search bound: the largest torsion order in play is 4g+2."""
    return 4 * g + 2


def mod_p(m: SymplecticMatrix, p: int) -> SymplecticMatrix:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    rows = tuple(tuple(x % p for x in r) for r in m.entries)
    return SymplecticMatrix(rows, m.genus, p)


def sp_order(n: int, q: int) -> int:
    """Order of Sp(2n, q): q^(n^2) * prod_{i=1..n} (q^(2i) - 1)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if not is_prime_power(q):
        raise ValueError(f"{q} is not a prime power")
    order = q ** (n * n)
    for i in range(1, n + 1):
        order *= q ** (2 * i) - 1
    return order
