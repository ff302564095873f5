"""Root systems of the finite Cartan types A-G.

Conventions used throughout the package:

* Cartan matrix ``A[i][j] = <alpha_i, alpha_j^vee> = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j)``,
  so row ``i`` of ``A`` is the simple root ``alpha_i`` written in the
  fundamental-weight basis.
* Simple roots are numbered as in Bourbaki:

  ======  ===============================================  ==================
  family  Dynkin diagram                                   short / long
  ======  ===============================================  ==================
  A_n     1 - 2 - ... - n                                  simply laced
  B_n     1 - 2 - ... - (n-1) => n                         alpha_n short
  C_n     1 - 2 - ... - (n-1) <= n                         alpha_n long
  D_n     1 - ... - (n-2) - {n-1, n}                       simply laced
  E_n     1 - 3 - 4 - 5 - ... - n, with 2 attached to 4    simply laced
  F_4     1 - 2 => 3 - 4                                   alpha_3, alpha_4 short
  G_2     1 <= 2                                           alpha_1 short
  ======  ===============================================  ==================

* The invariant form is normalised so that short roots have squared length 2.

Everything here is exact: integers and :class:`fractions.Fraction`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import gcd
from typing import Sequence

Weight = tuple[int, ...]

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}
_FIXED_RANKS = {"E": (6, 7, 8), "F": (4,), "G": (2,)}


class RootSystemError(ValueError):
    """Invalid Cartan type or mismatched weight data."""


@dataclass(frozen=True, order=True)
class CartanType:
    family: str
    rank: int

    def __post_init__(self):
        fam = self.family
        if fam in _MIN_RANK:
            ok = isinstance(self.rank, int) and self.rank >= _MIN_RANK[fam]
        elif fam in _FIXED_RANKS:
            ok = self.rank in _FIXED_RANKS[fam]
        else:
            raise RootSystemError(f"unknown Cartan family {fam!r}")
        if not ok:
            raise RootSystemError(f"invalid rank {self.rank} for family {fam}")

    def __str__(self):
        return f"{self.family}{self.rank}"

    @classmethod
    def parse(cls, text: str) -> "CartanType":
        """Parse ``"B3"`` or ``"G2"``."""
        text = text.strip()
        try:
            return cls(text[0].upper(), int(text[1:]))
        except (IndexError, ValueError) as exc:
            raise RootSystemError(f"cannot parse Cartan type {text!r}") from exc


def cartan_matrix(t: CartanType) -> list[list[int]]:
    n = t.rank
    A = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i, j, aij=-1, aji=-1):
        # 1-based Bourbaki indices
        A[i - 1][j - 1] = aij
        A[j - 1][i - 1] = aji

    fam = t.family
    if fam in "ABC":
        for i in range(1, n):
            link(i, i + 1)
        if fam == "B":
            link(n - 1, n, -2, -1)
        elif fam == "C":
            link(n - 1, n, -1, -2)
    elif fam == "D":
        for i in range(1, n - 1):
            link(i, i + 1)
        link(n - 2, n)
    elif fam == "E":
        link(1, 3)
        link(2, 4)
        for i in range(3, n):
            link(i, i + 1)
    elif fam == "F":
        link(1, 2)
        link(2, 3, -2, -1)
        link(3, 4)
    elif fam == "G":
        link(1, 2, -1, -3)
    return A


def _half_norms(t: CartanType) -> list[int]:
    """(alpha_i, alpha_i) / 2 for each simple root, short roots -> 1."""
    n, fam = t.rank, t.family
    if fam == "B":
        return [2] * (n - 1) + [1]
    if fam == "C":
        return [1] * (n - 1) + [2]
    if fam == "F":
        return [2, 2, 1, 1]
    if fam == "G":
        return [1, 3]
    return [1] * n


def _inverse(M: Sequence[Sequence[int]]) -> list[list[Fraction]]:
    n = len(M)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(M)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise RootSystemError("singular matrix")
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def _block_diag(blocks: Sequence[Sequence[Sequence[int]]]) -> list[list[int]]:
    n = sum(len(b) for b in blocks)
    out = [[0] * n for _ in range(n)]
    off = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, x in enumerate(row):
                out[off + i][off + j] = x
        off += len(b)
    return out


@dataclass(frozen=True, eq=False)
class RootSystem:
    """Root datum of a simple (or, via :func:`product_root_system`, semi-simple) Lie algebra.

    Weights are integer tuples in the fundamental-weight basis.
    """

    cartan_types: tuple[CartanType, ...]
    cartan_matrix: tuple[tuple[int, ...], ...]
    half_norms: tuple[int, ...]
    _positive_roots: tuple[Weight, ...] = field(default=(), repr=False)

    @property
    def rank(self) -> int:
        return len(self.cartan_matrix)

    @property
    def cartan_type(self) -> CartanType:
        if len(self.cartan_types) != 1:
            raise RootSystemError("semi-simple root system has no single Cartan type")
        return self.cartan_types[0]

    @property
    def name(self) -> str:
        return "x".join(str(t) for t in self.cartan_types) or "trivial"

    def __eq__(self, other):
        return isinstance(other, RootSystem) and self.cartan_matrix == other.cartan_matrix \
            and self.cartan_types == other.cartan_types

    def __hash__(self):
        return hash((self.cartan_types, self.cartan_matrix))

    def __repr__(self):
        return f"RootSystem({self.name})"

    @cached_property
    def simple_roots(self) -> tuple[Weight, ...]:
        return tuple(tuple(row) for row in self.cartan_matrix)

    @cached_property
    def inv_cartan(self) -> tuple[tuple[Fraction, ...], ...]:
        return tuple(tuple(r) for r in _inverse(self.cartan_matrix))

    @cached_property
    def _scaled_inverse(self) -> tuple[int, tuple[tuple[int, ...], ...]]:
        # (den, den * A^{-T}) with integer entries; fast root-lattice test
        inv = self.inv_cartan
        den = 1
        for row in inv:
            for x in row:
                den = den * x.denominator // gcd(den, x.denominator)
        n = self.rank
        return den, tuple(tuple(int(inv[j][i] * den) for j in range(n)) for i in range(n))

    @cached_property
    def form(self) -> tuple[tuple[Fraction, ...], ...]:
        """Gram matrix (omega_i, omega_j) of the fundamental weights."""
        inv, d = self.inv_cartan, self.half_norms
        n = self.rank
        return tuple(tuple(inv[j][i] * d[i] for j in range(n)) for i in range(n))

    @property
    def positive_roots(self) -> tuple[Weight, ...]:
        return self._positive_roots

    @cached_property
    def positive_roots_root_coords(self) -> tuple[Weight, ...]:
        return tuple(tuple(int(c) for c in self.simple_root_coords(a)) for a in self._positive_roots)

    @cached_property
    def rho(self) -> Weight:
        return (1,) * self.rank

    def zero(self) -> Weight:
        return (0,) * self.rank

    def check_weight(self, mu: Sequence[int]) -> Weight:
        mu = tuple(int(x) for x in mu)
        if len(mu) != self.rank:
            raise RootSystemError(f"weight {mu} has length {len(mu)}, expected rank {self.rank}")
        return mu

    # -- arithmetic -------------------------------------------------------

    def inner_product(self, mu: Sequence[int], nu: Sequence[int]) -> Fraction:
        if len(mu) != self.rank or len(nu) != self.rank:
            raise RootSystemError("dimension mismatch in inner product")
        F = self.form
        return sum((mu[i] * F[i][j] * nu[j] for i in range(self.rank) for j in range(self.rank)
                    if mu[i] and nu[j]), Fraction(0))

    def simple_root_coords(self, mu: Sequence[int]) -> tuple[Fraction, ...]:
        """Coordinates of ``mu`` in the basis of simple roots."""
        inv = self.inv_cartan
        n = self.rank
        return tuple(sum((mu[i] * inv[i][j] for i in range(n) if mu[i]), Fraction(0))
                     for j in range(n))

    def root_lattice_coords(self, mu: Sequence[int]) -> tuple[int, ...] | None:
        """Integer simple-root coordinates of ``mu``, or None off the root lattice."""
        den, S = self._scaled_inverse
        out = []
        for row in S:
            s = sum(r * m for r, m in zip(row, mu))
            if s % den:
                return None
            out.append(s // den)
        return tuple(out)

    def from_root_coords(self, c: Sequence[int]) -> Weight:
        A = self.cartan_matrix
        n = self.rank
        return tuple(sum(c[i] * A[i][j] for i in range(n)) for j in range(n))

    def reflect(self, mu: Sequence[int], i: int) -> Weight:
        k = mu[i]
        if not k:
            return tuple(mu)
        a = self.cartan_matrix[i]
        return tuple(m - k * x for m, x in zip(mu, a))

    def dominant_representative(self, mu: Sequence[int]) -> tuple[Weight, int]:
        """Dominant weight in the Weyl orbit of ``mu`` and the number of reflections used."""
        mu = tuple(mu)
        steps = 0
        while True:
            i = next((j for j, x in enumerate(mu) if x < 0), None)
            if i is None:
                return mu, steps
            mu = self.reflect(mu, i)
            steps += 1

    def weyl_orbit(self, mu: Sequence[int]) -> set[Weight]:
        mu = tuple(mu)
        seen = {mu}
        todo = [mu]
        while todo:
            w = todo.pop()
            for i in range(self.rank):
                if w[i]:
                    v = self.reflect(w, i)
                    if v not in seen:
                        seen.add(v)
                        todo.append(v)
        return seen

    def height(self, mu: Sequence[int]) -> Fraction:
        return sum(self.simple_root_coords(mu), Fraction(0))

    def root_inner(self, mu: Sequence[int], alpha_root_coords: Sequence[int]) -> int:
        """(mu, alpha) for a root given in simple-root coordinates; always an integer."""
        d = self.half_norms
        return sum(c * d[i] * mu[i] for i, c in enumerate(alpha_root_coords) if c)


def _positive_roots(A: Sequence[Sequence[int]]) -> list[Weight]:
    """Positive roots in simple-root coordinates, generated by root-string closure."""
    n = len(A)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    roots = list(simple)
    known = set(roots)
    layer = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            # <beta, alpha_i^vee> = sum_j c_j A[j][i]
            for i in range(n):
                pair = sum(beta[j] * A[j][i] for j in range(n))
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in known:
                        p += 1
                    else:
                        break
                q = p - pair
                if q > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in known:
                        known.add(up)
                        roots.append(up)
                        nxt.append(up)
        layer = nxt
    return roots


def _assemble(types: tuple[CartanType, ...], A, d) -> RootSystem:
    rs = RootSystem(types, tuple(tuple(r) for r in A), tuple(d))
    pos = tuple(rs.from_root_coords(c) for c in _positive_roots(A))
    object.__setattr__(rs, "_positive_roots", pos)
    return rs


_CACHE: dict[CartanType, RootSystem] = {}


def build_root_system(t: CartanType | str) -> RootSystem:
    if isinstance(t, str):
        t = CartanType.parse(t)
    rs = _CACHE.get(t)
    if rs is None:
        rs = _CACHE[t] = _assemble((t,), cartan_matrix(t), _half_norms(t))
    return rs


def product_root_system(*factors: RootSystem) -> RootSystem:
    """Root system of a direct product; simple roots are the disjoint union."""
    types = tuple(t for f in factors for t in f.cartan_types)
    A = _block_diag([f.cartan_matrix for f in factors])
    d = [x for f in factors for x in f.half_norms]
    return _assemble(types, A, d)


def inner_product(rs: RootSystem, mu, nu) -> Fraction:
    return rs.inner_product(mu, nu)


def dominant_representative(rs: RootSystem, mu) -> tuple[Weight, int]:
    return rs.dominant_representative(mu)


def simple_root_coords(rs: RootSystem, mu) -> tuple[Fraction, ...]:
    return rs.simple_root_coords(mu)


def positive_root_count(t: CartanType) -> int:
    """Closed-form |positive roots| for each family."""
    n = t.rank
    return {
        "A": n * (n + 1) // 2,
        "B": n * n,
        "C": n * n,
        "D": n * (n - 1),
        "E": {6: 36, 7: 63, 8: 120}.get(n, 0),
        "F": 24,
        "G": 6,
    }[t.family]
