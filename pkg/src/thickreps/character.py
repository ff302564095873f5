"""Weight systems and the character ring.

A :class:`Character` is a finite map from weights (fundamental-weight
coordinates) to integer multiplicities.  Irreducible characters come from
Freudenthal's recursion; exterior powers from Newton's identity in terms of
Adams operations.
"""

from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from .rootsystem import RootSystem, RootSystemError, Weight, build_root_system, CartanType


class CharacterError(ValueError):
    """A character operation received inconsistent input."""


class IntegrityError(ArithmeticError):
    """An exact computation produced a value that should be impossible (upstream bug)."""


@dataclass(frozen=True)
class IrrepLabel:
    root_system: RootSystem
    highest_weight: Weight

    def __post_init__(self):
        lam = self.root_system.check_weight(self.highest_weight)
        if any(x < 0 for x in lam):
            raise RootSystemError(f"highest weight {lam} is not dominant")
        object.__setattr__(self, "highest_weight", lam)

    @classmethod
    def of(cls, cartan: str | CartanType, *coords: int) -> "IrrepLabel":
        """``IrrepLabel.of("B2", 0, 1)`` is the spin representation of B2."""
        return cls(build_root_system(cartan), tuple(coords))

    @property
    def is_trivial(self) -> bool:
        return not any(self.highest_weight)

    def __str__(self):
        return f"{self.root_system.name}({','.join(map(str, self.highest_weight))})"


class Character:
    """Virtual character: weight -> nonzero integer multiplicity."""

    __slots__ = ("root_system", "entries")

    def __init__(self, root_system: RootSystem, entries: Mapping[Weight, int] | None = None):
        self.root_system = root_system
        self.entries: dict[Weight, int] = {}
        for w, m in (entries or {}).items():
            if m:
                self.entries[tuple(w)] = int(m)

    @classmethod
    def trivial(cls, rs: RootSystem) -> "Character":
        return cls(rs, {rs.zero(): 1})

    def __eq__(self, other):
        return isinstance(other, Character) and self.root_system == other.root_system \
            and self.entries == other.entries

    def __repr__(self):
        return f"Character({self.root_system.name}, dim={self.dim}, support={len(self.entries)})"

    def __getitem__(self, w) -> int:
        return self.entries.get(tuple(w), 0)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def items(self):
        return self.entries.items()

    @property
    def dim(self) -> int:
        return sum(self.entries.values())

    @property
    def is_genuine(self) -> bool:
        return all(m > 0 for m in self.entries.values())

    def sorted_items(self) -> list[tuple[Weight, int]]:
        """Entries ordered from the top: by level (descending height), then lexicographically."""
        rs = self.root_system
        return sorted(self.entries.items(), key=lambda kv: (-rs.height(kv[0]), tuple(-x for x in kv[0])))

    def _check(self, other: "Character"):
        if self.root_system != other.root_system:
            raise CharacterError(f"root system mismatch: {self.root_system.name} vs {other.root_system.name}")

    def __add__(self, other: "Character") -> "Character":
        return add(self, other)

    def __sub__(self, other: "Character") -> "Character":
        return add(self, scale(other, -1))

    def __mul__(self, other: "Character") -> "Character":
        return tensor(self, other)

    def to_json(self) -> dict:
        (t,) = self.root_system.cartan_types
        return {
            "type": t.family,
            "rank": t.rank,
            "entries": [[list(w), m] for w, m in sorted(self.entries.items())],
        }

    @classmethod
    def from_json(cls, data: dict | str) -> "Character":
        if isinstance(data, str):
            data = json.loads(data)
        rs = build_root_system(CartanType(data["type"], int(data["rank"])))
        return cls(rs, {tuple(w): m for w, m in data["entries"]})


def add(c1: Character, c2: Character) -> Character:
    c1._check(c2)
    out = dict(c1.entries)
    for w, m in c2.entries.items():
        out[w] = out.get(w, 0) + m
    return Character(c1.root_system, out)


def scale(c: Character, k: int) -> Character:
    return Character(c.root_system, {w: k * m for w, m in c.entries.items()})


def tensor(c1: Character, c2: Character) -> Character:
    c1._check(c2)
    out: dict[Weight, int] = defaultdict(int)
    for w1, m1 in c1.entries.items():
        for w2, m2 in c2.entries.items():
            out[tuple(a + b for a, b in zip(w1, w2))] += m1 * m2
    return Character(c1.root_system, out)


def adams(c: Character, k: int) -> Character:
    if k < 1:
        raise CharacterError("Adams operation needs k >= 1")
    return Character(c.root_system, {tuple(k * x for x in w): m for w, m in c.entries.items()})


def exterior_power(c: Character, m: int) -> Character:
    """Character of the m-th exterior power, via m e_m = sum_k (-1)^(k-1) psi^k e_(m-k)."""
    n = c.dim
    if not c.is_genuine:
        raise CharacterError("exterior powers need a genuine character")
    if not 0 <= m <= n:
        raise CharacterError(f"exterior power degree {m} outside 0..{n}")
    return exterior_powers(c, m)[m]


def exterior_powers(c: Character, top: int) -> list[Character]:
    """[e_0, ..., e_top] for a genuine character."""
    rs = c.root_system
    e = [Character.trivial(rs)]
    psi = [None]
    for j in range(1, top + 1):
        psi.append(adams(c, j))
        acc: dict[Weight, int] = defaultdict(int)
        for k in range(1, j + 1):
            sign = 1 if k % 2 else -1
            for w1, m1 in psi[k].entries.items():
                for w2, m2 in e[j - k].entries.items():
                    acc[tuple(a + b for a, b in zip(w1, w2))] += sign * m1 * m2
        out = {}
        for w, v in acc.items():
            if v % j:
                raise IntegrityError(f"Newton recursion left {v}/{j} at weight {w}")
            if v:
                if v < 0:
                    raise IntegrityError(f"negative multiplicity {v // j} in exterior power")
                out[w] = v // j
        e.append(Character(rs, out))
    return e


# -- irreducible characters ----------------------------------------------

def weyl_dim(label: IrrepLabel) -> int:
    """prod over positive roots of (lambda + rho, alpha) / (rho, alpha)."""
    rs = label.root_system
    lam = label.highest_weight
    shifted = tuple(x + 1 for x in lam)
    num, den = 1, 1
    for c in rs.positive_roots_root_coords:
        num *= rs.root_inner(shifted, c)
        den *= rs.root_inner(rs.rho, c)
    q, r = divmod(num, den)
    if r:
        raise IntegrityError(f"Weyl dimension of {label} is not an integer")
    return q


def _norm_shift(rs: RootSystem, mu: Weight) -> Fraction:
    s = tuple(x + 1 for x in mu)
    return rs.inner_product(s, s)


@lru_cache(maxsize=4096)
def dominant_multiplicities(rs: RootSystem, lam: Weight) -> dict[Weight, int]:
    """Multiplicities of the dominant weights of V(lam), by Freudenthal's recursion.

    Dominant weights are reached from ``lam`` by subtracting positive roots and
    processed level by level, so every multiplicity the recursion asks for is
    already known (or zero).
    """
    lam = tuple(lam)
    pos = rs.positive_roots
    pos_rc = rs.positive_roots_root_coords
    root_norms = [rs.root_inner(a, c) for a, c in zip(pos, pos_rc)]
    top = _norm_shift(rs, lam)

    level = {lam: 0}
    by_level: dict[int, list[Weight]] = {0: [lam]}
    todo = [lam]
    while todo:
        nxt = []
        for mu in todo:
            for a, c in zip(pos, pos_rc):
                nu = tuple(x - y for x, y in zip(mu, a))
                if min(nu) < 0 or nu in level:
                    continue
                lv = level[mu] + sum(c)
                level[nu] = lv
                by_level.setdefault(lv, []).append(nu)
                nxt.append(nu)
        todo = nxt

    mult: dict[Weight, int] = {lam: 1}

    def lookup(w: Weight) -> int:
        return mult.get(rs.dominant_representative(w)[0], 0)

    for lv in sorted(by_level):
        if lv == 0:
            continue
        for mu in by_level[lv]:
            rhs = 0
            for a, c, aa in zip(pos, pos_rc, root_norms):
                base = rs.root_inner(mu, c)
                k = 1
                w = mu
                while True:
                    w = tuple(x + y for x, y in zip(w, a))
                    m = lookup(w)
                    if not m:
                        break
                    rhs += m * (base + k * aa)
                    k += 1
            denom = top - _norm_shift(rs, mu)
            if denom == 0:
                if rhs:
                    raise IntegrityError(f"Freudenthal: zero denominator with nonzero sum at {mu}")
                continue
            val = Fraction(2 * rhs) / denom
            if val.denominator != 1 or val < 0:
                raise IntegrityError(f"Freudenthal produced {val} at weight {mu} of V({lam})")
            if val:
                mult[mu] = int(val)
    return mult


def weight_system(label: IrrepLabel) -> Character:
    """Full character of V(lambda): dominant multiplicities spread over Weyl orbits."""
    rs = label.root_system
    out: dict[Weight, int] = {}
    for mu, m in dominant_multiplicities(rs, label.highest_weight).items():
        for w in rs.weyl_orbit(mu):
            out[w] = m
    return Character(rs, out)


def irreducible_character(rs: RootSystem, lam: Iterable[int]) -> Character:
    return weight_system(IrrepLabel(rs, tuple(lam)))


def decompose(c: Character) -> list[tuple[Weight, int]]:
    """Split a genuine character into irreducibles by peeling off highest weights."""
    rs = c.root_system
    residual = dict(c.entries)
    dim0 = c.dim
    out: dict[Weight, int] = {}
    while residual:
        # maximal level among remaining weights is attained by a dominant weight
        best = max(residual, key=lambda w: (rs.height(w), w))
        m = residual[best]
        if m < 0 or any(x < 0 for x in best):
            raise CharacterError(f"not a genuine character: residual {m} at {best}")
        for w, k in weight_system(IrrepLabel(rs, best)).entries.items():
            v = residual.get(w, 0) - m * k
            if v < 0:
                raise CharacterError(f"not a genuine character: negative residual at {w}")
            if v:
                residual[w] = v
            else:
                residual.pop(w, None)
        out[best] = out.get(best, 0) + m
    result = sorted(out.items(), key=lambda kv: (-rs.height(kv[0]), tuple(-x for x in kv[0])))
    total = sum(m * weyl_dim(IrrepLabel(rs, w)) for w, m in result)
    if total != dim0:
        raise IntegrityError(f"decomposition dimension {total} != {dim0}")
    return result


def top_weight(c: Character) -> Weight:
    """A weight of maximal level; for a genuine character it is dominant and maximal."""
    rs = c.root_system
    return max(c.entries, key=lambda w: (rs.height(w), w))
