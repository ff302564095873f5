"""Weight posets under the root order."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import combinations

from .character import Character, IntegrityError
from .rootsystem import RootSystem, Weight


class Order(enum.Enum):
    LESS = "Less"
    GREATER = "Greater"
    EQUAL = "Equal"
    INCOMPARABLE = "Incomparable"


def dominance_compare(rs: RootSystem, mu, gamma) -> Order:
    """Compare two weights: mu > gamma iff mu - gamma is a nonzero nonnegative integer sum of simple roots."""
    mu, gamma = tuple(mu), tuple(gamma)
    if mu == gamma:
        return Order.EQUAL
    diff = tuple(a - b for a, b in zip(mu, gamma))
    c = rs.root_lattice_coords(diff)
    if c is None:
        return Order.INCOMPARABLE
    if all(x >= 0 for x in c):
        return Order.GREATER
    if all(x <= 0 for x in c):
        return Order.LESS
    return Order.INCOMPARABLE


@dataclass
class WeightPoset:
    character: Character
    covers: list[tuple[Weight, Weight]] = field(default_factory=list)

    @property
    def root_system(self) -> RootSystem:
        return self.character.root_system

    @property
    def elements(self) -> list[Weight]:
        return [w for w, _ in self.character.sorted_items()]

    def compare(self, mu, gamma) -> Order:
        return dominance_compare(self.root_system, mu, gamma)

    def maximal(self) -> list[Weight]:
        els = self.elements
        return [w for w in els if not any(self.compare(v, w) is Order.GREATER for v in els)]

    def minimal(self) -> list[Weight]:
        els = self.elements
        return [w for w in els if not any(self.compare(v, w) is Order.LESS for v in els)]

    def to_json(self) -> dict:
        return {
            "root_system": self.root_system.name,
            "elements": [list(w) for w in self.elements],
            "covers": [[list(a), list(b), i + 1] for (a, b), i in zip(self.covers, self.cover_labels())],
        }

    def cover_labels(self) -> list[int]:
        """0-based index of the simple root mu - gamma for each cover."""
        rs = self.root_system
        out = []
        for a, b in self.covers:
            d = tuple(x - y for x, y in zip(a, b))
            out.append(rs.simple_roots.index(d))
        return out

    def render(self) -> str:
        """Text rendering: one line per level, covers annotated by simple root."""
        rs = self.root_system
        levels: dict = {}
        for w in self.elements:
            levels.setdefault(rs.height(w), []).append(w)
        lines = []
        for h in sorted(levels, reverse=True):
            ws = levels[h]
            lines.append("  ".join(_fmt(w, self.character[w]) for w in ws))
        return "\n".join(lines)


def _fmt(w: Weight, m: int) -> str:
    s = "(" + ",".join(str(x) for x in w) + ")"
    return s if m == 1 else f"{s}x{m}"


def build_poset(c: Character) -> WeightPoset:
    rs = c.root_system
    covers = []
    for mu, _ in c.sorted_items():
        for a in rs.simple_roots:
            gamma = tuple(x - y for x, y in zip(mu, a))
            if gamma in c.entries:
                covers.append((mu, gamma))
    return WeightPoset(c, covers)


def is_wmf(c: Character) -> bool:
    return all(m == 1 for m in c.entries.values())


def _is_chain_pairwise(p: WeightPoset) -> bool:
    return all(p.compare(a, b) is not Order.INCOMPARABLE for a, b in combinations(p.character.entries, 2))


def _is_chain_levels(p: WeightPoset) -> bool:
    rs = p.root_system
    els = p.elements
    heights = [rs.height(w) for w in els]
    if len(set(heights)) != len(heights):
        return False
    simple = set(rs.simple_roots)
    return all(tuple(x - y for x, y in zip(a, b)) in simple for a, b in zip(els, els[1:]))


def is_chain(p: WeightPoset, check: bool = False) -> bool:
    """Total order test: one weight per level, consecutive levels joined by simple roots.

    This agrees with pairwise comparability for weight posets of irreducible
    modules (not for arbitrary characters).  With ``check`` the O(k^2)
    pairwise comparison is run as a cross-validation.
    """
    result = _is_chain_levels(p)
    if check and len(p.character) <= 400:
        if result != _is_chain_pairwise(p):
            raise IntegrityError("level-based and pairwise chain tests disagree")
    return result
