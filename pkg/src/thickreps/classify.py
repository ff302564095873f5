"""Thickness and density verdicts, bounded classification, duals and products.

An irreducible module is thick exactly when it is weight multiplicity-free
and its weight poset is a chain.  Density (every exterior power irreducible)
is decided on characters: ``Lambda^m V`` is irreducible iff the summand
generated by its top weight already has the full dimension.
"""

from __future__ import annotations

import enum
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Iterator, Sequence

from .character import (
    Character,
    IntegrityError,
    IrrepLabel,
    decompose,
    exterior_power,
    exterior_powers,
    top_weight,
    weight_system,
    weyl_dim,
)
from .poset import build_poset, is_chain, is_wmf
from .rootsystem import CartanType, RootSystem, Weight, build_root_system, product_root_system

DEFAULT_DENSITY_BOUND = 30
FAMILIES = "ABCDEFG"
# lowest rank per family that is not isomorphic to an earlier entry
# (B1 = A1, C2 = B2, D3 = A3); enumeration starts here
CANONICAL_MIN_RANK = {"A": 1, "B": 2, "C": 3, "D": 4}


class Intractable(RuntimeError):
    """Requested density check exceeds the configured dimension bound."""


class Reason(enum.Enum):
    NOT_WMF = "NotWMF"
    NOT_CHAIN = "NotChain"
    THICK = "Thick"
    THICK_AND_DENSE = "ThickAndDense"
    TRIVIAL = "Trivial"


class Mode(enum.Enum):
    THICK = "thick"
    DENSE = "dense"


@dataclass(frozen=True)
class ProductLabel:
    factors: tuple[IrrepLabel, ...]

    def __init__(self, factors: Iterable[IrrepLabel]):
        object.__setattr__(self, "factors", tuple(factors))

    def __str__(self):
        return " x ".join(str(f) for f in self.factors)


@dataclass
class ThicknessVerdict:
    label: IrrepLabel | ProductLabel
    dim: int
    wmf: bool
    chain: bool
    thick: bool
    reason: Reason
    dense: bool | None = None
    failing_m: list[int] | None = None

    def row(self) -> dict:
        lab = self.label
        if isinstance(lab, IrrepLabel):
            t = lab.root_system.cartan_type
            family, rank, lam = t.family, t.rank, list(lab.highest_weight)
        else:
            family = "x".join(f.root_system.name for f in lab.factors)
            rank = sum(f.root_system.rank for f in lab.factors)
            lam = [x for f in lab.factors for x in f.highest_weight]
        return {
            "family": family,
            "rank": rank,
            "lambda": lam,
            "dim": self.dim,
            "wmf": self.wmf,
            "chain": self.chain,
            "thick": self.thick,
            "dense": self.dense,
            "failing_m": self.failing_m,
            "reason": self.reason.value,
        }

    def key(self) -> tuple:
        r = self.row()
        return (r["family"], r["rank"], tuple(r["lambda"]))


# -- single representations ---------------------------------------------

def is_thick(label: IrrepLabel) -> ThicknessVerdict:
    ch = weight_system(label)
    dim = ch.dim
    wmf = is_wmf(ch)
    chain = is_chain(build_poset(ch), check=True)
    thick = wmf and chain
    if dim == 1:
        reason = Reason.TRIVIAL
    elif not wmf:
        reason = Reason.NOT_WMF
    elif not chain:
        reason = Reason.NOT_CHAIN
    else:
        reason = Reason.THICK
    return ThicknessVerdict(label, dim, wmf, chain, thick, reason)


def _irreducible(ext: Character, expected_dim: int) -> bool:
    top = top_weight(ext)
    if ext[top] != 1:
        return False
    return weyl_dim(IrrepLabel(ext.root_system, top)) == expected_dim


def is_m_dense(label: IrrepLabel, m: int, method: str = "top") -> bool:
    """Whether ``Lambda^m V(lambda)`` is irreducible.

    ``method="top"`` compares the Weyl dimension of the top summand with
    ``C(n, m)``; ``method="decompose"`` peels the full decomposition.
    """
    ch = weight_system(label)
    n = ch.dim
    if not 0 < m < n:
        raise ValueError(f"m={m} outside 0 < m < {n}")
    ext = exterior_power(ch, m)
    if method == "decompose":
        parts = decompose(ext)
        return len(parts) == 1 and parts[0][1] == 1
    if method != "top":
        raise ValueError(f"unknown method {method!r}")
    return _irreducible(ext, comb(n, m))


def is_dense(label: IrrepLabel, bound: int = DEFAULT_DENSITY_BOUND) -> tuple[bool, list[int]]:
    """Density check on m = 1..n//2; failures at m are mirrored to n - m."""
    ch = weight_system(label)
    n = ch.dim
    if n > bound:
        raise Intractable(f"dim {n} of {label} exceeds density bound {bound}")
    half = n // 2
    powers = exterior_powers(ch, half)
    failing = set()
    for m in range(1, half + 1):
        if not _irreducible(powers[m], comb(n, m)):
            failing.update({m, n - m})
    return not failing, sorted(failing)


def classify(label: IrrepLabel, dense: bool = False,
             density_bound: int = DEFAULT_DENSITY_BOUND) -> ThicknessVerdict:
    v = is_thick(label)
    if dense:
        v.dense, v.failing_m = is_dense(label, density_bound)
        if v.dense and v.thick and v.reason is Reason.THICK:
            v.reason = Reason.THICK_AND_DENSE
    elif v.dim == 1:
        v.dense, v.failing_m = True, []
    return v


def dual_highest_weight(label: IrrepLabel) -> Weight:
    """Highest weight of the dual module, -w0(lambda)."""
    rs = label.root_system
    return rs.dominant_representative(tuple(-x for x in label.highest_weight))[0]


# -- products -----------------------------------------------------------

def product_character(p: ProductLabel) -> Character:
    """Character of the outer tensor product over the product root system."""
    rs = product_root_system(*(f.root_system for f in p.factors))
    entries: dict[Weight, int] = {(): 1}
    for f in p.factors:
        ch = weight_system(f)
        entries = {w + v: m * k for w, m in entries.items() for v, k in ch.items()}
    return Character(rs, entries)


def product_thickness(p: ProductLabel) -> ThicknessVerdict:
    """Thickness of an outer tensor product, decided two ways that must agree.

    Structurally: thick iff at most one factor is nontrivial and that factor
    is thick.  Directly: WMF and chain test on the product weight poset.
    """
    verdicts = [is_thick(f) for f in p.factors]
    nontrivial = [v for v in verdicts if v.dim > 1]
    structural = len(nontrivial) == 0 or (len(nontrivial) == 1 and nontrivial[0].thick)

    ch = product_character(p)
    wmf = is_wmf(ch)
    chain = is_chain(build_poset(ch), check=True)
    direct = wmf and chain
    if direct != structural:
        raise IntegrityError(f"product rule and product poset disagree for {p}")
    dim = ch.dim
    if dim == 1:
        reason = Reason.TRIVIAL
    elif not wmf:
        reason = Reason.NOT_WMF
    elif not chain:
        reason = Reason.NOT_CHAIN
    else:
        reason = Reason.THICK
    return ThicknessVerdict(p, dim, wmf, chain, direct, reason)


# -- enumeration --------------------------------------------------------

def cartan_types(families: Iterable[str] = FAMILIES, max_rank: int = 8,
                 canonical: bool = True) -> list[CartanType]:
    out = []
    for fam in families:
        fam = fam.upper()
        if fam in "EFG":
            ranks = {"E": (6, 7, 8), "F": (4,), "G": (2,)}[fam]
        else:
            lo = CANONICAL_MIN_RANK[fam] if canonical else {"A": 1, "B": 2, "C": 2, "D": 3}[fam]
            ranks = range(lo, max_rank + 1)
        out.extend(CartanType(fam, r) for r in ranks if r <= max_rank)
    return out


def dominant_weights_up_to(rs: RootSystem, max_dim: int) -> Iterator[Weight]:
    """All dominant lambda with weyl_dim <= max_dim.

    Pruned depth-first search: the Weyl dimension strictly increases in each
    coordinate, so once a coordinate overshoots (with later ones at zero) no
    larger value can come back under the bound.
    """
    n = rs.rank

    def dim(lam):
        return weyl_dim(IrrepLabel(rs, lam))

    def rec(prefix: list[int]):
        i = len(prefix)
        if i == n:
            yield tuple(prefix)
            return
        k = 0
        while True:
            lam = prefix + [k] + [0] * (n - i - 1)
            if dim(tuple(lam)) > max_dim:
                return
            yield from rec(prefix + [k])
            k += 1

    yield from rec([])


@dataclass
class Enumeration:
    mode: Mode
    max_dim: int
    max_rank: int
    families: str
    verdicts: list[ThicknessVerdict]
    examined: list[ThicknessVerdict] = field(repr=False, default_factory=list)
    not_evaluated: list[ThicknessVerdict] = field(default_factory=list)

    @property
    def summary(self) -> dict:
        per_type: dict[str, dict[str, int]] = {}
        for v in self.examined:
            t = str(v.label.root_system.cartan_type)
            d = per_type.setdefault(t, {"examined": 0, "positive": 0})
            d["examined"] += 1
        for v in self.verdicts:
            per_type[str(v.label.root_system.cartan_type)]["positive"] += 1
        return {
            "mode": self.mode.value,
            "max_dim": self.max_dim,
            "max_rank": self.max_rank,
            "families": self.families,
            "examined": len(self.examined),
            "positives": len(self.verdicts),
            "not_evaluated": [v.key() for v in self.not_evaluated],
            "dense_subset_of_thick": all(v.thick for v in self.examined if v.dense),
            "per_type": per_type,
        }


def _classify_one(args) -> ThicknessVerdict:
    label, mode, bound = args
    if mode is Mode.DENSE and weyl_dim(label) <= bound:
        return classify(label, dense=True, density_bound=bound)
    return classify(label)


def enumerate_classification(max_dim: int, families: Iterable[str] = FAMILIES, max_rank: int = 7,
                             mode: Mode | str = Mode.THICK,
                             density_bound: int = DEFAULT_DENSITY_BOUND,
                             threads: int = 1) -> Enumeration:
    """Classify every irreducible of dimension <= max_dim for the given types.

    In dense mode every candidate within ``density_bound`` gets an
    independent density check (not only the thick ones), so the containment
    dense => thick is observed rather than assumed.
    """
    if max_dim < 1:
        raise ValueError("max_dim must be >= 1")
    mode = Mode(mode) if isinstance(mode, str) else mode
    families = "".join(sorted(set(f.upper() for f in families)))
    jobs = []
    for t in cartan_types(families, max_rank):
        rs = build_root_system(t)
        for lam in dominant_weights_up_to(rs, max_dim):
            jobs.append((IrrepLabel(rs, lam), mode, density_bound))
    if threads > 1:
        with ProcessPoolExecutor(threads) as ex:
            examined = list(ex.map(_classify_one, jobs, chunksize=8))
    else:
        examined = [_classify_one(j) for j in jobs]
    examined.sort(key=ThicknessVerdict.key)

    if mode is Mode.THICK:
        positives = [v for v in examined if v.thick]
        skipped = []
    else:
        positives = [v for v in examined if v.dense]
        skipped = [v for v in examined if v.dense is None]
    return Enumeration(mode, max_dim, max_rank, families, positives, examined, skipped)


def verdict_labels(verdicts: Sequence[ThicknessVerdict]) -> list[tuple]:
    return sorted(v.key() for v in verdicts)
