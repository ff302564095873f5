"""Reference lists of thick and dense irreducibles, restricted to finite bounds.

The lists are written down by rule with closed-form dimensions; they never
call the classifier.  ``golden/*.json`` holds the frozen copies used by the
``enumerate --golden`` check.
"""

from __future__ import annotations

import json
from importlib import resources

from .classify import cartan_types, FAMILIES

Key = tuple[str, int, tuple[int, ...]]


def _unit(rank: int, i: int, k: int = 1) -> tuple[int, ...]:
    return tuple(k if j == i - 1 else 0 for j in range(rank))


def _entries(max_dim: int, max_rank: int, families: str, dense: bool) -> list[Key]:
    out: set[Key] = set()
    for t in cartan_types(families, max_rank):
        fam, n = t.family, t.rank
        out.add((fam, n, (0,) * n))
        if fam == "A":
            if n + 1 <= max_dim:
                out.add((fam, n, _unit(n, 1)))
                out.add((fam, n, _unit(n, n)))
            if n == 1:
                top = 2 if dense else max_dim - 1
                for m in range(2, top + 1):
                    if m + 1 <= max_dim:
                        out.add((fam, 1, (m,)))
        elif fam == "B":
            if 2 * n + 1 <= max_dim:
                out.add((fam, n, _unit(n, 1)))
            if not dense and n == 2 and 4 <= max_dim:
                out.add((fam, 2, (0, 1)))
        elif fam == "C" and not dense:
            if n >= 3 and 2 * n <= max_dim:
                out.add((fam, n, _unit(n, 1)))
        elif fam == "G" and not dense:
            if 7 <= max_dim:
                out.add((fam, 2, (1, 0)))
    return sorted(out)


def thick_list(max_dim: int, max_rank: int, families: str = FAMILIES) -> list[Key]:
    return _entries(max_dim, max_rank, families, dense=False)


def dense_list(max_dim: int, max_rank: int, families: str = FAMILIES) -> list[Key]:
    return _entries(max_dim, max_rank, families, dense=True)


def golden_filename(mode: str, max_dim: int, max_rank: int) -> str:
    return f"{mode}_dim{max_dim}_rank{max_rank}.json"


def load_golden(mode: str, max_dim: int, max_rank: int) -> list[Key] | None:
    """Frozen list for these bounds, or None when no file ships for them."""
    path = resources.files("thickreps") / "golden" / golden_filename(mode, max_dim, max_rank)
    if not path.is_file():
        return None
    data = json.loads(path.read_text())
    return sorted((e["family"], e["rank"], tuple(e["lambda"])) for e in data["entries"])


def dump_golden(mode: str, max_dim: int, max_rank: int) -> str:
    rule = thick_list if mode == "thick" else dense_list
    entries = [{"family": f, "rank": r, "lambda": list(lam)} for f, r, lam in rule(max_dim, max_rank)]
    return json.dumps({"mode": mode, "max_dim": max_dim, "max_rank": max_rank,
                       "families": FAMILIES, "entries": entries}, indent=1) + "\n"
