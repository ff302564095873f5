import json
import random
from collections import Counter
from itertools import combinations, product

import pytest
from hypothesis import given, settings, strategies as st

from thickreps.character import (
    Character,
    CharacterError,
    IrrepLabel,
    adams,
    add,
    decompose,
    exterior_power,
    scale,
    tensor,
    weight_system,
    weyl_dim,
)
from thickreps.rootsystem import build_root_system

from .conftest import all_types


def ssyt_character(n, partition):
    """Character of the GL_n irreducible with this partition, by brute-force tableau enumeration.

    Returned in A_{n-1} fundamental coordinates: mu_i = c_i - c_{i+1}, c = content.
    """
    cells = [(r, c) for r, length in enumerate(partition) for c in range(length)]
    out = Counter()
    for fill in product(range(n), repeat=len(cells)):
        T = dict(zip(cells, fill))
        ok = all(T[(r, c)] <= T[(r, c + 1)] for (r, c) in cells if (r, c + 1) in T) and \
            all(T[(r, c)] < T[(r + 1, c)] for (r, c) in cells if (r + 1, c) in T)
        if ok:
            cnt = Counter(fill)
            content = [cnt[i] for i in range(n)]
            out[tuple(content[i] - content[i + 1] for i in range(n - 1))] += 1
    return dict(out)


def partition_of(lam):
    n = len(lam)
    return [sum(lam[i:]) for i in range(n) if sum(lam[i:])]


@pytest.mark.parametrize("t,lam", [("A1", (3,)), ("A2", (1, 1)), ("A2", (2, 0)), ("A2", (2, 1)), ("A3", (0, 1, 0)),
                                   ("A3", (1, 0, 1)), ("A3", (1, 1, 0)), ("A2", (3, 1))])
def test_type_a_matches_tableaux(t, lam):
    rs = build_root_system(t)
    expected = ssyt_character(rs.rank + 1, partition_of(lam))
    assert weight_system(IrrepLabel(rs, lam)).entries == expected


@pytest.mark.parametrize("m", range(0, 8))
def test_a1_strings(m):
    ch = weight_system(IrrepLabel.of("A1", m))
    assert ch.entries == {(m - 2 * k,): 1 for k in range(m + 1)}
    assert weyl_dim(IrrepLabel.of("A1", m)) == m + 1


def test_g2_seven():
    ch = weight_system(IrrepLabel.of("G2", 1, 0))
    assert len(ch) == 7 and ch.dim == 7 and set(ch.entries.values()) == {1}
    assert weyl_dim(IrrepLabel.of("G2", 1, 0)) == 7


def test_a2_adjoint():
    ch = weight_system(IrrepLabel.of("A2", 1, 1))
    assert ch.dim == 8 == weyl_dim(IrrepLabel.of("A2", 1, 1))
    assert ch[(0, 0)] == 2


def test_b2_spin_dim():
    assert weyl_dim(IrrepLabel.of("B2", 0, 1)) == 4


def test_adjoint_is_roots_plus_rank_zeros():
    # independent oracle: the adjoint module has the roots as weights and the Cartan as zero weight
    for name, hw in [("B3", (0, 1, 0)), ("C3", (2, 0, 0)), ("G2", (0, 1)), ("F4", (1, 0, 0, 0)), ("D4", (0, 1, 0, 0))]:
        rs = build_root_system(name)
        ch = weight_system(IrrepLabel(rs, hw))
        expected = {a: 1 for a in rs.positive_roots}
        expected.update({tuple(-x for x in a): 1 for a in rs.positive_roots})
        expected[rs.zero()] = rs.rank
        assert ch.entries == expected


def test_freudenthal_matches_weyl_random():
    rng = random.Random(20240607)
    count = 0
    for t in all_types(6):
        rs = build_root_system(t)
        for _ in range(4):
            lam = tuple(rng.choice([0, 0, 1, 1, 2, 3]) for _ in range(rs.rank))
            label = IrrepLabel(rs, lam)
            d = weyl_dim(label)
            if d > 2000:
                continue
            ch = weight_system(label)
            assert ch.dim == d
            assert ch[lam] == 1
            count += 1
            # every weight is lambda minus a nonnegative integer sum of simple roots
            for w in ch:
                c = rs.root_lattice_coords(tuple(a - b for a, b in zip(lam, w)))
                assert c is not None and min(c) >= 0
            # Weyl symmetry
            for w in list(ch)[:20]:
                for i in range(rs.rank):
                    assert ch[rs.reflect(w, i)] == ch[w]
    assert count > 30


def test_tensor_trivial_identity_and_clebsch_gordan():
    rs = build_root_system("A1")
    v = weight_system(IrrepLabel(rs, (1,)))
    assert tensor(v, Character.trivial(rs)) == v
    assert tensor(v, v) == add(weight_system(IrrepLabel(rs, (2,))), Character.trivial(rs))
    assert scale(v, 0).entries == {}


def test_root_system_mismatch():
    with pytest.raises(CharacterError):
        add(Character.trivial(build_root_system("A1")), Character.trivial(build_root_system("A2")))


def test_adams():
    c = weight_system(IrrepLabel.of("A1", 1))
    assert adams(c, 1) == c
    assert adams(c, 2).entries == {(2,): 1, (-2,): 1}
    big = weight_system(IrrepLabel.of("B2", 1, 1))
    for k in (1, 2, 3):
        assert adams(big, k).dim == big.dim


def brute_exterior(c, m):
    """Exterior power from m-subsets of the weight multiset."""
    multiset = [w for w, k in c.items() for _ in range(k)]
    out = Counter()
    for S in combinations(range(len(multiset)), m):
        out[tuple(sum(col) for col in zip(*(multiset[i] for i in S)))] += 1
    return dict(out)


@pytest.mark.parametrize("t,lam", [("A1", (3,)), ("A2", (1, 1)), ("C2", (1, 0)), ("G2", (1, 0)), ("B3", (0, 0, 1))])
def test_exterior_power_matches_subsets(t, lam):
    c = weight_system(IrrepLabel.of(t, *lam))
    for m in range(0, c.dim + 1):
        e = exterior_power(c, m)
        if m == 0:
            assert e == Character.trivial(c.root_system)
        else:
            assert e.entries == brute_exterior(c, m)


def test_exterior_s3_of_a1():
    c = weight_system(IrrepLabel.of("A1", 3))
    assert exterior_power(c, 1) == c
    e = exterior_power(c, 2)
    assert e.entries == {(4,): 1, (2,): 1, (0,): 2, (-2,): 1, (-4,): 1}
    assert decompose(e) == [((4,), 1), ((0,), 1)]


def test_exterior_top_degree_is_trivial():
    for t, lam in [("A1", (4,)), ("B2", (1, 0)), ("G2", (1, 0)), ("A2", (1, 1))]:
        c = weight_system(IrrepLabel.of(t, *lam))
        assert exterior_power(c, c.dim) == Character.trivial(c.root_system)


def test_exterior_out_of_range():
    c = weight_system(IrrepLabel.of("A1", 1))
    with pytest.raises(CharacterError):
        exterior_power(c, 3)


def test_decompose_c2_wedge2():
    c = weight_system(IrrepLabel.of("C2", 1, 0))
    parts = decompose(exterior_power(c, 2))
    assert parts == [((0, 1), 1), ((0, 0), 1)]
    assert [weyl_dim(IrrepLabel.of("C2", *w)) for w, _ in parts] == [5, 1]


@pytest.mark.parametrize("t,lam", [("A2", (2, 1)), ("B2", (1, 1)), ("G2", (0, 1)), ("D4", (0, 0, 1, 0))])
def test_decompose_round_trip(t, lam):
    assert decompose(weight_system(IrrepLabel.of(t, *lam))) == [(lam, 1)]


def test_decompose_rejects_virtual():
    rs = build_root_system("A1")
    bad = Character(rs, {(2,): 1})
    with pytest.raises(CharacterError):
        decompose(bad)


@pytest.mark.parametrize("t,l1,l2", [("A2", (1, 0), (1, 1)), ("B2", (0, 1), (0, 1)), ("G2", (1, 0), (1, 0)),
                                     ("C3", (1, 0, 0), (0, 1, 0))])
def test_tensor_decomposition_dimension(t, l1, l2):
    a, b = IrrepLabel.of(t, *l1), IrrepLabel.of(t, *l2)
    parts = decompose(tensor(weight_system(a), weight_system(b)))
    assert sum(m * weyl_dim(IrrepLabel.of(t, *w)) for w, m in parts) == weyl_dim(a) * weyl_dim(b)


@pytest.mark.parametrize("t,lam", [("A1", (5,)), ("A3", (0, 1, 0)), ("B2", (1, 0)), ("G2", (1, 0)),
                                   ("C3", (1, 0, 0)), ("A1", (13,)), ("A2", (1, 1))])
def test_exterior_dimension_identities(t, lam):
    c = weight_system(IrrepLabel.of(t, *lam))
    n = c.dim
    dims = [exterior_power(c, m).dim for m in range(n + 1)]
    assert sum(dims) == 2 ** n
    assert dims == dims[::-1]


def test_json_round_trip():
    c = weight_system(IrrepLabel.of("B2", 1, 0))
    data = c.to_json()
    assert data["type"] == "B" and data["rank"] == 2
    assert data["entries"] == sorted(data["entries"])
    assert Character.from_json(json.dumps(data)) == c


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(["A2", "B2", "C3", "G2", "A3"]), st.data())
def test_weyl_symmetry_property(t, data):
    rs = build_root_system(t)
    lam = tuple(data.draw(st.integers(0, 2)) for _ in range(rs.rank))
    ch = weight_system(IrrepLabel(rs, lam))
    w = data.draw(st.sampled_from(sorted(ch.entries)))
    i = data.draw(st.integers(0, rs.rank - 1))
    assert ch[rs.reflect(w, i)] == ch[w]
