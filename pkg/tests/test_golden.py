import json
from importlib import resources

import pytest

from thickreps import golden


@pytest.mark.parametrize("mode,max_dim,max_rank,count", [("thick", 100, 7, 150), ("dense", 20, 5, 30)])
def test_shipped_files_match_rule(mode, max_dim, max_rank, count):
    path = resources.files("thickreps") / "golden" / golden.golden_filename(mode, max_dim, max_rank)
    assert path.read_text() == golden.dump_golden(mode, max_dim, max_rank)
    entries = golden.load_golden(mode, max_dim, max_rank)
    # hand count: 26 / 16 trivial modules plus the nontrivial families
    assert len(entries) == count
    assert json.loads(path.read_text())["mode"] == mode


def test_thick_list_by_hand():
    got = golden.thick_list(8, 3)
    expected = sorted(
        [("A", n, (0,) * n) for n in (1, 2, 3)] + [("B", n, (0,) * n) for n in (2, 3)] + [("C", 3, (0, 0, 0))]
        + [("G", 2, (0, 0))]
        + [("A", 1, (m,)) for m in range(1, 8)] + [("A", 2, (1, 0)), ("A", 2, (0, 1)), ("A", 3, (1, 0, 0)),
                                                   ("A", 3, (0, 0, 1))]
        + [("B", 2, (1, 0)), ("B", 2, (0, 1)), ("B", 3, (1, 0, 0)), ("C", 3, (1, 0, 0)), ("G", 2, (1, 0))])
    assert got == expected


def test_dense_list_is_sublist():
    assert set(golden.dense_list(50, 6)) <= set(golden.thick_list(50, 6))


def test_missing_golden_file():
    assert golden.load_golden("thick", 77, 3) is None
