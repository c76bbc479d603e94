import pytest

from commfactor import verify_wm_data
from commfactor.gallery import (
    example0,
    gallery_names,
    get_entry,
    m2_dual,
    run_entry,
)


def test_gallery_names():
    assert gallery_names() == ("example0", "m2_dual")


def test_get_entry_unknown():
    with pytest.raises(KeyError):
        get_entry("nope")


@pytest.mark.parametrize("name", ["example0", "m2_dual"])
def test_all_assertions_pass(name):
    entry = get_entry(name)
    results = run_entry(entry)
    failing = [label for label, ok in results if not ok]
    assert not failing, f"{name}: failing assertions {failing}"


def test_example0_shape():
    entry = example0()
    assert entry.algebra.dim == 4
    assert entry.wm.r == 2
    assert verify_wm_data(entry.algebra, entry.wm).ok


def test_m2_dual_shape():
    entry = m2_dual()
    assert entry.algebra.dim == 8
    assert entry.wm.r == 1
    assert len(entry.wm.radical_basis) == 4
    assert verify_wm_data(entry.algebra, entry.wm).ok
