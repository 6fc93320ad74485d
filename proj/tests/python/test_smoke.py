import pytest

import facewalk as fw


def test_cube_listing():
    ids = fw.generate("cube", 2)
    assert ids == ["00", "0-", "01", "-1", "--", "-0", "10", "1-", "11", fw.EMPTY]
    assert fw.verify("cube", ids, 2) == "OK"


def test_round_trips():
    for family, n in [("perm", 4), ("bperm", 2), ("assoc", 6), ("quotientope", 3)]:
        assert fw.verify(family, fw.generate(family, n), n) == "OK"


def test_shuffled_listing_fails():
    ids = fw.generate("perm", 3)
    ids[1], ids[2] = ids[2], ids[1]
    assert fw.verify("perm", ids, 3).startswith("FAIL")


def test_congruence_example():
    cong = "#congruence n=3\nfence 1 3 {2}\n"
    ids = fw.generate("quotientope", congruence=cong)
    assert len(ids) == 12
    assert fw.verify("quotientope", ids, congruence=cong) == "OK"


def test_counts():
    assert fw.fubini(5) == 541
    assert fw.little_schroeder(6) == 45
    assert len(fw.brgc(4)) == 16
    assert fw.rank("perm", 3, "12|3") == 1


def test_fano_has_no_strip():
    d = fw.decide_strip(fw.fixture("fano"))
    assert d["strip"] is False
    assert len(d["witness"]) == 3


def test_cube_strip_and_sweep():
    d = fw.decide_strip(fw.fixture("cube"))
    assert d["strip"] is True
    flags = fw.sweep(fw.strip("cube-faces", 3))
    assert len(flags) == 26
    assert fw.flag_to_signed_perm([fw.EMPTY, "0", "-"]) == "-1"


def test_errors():
    with pytest.raises(ValueError):
        fw.generate("nope", 3)
    with pytest.raises(RuntimeError):
        fw.verify("cube", fw.generate("cube", 10), 10)
