import pytest

import afdim


def test_numtheory():
    assert afdim.factorize(12) == (1, [(2, 2), (3, 1)])
    assert afdim.legendre(2, 3) == -1
    assert afdim.kronecker(5, 2) == -1
    assert afdim.sqrt_mod(4, 7) == 2
    assert afdim.sqrt_mod(2, 3) is None
    with pytest.raises(ValueError):
        afdim.factorize(0)


def test_classify_order():
    rep = afdim.classify_order(-1, 2)
    assert rep["af_dim"] == {"finite": True, "value": 3}
    assert rep["flags"]["lapvd"] and not rep["flags"]["lpvd"]
    assert afdim.af_dim_order(-1, 5) == {"finite": False}


def test_split_prime():
    s = afdim.split_prime(-1, 5)
    assert s["kind"] == "split"
    assert [p["b"] for p in s["primes"]] == [2, 3]


def test_verify():
    rep = afdim.verify_afdim_local(-1, 2, 2)
    assert rep["agrees"]
    assert rep["predicted_local_max"] == rep["observed_local_max"] == 3


def test_axb():
    rep = afdim.classify_axb([(2, 1)], [(2, 2)], [0])
    assert rep["flags"]["taf"] and not rep["flags"]["general_zpi"]


def test_ring():
    z8 = afdim.Ring.cyclic(8)
    assert len(z8) == 8
    assert z8.af_dim() == (1, False)
    assert z8.omega([]) == (3, False)
    assert z8.omega([[4]]) == (2, False)
    again = afdim.Ring.from_text(z8.serialize())
    assert again.serialize() == z8.serialize()
    assert afdim.Ring.cyclic(12).num_ideals() == 6
