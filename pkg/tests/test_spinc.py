import pytest

from floercone.spinc import FramedSlope, SpinCQuotient, cone_partner, conj, reduce_mod


def test_conj_examples():
    assert conj(0) == 0
    assert conj(3) == -3
    assert conj(conj(5)) == 5


def test_cone_partner_examples():
    assert cone_partner(5, 0) == 6
    assert cone_partner(-1, 0) == 0
    assert cone_partner(0, 1) == 0


def test_cone_partner_involution():
    for n in range(-6, 7):
        for s in range(-6, 7):
            assert cone_partner(n, cone_partner(n, s)) == s


def test_reduce_mod_examples():
    assert reduce_mod(7, SpinCQuotient(5)) == 2
    assert reduce_mod(-1, SpinCQuotient(4)) == 3
    assert reduce_mod(0, SpinCQuotient(9)) == 0
    assert reduce_mod(7, -5) == 2


def test_reduce_mod_periodicity():
    for m in (1, 2, 5, -3):
        for s in range(-10, 11):
            for k in range(-3, 4):
                assert reduce_mod(s, m) == reduce_mod(s + k * m, m)


def test_zero_modulus_rejected():
    with pytest.raises(ValueError, match="zero modulus"):
        SpinCQuotient(0)
    with pytest.raises(ValueError, match="zero modulus"):
        reduce_mod(3, 0)


def test_framed_slope_validation():
    FramedSlope(3, 2)
    FramedSlope(-3, 2)
    FramedSlope(0, 1)
    with pytest.raises(ValueError, match="coprime"):
        FramedSlope(2, 4)
    with pytest.raises(ValueError, match="positive"):
        FramedSlope(1, -1)


def test_framed_slope_infinity():
    inf = FramedSlope.infinity()
    assert inf.is_infinite
    assert str(inf) == "inf"
    with pytest.raises(ValueError, match="infinite slope"):
        FramedSlope(2, 0)
    assert str(FramedSlope.integer(7)) == "7/1"
