import pytest

from hasse5.classno import (
    BadDiscriminant,
    class_number_disc,
    field_class_number,
    h5l,
    h_minus_p,
    order_relation_check,
    reduced_forms,
)
from hasse5.intfactor import primes_in


def test_classical_h1():
    for D in (-3, -4, -7, -8, -11):
        assert class_number_disc(D).h == 1


def test_disc_minus_4():
    assert reduced_forms(-4) == [(1, 0, 1)]


def test_disc_minus_20():
    assert sorted(reduced_forms(-20)) == [(1, 0, 5), (2, 2, 3)]
    assert class_number_disc(-20).h == 2


def test_disc_minus_7580():
    assert class_number_disc(-7580).h == 48


def test_bad_discriminant():
    with pytest.raises(BadDiscriminant):
        class_number_disc(-5)
    with pytest.raises(BadDiscriminant):
        class_number_disc(4)


def test_field_class_number_examples():
    assert field_class_number(-35).h == 2
    assert field_class_number(-35).discriminant == -35
    assert field_class_number(-65).h == 8
    assert field_class_number(-65).discriminant == -260
    assert field_class_number(-55).h == 4


def test_primitivity_matters():
    # -16 has forms (1,0,4) and (2,0,2); only the first is primitive
    assert reduced_forms(-16) == [(1, 0, 4)]


def test_fundamental_flag():
    assert class_number_disc(-20).is_fundamental
    assert not class_number_disc(-16).is_fundamental
    assert class_number_disc(-35).is_fundamental


def test_h_minus_p():
    assert h_minus_p(7) == 1
    assert h_minus_p(11) == 1
    assert h_minus_p(13) == 2  # class number of Q(sqrt(-13)), disc -52


def test_order_relation_sample():
    for l in primes_in(7, 300):
        if l % 4 == 3:
            assert order_relation_check(l)


def test_h5l():
    assert h5l(7) == 2 and h5l(11) == 4 and h5l(379) == 48
