from hasse5 import modpoly as mp
from hasse5.classno import h_minus_p
from hasse5.hasse import (
    build_Jl,
    build_hasse,
    build_ss,
    deuring_L,
    hasse_params,
)
from hasse5.intfactor import primes_in
from oracles import count_points_fp, curve_from_j_fp, supersingular_js_fp


def test_params():
    par = hasse_params(7)
    assert (par.n_l, par.r, par.s) == (0, 0, 1)
    par = hasse_params(11)
    assert (par.n_l, par.r, par.s) == (0, 1, 1)
    par = hasse_params(13)
    assert (par.n_l, par.r, par.s) == (1, 0, 0)


def test_Jl_small():
    assert build_Jl(7) == [1]
    assert build_Jl(11) == [1]
    assert build_Jl(13) == [8, 1]  # t + 8, root t = 5


def test_j5_supersingular_mod_13_oracle():
    # the root of J_13 is j = 5; a curve with that j-invariant over F_13 has 14 points
    a, b = curve_from_j_fp(5, 13)
    assert count_points_fp(a, b, 13) == 14


def test_hasse_small():
    # l=7: (b^2+1)(b^4+18b^3+74b^2-18b+1) mod 7, degree 6
    got = build_hasse(7)
    expect = mp.mul([1, 0, 1], mp.from_int_poly([1, -18, 74, 18, 1], 7), 7)
    assert got == expect
    # l=11: c4-quartic * (b^2+1) * (b^4+...) mod 11, degree 10
    got11 = build_hasse(11)
    expect11 = mp.mul_many(
        [
            mp.from_int_poly([1, -12, 14, 12, 1], 11),
            [1, 0, 1],
            mp.from_int_poly([1, -18, 74, 18, 1], 11),
        ],
        11,
    )
    assert got11 == expect11
    assert mp.deg(build_hasse(13)) == 12


def test_hasse_degree_and_squarefree_sample():
    from hasse5.ffactor import factor_ff

    for l in primes_in(7, 140):
        par = hasse_params(l)
        h = build_hasse(l)  # internally asserts the two constructions agree
        assert mp.deg(h) == 12 * par.n_l + 4 * par.r + 6 * par.s
        assert all(m == 1 for _, m in factor_ff(h, l).factors)


def test_ss_small():
    assert build_ss(7) == [1, 1]  # X + 1 = X - 1728 mod 7
    assert build_ss(11) == [0, 10, 1]  # X(X - 1)
    assert build_ss(13) == [8, 1]  # X - 5


def test_ss_roots_against_point_count_oracle():
    for p in primes_in(7, 50):
        ss = build_ss(p)
        roots = {x for x in range(p) if mp.eval_at(ss, x, p) == 0}
        assert roots == supersingular_js_fp(p)


def test_deuring_examples():
    assert deuring_L(7) == 1
    assert deuring_L(11) == 2
    assert deuring_L(13) == 1
    assert h_minus_p(13) == 2


def test_ss_fp_root_count_equals_deuring_sample():
    for p in primes_in(7, 140):
        ss = build_ss(p)
        count = sum(1 for x in range(p) if mp.eval_at(ss, x, p) == 0)
        assert count == deuring_L(p)
