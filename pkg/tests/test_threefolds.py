"""Del Pezzo threefold profiles, dual-VMRT table and certificates."""

from __future__ import annotations

from fractions import Fraction

import pytest

from tautclass.chow import PTClass, eval_top
from tautclass.exprparse import parse_expr
from tautclass.hypersurfaces import HypersurfaceSpec, hypersurface_profile
from tautclass.threefolds import (ThreefoldSpec, certificate_degree1,
                                  certificate_degree2,
                                  certificate_degree2_modnef,
                                  default_threefold_profile, k3_quartic_data,
                                  k3_quartic_profile, not_big_certificate,
                                  profile_triple, threefold_profile,
                                  vmrt_class_threefold, vmrt_table)


def test_spec_validation():
    with pytest.raises(ValueError):
        ThreefoldSpec(6, 0, 1, r=1)
    with pytest.raises(ValueError):
        ThreefoldSpec(2, 19, 12, r=56)
    with pytest.raises(ValueError):
        ThreefoldSpec(2, 20, 12)


def test_profile_triples():
    assert profile_triple(threefold_profile(1, 42)) == (-78, -8, 2)
    assert profile_triple(threefold_profile(2, 20)) == (-48, -4, 4)
    assert profile_triple(threefold_profile(3, 10)) == (-30, 0, 6)


def test_triple_symbolic_grid():
    for d in range(1, 7):
        for b3 in range(0, 61, 6):
            triple = profile_triple(threefold_profile(d, b3))
            assert triple == (8 * d - 44 - b3, 4 * d - 12, 2 * d)


def test_degree3_route_matches_hypersurface():
    cubic_3fold = hypersurface_profile(HypersurfaceSpec(3, 3))
    dp3 = threefold_profile(3, 10)
    for zp in range(6):
        mono_power = 5 - zp
        for profile_pair in ((cubic_3fold, dp3),):
            first, second = profile_pair
            h1 = PTClass.pullback(first, first.symbol("H"))
            h2 = PTClass.pullback(second, second.symbol("H"))
            lhs = eval_top(first, PTClass.zeta(first) ** zp * h1 ** mono_power)
            rhs = eval_top(second, PTClass.zeta(second) ** zp * h2 ** mono_power)
            assert lhs == rhs


def test_vmrt_class_examples():
    for d, k, r, text in ((5, 3, 10, "3z - H"), (4, 4, 16, "4z"),
                          (3, 6, 27, "6z + 3H"), (2, 12, 56, "12z + 16H")):
        profile = default_threefold_profile(d)
        assert vmrt_class_threefold(d, k, r) == parse_expr(profile, text)


def test_vmrt_table_rows():
    rows = vmrt_table()
    assert rows[4].h_coefficient == 0  # the pseudoeffectivity pivot
    assert rows[5].h_coefficient == -1
    assert rows[3].h_coefficient == 3
    assert rows[2].h_coefficient == 16
    assert rows[1].cls is None
    assert rows[1].k == 60 and rows[1].h_coefficient_min == 180
    # cross-check: r equals the surface (-1)-curve count for d >= 2
    from tautclass.surfaces import minus_one_curves, surface_lattice
    for d in range(2, 6):
        assert rows[d].r == len(minus_one_curves(surface_lattice(d)))
    assert rows[1].r_min == len(minus_one_curves(surface_lattice(1)))


def test_vmrt_table_json_has_notes():
    rows = vmrt_table()
    for d, row in rows.items():
        doc = row.to_json()
        assert doc["degree"] == d and doc["note"]
    assert vmrt_table()[5].to_json()["class"] == "3z - H"
    assert "m >= 180" in vmrt_table()[1].to_json()["class"]


def test_not_big_certificate():
    profile = default_threefold_profile(4)
    assert not_big_certificate(parse_expr(profile, "4z"))
    profile2 = default_threefold_profile(2)
    assert not_big_certificate(parse_expr(profile2, "12z + 16H"))
    profile5 = default_threefold_profile(5)
    assert not not_big_certificate(parse_expr(profile5, "3z - H"))
    with pytest.raises(ValueError):
        not_big_certificate(parse_expr(profile5, "3z^2"))
    with pytest.raises(ValueError):
        not_big_certificate(parse_expr(profile5, "-z + H"))
    rows = vmrt_table()
    assert [rows[d].not_big_certificate_applies() for d in range(1, 6)] == [
        True, True, True, True, False]


def test_certificates():
    assert certificate_degree1() == -11
    assert certificate_degree2_modnef() == -8
    modnef, divisor = certificate_degree2()
    assert modnef == -8
    # exact expansion of the five-factor product; the registry's recorded
    # constant -49/6 for the same product is off by 1/3 (see README)
    assert divisor == Fraction(-51, 6)
    assert divisor < 0


def test_k3_profile_matches_hypersurface_route():
    quartic = hypersurface_profile(HypersurfaceSpec(2, 4))
    k3 = k3_quartic_profile()
    for zp in range(4):
        h1 = PTClass.pullback(quartic, quartic.symbol("H"))
        h2 = PTClass.pullback(k3, k3.symbol("H"))
        lhs = eval_top(quartic, PTClass.zeta(quartic) ** zp * h1 ** (3 - zp))
        rhs = eval_top(k3, PTClass.zeta(k3) ** zp * h2 ** (3 - zp))
        assert lhs == rhs


def test_k3_quartic_data():
    data = k3_quartic_data()
    profile = k3_quartic_profile()
    assert data.bitangent_class == parse_expr(profile, "6z + 8H")
    assert data.normalized_class == parse_expr(profile, "z + 4/3H")
    assert (data.zeta3, data.zeta2_h, data.zeta_h2) == (-24, 0, 4)
