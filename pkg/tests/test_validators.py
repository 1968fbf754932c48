from og10hodge import (
    VirtualDiamond,
    check_euler,
    check_hodge_symmetry,
    check_poincare,
    check_salamon,
    goettsche,
    hilb2,
    k3,
    og10_diamond,
    validation_report,
)


def test_hodge_symmetry_holds_on_k3():
    assert check_hodge_symmetry(k3())


def test_hodge_symmetry_detects_asymmetry():
    assert not check_hodge_symmetry(VirtualDiamond({(1, 0): 1}))


def test_poincare_duality_on_k3_and_the_unit():
    assert check_poincare(k3(), 2)
    assert check_poincare(VirtualDiamond.unit(), 0)
    assert not check_poincare(VirtualDiamond.unit(), 1)
    assert not check_poincare(VirtualDiamond.unit(), 2)


def test_poincare_duality_on_hilbert_schemes():
    for n in range(1, 6):
        assert check_poincare(goettsche(k3(), n), 2 * n)


def test_poincare_rejects_entries_outside_the_box():
    oversized = VirtualDiamond({(0, 0): 1, (3, 1): 1, (1, 3): 1, (4, 4): 1})
    assert not check_poincare(oversized, 2)


def test_salamon_on_k3():
    result = check_salamon(k3(), 1)
    assert result == (22, 22, True)


def test_salamon_on_the_hilbert_square():
    result = check_salamon(hilb2(), 2)
    assert result.lhs == result.rhs == 552
    assert result.ok


def test_salamon_on_all_small_hilbert_schemes():
    for n in range(1, 6):
        assert check_salamon(goettsche(k3(), n), n).ok


def test_salamon_on_og10():
    result = check_salamon(og10_diamond(), 5)
    assert result.lhs == result.rhs == 630780
    assert result.ok


def test_salamon_detects_a_broken_diamond():
    broken = VirtualDiamond(
        {key: mult for key, mult in k3().items()} | {(1, 1): 19}
    )
    assert not check_salamon(broken, 1).ok
    assert not check_salamon(VirtualDiamond.unit(), 1).ok


def test_euler_check():
    assert check_euler(og10_diamond(), 176904)
    assert not check_euler(og10_diamond(), 176903)
    assert check_euler(k3(), 24)
    assert check_euler(VirtualDiamond.zero(), 0)


def test_validation_report_on_og10():
    report = validation_report(og10_diamond(), 10, expected_euler=176904)
    assert report["ok"]
    assert report["salamon"]["lhs"] == report["salamon"]["rhs"] == 630780
    assert report["euler"]["ok"]


def test_validation_report_odd_dimension_skips_salamon():
    # odd-degree classes only: symmetric, self-dual in dimension 1
    curve = VirtualDiamond({(0, 0): 1, (1, 0): 3, (0, 1): 3, (1, 1): 1})
    report = validation_report(curve, 1)
    assert report["salamon"] == {"applicable": False, "ok": True}
    assert report["ok"]


def test_validation_report_flags_failures():
    report = validation_report(VirtualDiamond.unit(), 2, expected_euler=5)
    assert not report["poincare"]["ok"]
    assert not report["euler"]["ok"]
    assert not report["ok"]
