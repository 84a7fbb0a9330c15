import pytest
from hypothesis import given, settings, strategies as st

from morphcalc.catalog import BadParams, gaussian_binomial, schubert_cells, sphere
from morphcalc.factorize import (
    NotIntegerType,
    factor_into_catalog,
    grassmann_divide,
    periodicity_scan,
)
from morphcalc.quantity import MorphPoly, classify, render

R = MorphPoly.line()


def test_grassmann_divide_real_examples():
    g63 = grassmann_divide("real", 6, 3)
    assert g63 == (R ** 3 + 1) * (R ** 4 + R ** 3 + R ** 2 + R + 1) * (R ** 2 + 1)
    assert grassmann_divide("real", 7, 1) == MorphPoly.from_r_coeffs({i: 1 for i in range(7)})


def test_grassmann_divide_complex_example():
    assert grassmann_divide("complex", 4, 2) == (R ** 4 + 1) * (R ** 4 + R ** 2 + 1)


def test_grassmann_divide_matches_schubert():
    for n in range(2, 9):
        for k in range(1, n):
            q = grassmann_divide("real", n, k)
            counts = schubert_cells(n, k)
            rc = q.r_coeffs()
            top = k * (n - k)
            assert [int(rc.get(top - i, 0)) for i in range(top + 1)] == counts


def test_grassmann_divide_duality():
    for field in ("real", "complex", "quaternionic"):
        for n in range(2, 8):
            for k in range(1, n):
                assert grassmann_divide(field, n, k) == grassmann_divide(field, n, n - k)


def test_grassmann_divide_is_scaled_gaussian():
    # complex and quaternionic quotients are the Gaussian binomial in C resp. H
    for n in range(2, 7):
        for k in range(1, n):
            gb = gaussian_binomial(n, k)
            for field, step in (("complex", 2), ("quaternionic", 4)):
                scaled = MorphPoly.from_r_coeffs(
                    {step * e: c for e, c in gb.r_coeffs().items()}
                )
                assert grassmann_divide(field, n, k) == scaled


def test_grassmann_divide_bad_params():
    with pytest.raises(BadParams):
        grassmann_divide("real", 3, 3)
    with pytest.raises(BadParams):
        grassmann_divide("octonionic", 4, 2)


def _factor_multiset(result):
    out = []
    for f in result.factors:
        tag = (f.name, f.params) if f.name else ("raw", render(f.poly, "r"))
        out.extend([tag] * f.multiplicity)
    return sorted(map(str, out))


WORKED_TABLES = {
    6: ["('RP', (4,))", "('SS', (2,))", "('SS', (3,))"],
    7: ["('RP', (4,))", "('RP', (6,))", "('RPh', (2,))"],
    8: ["('CP', (3,))", "('RP', (6,))", "('SS', (3,))"],
    9: ["('CP', (3,))", "('RP', (6,))", "('raw', 'R^6 + R^3 + 1')"],
    10: ["('CP', (4,))", "('RP', (7,))", "('raw', 'R^6 + R^3 + 1')"],
    11: ["('CP', (4,))", "('RP', (10,))", "('raw', 'R^6 + R^3 + 1')"],
    12: ["('CP', (4,))", "('RP', (10,))", "('SS', (3,))", "('SS', (6,))"],
    13: ["('RP', (10,))", "('RP', (12,))", "('RPh', (2,))", "('SS', (6,))"],
}


@pytest.mark.parametrize("n", sorted(WORKED_TABLES))
def test_factor_tables(n):
    result = factor_into_catalog(grassmann_divide("real", n, 3))
    assert result.residual == 1
    assert _factor_multiset(result) == sorted(WORKED_TABLES[n])
    assert result.product() == grassmann_divide("real", n, 3)


def test_factor_simple_example():
    result = factor_into_catalog(R ** 4 + R ** 3 + 2 * R ** 2 + R + 1)
    assert _factor_multiset(result) == ["('RP', (2,))", "('SS', (2,))"]
    assert result.residual == 1


def test_factor_powers_of_r_and_residual():
    result = factor_into_catalog(R ** 3 * (R ** 2 + 1) * 2)
    names = _factor_multiset(result)
    assert names.count("('raw', 'R')") == 3
    assert "('SS', (2,))" in names
    assert result.residual == 2
    assert result.product() == R ** 3 * (R ** 2 + 1) * 2


def test_factor_rejects_non_integer_type():
    with pytest.raises(NotIntegerType):
        factor_into_catalog(MorphPoly.halfline())
    with pytest.raises(NotIntegerType):
        factor_into_catalog(1 - R)


def test_named_factors_match_catalog():
    from morphcalc.catalog import catalog_quantity

    result = factor_into_catalog(grassmann_divide("real", 13, 3))
    for f in result.factors:
        if f.name is not None:
            assert catalog_quantity(f.name, f.params) == f.poly


def test_every_emitted_factor_is_integer_type():
    for n in (7, 10, 12):
        result = factor_into_catalog(grassmann_divide("real", n, 3))
        for f in result.factors:
            assert classify(f.poly).integer_type


_dict_element = st.sampled_from(
    [
        R,
        R + 1,
        R ** 2 + 1,
        R ** 3 + 1,
        R ** 2 + R + 1,
        R ** 4 + R ** 3 + R ** 2 + R + 1,
        R ** 4 + R ** 2 + 1,
        R ** 2 - R + 1,
        R ** 6 + R ** 3 + 1,
    ]
)


@settings(max_examples=40, deadline=None)
@given(st.lists(_dict_element, min_size=1, max_size=4), st.integers(1, 3))
def test_factor_reconstruction(elements, scale):
    q = MorphPoly.constant(scale)
    for e in elements:
        q = q * e
    result = factor_into_catalog(q)
    assert result.product() == q


def test_periodicity_k2():
    report = periodicity_scan(2, (4, 12))
    assert report.period == 2
    sigs = {n: sig for n, sig, _ in report.entries}
    assert sigs[4] == sigs[6] == sigs[8] == sigs[10] == sigs[12]
    assert sigs[5] == sigs[7] == sigs[9] == sigs[11]
    assert sigs[4] != sigs[5]


def test_periodicity_k3():
    report = periodicity_scan(3, (6, 16))
    assert report.period == 6
    sigs = {n: sig for n, sig, _ in report.entries}
    assert len({sigs[n] for n in range(6, 12)}) == 6
    for n in range(6, 11):
        assert sigs[n] == sigs[n + 6]


def test_periodicity_g32_case():
    report = periodicity_scan(2, (3, 5))
    sigs = dict((n, s) for n, s, _ in report.entries)
    assert sigs[3]  # G(3,2) = RP(2): a single projective factor
    result = factor_into_catalog(grassmann_divide("real", 3, 2))
    assert _factor_multiset(result) == ["('RP', (2,))"]


def test_periodicity_report_serialization():
    report = periodicity_scan(2, (4, 8))
    text = report.to_text()
    assert "detected period: 2" in text
    records = report.records()
    assert len(records) == 5 and all(isinstance(n, int) for n, _ in records)
    with pytest.raises(BadParams):
        periodicity_scan(4, (5, 9))
