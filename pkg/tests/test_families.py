"""The generating-function catalog: frozen values, rewrites, parameters."""

import pytest

from paritybias.families import (
    FAMILY_IDS,
    build_series,
    family_parameter_kind,
    list_families,
    validate_params,
)
from paritybias.oracle import count_parity_family
from paritybias.series import sub

ORDER = 80


def coeffs(family, order=ORDER, m=None):
    return list(build_series(family, order, m).coeffs)


class TestFrozenExpansions:
    def test_more_odd_to_8(self):
        assert coeffs("po", 8) == [0, 0, 0, 1, 0, 1, 1, 1, 2]

    def test_more_even_to_8(self):
        assert coeffs("pe", 8) == [0, 0, 1, 0, 2, 0, 3, 1, 5]

    def test_smoothed_prefix_counts_to_7(self):
        assert coeffs("a_seq", 7) == [1, 1, 2, 2, 4, 4, 7, 7]

    def test_even_below_odd_strict_to_4(self):
        assert coeffs("qeu_ou", 4) == [1, 0, 1, 1, 2]

    def test_even_part_counts(self):
        assert coeffs("b_seq", 10) == [1, 0, 1, 0, 2, 0, 3, 0, 5, 0, 7]


class TestRewritesAgree:
    def test_more_odd_transformed(self):
        assert coeffs("po") == coeffs("po_transformed")

    def test_more_even_transformed(self):
        assert coeffs("pe") == coeffs("pe_transformed")

    def test_difference_form(self):
        direct = sub(build_series("pe", ORDER), build_series("po", ORDER))
        assert list(direct.coeffs) == coeffs("diff_pe_po")

    def test_weighted_difference_form(self):
        pe = build_series("pe", ORDER)
        po = build_series("po", ORDER)
        direct = [2 * e - 3 * o for e, o in zip(pe.coeffs, po.coeffs)]
        assert direct == coeffs("diff_2pe_3po")

    @pytest.mark.parametrize("m", [2, 3, 4, 5, 6])
    def test_residue_families_transformed(self, m):
        assert coeffs("p10m", m=m) == coeffs("p10m_transformed", m=m)
        assert coeffs("p01m", m=m) == coeffs("p01m_transformed", m=m)

    def test_strict_separated_sum_form(self):
        assert coeffs("qou_eu") == coeffs("qou_eu_sumform")

    def test_strict_separated_difference(self):
        direct = sub(build_series("qeu_ou", ORDER), build_series("qou_eu", ORDER))
        assert list(direct.coeffs) == coeffs("diff_qeu_qou")

    def test_separated_difference(self):
        direct = sub(build_series("pou_eu", ORDER), build_series("peu_ou", ORDER))
        assert list(direct.coeffs) == coeffs("diff_pou_peu")

    @pytest.mark.parametrize("m", [1, 3, 5])
    def test_count_parity_difference_odd_minimum(self, m):
        direct = sub(build_series("ome", ORDER, m), build_series("eme", ORDER, m))
        assert list(direct.coeffs) == coeffs("diff_ome_eme", m=m)

    @pytest.mark.parametrize("m", [2, 4])
    def test_count_parity_difference_even_minimum(self, m):
        direct = sub(build_series("eme", ORDER, m), build_series("ome", ORDER, m))
        assert list(direct.coeffs) == coeffs("diff_eme_ome", m=m)


class TestSequenceFacts:
    def test_even_index_pairs(self):
        a = coeffs("a_seq")
        for n in range(ORDER // 2):
            assert a[2 * n] == a[2 * n + 1]

    def test_even_index_prefix_sums(self):
        a = coeffs("a_seq")
        b = coeffs("b_seq")
        running = 0
        for n in range(ORDER // 2 + 1):
            running += b[2 * n]
            assert a[2 * n] == running


class TestCatalog:
    def test_size(self):
        assert len(FAMILY_IDS) == 25
        assert len(list_families()) == 25

    def test_stable_order_and_first_entries(self):
        ids = [fid for fid, _, _ in list_families()]
        assert ids == list(FAMILY_IDS)
        assert ids[0] == "po"
        assert ids[1] == "pe"

    def test_parameter_descriptions(self):
        rows = {fid: desc for fid, desc, _ in list_families()}
        assert rows["po"] == "no params"
        assert rows["p10m"] == "m >= 2 (modulus)"
        assert rows["eme"] == "m >= 1 (minimum part)"

    def test_every_family_has_description(self):
        for fid, _, what in list_families():
            assert what, fid


class TestParameters:
    def test_modulus_too_small(self):
        with pytest.raises(ValueError, match="requires m >= 2"):
            build_series("p10m", 10, 1)

    def test_unexpected_parameter(self):
        with pytest.raises(ValueError, match="takes no parameter"):
            build_series("po", 10, 2)

    def test_missing_parameter(self):
        with pytest.raises(ValueError, match="requires the parameter m"):
            build_series("eme", 10)

    def test_minimum_part_positive(self):
        with pytest.raises(ValueError, match="requires m >= 1"):
            build_series("ome", 10, 0)

    def test_difference_parity_constraints(self):
        with pytest.raises(ValueError, match="requires odd m"):
            build_series("diff_ome_eme", 10, 2)
        with pytest.raises(ValueError, match="requires even m"):
            build_series("diff_eme_ome", 10, 3)

    def test_unknown_family(self):
        with pytest.raises(ValueError, match="unknown family"):
            build_series("zeta", 10)

    def test_negative_order(self):
        with pytest.raises(ValueError, match="order must be nonnegative"):
            build_series("po", -1)

    def test_parameter_kind_lookup(self):
        assert family_parameter_kind("po") == "none"
        assert family_parameter_kind("p01m") == "modulus"
        validate_params("omo", 3)
        with pytest.raises(ValueError):
            validate_params("omo", None)


_PARAMETERIZED = ("p10m", "p01m", "p10m_transformed", "p01m_transformed",
                  "eme", "ome", "emo", "omo")
_PLAIN = [
    (fid, None)
    for fid in FAMILY_IDS
    if not fid.startswith("diff") and fid not in _PARAMETERIZED
]


class TestSigns:
    @pytest.mark.parametrize(
        "family,m",
        _PLAIN + [("p10m", 3), ("p01m", 3), ("eme", 2), ("ome", 2), ("emo", 1), ("omo", 1)],
    )
    def test_plain_families_nonnegative(self, family, m):
        assert all(c >= 0 for c in coeffs(family, 60, m))

    def test_difference_signs_are_the_theorems(self):
        # strictly positive from its threshold on, by design not by accident
        d = coeffs("diff_pe_po", 60)
        assert min(d[3:6]) < 0 and all(c >= 0 for c in d[8:])


class TestOracleCrossCheck:
    def test_parity_family_spot_value(self):
        eme = build_series("eme", 12, 2)
        assert eme.coeffs[12] == count_parity_family(12, 2, "E_me")
