"""Character tables, reduction, decompositions, and the trig identity."""

import math

import numpy as np
import pytest

from symstress import (
    NonIntegerMultiplicity,
    character_table,
    decomposition_from_counts,
    group_elements,
    make_census,
    reduce,
    reducible_character,
    trig_sum,
)

ALL_GROUPS = [("Cn", n) for n in range(1, 9)] + [("Cnv", n) for n in range(1, 9)]


def _table(family, n):
    return character_table(group_elements(family, n))


class TestCharacterTables:
    @pytest.mark.parametrize("family, n", ALL_GROUPS)
    def test_row_orthogonality(self, family, n):
        group = group_elements(family, n)
        table = character_table(group)
        sizes = np.array([c.size for c in group.classes], dtype=float)
        order = sizes.sum()
        chars = np.array([ir.characters for ir in table.irreps])
        gram = (chars * sizes) @ chars.conj().T / order
        np.testing.assert_allclose(gram, np.eye(len(table.irreps)), atol=1e-12)

    @pytest.mark.parametrize("family, n", ALL_GROUPS)
    def test_dimension_sum_equals_order(self, family, n):
        group = group_elements(family, n)
        table = character_table(group)
        order = sum(c.size for c in group.classes)
        assert sum(ir.dim**2 for ir in table.irreps) == order

    def test_cs_labels(self):
        assert [ir.label for ir in _table("Cnv", 1).irreps] == ["A'", "A''"]

    def test_c2v_labels(self):
        assert [ir.label for ir in _table("Cnv", 2).irreps] == ["A1", "A2", "B1", "B2"]

    def test_c4v_labels_and_e_characters(self):
        table = _table("Cnv", 4)
        assert [ir.label for ir in table.irreps] == ["A1", "A2", "B1", "B2", "E"]
        e_row = table.irreps[-1]
        assert e_row.dim == 2
        # classes: E, C4, C2, sigma_v, sigma_d
        assert list(e_row.characters) == [2, 0, -2, 0, 0]

    def test_c6v_has_two_doublets(self):
        table = _table("Cnv", 6)
        assert [ir.label for ir in table.irreps] == [
            "A1", "A2", "B1", "B2", "E1", "E2",
        ]
        assert [ir.dim for ir in table.irreps] == [1, 1, 1, 1, 2, 2]

    def test_cyclic_complex_characters(self):
        table = _table("Cn", 3)
        assert [ir.label for ir in table.irreps] == ["A0", "A1", "A2"]
        w = np.exp(2j * math.pi / 3)
        np.testing.assert_allclose(table.irreps[1].characters, [1, w, w**2])

    def test_character_values_are_snapped(self):
        # Rotation characters hit exact half-integers; snapping keeps the
        # arithmetic exact in floating point.
        table = _table("Cnv", 6)
        e1 = table.irreps[4].characters
        assert 1.0 in [abs(x) for x in e1] or 1.0 in e1


class TestReduce:
    def test_integer_combination_recovered(self):
        group = group_elements("Cnv", 4)
        table = character_table(group)
        chars = np.array([ir.characters for ir in table.irreps])
        target = {"A1": 2, "A2": -1, "B1": 0, "B2": 3, "E": -2}
        mix = sum(
            coeff * chars[i]
            for i, ir in enumerate(table.irreps)
            for lab, coeff in [(ir.label, target[ir.label])]
        )
        dec = reduce(mix, table)
        assert dec.to_dict() == target

    def test_non_integer_multiplicity_rejected(self):
        table = _table("Cnv", 2)
        chars = np.real(np.array(table.irreps[0].characters))
        with pytest.raises(NonIntegerMultiplicity):
            reduce(0.5 * chars, table)

    def test_identity_entry_is_freedom_number(self):
        cen = make_census("Cnv", 1, v=6, e=9, v_sigma=2, e_sigma=3)
        ch = reducible_character(cen)
        assert ch[0] == cen.freedom_number == 0

    def test_mirror_entry_ignores_fixed_vertices(self):
        # A mirror has trace zero in the plane, so only the fixed bars and
        # the rigid-body term enter its character entry.
        lo = make_census("Cnv", 1, v=8, e=5, v_sigma=0, e_sigma=2)
        hi = make_census("Cnv", 1, v=8, e=5, v_sigma=6, e_sigma=2)
        np.testing.assert_array_equal(reducible_character(lo), reducible_character(hi))
        assert reducible_character(lo)[1] == -2 - (0 + -1)

    def test_pinned_character_drops_rigid_body_term(self):
        unpinned = make_census("Cnv", 1, v=5, e=7, v_sigma=1, e_sigma=3)
        pinned = make_census("Cnv", 1, v=5, e=7, pinned=True, v_sigma=1, e_sigma=3)
        assert reducible_character(unpinned)[1] == -3 + 1
        assert reducible_character(pinned)[1] == -3


class TestDecomposition:
    def test_string_rendering(self):
        table = _table("Cnv", 4)
        dec = decomposition_from_counts(
            table, {"A1": -5, "A2": 2, "B1": -1, "B2": -1, "E": -2}
        )
        assert str(dec) == "-5A1 + 2A2 - B1 - B2 - 2E"

    def test_zero_renders_as_zero(self):
        table = _table("Cnv", 1)
        dec = decomposition_from_counts(table, {"A'": 0, "A''": 0})
        assert str(dec) == "0"

    def test_detected_counts_weight_by_dimension(self):
        table = _table("Cnv", 4)
        dec = decomposition_from_counts(
            table, {"A1": -5, "A2": 2, "B1": -1, "B2": -1, "E": -2}
        )
        assert dec.s_detected == 5 + 1 + 1 + 2 * 2
        assert dec.m_detected == 2
        assert dec.total == -5 + 2 - 1 - 1 - 2 * 2

    def test_coefficient_lookup(self):
        table = _table("Cnv", 2)
        dec = decomposition_from_counts(table, {"A1": 1, "A2": 0, "B1": -3, "B2": 2})
        assert dec["B1"] == -3
        with pytest.raises(KeyError):
            dec.coefficient("E")


class TestTrigSum:
    @pytest.mark.parametrize("n", range(1, 25))
    def test_matches_brute_force(self, n):
        for t in range(-n, 2 * n + 1):
            brute = sum(
                math.cos(2 * math.pi * t * j / n) * math.cos(2 * math.pi * j / n)
                for j in range(n)
            )
            assert trig_sum(n, t) == pytest.approx(brute, abs=1e-9), (n, t)

    def test_collapse_values(self):
        assert trig_sum(8, 1) == 4.0
        assert trig_sum(8, 7) == 4.0
        assert trig_sum(8, 3) == 0.0
        assert trig_sum(2, 1) == 2.0
        assert trig_sum(1, 0) == 1.0

    def test_rejects_bad_n(self):
        with pytest.raises(ValueError):
            trig_sum(0, 1)
