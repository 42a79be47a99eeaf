"""Root-system construction and root-counting length statistics."""

import pytest

from oddlen.rootsys import (
    build_root_system,
    length_via_roots,
    odd_length_via_roots,
    odd_root_count,
)
from oddlen.sperm import SignedPerm, elements, ell, odd_length


class TestConstruction:
    @pytest.mark.parametrize(
        "family, n, count",
        [("A", 4, 6), ("A", 5, 10), ("B", 3, 9), ("B", 4, 16), ("D", 3, 6), ("D", 4, 12)],
    )
    def test_positive_root_counts(self, family, n, count):
        rs = build_root_system(family, n)
        assert len(rs.positive_roots) == count
        assert len(rs.heights) == count

    def test_simple_roots_have_height_one(self):
        for family, n in (("A", 4), ("B", 3), ("D", 4)):
            rs = build_root_system(family, n)
            labels = [label for label, _ in rs.simple_roots]
            assert len(labels) == len(set(labels))
            for _, coords in rs.simple_roots:
                assert rs.heights[rs.positive_roots.index(coords)] == 1

    def test_b2_heights(self):
        rs = build_root_system("B", 2)
        assert sorted(rs.heights) == [1, 1, 2, 3]

    def test_odd_root_count(self):
        for family, n in (("A", 5), ("B", 4), ("D", 5)):
            rs = build_root_system(family, n)
            odd = sum(1 for h in rs.heights if h % 2)
            assert odd_root_count(family, n) == odd


class TestLengthAgreement:
    def test_identity(self):
        for family, n in (("A", 4), ("B", 3), ("D", 4)):
            rs = build_root_system(family, n)
            e = SignedPerm.identity(n)
            assert length_via_roots(rs, e) == 0
            assert odd_length_via_roots(rs, e) == 0

    @pytest.mark.parametrize("family, n", [("A", 4), ("B", 3), ("D", 4)])
    def test_matches_statistics_exhaustively(self, family, n):
        rs = build_root_system(family, n)
        for s in elements(family, n):
            assert length_via_roots(rs, s) == ell(s, family)
            assert odd_length_via_roots(rs, s) == odd_length(s, family)

    def test_longest_element_inverts_all_roots(self):
        rs = build_root_system("B", 3)
        w0 = SignedPerm.from_text("-1 -2 -3")
        assert length_via_roots(rs, w0) == 9
        assert odd_length_via_roots(rs, w0) == odd_root_count("B", 3)
