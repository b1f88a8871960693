"""Determinantal characters, the e-basis, and the triangular change of basis."""

import pytest

from qcasimir.casimir import ch_g_via_hooks
from qcasimir.chars import GAElem, ext_power_char, weyl_character
from qcasimir.ebasis import (
    EBasisExpr,
    PartitionTooLong,
    conjugate_partition,
    expected_leading_coeff,
    fundamental_character_relation,
    g_in_e_basis,
    generation_certificate,
    hook_matrix_printed,
    jt_character,
    round_trip_ok,
    solution_ok_in_characters,
    triangular_solve,
)
from qcasimir.exact import EPoly, QLaurent, det_exact
from qcasimir.roots import LieType, Weight, build_root_system, partition_to_weight

B2 = build_root_system(LieType.B, 2)
B3 = build_root_system(LieType.B, 3)
C3 = build_root_system(LieType.C, 3)
D4 = build_root_system(LieType.D, 4)
SMALL = (B2, B3, C3, D4)

Q = QLaurent.q_power


def test_conjugate_partition():
    assert conjugate_partition(()) == ()
    assert conjugate_partition((3, 1)) == (2, 1, 1)
    assert conjugate_partition((4, 2, 1)) == (3, 2, 1, 1)
    assert conjugate_partition((1, 1, 1)) == (3,)


def partitions_upto(total, max_len):
    out = set()

    def rec(rest, maxpart, cur):
        if cur:
            out.add(tuple(cur))
        if not rest:
            return
        for p in range(min(rest, maxpart), 0, -1):
            if len(cur) < max_len:
                rec(rest - p, p, cur + [p])

    for m in range(1, total + 1):
        rec(m, m, [])
    return sorted(out)


class TestJacobiTrudi:
    def test_single_box(self):
        for rs in SMALL:
            assert jt_character(rs, (1,)) == ext_power_char(rs, 1)

    def test_single_column_is_exterior_power(self):
        # B: one column of height r <= n gives the r-th exterior power
        for r in (1, 2, 3):
            assert jt_character(B3, (1,) * r) == ext_power_char(B3, r)

    def test_partition_too_long(self):
        with pytest.raises(PartitionTooLong):
            jt_character(B2, (1, 1, 1))

    @pytest.mark.parametrize(
        "rs", (B2, B3, C3), ids=lambda r: f"{r.lie_type.value}{r.rank}"
    )
    def test_matches_weyl_characters(self, rs):
        for parts in partitions_upto(5, rs.rank):
            jt = jt_character(rs, parts)
            chi = weyl_character(rs, partition_to_weight(rs, parts))
            assert jt == chi, parts

    def test_type_d_matches_below_full_length(self):
        for parts in partitions_upto(5, 3):  # at most n-1 parts
            assert jt_character(D4, parts) == weyl_character(
                D4, partition_to_weight(D4, parts)
            )

    def test_type_d_full_length_splits(self):
        # with exactly n nonzero parts the determinant provably returns the
        # sum of the character and its sign-flipped mirror; pin that
        for parts in ((1, 1, 1, 1), (2, 1, 1, 1)):
            lam = partition_to_weight(D4, parts)
            mirror = Weight(lam.dbl[:-1] + (-lam.dbl[-1],))
            assert jt_character(D4, parts) == weyl_character(
                D4, lam
            ) + weyl_character(D4, mirror)

    def test_e_mode_folding_record(self):
        expr = jt_character(B2, (2, 2), target="e")
        assert isinstance(expr, EBasisExpr)
        # indices above n fold down through e_r = e_{d-r}
        assert all(orig > B2.rank for orig, _ in expr.foldings)

    def test_e_mode_evaluates_to_ga_mode(self):
        for rs in (B2, C3):
            exts = [ext_power_char(rs, r) for r in range(1, rs.rank + 1)]
            for parts in partitions_upto(4, rs.rank):
                expr = jt_character(rs, parts, target="e")
                val = expr.poly.substitute(exts, GAElem.one(rs.rank))
                assert val == jt_character(rs, parts), parts


class TestHookMatrices:
    @pytest.mark.parametrize(
        "rs", (B2, B3, C3, D4), ids=lambda r: f"{r.lie_type.value}{r.rank}"
    )
    def test_printed_matrix_shape(self, rs):
        k, r = rs.rank + 1, rs.rank - 1
        rows = hook_matrix_printed(rs, k, r)
        size = k - r
        for i in range(1, size):
            # unit subdiagonal, zeros below it
            assert rows[i][i - 1] == GAElem.one(rs.rank)
            for j in range(i - 1):
                assert rows[i][j].is_zero()

    def test_printed_determinant_matches(self):
        for rs in (B2, B3, C3):
            for r in range(rs.rank):
                for arm in (1, 2, 3):
                    printed = det_exact(hook_matrix_printed(rs, arm + r, r))
                    assert printed == jt_character(rs, (arm,) + (1,) * r)
        # type D away from the split column
        for r in range(D4.rank - 1):
            printed = det_exact(hook_matrix_printed(D4, 2 + r, r))
            assert printed == jt_character(D4, (2,) + (1,) * r)


class TestEBasisBlocks:
    def test_first_block_is_scaled_symbol(self):
        # g_1 = q^{c_n - 1} E_1 in every type
        for rs in SMALL:
            expr = g_in_e_basis(rs, 1)
            assert expr.poly == EPoly.symbol(
                rs.rank, 1, Q(rs.c_n - 1)
            )

    def test_leading_coefficient_formula(self):
        for rs in SMALL:
            for k in range(1, rs.rank + 1):
                poly = g_in_e_basis(rs, k).poly
                key = tuple(1 if i == k - 1 else 0 for i in range(rs.rank))
                assert poly.coeff(key) == expected_leading_coeff(rs, k)

    def test_triangular_in_symbols(self):
        for rs in SMALL:
            for k in range(1, rs.rank + 1):
                poly = g_in_e_basis(rs, k).poly
                for j in range(k + 1, rs.rank + 1):
                    assert not poly.uses_symbol(j)

    def test_substitution_reproduces_hook_route(self):
        for rs in SMALL:
            exts = [ext_power_char(rs, r) for r in range(1, rs.rank + 1)]
            for k in range(1, rs.rank + 1):
                val = g_in_e_basis(rs, k).poly.substitute(
                    exts, GAElem.one(rs.rank)
                )
                assert val == ch_g_via_hooks(rs, k).body, (rs.lie_type, k)

    def test_jacobian_is_triangular_with_unit_product(self):
        for rs in (B2, C3):
            n = rs.rank
            polys = [g_in_e_basis(rs, k).poly for k in range(1, n + 1)]
            jac = [[p.partial(j) for j in range(1, n + 1)] for p in polys]
            for i in range(n):
                for j in range(i + 1, n):
                    assert jac[i][j].is_zero()
            det = det_exact(jac)
            expected = EPoly.one(n)
            for k in range(1, n + 1):
                expected = expected.scale(expected_leading_coeff(rs, k))
            assert det == expected


class TestTriangularSolve:
    @pytest.mark.parametrize(
        "rs", SMALL, ids=lambda r: f"{r.lie_type.value}{r.rank}"
    )
    def test_round_trips_all_k(self, rs):
        sol = triangular_solve(rs)
        for k in range(1, rs.rank + 1):
            assert round_trip_ok(rs, sol, k), k

    def test_character_level_identities(self):
        for rs in (B2, C3):
            sol = triangular_solve(rs)
            for k in range(1, rs.rank + 1):
                assert solution_ok_in_characters(rs, sol, k), (rs.lie_type, k)

    def test_c1_printed_value(self):
        # c_1 = +1 / q^{c_n - 1}; in type B that is q^{1-2n}
        for rs in SMALL:
            entry = triangular_solve(rs).entry(1)
            assert entry.c_unit == 1
            assert entry.c_denom == Q(rs.c_n - 1)
            # first solution has no lower-order terms at all
            assert entry.num == EPoly.symbol(rs.rank, 1)
            assert entry.den == Q(rs.c_n - 1)

    def test_all_leading_pairs_nonzero(self):
        for rs in SMALL:
            for e in triangular_solve(rs).entries:
                assert e.c_denom and e.den


class TestCertificates:
    def test_extra_generators_per_type(self):
        assert [g["index"] for g in generation_certificate(B2)["extra_generators"]] == [2]
        assert generation_certificate(C3)["extra_generators"] == []
        assert [g["index"] for g in generation_certificate(D4)["extra_generators"]] == [3, 4]

    def test_spin_dimensions(self):
        rep = generation_certificate(B3)
        assert rep["extra_generators"][0]["dim"] == 8
        rep = generation_certificate(D4)
        assert [g["dim"] for g in rep["extra_generators"]] == [8, 8]

    def test_solved_ranges(self):
        assert generation_certificate(B3)["solved_range"] == 2
        assert generation_certificate(C3)["solved_range"] == 3
        assert generation_certificate(D4)["solved_range"] == 2

    def test_all_checks_pass(self):
        for rs in SMALL:
            rep = generation_certificate(rs)
            assert all(c["status"] == "pass" for c in rep["checks"])

    def test_fundamental_relations(self):
        for r in (1, 2):
            chi, expr = fundamental_character_relation(B3, r)
            assert chi == expr
        for r in (1, 2, 3):
            chi, expr = fundamental_character_relation(C3, r)
            assert chi == expr
