import random

import numpy as np
import pytest

from chd import (
    ButsonMatrix,
    ChdError,
    PreconditionError,
    character_table,
    classify,
    conference_lift,
    dephase,
    double,
    instance_library,
    monomial_transform,
    paley_conference,
    sylvester_hadamard,
    tensor,
    verify,
)


class TestVerify:
    def test_z4_character_table(self, t4):
        assert verify(t4)
        # it is exactly [[1,1,1,1],[1,i,-1,-i],[1,-1,1,-1],[1,-i,-1,i]]
        assert t4.exps.tolist() == [
            [0, 0, 0, 0],
            [0, 1, 2, 3],
            [0, 2, 0, 2],
            [0, 3, 2, 1],
        ]

    def test_all_ones_is_not_hadamard(self):
        h = ButsonMatrix([[0, 0], [0, 0]], 2)
        assert not verify(h)

    def test_sylvester_cube(self, f8):
        assert verify(f8)

    def test_float_oracle(self, t4, h6):
        for h in (t4, h6):
            m = h.to_complex()
            assert np.max(np.abs(m @ m.conj().T - h.n * np.eye(h.n))) < 1e-9


class TestDephase:
    def test_idempotent(self, f8, t4, h6):
        for h in (f8, t4, h6):
            d = dephase(h)
            assert d.is_dephased()
            assert dephase(d) == d

    def test_global_phase_removed(self):
        # first row multiplied by i: dephasing restores all-ones row
        h = ButsonMatrix([[1, 1], [0, 2]], 4)
        assert verify(h)
        d = dephase(h)
        assert d.is_dephased()
        assert d.exps.tolist() == [[0, 0], [0, 2]]

    def test_conference_dephase_structure(self, h6):
        # second row: one 1, one -1 and four entries +-i
        row = h6.exps[1].tolist()
        assert row[0] == 0
        assert sorted(row[1:]).count(2) == 1
        assert sum(1 for e in row[1:] if e in (1, 3)) == 4
        # the -1 sits in the diagonal position of the lifted form
        assert row[1] == 2

    def test_unverified_input_rejected(self):
        h = ButsonMatrix([[0, 0], [0, 0]], 2)
        with pytest.raises(PreconditionError):
            dephase(h)


class TestCharacterTable:
    def test_z2(self, f2):
        assert f2.exps.tolist() == [[0, 0], [0, 1]]
        assert f2.r == 2

    def test_z2_square_is_tensor(self, f2, f4):
        assert character_table((2, 2)) == tensor(f2, f2) == f4

    def test_product_group_is_tensor_of_tables(self, t4):
        assert character_table((4, 4)) == tensor(t4, t4)

    def test_verified_and_dephased(self):
        for moduli in [(3,), (6,), (2, 3), (4, 2), (5,)]:
            h = character_table(moduli)
            assert verify(h)
            assert h.is_dephased()


class TestTensorAndDouble:
    def test_identity_factor(self, t4):
        one = character_table((1,))
        assert tensor(t4, one) == t4
        assert tensor(one, t4) == t4

    def test_sylvester4_matches_real_hadamard(self, f4):
        signs = np.where(f4.exps == 0, 1, -1)
        want = np.array(
            [
                [1, 1, 1, 1],
                [1, -1, 1, -1],
                [1, 1, -1, -1],
                [1, -1, -1, 1],
            ]
        )
        assert np.array_equal(signs, want)

    def test_double_of_trivial(self, f2):
        assert double(character_table((1,))) == f2

    def test_double_doubles_order_and_root(self, t4):
        d = double(t4)
        assert d.n == 8
        assert d.r == 4  # lcm(2, 4)
        assert verify(d)

    def test_double_of_f2_is_real_hadamard(self, f2, f4):
        d = double(f2)
        assert verify(d)
        assert d == f4

    def test_mixed_roots_promote_to_lcm(self):
        h = tensor(character_table((2,)), character_table((3,)))
        assert h.r == 6
        assert verify(h)


class TestClassify:
    def test_real(self, f2):
        assert classify(f2).kind == "real"

    def test_turyn(self, t4):
        assert classify(t4).kind == "turyn"

    def test_butson(self):
        c = classify(character_table((3,)))
        assert (c.kind, c.root_order) == ("butson", 3)

    def test_minimal_root_order_detected(self):
        # F2 promoted into the order-4 ring still classifies as real
        promoted = sylvester_hadamard(2).promoted(4)
        assert classify(promoted).kind == "real"


class TestConferenceLift:
    def test_order_2(self):
        h = conference_lift([[0, 1], [1, 0]])
        assert verify(h)
        assert h.exps.tolist() == [[0, 0], [0, 2]]

    def test_order_6_from_quadratic_residues(self, h6):
        assert verify(h6)
        assert classify(h6).kind == "turyn"
        assert h6.n == 6

    def test_non_conference_rejected(self):
        bad = [[0, 1, 1, 1], [1, 0, 1, 1], [1, 1, 0, 1], [1, 1, 1, 0]]
        with pytest.raises(PreconditionError):
            conference_lift(bad)

    def test_paley_matrix_is_symmetric_conference(self):
        c = paley_conference(5)
        assert np.array_equal(c, c.T)
        assert np.array_equal(c.T @ c, 5 * np.eye(6, dtype=np.int64))


class TestMonomialTransform:
    def test_identity(self, t4):
        n = t4.n
        same = monomial_transform(t4, range(n), range(n), [0] * n, [0] * n)
        assert same == t4

    def test_row_swap_preserves_verify(self, f8):
        n = f8.n
        perm = [1, 0] + list(range(2, n))
        out = monomial_transform(f8, perm, range(n), [0] * n, [0] * n)
        assert verify(out)

    def test_random_transforms_verify_and_redephase(self, t4, f8, h6):
        rng = random.Random(5)
        for h in (t4, f8, h6):
            n = h.n
            for _ in range(10):
                rp = list(range(n))
                cp = list(range(n))
                rng.shuffle(rp)
                rng.shuffle(cp)
                rph = [rng.randrange(h.r) for _ in range(n)]
                cph = [rng.randrange(h.r) for _ in range(n)]
                out = monomial_transform(h, rp, cp, rph, cph)
                assert verify(out)
                re = dephase(out)
                assert re.is_dephased()
                assert verify(re)

    def test_length_mismatch_rejected(self, t4):
        with pytest.raises(ChdError):
            monomial_transform(t4, [0, 1], range(4), [0] * 4, [0] * 4)


class TestStructureTheorems:
    def test_real_orders_in_library(self):
        # a verified all +-1 matrix exists only at n = 2 or n = 0 mod 4
        for order in (2, 4, 8):
            h = sylvester_hadamard(order)
            assert classify(h).kind == "real"
            assert order == 2 or order % 4 == 0

    def test_turyn_implies_even_order(self):
        lib = instance_library()
        for n, items in lib.items():
            for _, h in items:
                assert verify(h)
                if classify(h).kind in ("real", "turyn"):
                    assert n % 2 == 0

    def test_no_real_order_6(self):
        # exhaustive search over +-1 second rows shows no order-6 real
        # Hadamard can extend the all-ones row: any two +-1 rows of odd
        # overlap parity fail orthogonality; quick spot check via verify
        rng = random.Random(1)
        for _ in range(200):
            exps = np.zeros((6, 6), dtype=int)
            exps[1:, :] = rng.getrandbits(1)
            for i in range(1, 6):
                for j in range(6):
                    exps[i, j] = rng.getrandbits(1)
            h = ButsonMatrix(exps, 2)
            assert not verify(h)
