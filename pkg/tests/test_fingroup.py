import itertools

import pytest
from hypothesis import given, strategies as st

from twotypes.fingroup import (
    FreeWord, ImageNotNormal, NotAGroup, NotAHom, NotAnAction,
    cokernel_of_image, compose_homs, conjugation_action, cyclic,
    direct_product, empty_word, find_isomorphism, free_reduce, generator,
    identity_hom, inversion_action_z2_on, kernel, klein_four, make_action,
    make_group, make_hom, semidirect, subgroup, symmetric3, trivial_action,
    trivial_group,
)


def brute_associative(mul):
    n = len(mul)
    for a, b, c in itertools.product(range(n), repeat=3):
        if mul[mul[a][b]][c] != mul[a][mul[b][c]]:
            return False
    return True


class TestMakeGroup:
    def test_z2(self):
        g = make_group([[0, 1], [1, 0]])
        assert g.order == 2
        assert g.identity == 0
        assert g.inv == (0, 1)

    def test_s3_table_matches_brute_force(self):
        g = symmetric3()
        assert g.order == 6
        assert brute_associative(g.mul)
        assert not g.is_abelian()

    def test_no_inverse(self):
        with pytest.raises(NotAGroup):
            make_group([[0, 1], [1, 1]])

    def test_nonassociative_witness(self):
        # "subtraction mod 3" has an identity-ish column but fails associativity
        bad = [[(a - b) % 3 for b in range(3)] for a in range(3)]
        with pytest.raises(NotAGroup):
            make_group(bad)

    def test_rechecks_pass_on_standard_groups(self):
        for g in (trivial_group(), cyclic(5), klein_four(), symmetric3()):
            # re-validating the table of a constructed group must succeed
            assert make_group(g.mul).mul == g.mul


class TestHoms:
    def test_zero_map(self):
        z2 = cyclic(2)
        h = make_hom(z2, z2, [0, 0])
        assert not h.is_injective()

    def test_mod2_reduction(self):
        h = make_hom(cyclic(4), cyclic(2), [0, 1, 0, 1])
        assert h.is_surjective()

    def test_swap_is_not_hom(self):
        z3 = cyclic(3)
        with pytest.raises(NotAHom) as exc:
            make_hom(z3, z3, [0, 1, 1])
        assert exc.value.witness == (1, 1)

    def test_compose(self):
        h = compose_homs(make_hom(cyclic(4), cyclic(2), [0, 1, 0, 1]),
                         identity_hom(cyclic(2)))
        assert h.image == (0, 1, 0, 1)


class TestActions:
    def test_trivial_action(self):
        a = trivial_action(cyclic(3), cyclic(4))
        assert a(2, 1) == 2

    def test_inversion_action(self):
        a = inversion_action_z2_on(cyclic(3))
        assert a(1, 1) == 2
        assert a(1, 0) == 1

    def test_identity_must_act_trivially(self):
        z2, z4 = cyclic(2), cyclic(4)
        with pytest.raises(NotAnAction):
            make_action(z2, z4, [[1, 1], [1, 1], [1, 1], [1, 1]])

    def test_must_act_by_automorphisms(self):
        # swap 1 and 2 in Z/4 is a bijection but not an automorphism
        z2, z4 = cyclic(2), cyclic(4)
        with pytest.raises(NotAnAction):
            make_action(z2, z4, [[0, 0], [1, 2], [2, 1], [3, 3]])

    def test_conjugation_action_on_s3(self):
        conjugation_action(symmetric3())


class TestSemidirect:
    def test_trivial_action_gives_direct_product(self):
        g = semidirect(cyclic(2), cyclic(2), trivial_action(cyclic(2), cyclic(2)))
        assert g.order == 4
        assert g.is_abelian()
        assert all(g.element_order(x) <= 2 for x in range(1, 4))
        iso = find_isomorphism(g, klein_four())
        assert iso is not None and iso.is_bijective()

    def test_inversion_semidirect_is_s3(self):
        g = semidirect(cyclic(2), cyclic(3), inversion_action_z2_on(cyclic(3)))
        assert g.order == 6
        assert not g.is_abelian()
        iso = find_isomorphism(g, symmetric3())
        assert iso is not None and iso.is_bijective()

    def test_order_multiplies(self):
        g = direct_product(cyclic(3), cyclic(4))
        assert g.order == 12

    def test_indexing_convention(self):
        # (g,a)(h,b) = (gh, a^h b) with index g*|G2|+a
        z2, z3 = cyclic(2), cyclic(3)
        g = semidirect(z2, z3, inversion_action_z2_on(z3))
        # (1,1)*(1,0) = (0, 1^1 * 0) = (0, 2) -> index 2
        assert g.mul[1 * 3 + 1][1 * 3 + 0] == 2


class TestKernelCokernel:
    def test_kernel_of_reduction(self):
        k, incl = kernel(make_hom(cyclic(4), cyclic(2), [0, 1, 0, 1]))
        assert k.order == 2
        assert set(incl.image) == {0, 2}

    def test_cokernel_of_trivial_map(self):
        q, proj = cokernel_of_image(make_hom(trivial_group(), cyclic(2), [0]))
        assert q.order == 2
        assert proj.is_bijective()

    def test_non_normal_image(self):
        s3 = symmetric3()
        # order-2 subgroup generated by a transposition is not normal
        t = next(x for x in range(6) if s3.element_order(x) == 2)
        sub, incl = subgroup(s3, [s3.identity, t])
        with pytest.raises(ImageNotNormal):
            cokernel_of_image(incl)

    def test_normal_quotient(self):
        s3 = symmetric3()
        r = next(x for x in range(6) if s3.element_order(x) == 3)
        sub, incl = subgroup(s3, [s3.identity, r, s3.mul[r][r]])
        q, proj = cokernel_of_image(incl)
        assert q.order == 2


class TestFreeWords:
    def test_cancel_pair(self):
        assert free_reduce([(0, 1), (0, -1)]) == empty_word()

    def test_inner_cancellation(self):
        w = free_reduce([(0, 1), (1, 1), (1, -1), (0, 1)])
        assert w.letters == ((0, 1), (0, 1))

    def test_word_algebra(self):
        a, b = generator(0), generator(1)
        assert (a * b * b.inverse()) == a
        assert (a * a.inverse()) == empty_word()

    @given(st.lists(st.tuples(st.integers(0, 3), st.sampled_from([1, -1])),
                    max_size=12))
    def test_reduce_idempotent_and_order_independent(self, letters):
        once = free_reduce(letters)
        assert free_reduce(once.letters) == once
        # right-to-left reduction by pieces agrees with left-to-right
        if letters:
            mid = len(letters) // 2
            left = free_reduce(letters[:mid])
            right = free_reduce(letters[mid:])
            assert left * right == once

    @given(st.lists(st.tuples(st.integers(0, 3), st.sampled_from([1, -1])),
                    max_size=10))
    def test_inverse_cancels(self, letters):
        w = free_reduce(letters)
        assert w * w.inverse() == empty_word()


class TestIsomorphismSearch:
    def test_distinguishes_z4_from_klein(self):
        assert find_isomorphism(cyclic(4), klein_four()) is None

    def test_z6_is_z2_times_z3(self):
        assert find_isomorphism(cyclic(6), direct_product(cyclic(2), cyclic(3))) is not None
