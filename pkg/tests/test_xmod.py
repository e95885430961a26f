import itertools
import random

import pytest

from twotypes.fingroup import (
    cyclic, find_isomorphism, free_reduce, generator, make_hom, symmetric3,
    trivial_action, trivial_group,
)
from twotypes.xmod import (
    NotGenerating, Violation, check_crossed_module, check_morphism,
    check_strict_transformation, cofibrant_replacement, compose_morphisms,
    enumerate_strict_transformations, identity_morphism, is_equivalence,
    is_fibration, is_trivial_fibration, pi1, pi2, xmod_b2g, xmod_bg,
    xmod_identity,
)


def z4_to_z2():
    return check_crossed_module(
        cyclic(4), cyclic(2),
        make_hom(cyclic(4), cyclic(2), [0, 1, 0, 1]),
        trivial_action(cyclic(2), cyclic(4)))


class TestCheckCrossedModule:
    def test_trivial_top_group_always_valid(self, corpus):
        for g in (cyclic(2), symmetric3()):
            xmod_bg(g)

    def test_nonabelian_top_over_point_fails_cm1(self):
        s3, one = symmetric3(), trivial_group()
        with pytest.raises(Violation) as exc:
            check_crossed_module(s3, one, make_hom(s3, one, [0] * 6),
                                 trivial_action(one, s3))
        assert exc.value.axiom in ("CM1", "kernel-not-central")
        # the witness is a non-commuting pair
        alpha, beta = exc.value.witness
        assert s3.mul[alpha][beta] != s3.mul[beta][alpha]

    def test_z4_over_z2_valid(self):
        z4_to_z2()

    def test_corpus_is_valid(self, corpus):
        assert len(corpus) >= 10
        for name, xm in corpus:
            check_crossed_module(xm.g2, xm.g1, xm.phi, xm.action)

    def test_kernel_commutes_with_everything(self, corpus):
        for name, xm in corpus:
            for k in range(xm.g2.order):
                if xm.phi.image[k] != xm.g1.identity:
                    continue
                for beta in range(xm.g2.order):
                    assert xm.g2.mul[k][beta] == xm.g2.mul[beta][k]


class TestInvariants:
    def test_pi1(self):
        assert pi1(xmod_bg(cyclic(2))).order == 2
        assert pi1(xmod_identity(cyclic(2))).order == 1
        assert pi1(z4_to_z2()).order == 1

    def test_pi2(self):
        assert pi2(xmod_bg(cyclic(2))).order == 1
        assert pi2(xmod_b2g(cyclic(2))).order == 2
        assert pi2(z4_to_z2()).order == 2


class TestMorphisms:
    def test_identity(self, corpus):
        for name, xm in corpus:
            m = identity_morphism(xm)
            assert is_equivalence(m)
            assert is_trivial_fibration(m)

    def test_z4_to_idz2_morphism(self):
        dom, cod = z4_to_z2(), xmod_identity(cyclic(2))
        m = check_morphism(dom, cod,
                           make_hom(dom.g2, cod.g2, [0, 1, 0, 1]),
                           make_hom(dom.g1, cod.g1, [0, 1]))
        assert is_fibration(m)
        # |H2| = 4 but the corner fiber product has 2 elements
        assert not is_trivial_fibration(m)

    def test_phi_square_violation(self):
        dom, cod = z4_to_z2(), xmod_identity(cyclic(2))
        with pytest.raises(Violation) as exc:
            check_morphism(dom, cod,
                           make_hom(dom.g2, cod.g2, [0, 1, 0, 1]),
                           make_hom(dom.g1, cod.g1, [0, 0]))
        assert exc.value.axiom == "phi-square"

    def test_collapse_of_contractible_is_equivalence(self):
        dom, cod = xmod_identity(cyclic(2)), xmod_bg(trivial_group())
        m = check_morphism(dom, cod,
                           make_hom(dom.g2, cod.g2, [0, 0]),
                           make_hom(dom.g1, cod.g1, [0, 0]))
        assert is_equivalence(m)

    def test_collapse_of_b2z2_is_not_equivalence(self):
        dom, cod = xmod_b2g(cyclic(2)), xmod_bg(trivial_group())
        m = check_morphism(dom, cod,
                           make_hom(dom.g2, cod.g2, [0, 0]),
                           make_hom(dom.g1, cod.g1, [0]))
        assert not is_equivalence(m)
        assert is_fibration(m) and not is_trivial_fibration(m)

    def test_composition(self):
        xm = z4_to_z2()
        m = compose_morphisms(identity_morphism(xm), identity_morphism(xm))
        assert m.p2.image == tuple(range(4))

    def test_equivalences_preserve_pi(self, corpus):
        for name, xm in corpus:
            m = identity_morphism(xm)
            assert find_isomorphism(pi1(m.dom), pi1(m.cod)) is not None
            assert find_isomorphism(pi2(m.dom), pi2(m.cod)) is not None

    def test_trivial_fibration_implies_fibration(self, corpus):
        for name, xm in corpus:
            m = identity_morphism(xm)
            assert not is_trivial_fibration(m) or is_fibration(m)


class TestStrictTransformations:
    def test_identity_transformation(self, corpus):
        for name, xm in corpus:
            m = identity_morphism(xm)
            assert check_strict_transformation(
                m, m, xm.g1.identity, [xm.g2.identity] * xm.g1.order)

    def test_no_link_between_distinct_endos_of_bz2(self):
        xm = xmod_bg(cyclic(2))
        ident = identity_morphism(xm)
        zero = check_morphism(xm, xm,
                              make_hom(xm.g2, xm.g2, [0]),
                              make_hom(xm.g1, xm.g1, [0, 0]))
        assert enumerate_strict_transformations(ident, zero) == []
        assert enumerate_strict_transformations(zero, ident) == []

    def test_self_transformations_of_identity(self):
        xm = xmod_identity(cyclic(2))
        m = identity_morphism(xm)
        found = enumerate_strict_transformations(m, m)
        assert len(found) >= 1
        assert (0, (0, 0)) in found

    def test_crossed_hom_law_failure_detected(self):
        xm = xmod_identity(cyclic(2))
        m = identity_morphism(xm)
        # theta(0) must be the identity of G2
        assert not check_strict_transformation(m, m, 0, [1, 0])


class TestCofibrantReplacement:
    def test_z2_one_generator(self):
        xm = xmod_bg(cyclic(2))
        pres = cofibrant_replacement(xm, [1])
        a = generator(0)
        assert pres.eval_word(a) == 1
        assert pres.eval_word(a * a) == 0
        assert pres.eval_word(a * a * a) == 1

    def test_point(self):
        pres = cofibrant_replacement(xmod_bg(trivial_group()), [])
        assert pres.gen_images == ()
        assert pres.lifts == (free_reduce([]),)

    def test_constraint_arithmetic(self):
        xm = xmod_identity(cyclic(2))
        pres = cofibrant_replacement(xm, [1])
        a3 = generator(0) * generator(0) * generator(0)
        with pytest.raises(Violation):
            pres.make_pair(a3, 0)    # eval(a^3) = 1 but phi(0) = 0
        pres.make_pair(a3, 1)        # phi(1) = 1 matches

    def test_not_generating(self):
        with pytest.raises(NotGenerating):
            cofibrant_replacement(xmod_bg(cyclic(4)), [2])

    def test_lifts_are_sections(self, corpus):
        for name, xm in corpus:
            gens = [g for g in range(xm.g1.order) if g != xm.g1.identity]
            pres = cofibrant_replacement(xm, gens)
            for a in range(xm.g1.order):
                assert pres.eval_word(pres.lifts[a]) == a

    def test_pair_multiplication_associative_sampled(self):
        xm = z4_to_z2()
        pres = cofibrant_replacement(xm, [1])
        rng = random.Random(7)

        def random_pair():
            w = free_reduce([(0, rng.choice((1, -1)))
                             for _ in range(rng.randrange(0, 6))])
            target = pres.target.phi.image
            gammas = [g for g in range(xm.g2.order)
                      if target[g] == pres.eval_word(w)]
            return pres.make_pair(w, rng.choice(gammas))

        for _ in range(120):
            p, q, r = random_pair(), random_pair(), random_pair()
            assert pres.pair_mul(pres.pair_mul(p, q), r) == \
                pres.pair_mul(p, pres.pair_mul(q, r))

    def test_action_and_boundary_compatibility_sampled(self):
        # CM-style identities on representatives of the free resolution
        xm = z4_to_z2()
        pres = cofibrant_replacement(xm, [1])
        rng = random.Random(11)
        words = [free_reduce([(0, rng.choice((1, -1)))
                              for _ in range(rng.randrange(0, 5))])
                 for _ in range(8)]
        pairs = []
        for w in words:
            for g in range(xm.g2.order):
                if xm.phi.image[g] == pres.eval_word(w):
                    pairs.append((w, g))
        for p, v in itertools.product(pairs[:6], words):
            acted = pres.pair_act(p, v)
            # boundary of the acted pair is the conjugated boundary
            assert acted[0] == v.inverse() * p[0] * v
            # the acted pair still satisfies the fiber constraint
            pres.make_pair(*acted)
