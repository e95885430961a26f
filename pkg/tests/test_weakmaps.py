from math import gcd

import pytest

from twotypes.fingroup import cyclic
from twotypes.simpset import SizeCapExceeded
from twotypes.twogpd import (
    enumerate_2functors, hom_strict, hom_weak_trans, pi0, xmod_to_2group,
)
from twotypes.weakmaps import (
    as_weak, build_weak_2groupoid, check_w5_equivalence,
    check_weak_2groupoid, check_xmod_weak_map, enumerate_modifications,
    enumerate_transformations, enumerate_weak_functors,
    enumerate_weak_transformations_wf, enumerate_xmod_weak_maps, hom_full,
    identity_weak_functor, pi0_hom_vs_homotopy_classes, to_strict,
    transformation_from_homotopy, transformation_to_homotopy, vseq,
    weak_functor_from_strict, weak_functor_from_xmod_weak_map,
    xmod_weak_map_from_weak_functor,
)
from twotypes.xmod import Violation, xmod_b2g, xmod_bg


def bg(n):
    return xmod_to_2group(xmod_bg(cyclic(n)))


def b2g(m):
    return xmod_to_2group(xmod_b2g(cyclic(m)))


class TestWeakGroupoids:
    def test_strict_roundtrip(self):
        g = bg(3)
        w = as_weak(g)
        back = to_strict(w)
        assert back.comp1 == g.comp1
        assert back.vcomp == g.vcomp
        assert back.hcomp2 == g.hcomp2
        assert back.basepoint == g.basepoint

    def test_strict_associators_are_identities(self):
        w = as_weak(b2g(2))
        for f in range(w.n1):
            for g in range(w.n1):
                for h in range(w.n1):
                    a = w.assoc[f][g][h]
                    assert a == w.id2[w.comp1[w.comp1[f][g]][h]]

    def test_audit_rejects_tampered_associator(self):
        w = as_weak(b2g(2))
        assoc = [[[w.assoc[f][g][h] for h in range(w.n1)]
                  for g in range(w.n1)] for f in range(w.n1)]
        # the other 2-cell on the same 1-cell breaks naturality
        assoc[0][0][0] = 1 - assoc[0][0][0]
        with pytest.raises(Violation):
            build_weak_2groupoid(
                w.n_objects, w.src1, w.tgt1, w.id1, w.comp1,
                w.src2, w.tgt2, w.id2, w.vcomp, w.hcomp2, assoc,
                basepoint=w.basepoint)

    def test_vseq_folds_vertical_composition(self):
        w = as_weak(b2g(3))
        e = w.id2[0]
        assert vseq(w, e, 1, e) == 1
        assert vseq(w, 1, 1, 1) == w.vcomp[w.vcomp[1][1]][1]

    def test_check_accepts_strict_audit(self):
        check_weak_2groupoid(as_weak(bg(2)))


class TestWeakFunctors:
    def test_identity_functor(self):
        for g in (bg(2), b2g(3)):
            F = identity_weak_functor(g)
            assert F.map1 == tuple(range(g.n1))

    def test_strict_functors_lift(self):
        g = bg(2)
        for F in enumerate_2functors(g, g):
            W = weak_functor_from_strict(F)
            assert W.map1 == F.map1

    def test_enumeration_counts(self):
        # weak functors B(Z/n) -> B^2(Z/m) number m^(n-1)
        assert len(enumerate_weak_functors(bg(2), b2g(2))) == 2
        assert len(enumerate_weak_functors(bg(2), b2g(3))) == 3
        assert len(enumerate_weak_functors(bg(3), b2g(2))) == 4
        assert len(enumerate_weak_functors(bg(3), b2g(3))) == 9

    def test_strict_enumeration_is_a_subset(self):
        d, c = bg(2), b2g(2)
        weak = {(W.obj_map, W.map1, W.map2, W.eps)
                for W in enumerate_weak_functors(d, c)}
        for F in enumerate_2functors(d, c):
            W = weak_functor_from_strict(F)
            assert (W.obj_map, W.map1, W.map2, W.eps) in weak

    def test_cap_raises(self):
        with pytest.raises(SizeCapExceeded):
            enumerate_weak_functors(bg(3), b2g(3), cap=3)


class TestXmodWeakMaps:
    def test_counts(self):
        for n, m, want in [(2, 2, 2), (2, 4, 4), (4, 2, 8), (4, 4, 64)]:
            maps = enumerate_xmod_weak_maps(xmod_bg(cyclic(n)),
                                            xmod_b2g(cyclic(m)))
            assert len(maps) == want

    def test_check_rejects_unnormalized_eps(self):
        H, G = xmod_bg(cyclic(2)), xmod_b2g(cyclic(2))
        P = enumerate_xmod_weak_maps(H, G)[0]
        eps = [list(r) for r in P.eps]
        eps[0][0] = 1
        with pytest.raises(Violation):
            check_xmod_weak_map(H, G, P.p1, P.p2, eps)

    def test_w5_equivalence(self):
        for n in (2, 3):
            assert check_w5_equivalence(xmod_bg(cyclic(n)),
                                        xmod_b2g(cyclic(n)))

    def test_dictionary_roundtrip(self):
        for n, m in [(2, 2), (3, 2), (2, 3)]:
            H, G = xmod_bg(cyclic(n)), xmod_b2g(cyclic(m))
            BH, BG = xmod_to_2group(H), xmod_to_2group(G)
            for P in enumerate_xmod_weak_maps(H, G):
                F = weak_functor_from_xmod_weak_map(P, BH, BG)
                back = xmod_weak_map_from_weak_functor(F, H, G)
                assert (back.p1, back.p2, back.eps) == (P.p1, P.p2, P.eps)


def _transformation_class_count(n, m):
    maps = enumerate_xmod_weak_maps(xmod_bg(cyclic(n)), xmod_b2g(cyclic(m)))
    k = len(maps)
    parent = list(range(k))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(k):
        for j in range(i + 1, k):
            if find(i) != find(j) and enumerate_transformations(
                    maps[i], maps[j], pointed_only=True):
                parent[find(i)] = find(j)
    return len({find(i) for i in range(k)})


class TestTransformations:
    def test_class_counts_are_gcds(self):
        for n, m in [(2, 2), (2, 3), (3, 3), (2, 4)]:
            assert _transformation_class_count(n, m) == gcd(n, m)

    def test_identity_transformation(self):
        H, G = xmod_bg(cyclic(3)), xmod_b2g(cyclic(3))
        for P in enumerate_xmod_weak_maps(H, G):
            trans = enumerate_transformations(P, P, pointed_only=True)
            assert any(T.a == G.g1.identity and
                       all(v == G.g2.identity for v in T.theta)
                       for T in trans)

    def test_identity_modification(self):
        H, G = xmod_bg(cyclic(2)), xmod_b2g(cyclic(2))
        P = enumerate_xmod_weak_maps(H, G)[0]
        T = enumerate_transformations(P, P, pointed_only=True)[0]
        mods = enumerate_modifications(T, T)
        assert any(M.mu == G.g2.identity for M in mods)


class TestHomotopyBridge:
    def test_transformation_homotopy_roundtrip(self):
        D, C = bg(2), b2g(2)
        funcs = enumerate_weak_functors(D, C, pointed=True)
        for P in funcs:
            for Q in funcs:
                for (t, theta) in enumerate_weak_transformations_wf(
                        P, Q, pointed=True):
                    h = transformation_to_homotopy(P, Q, t, theta)
                    assert transformation_from_homotopy(h, P, Q) == (t, theta)

    def test_pi0_agreement(self):
        assert pi0_hom_vs_homotopy_classes(bg(2), b2g(2))
        assert pi0_hom_vs_homotopy_classes(bg(3), b2g(3))


class TestHomTower:
    def test_strict_weak_full_nesting(self):
        d, c = bg(2), b2g(2)
        hs = hom_strict(d, c)
        hw = hom_weak_trans(d, c)
        hf = hom_full(d, c)
        assert hs.n_objects <= hw.n_objects <= hf.n_objects
        assert hs.n_objects == 1
        assert hf.n_objects == 2
        assert len(pi0(hf)) == 2

    def test_hom_full_is_audited_groupoid(self):
        h = hom_full(bg(2), b2g(3))
        assert h.n_objects == 3
        assert len(pi0(h)) == 1
