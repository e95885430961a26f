"""The nerve of a 2-groupoid as a 3-coskeletal truncated simplicial set.

Vertices are objects, edges are 1-cells with src = d1 and tgt = d0,
2-simplices are triples (f, g, alpha) with alpha: f g => h a 2-cell out of
the composite, and 3-simplices are boundary-compatible quadruples whose
interior 2-cell equation pins the d1 face.  Level 4 is rebuilt coskeletally.
Weak functors induce simplicial maps and conversely.
"""

from __future__ import annotations

from .fingroup import make_group, make_hom
from .simpset import (
    SimplicialMap, TruncatedSimplicialSet, check_simplicial_map, coskeleton,
    extend_to_level4, make_sset,
)
from .twogpd import TwoFunctor, TwoGroupoid, _loop_classes, pi0
from .weakmaps import (
    WeakFunctor, WeakTwoGroupoid, _coerce_weak, check_weak_functor,
    weak_functor_from_strict,
)
from .xmod import Violation

_NERVE_CACHE: dict[int, tuple[object, TruncatedSimplicialSet]] = {}


def two_simplices(g) -> list[tuple[int, int, int]]:
    """The 2-simplex triples (f, g, alpha) in nerve order: sorted by the
    pair of edges, identity filler first."""
    w = _coerce_weak(g)
    out2: dict[int, list[int]] = {}
    for a in range(w.n2):
        out2.setdefault(w.src2[a], []).append(a)
    tris = []
    for f in range(w.n1):
        for h in range(w.n1):
            fh = w.comp1[f][h]
            if fh < 0:
                continue
            for a in out2.get(fh, []):
                tris.append((f, h, a))
    tris.sort(key=lambda t: (t[0], t[1],
                             0 if t[2] == w.id2[w.comp1[t[0]][t[1]]] else 1,
                             t[2]))
    return tris


def two_simplex_index(g) -> dict[tuple[int, int, int], int]:
    return {t: i for i, t in enumerate(two_simplices(g))}


def nerve(g) -> TruncatedSimplicialSet:
    """3-coskeletal nerve, truncated at level 4, of a strict or weak
    2-groupoid."""
    cached = _NERVE_CACHE.get(id(g))
    if cached is not None and cached[0] is g:
        return cached[1]
    w = _coerce_weak(g)
    faces1 = [(w.tgt1[f], w.src1[f]) for f in range(w.n1)]
    degens0 = [(w.id1[a],) for a in range(w.n_objects)]
    tris = two_simplices(w)
    pos2 = {t: i for i, t in enumerate(tris)}
    faces2 = [(t[1], w.tgt2[t[2]], t[0]) for t in tris]
    degens1 = []
    for f in range(w.n1):
        s0 = pos2[(w.id1[w.src1[f]], f, w.id2[f])]
        s1 = pos2[(f, w.id1[w.tgt1[f]], w.id2[f])]
        degens1.append((s0, s1))

    out2: dict[int, list[int]] = {}
    for a in range(w.n2):
        out2.setdefault(w.src2[a], []).append(a)
    quads = []
    for f in range(w.n1):
        for h in range(w.n1):
            fh = w.comp1[f][h]
            if fh < 0:
                continue
            for m in range(w.n1):
                hm = w.comp1[h][m]
                if hm < 0:
                    continue
                for alpha in out2.get(fh, []):
                    top = w.tgt2[alpha]                      # f h => top
                    for gamma in out2.get(hm, []):
                        mid = w.tgt2[gamma]                  # h m => mid
                        for beta in out2.get(w.comp1[f][mid], []):
                            # interior: top m => tgt(beta), via the associator
                            delta = w.vcomp[w.vinv[
                                w.hcomp2[alpha][w.id2[m]]]][
                                w.vcomp[w.assoc[f][h][m]][
                                    w.vcomp[w.hcomp2[w.id2[f]][gamma]][beta]]]
                            quads.append((
                                pos2[(h, m, gamma)],
                                pos2[(w.tgt2[alpha], m, delta)],
                                pos2[(f, w.tgt2[gamma], beta)],
                                pos2[(f, h, alpha)]))
    quads.sort()
    pos3 = {q: i for i, q in enumerate(quads)}
    degens2 = []
    for x, t in enumerate(tris):
        d0x, d1x, d2x = faces2[x]
        s0 = pos3[(x, x, degens1[d1x][0], degens1[d2x][0])]
        s1 = pos3[(degens1[d0x][0], x, x, degens1[d2x][1])]
        s2 = pos3[(degens1[d0x][1], degens1[d1x][1], x, x)]
        degens2.append((s0, s1, s2))

    base = make_sset(
        3,
        [w.n_objects, w.n1, len(tris), len(quads)],
        [(), faces1, faces2, quads],
        [degens0, degens1, degens2],
        basepoint=w.basepoint)
    full = coskeleton(base, 3, trunc=4)
    _NERVE_CACHE[id(g)] = (g, full)
    return full


def nerve_of_weak_functor(F: WeakFunctor) -> SimplicialMap:
    """The induced map of nerves: a 2-simplex (f, g, alpha) goes to
    (F f, F g, [eps_{f,g}][F alpha]); level 3 follows by boundary lookup."""
    nd, nc = nerve(F.dom), nerve(F.cod)
    C = F.cod
    tris = two_simplices(F.dom)
    pos2c = two_simplex_index(F.cod)
    lvl0 = list(F.obj_map)
    lvl1 = list(F.map1)
    lvl2 = [pos2c[(F.map1[f], F.map1[h],
                   C.vcomp[F.eps[f][h]][F.map2[a]])]
            for (f, h, a) in tris]
    pos3c = {nc.faces[3][z]: z for z in range(nc.counts[3])}
    lvl3 = [pos3c[tuple(lvl2[v] for v in nd.faces[3][z])]
            for z in range(nd.counts[3])]
    return check_simplicial_map(nd, nc, [lvl0, lvl1, lvl2, lvl3])


def nerve_of_2functor(F: TwoFunctor) -> SimplicialMap:
    return nerve_of_weak_functor(weak_functor_from_strict(F))


def simplicial_map_to_weak_functor(m: SimplicialMap, dom_gpd,
                                   cod_gpd) -> WeakFunctor:
    """Read a weak functor off a simplicial map between nerves: the 2-cell
    map from prisms over identity edges and the coherence cells from the
    identity fillers of composable pairs."""
    w, c = _coerce_weak(dom_gpd), _coerce_weak(cod_gpd)
    pos2d = two_simplex_index(w)
    ctris = two_simplices(c)
    obj_map = m.levels[0]
    map1 = m.levels[1]
    map2 = []
    for a in range(w.n2):
        u = w.src2[a]
        tri = (u, w.id1[w.tgt1[u]], a)
        map2.append(ctris[m.levels[2][pos2d[tri]]][2])
    eps = [[-1] * w.n1 for _ in range(w.n1)]
    for f in range(w.n1):
        for h in range(w.n1):
            fh = w.comp1[f][h]
            if fh >= 0:
                tri = (f, h, w.id2[fh])
                eps[f][h] = ctris[m.levels[2][pos2d[tri]]][2]
    return check_weak_functor(w, c, obj_map, map1, map2, eps)


# -- homotopy invariants of a (weak) functor ----------------------------------

def induced_pi(F) -> tuple:
    """(pi0 component map, pi1 hom, pi2 hom) at the basepoints."""
    D, C = F.dom, F.cod
    comps_d, comps_c = pi0(D), pi0(C)
    comp_of_c = {}
    for i, comp in enumerate(comps_c):
        for a in comp:
            comp_of_c[a] = i
    pi0_map = tuple(comp_of_c[F.obj_map[comp[0]]] for comp in comps_d)

    bd, bc = D.basepoint, C.basepoint
    reps_d, cls_d = _loop_classes(D, bd)
    reps_c, cls_c = _loop_classes(C, bc)
    g1d = make_group([[cls_d[D.comp1[a][b]] for b in reps_d]
                      for a in reps_d])
    g1c = make_group([[cls_c[C.comp1[a][b]] for b in reps_c]
                      for a in reps_c])
    pi1_hom = make_hom(g1d, g1c, [cls_c[F.map1[r]] for r in reps_d])

    ed, ec = D.id1[bd], C.id1[bc]
    cells_d = [a for a in range(D.n2)
               if D.src2[a] == ed and D.tgt2[a] == ed]
    cells_c = [a for a in range(C.n2)
               if C.src2[a] == ec and C.tgt2[a] == ec]
    pos_d = {a: i for i, a in enumerate(cells_d)}
    pos_c = {a: i for i, a in enumerate(cells_c)}
    g2d = make_group([[pos_d[D.vcomp[a][b]] for b in cells_d]
                      for a in cells_d])
    g2c = make_group([[pos_c[C.vcomp[a][b]] for b in cells_c]
                      for a in cells_c])
    pi2_hom = make_hom(g2d, g2c, [pos_c[F.map2[a]] for a in cells_d])
    return pi0_map, pi1_hom, pi2_hom


# -- fiber products -----------------------------------------------------------

def fiber_product_2gpd(F: TwoFunctor, G: TwoFunctor):
    """Strict pullback of a cospan X -> Z <- Y, cellwise on pairs with equal
    images, with the two projection functors."""
    from .twogpd import build_two_groupoid, check_2functor
    X, Y = F.dom, G.dom
    objs = [(a, b) for a in range(X.n_objects) for b in range(Y.n_objects)
            if F.obj_map[a] == G.obj_map[b]]
    opos = {p: i for i, p in enumerate(objs)}
    ones = [(u, v) for u in range(X.n1) for v in range(Y.n1)
            if F.map1[u] == G.map1[v]]
    pos1 = {p: i for i, p in enumerate(ones)}
    twos = [(a, b) for a in range(X.n2) for b in range(Y.n2)
            if F.map2[a] == G.map2[b]]
    pos2 = {p: i for i, p in enumerate(twos)}

    src1 = [opos[(X.src1[u], Y.src1[v])] for (u, v) in ones]
    tgt1 = [opos[(X.tgt1[u], Y.tgt1[v])] for (u, v) in ones]
    id1 = [pos1[(X.id1[a], Y.id1[b])] for (a, b) in objs]
    comp1 = [[-1] * len(ones) for _ in ones]
    for i, (u, v) in enumerate(ones):
        for j, (u2, v2) in enumerate(ones):
            if X.comp1[u][u2] >= 0 and Y.comp1[v][v2] >= 0:
                comp1[i][j] = pos1[(X.comp1[u][u2], Y.comp1[v][v2])]
    src2 = [pos1[(X.src2[a], Y.src2[b])] for (a, b) in twos]
    tgt2 = [pos1[(X.tgt2[a], Y.tgt2[b])] for (a, b) in twos]
    id2 = [pos2[(X.id2[u], Y.id2[v])] for (u, v) in ones]
    vcomp = [[-1] * len(twos) for _ in twos]
    hcomp = [[-1] * len(twos) for _ in twos]
    for i, (a, b) in enumerate(twos):
        for j, (a2, b2) in enumerate(twos):
            if X.vcomp[a][a2] >= 0 and Y.vcomp[b][b2] >= 0:
                vcomp[i][j] = pos2[(X.vcomp[a][a2], Y.vcomp[b][b2])]
            if X.hcomp2[a][a2] >= 0 and Y.hcomp2[b][b2] >= 0:
                hcomp[i][j] = pos2[(X.hcomp2[a][a2], Y.hcomp2[b][b2])]
    bp = None
    if X.basepoint is not None and Y.basepoint is not None and \
       (X.basepoint, Y.basepoint) in opos:
        bp = opos[(X.basepoint, Y.basepoint)]
    P = build_two_groupoid(len(objs), src1, tgt1, id1, comp1,
                           src2, tgt2, id2, vcomp, hcomp, basepoint=bp)
    px = check_2functor(P, X, [p[0] for p in objs],
                        [p[0] for p in ones], [p[0] for p in twos])
    py = check_2functor(P, Y, [p[1] for p in objs],
                        [p[1] for p in ones], [p[1] for p in twos])
    return P, px, py


def sset_fiber_product(f: SimplicialMap, g: SimplicialMap):
    """Levelwise pullback of a cospan of simplicial maps (full depth 4),
    with the pair lists per level."""
    X, Y = f.dom, g.dom
    trunc = min(X.trunc, Y.trunc, len(f.levels) - 1, len(g.levels) - 1)
    pairs = []
    pos = []
    for n in range(trunc + 1):
        lvl = [(u, v) for u in range(X.counts[n]) for v in range(Y.counts[n])
               if f.levels[n][u] == g.levels[n][v]]
        pairs.append(lvl)
        pos.append({p: i for i, p in enumerate(lvl)})
    faces = [()]
    for n in range(1, trunc + 1):
        faces.append([tuple(pos[n - 1][(X.faces[n][u][i], Y.faces[n][v][i])]
                            for i in range(n + 1))
                      for (u, v) in pairs[n]])
    degens = []
    for n in range(trunc):
        degens.append([tuple(pos[n + 1][(X.degens[n][u][j], Y.degens[n][v][j])]
                             for j in range(n + 1))
                       for (u, v) in pairs[n]])
    bp = None
    if X.basepoint is not None and Y.basepoint is not None and \
       (X.basepoint, Y.basepoint) in pos[0]:
        bp = pos[0][(X.basepoint, Y.basepoint)]
    return make_sset(trunc, [len(l) for l in pairs], faces, degens,
                     basepoint=bp), pairs, pos


def nerve_preserves_fiber_products(F: TwoFunctor, G: TwoFunctor) -> bool:
    """The canonical map N(X x_Z Y) -> N(X) x_{N(Z)} N(Y) is an isomorphism
    of truncated simplicial sets."""
    P, px, py = fiber_product_2gpd(F, G)
    nf = extend_to_level4(nerve_of_2functor(F))
    ng = extend_to_level4(nerve_of_2functor(G))
    npx = extend_to_level4(nerve_of_2functor(px))
    npy = extend_to_level4(nerve_of_2functor(py))
    fib, pairs, pos = sset_fiber_product(nf, ng)
    NP = nerve(P)
    levels = []
    for n in range(5):
        lvl = []
        for z in range(NP.counts[n]):
            key = (npx.levels[n][z], npy.levels[n][z])
            if key not in pos[n]:
                return False
            lvl.append(pos[n][key])
        if sorted(lvl) != list(range(len(pairs[n]))):
            return False
        levels.append(lvl)
    try:
        check_simplicial_map(NP, fib, levels)
    except Violation:
        return False
    return True
