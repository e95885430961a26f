"""Strict 2-groupoids as finite composition tables.

Conventions: 1-cell composition is diagrammatic, comp1[f][g] is "f then g"
and is defined when tgt1[f] == src1[g].  A -1 entry means "not composable".
Vertical composition of 2-cells follows the same order; horizontal
composition hcomp2[alpha][beta] pastes alpha (over f: A -> B) before beta
(over h: B -> C).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence

from .fingroup import FiniteGroup, make_action, make_group, make_hom
from .xmod import CrossedModule, Violation, check_crossed_module


class NotATwoGroup(ValueError):
    pass


class SizeCapExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class TwoGroupoid:
    n_objects: int
    src1: tuple[int, ...]
    tgt1: tuple[int, ...]
    id1: tuple[int, ...]            # per object
    comp1: tuple[tuple[int, ...], ...]
    inv1: tuple[int, ...]
    src2: tuple[int, ...]           # into 1-cells
    tgt2: tuple[int, ...]
    id2: tuple[int, ...]            # per 1-cell
    vcomp: tuple[tuple[int, ...], ...]
    hcomp2: tuple[tuple[int, ...], ...]
    vinv: tuple[int, ...]
    basepoint: Optional[int] = None

    @property
    def n1(self) -> int:
        return len(self.src1)

    @property
    def n2(self) -> int:
        return len(self.src2)

    def whisker_left(self, f: int, beta: int) -> int:
        """f * beta for a 1-cell f composing into the source of beta's cells."""
        return self.hcomp2[self.id2[f]][beta]

    def whisker_right(self, alpha: int, h: int) -> int:
        return self.hcomp2[alpha][self.id2[h]]

    def __repr__(self) -> str:
        return (f"TwoGroupoid(objects={self.n_objects}, "
                f"one_cells={self.n1}, two_cells={self.n2})")


def _derive_inverses(n, src, tgt, ident_of, comp, ident_at_src, ident_at_tgt):
    inv = [-1] * n
    for f in range(n):
        for g in range(n):
            if comp[f][g] == ident_at_src(f) and comp[g][f] == ident_at_tgt(f):
                inv[f] = g
                break
        if inv[f] < 0:
            raise Violation("invertibility", f)
    return tuple(inv)


def build_two_groupoid(n_objects, src1, tgt1, id1, comp1,
                       src2, tgt2, id2, vcomp, hcomp2,
                       basepoint=None) -> TwoGroupoid:
    """Derive inverse tables and run the full axiom audit."""
    src1, tgt1, id1 = tuple(src1), tuple(tgt1), tuple(id1)
    comp1 = tuple(tuple(r) for r in comp1)
    src2, tgt2, id2 = tuple(src2), tuple(tgt2), tuple(id2)
    vcomp = tuple(tuple(r) for r in vcomp)
    hcomp2 = tuple(tuple(r) for r in hcomp2)
    inv1 = _derive_inverses(
        len(src1), src1, tgt1, id1, comp1,
        lambda f: id1[src1[f]], lambda f: id1[tgt1[f]])
    vinv = _derive_inverses(
        len(src2), src2, tgt2, id2, vcomp,
        lambda a: id2[src2[a]], lambda a: id2[tgt2[a]])
    g = TwoGroupoid(n_objects=n_objects, src1=src1, tgt1=tgt1, id1=id1,
                    comp1=comp1, inv1=inv1, src2=src2, tgt2=tgt2, id2=id2,
                    vcomp=vcomp, hcomp2=hcomp2, vinv=vinv, basepoint=basepoint)
    return check_two_groupoid(g)


def check_two_groupoid(g: TwoGroupoid) -> TwoGroupoid:
    """Exhaustive audit: strict category axioms at both levels, interchange,
    and invertibility of every cell."""
    # 1-cell level
    for a, f in enumerate(g.id1):
        if g.src1[f] != a or g.tgt1[f] != a:
            raise Violation("id1-endpoints", a)
    for f in range(g.n1):
        for h in range(g.n1):
            defined = g.comp1[f][h] >= 0
            if defined != (g.tgt1[f] == g.src1[h]):
                raise Violation("comp1-domain", (f, h))
            if defined:
                fh = g.comp1[f][h]
                if g.src1[fh] != g.src1[f] or g.tgt1[fh] != g.tgt1[h]:
                    raise Violation("comp1-endpoints", (f, h))
    for f in range(g.n1):
        if g.comp1[g.id1[g.src1[f]]][f] != f or g.comp1[f][g.id1[g.tgt1[f]]] != f:
            raise Violation("comp1-unit", f)
    for f in range(g.n1):
        for h in range(g.n1):
            if g.comp1[f][h] < 0:
                continue
            for k in range(g.n1):
                if g.comp1[h][k] < 0:
                    continue
                if g.comp1[g.comp1[f][h]][k] != g.comp1[f][g.comp1[h][k]]:
                    raise Violation("comp1-assoc", (f, h, k))
    for f in range(g.n1):
        i = g.inv1[f]
        if g.comp1[f][i] != g.id1[g.src1[f]] or g.comp1[i][f] != g.id1[g.tgt1[f]]:
            raise Violation("inv1", f)

    # 2-cell level, vertical
    for f, a in enumerate(g.id2):
        if g.src2[a] != f or g.tgt2[a] != f:
            raise Violation("id2-endpoints", f)
    for a in range(g.n2):
        if g.src1[g.src2[a]] != g.src1[g.tgt2[a]] or \
           g.tgt1[g.src2[a]] != g.tgt1[g.tgt2[a]]:
            raise Violation("2cell-not-parallel", a)
    for a in range(g.n2):
        for b in range(g.n2):
            defined = g.vcomp[a][b] >= 0
            if defined != (g.tgt2[a] == g.src2[b]):
                raise Violation("vcomp-domain", (a, b))
            if defined:
                ab = g.vcomp[a][b]
                if g.src2[ab] != g.src2[a] or g.tgt2[ab] != g.tgt2[b]:
                    raise Violation("vcomp-endpoints", (a, b))
    for a in range(g.n2):
        if g.vcomp[g.id2[g.src2[a]]][a] != a or g.vcomp[a][g.id2[g.tgt2[a]]] != a:
            raise Violation("vcomp-unit", a)
    for a in range(g.n2):
        for b in range(g.n2):
            if g.vcomp[a][b] < 0:
                continue
            for c in range(g.n2):
                if g.vcomp[b][c] < 0:
                    continue
                if g.vcomp[g.vcomp[a][b]][c] != g.vcomp[a][g.vcomp[b][c]]:
                    raise Violation("vcomp-assoc", (a, b, c))
    for a in range(g.n2):
        i = g.vinv[a]
        if g.vcomp[a][i] != g.id2[g.src2[a]] or g.vcomp[i][a] != g.id2[g.tgt2[a]]:
            raise Violation("vinv", a)

    # 2-cell level, horizontal
    for a in range(g.n2):
        for b in range(g.n2):
            defined = g.hcomp2[a][b] >= 0
            composable = g.tgt1[g.src2[a]] == g.src1[g.src2[b]]
            if defined != composable:
                raise Violation("hcomp-domain", (a, b))
            if defined:
                ab = g.hcomp2[a][b]
                if g.src2[ab] != g.comp1[g.src2[a]][g.src2[b]] or \
                   g.tgt2[ab] != g.comp1[g.tgt2[a]][g.tgt2[b]]:
                    raise Violation("hcomp-endpoints", (a, b))
    for a in range(g.n2):
        left = g.id2[g.id1[g.src1[g.src2[a]]]]
        right = g.id2[g.id1[g.tgt1[g.src2[a]]]]
        if g.hcomp2[left][a] != a or g.hcomp2[a][right] != a:
            raise Violation("hcomp-unit", a)
    for a in range(g.n2):
        for b in range(g.n2):
            if g.hcomp2[a][b] < 0:
                continue
            for c in range(g.n2):
                if g.hcomp2[b][c] < 0:
                    continue
                if g.hcomp2[g.hcomp2[a][b]][c] != g.hcomp2[a][g.hcomp2[b][c]]:
                    raise Violation("hcomp-assoc", (a, b, c))
    # identity 2-cells are functorial horizontally
    for f in range(g.n1):
        for h in range(g.n1):
            if g.comp1[f][h] >= 0:
                if g.hcomp2[g.id2[f]][g.id2[h]] != g.id2[g.comp1[f][h]]:
                    raise Violation("hcomp-of-identities", (f, h))

    # interchange on all composable quadruples
    for a in range(g.n2):
        for b in range(g.n2):
            if g.vcomp[a][b] < 0:
                continue
            for c in range(g.n2):
                if g.hcomp2[a][c] < 0:
                    continue
                for d in range(g.n2):
                    if g.vcomp[c][d] < 0:
                        continue
                    lhs = g.hcomp2[g.vcomp[a][b]][g.vcomp[c][d]]
                    rhs = g.vcomp[g.hcomp2[a][c]][g.hcomp2[b][d]]
                    if lhs != rhs:
                        raise Violation("interchange", (a, b, c, d))
    return g


def point_2gpd() -> TwoGroupoid:
    return build_two_groupoid(1, [0], [0], [0], [[0]],
                              [0], [0], [0], [[0]], [[0]], basepoint=0)


def disjoint_union(g: TwoGroupoid, h: TwoGroupoid) -> TwoGroupoid:
    no, n1, n2 = g.n_objects, g.n1, g.n2
    comp1 = [[-1] * (n1 + h.n1) for _ in range(n1 + h.n1)]
    vcomp = [[-1] * (n2 + h.n2) for _ in range(n2 + h.n2)]
    hcomp = [[-1] * (n2 + h.n2) for _ in range(n2 + h.n2)]
    for f in range(n1):
        for k in range(n1):
            comp1[f][k] = g.comp1[f][k]
    for f in range(h.n1):
        for k in range(h.n1):
            v = h.comp1[f][k]
            comp1[n1 + f][n1 + k] = -1 if v < 0 else n1 + v
    for a in range(n2):
        for b in range(n2):
            vcomp[a][b] = g.vcomp[a][b]
            hcomp[a][b] = g.hcomp2[a][b]
    for a in range(h.n2):
        for b in range(h.n2):
            v, w = h.vcomp[a][b], h.hcomp2[a][b]
            vcomp[n2 + a][n2 + b] = -1 if v < 0 else n2 + v
            hcomp[n2 + a][n2 + b] = -1 if w < 0 else n2 + w
    return build_two_groupoid(
        no + h.n_objects,
        g.src1 + tuple(no + x for x in h.src1),
        g.tgt1 + tuple(no + x for x in h.tgt1),
        g.id1 + tuple(n1 + f for f in h.id1),
        comp1,
        g.src2 + tuple(n1 + f for f in h.src2),
        g.tgt2 + tuple(n1 + f for f in h.tgt2),
        g.id2 + tuple(n2 + a for a in h.id2),
        vcomp, hcomp,
        basepoint=g.basepoint)


def product_2gpd(g: TwoGroupoid, h: TwoGroupoid) -> TwoGroupoid:
    """Componentwise product; cell (x, y) has index x * |h| + y at each level."""
    def pair_tables(n_g, n_h, sg, sh):
        return tuple(sg[i] * n_h + sh[j]
                     for i in range(len(sg)) for j in range(len(sh)))

    def comp_table(tg, th, width_h):
        ng, nh = len(tg), len(th)
        out = []
        for i in range(ng):
            for j in range(nh):
                row = []
                for k in range(ng):
                    for m in range(nh):
                        a, b = tg[i][k], th[j][m]
                        row.append(-1 if a < 0 or b < 0 else a * width_h + b)
                out.append(row)
        return out

    src1 = pair_tables(g.n_objects, h.n_objects, g.src1, h.src1)
    tgt1 = pair_tables(g.n_objects, h.n_objects, g.tgt1, h.tgt1)
    id1 = tuple(g.id1[a] * h.n1 + h.id1[b]
                for a in range(g.n_objects) for b in range(h.n_objects))
    src2 = pair_tables(g.n1, h.n1, g.src2, h.src2)
    tgt2 = pair_tables(g.n1, h.n1, g.tgt2, h.tgt2)
    id2 = tuple(g.id2[f] * h.n2 + h.id2[k]
                for f in range(g.n1) for k in range(h.n1))
    bp = None
    if g.basepoint is not None and h.basepoint is not None:
        bp = g.basepoint * h.n_objects + h.basepoint
    return build_two_groupoid(
        g.n_objects * h.n_objects, src1, tgt1, id1,
        comp_table(g.comp1, h.comp1, h.n1),
        src2, tgt2, id2,
        comp_table(g.vcomp, h.vcomp, h.n2),
        comp_table(g.hcomp2, h.hcomp2, h.n2),
        basepoint=bp)


# -- conversion to and from crossed modules ----------------------------------

def xmod_to_2group(xm: CrossedModule) -> TwoGroupoid:
    """One object; 1-cells the base group; 2-cells its semidirect product with
    the top group, the 2-cell g*|G2|+alpha running g => g phi(alpha)."""
    g1, g2, phi = xm.g1, xm.g2, xm.phi
    n1, n2loc = g1.order, g2.order
    n2 = n1 * n2loc

    def pack(f, alpha):
        return f * n2loc + alpha

    src2 = tuple(f for f in range(n1) for _ in range(n2loc))
    tgt2 = tuple(g1.mul[f][phi.image[alpha]]
                 for f in range(n1) for alpha in range(n2loc))
    id2 = tuple(pack(f, g2.identity) for f in range(n1))
    vcomp = [[-1] * n2 for _ in range(n2)]
    hcomp = [[0] * n2 for _ in range(n2)]
    for f in range(n1):
        for alpha in range(n2loc):
            a = pack(f, alpha)
            for beta in range(n2loc):
                # (f, alpha): f => f phi(alpha), then (f phi(alpha), beta)
                vcomp[a][pack(tgt2[a], beta)] = pack(f, g2.mul[alpha][beta])
            for h in range(n1):
                for beta in range(n2loc):
                    hcomp[a][pack(h, beta)] = pack(
                        g1.mul[f][h], g2.mul[xm.act(alpha, h)][beta])
    return build_two_groupoid(
        1, (0,) * n1, (0,) * n1, (g1.identity,), g1.mul,
        src2, tgt2, id2, vcomp, hcomp, basepoint=0)


def two_group_to_xmod(g: TwoGroupoid) -> CrossedModule:
    """Base group the 1-cells, top group the 2-cells out of the identity
    1-cell under horizontal composition, boundary the target map, action by
    horizontal conjugation with identity 2-cells."""
    if g.n_objects != 1:
        raise NotATwoGroup(f"expected one object, found {g.n_objects}")
    e1 = g.id1[0]
    g1 = make_group(g.comp1)
    if g1.identity != e1:
        raise NotATwoGroup("identity 1-cell is not the unit")
    tops = [a for a in range(g.n2) if g.src2[a] == e1]
    pos = {a: i for i, a in enumerate(tops)}
    g2 = make_group([[pos[g.hcomp2[a][b]] for b in tops] for a in tops])
    phi = make_hom(g2, g1, (g.tgt2[a] for a in tops))
    act = make_action(g1, g2, [
        [pos[g.hcomp2[g.hcomp2[g.id2[g.inv1[f]]][a]][g.id2[f]]]
         for f in range(g.n1)]
        for a in tops])
    return check_crossed_module(g2, g1, phi, act)


# -- homotopy invariants -----------------------------------------------------

def pi0(g: TwoGroupoid) -> list[list[int]]:
    """Connected components as sorted lists of object indices."""
    parent = list(range(g.n_objects))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for f in range(g.n1):
        a, b = find(g.src1[f]), find(g.tgt1[f])
        if a != b:
            parent[a] = b
    groups: dict[int, list[int]] = {}
    for x in range(g.n_objects):
        groups.setdefault(find(x), []).append(x)
    return sorted(groups.values())


def _loop_classes(g: TwoGroupoid, obj: int):
    """2-isomorphism classes of loops at obj, as (classes, class_of) where
    class_of maps a loop 1-cell to its class index."""
    loops = [f for f in range(g.n1) if g.src1[f] == obj and g.tgt1[f] == obj]
    parent = {f: f for f in loops}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a in range(g.n2):
        f, h = g.src2[a], g.tgt2[a]
        if f in parent:
            fa, fb = find(f), find(h)
            if fa != fb:
                parent[fa] = fb
    reps = sorted({find(f) for f in loops})
    class_of = {f: reps.index(find(f)) for f in loops}
    return reps, class_of


def pi1_at(g: TwoGroupoid, obj: int) -> FiniteGroup:
    reps, class_of = _loop_classes(g, obj)
    return make_group([[class_of[g.comp1[a][b]] for b in reps] for a in reps])


def pi2_at(g: TwoGroupoid, obj: int) -> FiniteGroup:
    e = g.id1[obj]
    cells = [a for a in range(g.n2) if g.src2[a] == e and g.tgt2[a] == e]
    pos = {a: i for i, a in enumerate(cells)}
    grp = make_group([[pos[g.vcomp[a][b]] for b in cells] for a in cells])
    assert grp.is_abelian()
    return grp


def fundamental_groupoid(g: TwoGroupoid) -> TwoGroupoid:
    """Collapse 2-cells: 1-cells become their 2-isomorphism classes."""
    parent = list(range(g.n1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a in range(g.n2):
        fa, fb = find(g.src2[a]), find(g.tgt2[a])
        if fa != fb:
            parent[fa] = fb
    reps = sorted({find(f) for f in range(g.n1)})
    cls = {f: reps.index(find(f)) for f in range(g.n1)}
    n1 = len(reps)
    comp1 = [[-1] * n1 for _ in range(n1)]
    for f in range(g.n1):
        for h in range(g.n1):
            if g.comp1[f][h] >= 0:
                comp1[cls[f]][cls[h]] = cls[g.comp1[f][h]]
    src1 = tuple(g.src1[r] for r in reps)
    tgt1 = tuple(g.tgt1[r] for r in reps)
    id1 = tuple(cls[g.id1[a]] for a in range(g.n_objects))
    ident2 = list(range(n1))
    vcomp = [[-1] * n1 for _ in range(n1)]
    hcomp = [[-1] * n1 for _ in range(n1)]
    for f in range(n1):
        vcomp[f][f] = f
        for h in range(n1):
            if comp1[f][h] >= 0:
                hcomp[f][h] = comp1[f][h]
    return build_two_groupoid(g.n_objects, src1, tgt1, id1, comp1,
                              tuple(range(n1)), tuple(range(n1)),
                              tuple(ident2), vcomp, hcomp,
                              basepoint=g.basepoint)


# -- functors ----------------------------------------------------------------

@dataclass(frozen=True)
class TwoFunctor:
    dom: TwoGroupoid
    cod: TwoGroupoid
    obj_map: tuple[int, ...]
    map1: tuple[int, ...]
    map2: tuple[int, ...]


def check_2functor(dom: TwoGroupoid, cod: TwoGroupoid,
                   obj_map, map1, map2, pointed: bool = False) -> TwoFunctor:
    obj_map, map1, map2 = tuple(obj_map), tuple(map1), tuple(map2)
    for f in range(dom.n1):
        if cod.src1[map1[f]] != obj_map[dom.src1[f]] or \
           cod.tgt1[map1[f]] != obj_map[dom.tgt1[f]]:
            raise Violation("functor-1cell-endpoints", f)
    for a in range(dom.n_objects):
        if map1[dom.id1[a]] != cod.id1[obj_map[a]]:
            raise Violation("functor-id1", a)
    for f in range(dom.n1):
        for h in range(dom.n1):
            if dom.comp1[f][h] >= 0 and \
               map1[dom.comp1[f][h]] != cod.comp1[map1[f]][map1[h]]:
                raise Violation("functor-comp1", (f, h))
    for a in range(dom.n2):
        if cod.src2[map2[a]] != map1[dom.src2[a]] or \
           cod.tgt2[map2[a]] != map1[dom.tgt2[a]]:
            raise Violation("functor-2cell-endpoints", a)
    for f in range(dom.n1):
        if map2[dom.id2[f]] != cod.id2[map1[f]]:
            raise Violation("functor-id2", f)
    for a in range(dom.n2):
        for b in range(dom.n2):
            if dom.vcomp[a][b] >= 0 and \
               map2[dom.vcomp[a][b]] != cod.vcomp[map2[a]][map2[b]]:
                raise Violation("functor-vcomp", (a, b))
            if dom.hcomp2[a][b] >= 0 and \
               map2[dom.hcomp2[a][b]] != cod.hcomp2[map2[a]][map2[b]]:
                raise Violation("functor-hcomp", (a, b))
    if pointed:
        if dom.basepoint is None or cod.basepoint is None:
            raise Violation("pointed-without-basepoint", None)
        if obj_map[dom.basepoint] != cod.basepoint:
            raise Violation("basepoint-not-preserved", dom.basepoint)
    return TwoFunctor(dom=dom, cod=cod, obj_map=obj_map, map1=map1, map2=map2)


def identity_functor(g: TwoGroupoid) -> TwoFunctor:
    return check_2functor(g, g, range(g.n_objects), range(g.n1), range(g.n2))


def compose_2functors(f: TwoFunctor, g: TwoFunctor) -> TwoFunctor:
    """g after f."""
    return check_2functor(f.dom, g.cod,
                          (g.obj_map[x] for x in f.obj_map),
                          (g.map1[x] for x in f.map1),
                          (g.map2[x] for x in f.map2))


def _search_level(n, candidates, forced, consistent):
    """Backtracking over cell assignments.

    candidates[i] lists allowed images of cell i; forced[i] overrides with a
    single value; consistent(assign, i) checks constraints touching i against
    already-assigned cells.  Yields complete assignment tuples.
    """
    order = sorted(range(n), key=lambda i: 0 if i in forced else len(candidates[i]))
    assign = [-1] * n

    def rec(k):
        if k == n:
            yield tuple(assign)
            return
        i = order[k]
        opts = [forced[i]] if i in forced else candidates[i]
        for v in opts:
            assign[i] = v
            if consistent(assign, i):
                yield from rec(k + 1)
        assign[i] = -1

    yield from rec(0)


def enumerate_2functors(dom: TwoGroupoid, cod: TwoGroupoid,
                        pointed: bool = False,
                        cap: int = 10 ** 6) -> list[TwoFunctor]:
    """All strict functors, by exhaustive backtracking in canonical order."""
    out = []
    obj_opts = [range(cod.n_objects)] * dom.n_objects
    if pointed:
        obj_opts = list(obj_opts)
        obj_opts[dom.basepoint] = [cod.basepoint]
    counter = [0]

    def tick():
        counter[0] += 1
        if counter[0] > cap:
            raise SizeCapExceeded(f"functor search exceeded {cap} candidates")

    by_src_tgt1: dict[tuple[int, int], list[int]] = {}
    for f in range(cod.n1):
        by_src_tgt1.setdefault((cod.src1[f], cod.tgt1[f]), []).append(f)
    by_src_tgt2: dict[tuple[int, int], list[int]] = {}
    for a in range(cod.n2):
        by_src_tgt2.setdefault((cod.src2[a], cod.tgt2[a]), []).append(a)

    for obj_map in itertools.product(*obj_opts):
        cand1 = [by_src_tgt1.get((obj_map[dom.src1[f]], obj_map[dom.tgt1[f]]), [])
                 for f in range(dom.n1)]
        forced1 = {dom.id1[a]: cod.id1[obj_map[a]] for a in range(dom.n_objects)}

        def consistent1(assign, i):
            tick()
            for j in range(dom.n1):
                if assign[j] < 0:
                    continue
                for f, h in ((i, j), (j, i)):
                    c = dom.comp1[f][h]
                    if c >= 0 and assign[c] >= 0 and \
                       assign[c] != cod.comp1[assign[f]][assign[h]]:
                        return False
            return True

        for map1 in _search_level(dom.n1, cand1, forced1, consistent1):
            cand2 = [by_src_tgt2.get((map1[dom.src2[a]], map1[dom.tgt2[a]]), [])
                     for a in range(dom.n2)]
            forced2 = {dom.id2[f]: cod.id2[map1[f]] for f in range(dom.n1)}

            def consistent2(assign, i):
                tick()
                for j in range(dom.n2):
                    if assign[j] < 0:
                        continue
                    for a, b in ((i, j), (j, i)):
                        for dtab, ctab in ((dom.vcomp, cod.vcomp),
                                           (dom.hcomp2, cod.hcomp2)):
                            c = dtab[a][b]
                            if c >= 0 and assign[c] >= 0 and \
                               assign[c] != ctab[assign[a]][assign[b]]:
                                return False
                return True

            for map2 in _search_level(dom.n2, cand2, forced2, consistent2):
                out.append(check_2functor(dom, cod, obj_map, map1, map2,
                                          pointed=pointed))
    return out


def is_fibration_2gpd(F: TwoFunctor) -> bool:
    """Arrow lifting along the target object and 2-cell lifting along the
    target 1-cell, both checked exhaustively."""
    dom, cod = F.dom, F.cod
    for a in range(cod.n1):
        a1 = cod.tgt1[a]
        for b1 in range(dom.n_objects):
            if F.obj_map[b1] != a1:
                continue
            if not any(F.map1[b] == a and dom.tgt1[b] == b1
                       for b in range(dom.n1)):
                return False
    for alpha in range(cod.n2):
        a1 = cod.tgt2[alpha]
        for b1 in range(dom.n1):
            if F.map1[b1] != a1:
                continue
            if not any(F.map2[beta] == alpha and dom.tgt2[beta] == b1
                       for beta in range(dom.n2)):
                return False
    return True


def is_equivalence_2functor(F: TwoFunctor) -> bool:
    """Bijective on connected components and on every pi1, pi2."""
    dom, cod = F.dom, F.cod
    dom_comps = pi0(dom)
    cod_comps = pi0(cod)
    cod_comp_of = {}
    for i, comp in enumerate(cod_comps):
        for x in comp:
            cod_comp_of[x] = i
    hit = {cod_comp_of[F.obj_map[comp[0]]] for comp in dom_comps}
    if len(hit) != len(dom_comps) or len(hit) != len(cod_comps):
        return False
    for comp in dom_comps:
        obj = comp[0]
        img = F.obj_map[obj]
        # induced map on loop classes
        reps, class_of = _loop_classes(dom, obj)
        creps, cclass_of = _loop_classes(cod, img)
        seen = {cclass_of[F.map1[r]] for r in reps}
        if len(seen) != len(reps) or len(seen) != len(creps):
            return False
        if pi2_at(dom, obj).order != pi2_at(cod, img).order:
            return False
        e, ce = dom.id1[obj], cod.id1[img]
        cells = [a for a in range(dom.n2)
                 if dom.src2[a] == e and dom.tgt2[a] == e]
        imgs = {F.map2[a] for a in cells}
        if len(imgs) != len(cells):
            return False
    return True


# -- hom 2-groupoids ---------------------------------------------------------

def _pillow_holds(P: TwoFunctor, Q: TwoFunctor, t: Sequence[int]) -> bool:
    dom, cod = P.dom, P.cod
    for c in range(dom.n1):
        A, B = dom.src1[c], dom.tgt1[c]
        if cod.comp1[P.map1[c]][t[B]] != cod.comp1[t[A]][Q.map1[c]]:
            return False
    for gamma in range(dom.n2):
        A = dom.src1[dom.src2[gamma]]
        B = dom.tgt1[dom.src2[gamma]]
        if cod.whisker_right(P.map2[gamma], t[B]) != \
           cod.whisker_left(t[A], Q.map2[gamma]):
            return False
    return True


def enumerate_strict_2transformations(P: TwoFunctor, Q: TwoFunctor):
    """Strict transformations P => Q: 1-cell families making every naturality
    square commute on the nose."""
    dom, cod = P.dom, P.cod
    opts = []
    for A in range(dom.n_objects):
        opts.append([f for f in range(cod.n1)
                     if cod.src1[f] == P.obj_map[A] and cod.tgt1[f] == Q.obj_map[A]])
    out = []
    for t in itertools.product(*opts):
        if _pillow_holds(P, Q, t):
            out.append(t)
    return out


def enumerate_weak_2transformations(P: TwoFunctor, Q: TwoFunctor):
    """Weak transformations P => Q: pairs (t, theta) where theta_c fills the
    naturality square of each 1-cell c, identity cells get identity fillers,
    fillers are natural in 2-cells, and fillers compose along composition."""
    dom, cod = P.dom, P.cod
    t_opts = []
    for A in range(dom.n_objects):
        t_opts.append([f for f in range(cod.n1)
                       if cod.src1[f] == P.obj_map[A] and cod.tgt1[f] == Q.obj_map[A]])
    out = []
    for t in itertools.product(*t_opts):
        theta_opts = []
        ok = True
        for c in range(dom.n1):
            A, B = dom.src1[c], dom.tgt1[c]
            lhs = cod.comp1[P.map1[c]][t[B]]
            rhs = cod.comp1[t[A]][Q.map1[c]]
            if c in dom.id1:
                opts = [cod.id2[lhs]] if lhs == rhs else []
            else:
                opts = [a for a in range(cod.n2)
                        if cod.src2[a] == lhs and cod.tgt2[a] == rhs]
            if not opts:
                ok = False
                break
            theta_opts.append(opts)
        if not ok:
            continue
        for theta in itertools.product(*theta_opts):
            if _weak_trans_ok(P, Q, t, theta):
                out.append((t, theta))
    return out


def _weak_trans_ok(P: TwoFunctor, Q: TwoFunctor, t, theta) -> bool:
    dom, cod = P.dom, P.cod
    # naturality: [P(gamma) t][theta_{c'}] = [theta_c][t Q(gamma)]
    for gamma in range(dom.n2):
        c, cp = dom.src2[gamma], dom.tgt2[gamma]
        A, B = dom.src1[c], dom.tgt1[c]
        lhs = cod.vcomp[cod.whisker_right(P.map2[gamma], t[B])][theta[cp]]
        rhs = cod.vcomp[theta[c]][cod.whisker_left(t[A], Q.map2[gamma])]
        if lhs != rhs:
            return False
    # composition coherence: theta_{ab} = [P(a) theta_b][theta_a Q(b)]
    for a in range(dom.n1):
        for b in range(dom.n1):
            ab = dom.comp1[a][b]
            if ab < 0:
                continue
            paste = cod.vcomp[cod.whisker_left(P.map1[a], theta[b])][
                cod.whisker_right(theta[a], Q.map1[b])]
            if theta[ab] != paste:
                return False
    return True


def _modification_ok(P: TwoFunctor, Q: TwoFunctor, t, theta, s, sigma, mu) -> bool:
    dom, cod = P.dom, P.cod
    for c in range(dom.n1):
        A, B = dom.src1[c], dom.tgt1[c]
        lhs = cod.vcomp[theta[c]][cod.whisker_right(mu[A], Q.map1[c])]
        rhs = cod.vcomp[cod.whisker_left(P.map1[c], mu[B])][sigma[c]]
        if lhs != rhs:
            return False
    return True


def enumerate_modifications(P: TwoFunctor, Q: TwoFunctor,
                            t, theta, s, sigma):
    """Modifications (t, theta) => (s, sigma): families mu_A: t_A => s_A
    compatible with the square fillers."""
    dom, cod = P.dom, P.cod
    opts = []
    for A in range(dom.n_objects):
        opts.append([a for a in range(cod.n2)
                     if cod.src2[a] == t[A] and cod.tgt2[a] == s[A]])
    return [mu for mu in itertools.product(*opts)
            if _modification_ok(P, Q, t, theta, s, sigma, mu)]


def _assemble_hom(D: TwoGroupoid, C: TwoGroupoid, functors, trans_lister,
                  weak: bool) -> TwoGroupoid:
    """Build the 2-groupoid of functors, transformations, modifications."""
    n_objects = len(functors)
    one_cells = []           # (dom functor idx, cod functor idx, t, theta)
    for i, P in enumerate(functors):
        for j, Q in enumerate(functors):
            for cell in trans_lister(P, Q):
                t, theta = cell if weak else (cell, None)
                one_cells.append((i, j, t, theta))
    cell_pos = {c: k for k, c in enumerate(one_cells)}
    n1 = len(one_cells)
    src1 = tuple(c[0] for c in one_cells)
    tgt1 = tuple(c[1] for c in one_cells)
    id1 = []
    for i, P in enumerate(functors):
        t = tuple(C.id1[P.obj_map[A]] for A in range(D.n_objects))
        theta = tuple(C.id2[P.map1[c]] for c in range(D.n1)) if weak else None
        id1.append(cell_pos[(i, i, t, theta)])
    comp1 = [[-1] * n1 for _ in range(n1)]
    for x, (i, j, t, theta) in enumerate(one_cells):
        for y, (j2, k, s, sigma) in enumerate(one_cells):
            if j2 != j:
                continue
            st = tuple(C.comp1[t[A]][s[A]] for A in range(D.n_objects))
            if weak:
                P, Q, R = functors[i], functors[j], functors[k]
                comp_theta = tuple(
                    C.vcomp[C.whisker_right(theta[c], s[D.tgt1[c]])][
                        C.whisker_left(t[D.src1[c]], sigma[c])]
                    for c in range(D.n1))
            else:
                comp_theta = None
            comp1[x][y] = cell_pos[(i, k, st, comp_theta)]
    # 2-cells: modifications
    two_cells = []
    for x, (i, j, t, theta) in enumerate(one_cells):
        for y, (i2, j2, s, sigma) in enumerate(one_cells):
            if i2 != i or j2 != j:
                continue
            P, Q = functors[i], functors[j]
            th = theta if weak else tuple(
                C.id2[C.comp1[P.map1[c]][t[D.tgt1[c]]]] for c in range(D.n1))
            sg = sigma if weak else tuple(
                C.id2[C.comp1[P.map1[c]][s[D.tgt1[c]]]] for c in range(D.n1))
            for mu in enumerate_modifications(P, Q, t, th, s, sg):
                two_cells.append((x, y, mu))
    mod_pos = {m: k for k, m in enumerate(two_cells)}
    n2 = len(two_cells)
    src2 = tuple(m[0] for m in two_cells)
    tgt2 = tuple(m[1] for m in two_cells)
    id2 = []
    for x, (i, j, t, theta) in enumerate(one_cells):
        mu = tuple(C.id2[t[A]] for A in range(D.n_objects))
        id2.append(mod_pos[(x, x, mu)])
    vcomp = [[-1] * n2 for _ in range(n2)]
    hcomp = [[-1] * n2 for _ in range(n2)]
    for p, (x, y, mu) in enumerate(two_cells):
        for q, (y2, z, nu) in enumerate(two_cells):
            if y2 == y:
                comp = tuple(C.vcomp[mu[A]][nu[A]] for A in range(D.n_objects))
                vcomp[p][q] = mod_pos[(x, z, comp)]
        for q, (u, v, nu) in enumerate(two_cells):
            if one_cells[u][0] == one_cells[x][1]:
                comp = tuple(C.hcomp2[mu[A]][nu[A]] for A in range(D.n_objects))
                hcomp[p][q] = mod_pos[(comp1[x][u], comp1[y][v], comp)]
    bp = None
    if D.basepoint is not None and C.basepoint is not None:
        pointed = [i for i, P in enumerate(functors)
                   if P.obj_map[D.basepoint] == C.basepoint]
        bp = pointed[0] if pointed else None
    gpd = build_two_groupoid(n_objects, src1, tgt1, tuple(id1), comp1,
                             src2, tgt2, tuple(id2), vcomp, hcomp,
                             basepoint=bp)
    return gpd, functors, one_cells, two_cells


def hom_strict_data(D: TwoGroupoid, C: TwoGroupoid, cap: int = 10 ** 6):
    """hom 2-groupoid plus the underlying functor/transformation/modification
    lists, indexed in cell order."""
    functors = enumerate_2functors(D, C, cap=cap)
    return _assemble_hom(D, C, functors, enumerate_strict_2transformations,
                         weak=False)


def hom_strict(D: TwoGroupoid, C: TwoGroupoid,
               cap: int = 10 ** 6) -> TwoGroupoid:
    """Functors, strict transformations, and modifications."""
    return hom_strict_data(D, C, cap=cap)[0]


def hom_weak_trans_data(D: TwoGroupoid, C: TwoGroupoid, cap: int = 10 ** 6):
    functors = enumerate_2functors(D, C, cap=cap)
    return _assemble_hom(D, C, functors, enumerate_weak_2transformations,
                         weak=True)


def hom_weak_trans(D: TwoGroupoid, C: TwoGroupoid,
                   cap: int = 10 ** 6) -> TwoGroupoid:
    """Functors, weak transformations, and modifications."""
    return hom_weak_trans_data(D, C, cap=cap)[0]


# -- exponential law ---------------------------------------------------------

def two_groupoid_isomorphic(g: TwoGroupoid, h: TwoGroupoid,
                            cap: int = 10 ** 6):
    """An invertible strict functor g -> h, or None."""
    if (g.n_objects, g.n1, g.n2) != (h.n_objects, h.n1, h.n2):
        return None
    for F in enumerate_2functors(g, h, cap=cap):
        if len(set(F.obj_map)) == g.n_objects and \
           len(set(F.map1)) == g.n1 and len(set(F.map2)) == g.n2:
            return F
    return None


def check_exponential_law(E: TwoGroupoid, D: TwoGroupoid, C: TwoGroupoid,
                          cap: int = 10 ** 6) -> bool:
    """Currying is an isomorphism hom(E x D, C) ~ hom(E, hom(D, C)).

    The currying map is built cell by cell: a functor on the product
    restricts, per object of E, to a functor D -> C, and the restrictions of
    its cells in the E direction give transformations and modifications
    between those restrictions.  The resulting assignment is checked to be a
    strict functor and bijective at every level.
    """
    ed = product_2gpd(E, D)
    lhs, lhs_fun, lhs_one, lhs_two = hom_strict_data(ed, C, cap=cap)
    hom_dc, dc_fun, dc_one, dc_two = hom_strict_data(D, C, cap=cap)
    rhs, rhs_fun, rhs_one, rhs_two = hom_strict_data(E, hom_dc, cap=cap)

    dc_fun_pos = {(F.obj_map, F.map1, F.map2): i for i, F in enumerate(dc_fun)}
    dc_one_pos = {c: i for i, c in enumerate(dc_one)}
    dc_two_pos = {m: i for i, m in enumerate(dc_two)}
    rhs_fun_pos = {(F.obj_map, F.map1, F.map2): i for i, F in enumerate(rhs_fun)}
    rhs_one_pos = {c: i for i, c in enumerate(rhs_one)}
    rhs_two_pos = {m: i for i, m in enumerate(rhs_two)}

    def restrict(F: TwoFunctor, e: int) -> int:
        """Index in dc_fun of the restriction F(e, -)."""
        obj_map = tuple(F.obj_map[e * D.n_objects + A]
                        for A in range(D.n_objects))
        map1 = tuple(F.map1[E.id1[e] * D.n1 + f] for f in range(D.n1))
        map2 = tuple(F.map2[E.id2[E.id1[e]] * D.n2 + a] for a in range(D.n2))
        return dc_fun_pos[(obj_map, map1, map2)]

    def curry_obj(i: int) -> int:
        F = lhs_fun[i]
        obj_map = tuple(restrict(F, e) for e in range(E.n_objects))
        map1 = []
        for a in range(E.n1):
            e0, e1 = E.src1[a], E.tgt1[a]
            t = tuple(F.map1[a * D.n1 + D.id1[A]] for A in range(D.n_objects))
            map1.append(dc_one_pos[(obj_map[e0], obj_map[e1], t, None)])
        map2 = []
        for alpha in range(E.n2):
            x = map1[E.src2[alpha]]
            y = map1[E.tgt2[alpha]]
            mu = tuple(F.map2[alpha * D.n2 + D.id2[D.id1[A]]]
                       for A in range(D.n_objects))
            map2.append(dc_two_pos[(x, y, mu)])
        return rhs_fun_pos[(obj_map, tuple(map1), tuple(map2))]

    try:
        obj_map = [curry_obj(i) for i in range(len(lhs_fun))]
        map1 = []
        one_families = []
        for (i, j, t, _theta) in lhs_one:
            family = []
            for e in range(E.n_objects):
                te = tuple(t[e * D.n_objects + A] for A in range(D.n_objects))
                family.append(dc_one_pos[
                    (restrict(lhs_fun[i], e), restrict(lhs_fun[j], e), te, None)])
            one_families.append(tuple(family))
            map1.append(rhs_one_pos[(obj_map[i], obj_map[j], tuple(family), None)])
        map2 = []
        for (x, y, mu) in lhs_two:
            family = []
            for e in range(E.n_objects):
                mue = tuple(mu[e * D.n_objects + A] for A in range(D.n_objects))
                family.append(dc_two_pos[
                    (one_families[x][e], one_families[y][e], mue)])
            map2.append(rhs_two_pos[(map1[x], map1[y], tuple(family))])
        iso = check_2functor(lhs, rhs, obj_map, map1, map2)
    except (KeyError, Violation):
        return False
    return (len(set(iso.obj_map)) == lhs.n_objects == rhs.n_objects
            and len(set(iso.map1)) == lhs.n1 == rhs.n1
            and len(set(iso.map2)) == lhs.n2 == rhs.n2)
