"""Rebuild a weak 2-groupoid from a simplicial set that is Kan,
3-coskeletal, and 2-minimal.

Objects and 1-cells are the 0- and 1-simplices.  A 2-cell f => g is a
2-simplex with d2 = f, d1 = g, and a degenerate identity at d0.  Every
composite is produced by filling inner 3-horns, which 2-minimality makes
unique; a chosen family of filler 2-simplices I_{f,g} fixes the composition
law, and different choices differ by associators.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from .simpset import (
    SimplicialMap, TruncatedSimplicialSet, check_simplicial_map,
)
from .weakmaps import (
    WeakFunctor, WeakTwoGroupoid, build_weak_2groupoid, check_weak_functor,
)
from .xmod import Violation


class FillingFailure(ValueError):
    def __init__(self, reason: str, witness=None):
        self.reason = reason
        self.witness = witness
        super().__init__(f"{reason}: {witness!r}")


@dataclass(frozen=True)
class FillerChoice:
    strategy: str
    pairs: dict  # (f, g) composable edge pair -> 2-simplex index


def _identity_edges(x: TruncatedSimplicialSet) -> tuple[int, ...]:
    return tuple(x.degens[0][a][0] for a in range(x.counts[0]))


def choose_fillers(x: TruncatedSimplicialSet,
                   strategy: str = "first") -> FillerChoice:
    """One 2-simplex I_{f,g} per composable edge pair, with d2 = f and
    d0 = g.  Pairs with an identity edge get the forced degenerate filler;
    the rest follow the strategy: "first" (least index) or "seeded:<n>"
    (uniform choice from a seeded generator, pairs in sorted order)."""
    rng = None
    if strategy.startswith("seeded:"):
        rng = random.Random(int(strategy.split(":", 1)[1]))
    elif strategy != "first":
        raise ValueError(f"unknown strategy {strategy!r}")
    ids = set(_identity_edges(x))
    by_pair: dict[tuple[int, int], list[int]] = {}
    for z in range(x.counts[2]):
        d0, d1, d2 = x.faces[2][z]
        by_pair.setdefault((d2, d0), []).append(z)
    pairs = {}
    for f in range(x.counts[1]):
        for g in range(x.counts[1]):
            if x.faces[1][f][0] != x.faces[1][g][1]:  # tgt f != src g
                continue
            if g in ids:
                pairs[(f, g)] = x.degens[1][f][1]
            elif f in ids:
                pairs[(f, g)] = x.degens[1][g][0]
            else:
                cands = by_pair.get((f, g), [])
                if not cands:
                    raise FillingFailure("no-2-simplex-over-pair", (f, g))
                pairs[(f, g)] = cands[0] if rng is None else rng.choice(
                    sorted(cands))
    return FillerChoice(strategy=strategy, pairs=pairs)


def _unique_horn_tables(x: TruncatedSimplicialSet):
    """For each k, the map (faces except d_k) -> 3-simplex; uniqueness is
    the inner-filler lemma granted by 2-minimality."""
    tables = []
    for k in range(4):
        t: dict[tuple, int] = {}
        for z in range(x.counts[3]):
            q = x.faces[3][z]
            key = q[:k] + q[k + 1:]
            if key in t and t[key] != z:
                raise FillingFailure("non-unique-horn-filler", (k, key))
            t[key] = z
        tables.append(t)
    return tables


def reconstruct(x: TruncatedSimplicialSet,
                fillers: Optional[FillerChoice] = None) -> WeakTwoGroupoid:
    """Weak 2-groupoid on the cells of x determined by the filler choice.
    The output is fully audited, including the pentagon (A1) sweep."""
    if fillers is None:
        fillers = choose_fillers(x)
    tables = _unique_horn_tables(x)
    ids = _identity_edges(x)
    id_set = set(ids)

    def fill1(d0, d2, d3):
        z = tables[1].get((d0, d2, d3))
        if z is None:
            raise FillingFailure("missing-horn-1", (d0, d2, d3))
        return z

    def fill2(d0, d1, d3):
        z = tables[2].get((d0, d1, d3))
        if z is None:
            raise FillingFailure("missing-horn-2", (d0, d1, d3))
        return z

    n_obj = x.counts[0]
    n1 = x.counts[1]
    src1 = tuple(x.faces[1][f][1] for f in range(n1))
    tgt1 = tuple(x.faces[1][f][0] for f in range(n1))
    id1 = ids
    I = fillers.pairs
    comp1 = [[-1] * n1 for _ in range(n1)]
    for (f, g), u in I.items():
        comp1[f][g] = x.faces[2][u][1]

    # 2-cells: 2-simplices whose d0 is an identity edge
    cells = [u for u in range(x.counts[2]) if x.faces[2][u][0] in id_set]
    pos = {u: i for i, u in enumerate(cells)}
    n2 = len(cells)
    src2 = tuple(x.faces[2][u][2] for u in cells)
    tgt2 = tuple(x.faces[2][u][1] for u in cells)
    id2 = tuple(pos[x.degens[1][f][1]] for f in range(n1))

    def right(u):
        """The 2-cell comp1(d2 u, d0 u) => d1 u carried by a 2-simplex."""
        f, g = x.faces[2][u][2], x.faces[2][u][0]
        z = fill1(x.degens[1][g][1], u, I[(f, g)])
        return x.faces[3][z][1]

    vcomp = [[-1] * n2 for _ in range(n2)]
    for i, u in enumerate(cells):
        e = x.faces[2][u][0]           # identity edge at the target object
        for j, v in enumerate(cells):
            if tgt2[i] != src2[j]:
                continue
            z = fill2(x.degens[1][e][0], v, u)
            vcomp[i][j] = pos[x.faces[3][z][2]]

    def whisker_right_cell(c, h):
        """c: f => g composed with the edge h on the right."""
        g = tgt2[pos[c]]
        z = fill2(x.degens[1][h][0], I[(g, h)], c)
        return right(x.faces[3][z][2])

    def whisker_left_cell(f, c):
        g = src2[pos[c]]
        gp = tgt2[pos[c]]
        z = fill1(c, I[(f, gp)], I[(f, g)])
        return x.faces[3][z][1]

    hcomp2 = [[-1] * n2 for _ in range(n2)]
    for i, u in enumerate(cells):
        f, fp = src2[i], tgt2[i]
        for j, v in enumerate(cells):
            h, hp = src2[j], tgt2[j]
            if tgt1[f] != src1[h]:
                continue
            a = whisker_right_cell(u, h)
            b = whisker_left_cell(fp, v)
            hcomp2[i][j] = vcomp[pos[a]][pos[b]]

    assoc = [[[-1] * n1 for _ in range(n1)] for _ in range(n1)]
    for f in range(n1):
        for g in range(n1):
            if comp1[f][g] < 0:
                continue
            for h in range(n1):
                if comp1[g][h] < 0:
                    continue
                z = fill1(I[(g, h)], I[(f, comp1[g][h])], I[(f, g)])
                assoc[f][g][h] = pos[right(x.faces[3][z][1])]

    return build_weak_2groupoid(
        n_obj, src1, tgt1, id1, comp1,
        src2, tgt2, id2, vcomp, hcomp2, assoc,
        basepoint=x.basepoint)


def pentagon_via_4simplex(x: TruncatedSimplicialSet,
                          fillers: Optional[FillerChoice] = None) -> bool:
    """Independent pentagon verification: for every composable edge
    quadruple, assemble the ten triangles of the would-be 4-simplex, check
    that its five tetrahedra exist, and that they bound a 4-simplex."""
    if fillers is None:
        fillers = choose_fillers(x)
    g = reconstruct(x, fillers)
    tables = _unique_horn_tables(x)
    I = fillers.pairs
    ids = _identity_edges(x)
    id_set = set(ids)
    cells = [u for u in range(x.counts[2]) if x.faces[2][u][0] in id_set]
    pos = {u: i for i, u in enumerate(cells)}
    cell_of = {i: u for u, i in pos.items()}
    pos3 = {x.faces[3][z]: z for z in range(x.counts[3])}
    pos4 = {x.faces[4][z]: z for z in range(x.counts[4])}

    def fill2(d0, d1, d3):
        z = tables[2].get((d0, d1, d3))
        if z is None:
            raise FillingFailure("missing-horn-2", (d0, d1, d3))
        return z

    def untilt(f, gg, c):
        """2-simplex over the pair (f, gg) whose interior cell is c."""
        z = fill2(x.degens[1][gg][1], cell_of[c], I[(f, gg)])
        return x.faces[3][z][2]

    for a in range(g.n1):
        for b in range(g.n1):
            ab = g.comp1[a][b]
            if ab < 0:
                continue
            for c in range(g.n1):
                bc = g.comp1[b][c]
                if bc < 0:
                    continue
                for d in range(g.n1):
                    cd = g.comp1[c][d]
                    if cd < 0:
                        continue
                    bcd = g.comp1[b][cd]
                    a_bc = g.comp1[a][bc]
                    # ten triangles, indexed by their vertex triples
                    t012 = I[(a, b)]
                    t013 = I[(a, bc)]
                    t014 = I[(a, bcd)]
                    t123 = I[(b, c)]
                    t124 = I[(b, cd)]
                    t234 = I[(c, d)]
                    t023 = untilt(ab, c, g.assoc[a][b][c])
                    t024 = untilt(ab, cd, g.assoc[a][b][cd])
                    t034 = untilt(a_bc, d, g.vcomp[g.assoc[a][bc][d]][
                        g.whisker_left(a, g.assoc[b][c][d])])
                    t134 = untilt(bc, d, g.assoc[b][c][d])
                    tets = (
                        (t234, t134, t124, t123),   # d0: 1234
                        (t234, t034, t024, t023),   # d1: 0234
                        (t134, t034, t014, t013),   # d2: 0134
                        (t124, t024, t014, t012),   # d3: 0124
                        (t123, t023, t013, t012),   # d4: 0123
                    )
                    zs = []
                    for q in tets:
                        if q not in pos3:
                            return False
                        zs.append(pos3[q])
                    if tuple(zs) not in pos4:
                        return False
    return True


def reconstruct_functor(m: SimplicialMap, dom_fillers: FillerChoice,
                        cod_fillers: FillerChoice) -> WeakFunctor:
    """The weak functor between reconstructions induced by a simplicial map;
    its coherence cells compare images of chosen fillers with chosen fillers
    of images."""
    X, Y = m.dom, m.cod
    gd = reconstruct(X, dom_fillers)
    gc = reconstruct(Y, cod_fillers)
    idsY = set(_identity_edges(Y))
    cells_d = [u for u in range(X.counts[2])
               if X.faces[2][u][0] in set(_identity_edges(X))]
    cells_c = [u for u in range(Y.counts[2]) if Y.faces[2][u][0] in idsY]
    pos_c = {u: i for i, u in enumerate(cells_c)}
    tables_c = _unique_horn_tables(Y)

    def right_c(u):
        f, g = Y.faces[2][u][2], Y.faces[2][u][0]
        z = tables_c[1].get((Y.degens[1][g][1], u, cod_fillers.pairs[(f, g)]))
        if z is None:
            raise FillingFailure("missing-horn-1", u)
        return Y.faces[3][z][1]

    obj_map = m.levels[0]
    map1 = m.levels[1]
    map2 = [pos_c[m.levels[2][u]] for u in cells_d]
    eps = [[-1] * X.counts[1] for _ in range(X.counts[1])]
    for (f, g), u in dom_fillers.pairs.items():
        eps[f][g] = pos_c[right_c(m.levels[2][u])]
    return check_weak_functor(gd, gc, obj_map, map1, map2, eps)


@dataclass(frozen=True)
class RoundtripReport:
    simplicial: bool
    bijective: tuple[bool, ...]
    counts_match: bool

    @property
    def ok(self) -> bool:
        return self.simplicial and all(self.bijective) and self.counts_match


def roundtrip_report(x: TruncatedSimplicialSet,
                     fillers: Optional[FillerChoice] = None,
                     gpd: Optional[WeakTwoGroupoid] = None) -> RoundtripReport:
    """Compare x with the nerve of its reconstruction via the canonical
    cellwise map (identity on vertices and edges, tilt on 2-simplices)."""
    from .nerve import nerve, two_simplex_index

    if fillers is None:
        fillers = choose_fillers(x)
    if gpd is None:
        gpd = reconstruct(x, fillers)
    n = nerve(gpd)
    tables = _unique_horn_tables(x)
    ids = set(_identity_edges(x))
    cells = [u for u in range(x.counts[2]) if x.faces[2][u][0] in ids]
    pos = {u: i for i, u in enumerate(cells)}
    pos2n = two_simplex_index(gpd)

    def right(u):
        f, g = x.faces[2][u][2], x.faces[2][u][0]
        z = tables[1].get((x.degens[1][g][1], u, fillers.pairs[(f, g)]))
        if z is None:
            raise FillingFailure("missing-horn-1", u)
        return x.faces[3][z][1]

    lvl0 = list(range(x.counts[0]))
    lvl1 = list(range(x.counts[1]))
    lvl2 = [pos2n[(x.faces[2][u][2], x.faces[2][u][0], pos[right(u)])]
            for u in range(x.counts[2])]
    pos3n = {n.faces[3][z]: z for z in range(n.counts[3])}
    simplicial = True
    lvl3 = []
    for z in range(x.counts[3]):
        key = tuple(lvl2[v] for v in x.faces[3][z])
        if key not in pos3n:
            simplicial = False
            break
        lvl3.append(pos3n[key])
    levels = [lvl0, lvl1, lvl2, lvl3]
    if simplicial:
        try:
            check_simplicial_map(x, n, levels)
        except Violation:
            simplicial = False
    bij = tuple(sorted(levels[k]) == list(range(n.counts[k]))
                for k in range(4)) if simplicial else (False,) * 4
    counts_match = x.counts[:5] == n.counts[:5]
    return RoundtripReport(simplicial=simplicial, bijective=bij,
                           counts_match=counts_match)
