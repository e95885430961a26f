"""Finite groups as Cayley tables, homomorphisms, right actions, and free words.

Everything is index-based: a group of order n has elements 0..n-1 and a full
n x n multiplication table.  All validation is exhaustive; intended scale is
desk-size (orders up to a few hundred).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np


class NotAGroup(ValueError):
    """Raised when a table fails the group axioms; carries a witness."""

    def __init__(self, reason: str, witness=None):
        super().__init__(f"{reason} (witness: {witness})" if witness is not None else reason)
        self.reason = reason
        self.witness = witness


class NotAHom(ValueError):
    def __init__(self, witness):
        super().__init__(f"homomorphism law fails at {witness}")
        self.witness = witness


class NotAnAction(ValueError):
    def __init__(self, reason: str, witness):
        super().__init__(f"{reason} (witness: {witness})")
        self.reason = reason
        self.witness = witness


class ImageNotNormal(ValueError):
    def __init__(self, witness):
        super().__init__(f"image is not normal in the codomain (witness: {witness})")
        self.witness = witness


def _as_table(rows) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(int(v) for v in row) for row in rows)


@dataclass(frozen=True)
class FiniteGroup:
    """A finite group given by its full Cayley table.

    mul[a][b] is the product ab; identity and inv are derived at construction
    and re-checkable at any time via check_group_axioms.
    """

    order: int
    mul: tuple[tuple[int, ...], ...]
    identity: int
    inv: tuple[int, ...]

    def op(self, a: int, b: int) -> int:
        return self.mul[a][b]

    def inverse(self, a: int) -> int:
        return self.inv[a]

    def conj(self, g: int, a: int) -> int:
        """a^{-1} g a."""
        return self.mul[self.mul[self.inv[a]][g]][a]

    @property
    def elements(self) -> range:
        return range(self.order)

    def is_abelian(self) -> bool:
        m = np.asarray(self.mul)
        return bool(np.array_equal(m, m.T))

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != self.identity:
            x = self.mul[x][a]
            k += 1
        return k

    def __repr__(self) -> str:
        return f"FiniteGroup(order={self.order})"


def check_group_axioms(mul: Sequence[Sequence[int]]) -> tuple[int, tuple[int, ...]]:
    """Verify closure, associativity, identity and inverses for a square table.

    Returns (identity, inverse table) or raises NotAGroup with a witness.
    """
    n = len(mul)
    if n == 0:
        raise NotAGroup("empty table")
    m = np.asarray(mul, dtype=np.int64)
    if m.shape != (n, n):
        raise NotAGroup(f"table is not square: shape {m.shape}")
    if m.min() < 0 or m.max() >= n:
        bad = np.argwhere((m < 0) | (m >= n))[0]
        raise NotAGroup("entry out of range", (int(bad[0]), int(bad[1])))

    # associativity, vectorized: mul[mul[a,b],c] == mul[a,mul[b,c]]
    # chunk over a to bound memory for larger orders
    chunk = max(1, min(n, 2 ** 22 // (n * n + 1)))
    for a0 in range(0, n, chunk):
        sub = m[a0:a0 + chunk]
        left = m[sub]                                 # left[a,b,c] = mul[mul[a,b],c]
        right = np.take(m, m, axis=1)[a0:a0 + chunk]  # right[a,b,c] = mul[a, mul[b,c]]
        if not np.array_equal(left, right):
            bad = np.argwhere(left != right)[0]
            raise NotAGroup("associativity fails",
                            (int(bad[0]) + a0, int(bad[1]), int(bad[2])))

    # identity: a row AND column equal to range(n)
    idx = np.arange(n)
    e = None
    for cand in range(n):
        if np.array_equal(m[cand], idx) and np.array_equal(m[:, cand], idx):
            e = cand
            break
    if e is None:
        raise NotAGroup("no two-sided identity")

    inv = [-1] * n
    for a in range(n):
        hits = np.flatnonzero(m[a] == e)
        if hits.size == 0 or m[hits[0]][a] != e:
            raise NotAGroup("no inverse for element", a)
        inv[a] = int(hits[0])
    return e, tuple(inv)


def make_group(mul) -> FiniteGroup:
    """Build and fully validate a FiniteGroup from a Cayley table."""
    table = _as_table(mul)
    e, inv = check_group_axioms(table)
    return FiniteGroup(order=len(table), mul=table, identity=e, inv=inv)


# -- standard small groups ---------------------------------------------------

def trivial_group() -> FiniteGroup:
    return make_group([[0]])


def cyclic(n: int) -> FiniteGroup:
    return make_group([[(a + b) % n for b in range(n)] for a in range(n)])


def klein_four() -> FiniteGroup:
    # elements as bit pairs 0..3, xor multiplication
    return make_group([[a ^ b for b in range(4)] for a in range(4)])


def symmetric3() -> FiniteGroup:
    """S3 by composition of permutations of {0,1,2}; element 0 is the identity."""
    perms = sorted(itertools.permutations(range(3)))
    index = {p: i for i, p in enumerate(perms)}
    # (pq)(x) = q(p(x)): right action composition, matching multiplicative order
    table = [[index[tuple(q[p[x]] for x in range(3))] for q in perms] for p in perms]
    return make_group(table)


@dataclass(frozen=True)
class GroupHom:
    dom: FiniteGroup
    cod: FiniteGroup
    image: tuple[int, ...]

    def __call__(self, a: int) -> int:
        return self.image[a]

    def is_surjective(self) -> bool:
        return len(set(self.image)) == self.cod.order

    def is_injective(self) -> bool:
        return len(set(self.image)) == self.dom.order

    def is_bijective(self) -> bool:
        return self.is_injective() and self.is_surjective()


def make_hom(dom: FiniteGroup, cod: FiniteGroup, values: Iterable[int]) -> GroupHom:
    """Validate the homomorphism law on all pairs."""
    image = tuple(int(v) for v in values)
    if len(image) != dom.order or any(not 0 <= v < cod.order for v in image):
        raise NotAHom(("bad table length or range", image))
    for a in range(dom.order):
        for b in range(dom.order):
            if image[dom.mul[a][b]] != cod.mul[image[a]][image[b]]:
                raise NotAHom((a, b))
    return GroupHom(dom=dom, cod=cod, image=image)


def identity_hom(g: FiniteGroup) -> GroupHom:
    return make_hom(g, g, range(g.order))


def compose_homs(f: GroupHom, g: GroupHom) -> GroupHom:
    """g after f (f first)."""
    assert f.cod is g.dom or f.cod == g.dom
    return make_hom(f.dom, g.cod, (g.image[v] for v in f.image))


@dataclass(frozen=True)
class GroupAction:
    """Right action of `actor` on `space` by automorphisms; act[alpha][g] = alpha^g."""

    actor: FiniteGroup
    space: FiniteGroup
    act: tuple[tuple[int, ...], ...]

    def __call__(self, alpha: int, g: int) -> int:
        return self.act[alpha][g]


def make_action(actor: FiniteGroup, space: FiniteGroup, act_table) -> GroupAction:
    act = _as_table(act_table)
    if len(act) != space.order or any(len(row) != actor.order for row in act):
        raise NotAnAction("table dimensions do not match", (len(act),))
    for alpha in range(space.order):
        if act[alpha][actor.identity] != alpha:
            raise NotAnAction("identity must act trivially", alpha)
    for alpha in range(space.order):
        for g in range(actor.order):
            for h in range(actor.order):
                if act[act[alpha][g]][h] != act[alpha][actor.mul[g][h]]:
                    raise NotAnAction("(a^g)^h != a^(gh)", (alpha, g, h))
    for alpha in range(space.order):
        for beta in range(space.order):
            for g in range(actor.order):
                if act[space.mul[alpha][beta]][g] != space.mul[act[alpha][g]][act[beta][g]]:
                    raise NotAnAction("g does not act by automorphisms", (alpha, beta, g))
    return GroupAction(actor=actor, space=space, act=act)


def trivial_action(actor: FiniteGroup, space: FiniteGroup) -> GroupAction:
    return make_action(actor, space, [[alpha] * actor.order for alpha in range(space.order)])


def conjugation_action(g: FiniteGroup) -> GroupAction:
    return make_action(g, g, [[g.conj(x, a) for a in range(g.order)] for x in range(g.order)])


def inversion_action_z2_on(space: FiniteGroup) -> GroupAction:
    """Z/2 acting on an abelian group by inversion."""
    assert space.is_abelian()
    z2 = cyclic(2)
    return make_action(z2, space, [[alpha, space.inv[alpha]] for alpha in range(space.order)])


def semidirect(g1: FiniteGroup, g2: FiniteGroup, action: GroupAction) -> FiniteGroup:
    """G1 |x G2 with (g,a)(h,b) = (gh, a^h b); element (g,a) has index g*|G2|+a."""
    assert action.actor is g1 or action.actor == g1
    assert action.space is g2 or action.space == g2
    n2 = g2.order
    n = g1.order * n2

    def pack(g, a):
        return g * n2 + a

    table = [[0] * n for _ in range(n)]
    for g in range(g1.order):
        for a in range(n2):
            for h in range(g1.order):
                for b in range(n2):
                    table[pack(g, a)][pack(h, b)] = pack(
                        g1.mul[g][h], g2.mul[action.act[a][h]][b])
    return make_group(table)


def direct_product(g1: FiniteGroup, g2: FiniteGroup) -> FiniteGroup:
    return semidirect(g1, g2, trivial_action(g1, g2))


# -- subgroups, kernels, quotients ------------------------------------------

def subgroup(g: FiniteGroup, elements: Sequence[int]) -> tuple[FiniteGroup, GroupHom]:
    """Reindex a subset closed under the operation into its own FiniteGroup.

    Returns the subgroup and the inclusion hom.
    """
    elems = sorted(set(int(x) for x in elements))
    pos = {x: i for i, x in enumerate(elems)}
    try:
        table = [[pos[g.mul[a][b]] for b in elems] for a in elems]
    except KeyError as exc:
        raise NotAGroup("subset is not closed under multiplication", exc.args[0])
    sub = make_group(table)
    incl = make_hom(sub, g, elems)
    return sub, incl


def kernel(hom: GroupHom) -> tuple[FiniteGroup, GroupHom]:
    elems = [a for a in range(hom.dom.order) if hom.image[a] == hom.cod.identity]
    return subgroup(hom.dom, elems)


def is_normal(g: FiniteGroup, elements: Iterable[int]):
    """Return None if the subset is closed under conjugation, else a witness."""
    subset = set(elements)
    for x in subset:
        for a in range(g.order):
            if g.conj(x, a) not in subset:
                return (x, a)
    return None


def cokernel_of_image(hom: GroupHom) -> tuple[FiniteGroup, GroupHom]:
    """Quotient of the codomain by the image; the image must be normal."""
    img = sorted(set(hom.image))
    witness = is_normal(hom.cod, img)
    if witness is not None:
        raise ImageNotNormal(witness)
    g = hom.cod
    img_set = set(img)
    coset_of = [-1] * g.order
    reps: list[int] = []
    for a in range(g.order):
        if coset_of[a] >= 0:
            continue
        rep = len(reps)
        reps.append(a)
        for x in img_set:
            coset_of[g.mul[x][a]] = rep
            coset_of[g.mul[a][x]] = rep
    table = [[coset_of[g.mul[reps[i]][reps[j]]] for j in range(len(reps))]
             for i in range(len(reps))]
    quot = make_group(table)
    proj = make_hom(g, quot, coset_of)
    return quot, proj


# -- isomorphism search ------------------------------------------------------

def generating_set(g: FiniteGroup) -> list[int]:
    """A small (greedy, not necessarily minimal) generating set."""
    gens: list[int] = []
    closure = {g.identity}
    for a in range(g.order):
        if a in closure:
            continue
        gens.append(a)
        frontier = list(closure | {a})
        closure.add(a)
        while frontier:
            x = frontier.pop()
            for y in list(closure):
                for z in (g.mul[x][y], g.mul[y][x]):
                    if z not in closure:
                        closure.add(z)
                        frontier.append(z)
        if len(closure) == g.order:
            break
    return gens


def generates(g: FiniteGroup, gens: Iterable[int]) -> bool:
    closure = {g.identity}
    frontier = list(set(gens) | closure)
    closure |= set(gens)
    while frontier:
        x = frontier.pop()
        for y in list(closure):
            for z in (g.mul[x][y], g.mul[y][x]):
                if z not in closure:
                    closure.add(z)
                    frontier.append(z)
    return len(closure) == g.order


def _extend_hom(g: FiniteGroup, h: FiniteGroup, gens: list[int], images: list[int]):
    """Grow the partial map gens -> images to a full hom table, or None.

    Brute force by closure; exponential in principle, fine at desk scale.
    """
    table = {g.identity: h.identity}
    for a, b in zip(gens, images):
        table[a] = b
    frontier = list(table)
    while frontier:
        x = frontier.pop()
        for y in list(table):
            for z, w in ((g.mul[x][y], h.mul[table[x]][table[y]]),
                         (g.mul[y][x], h.mul[table[y]][table[x]])):
                if z in table:
                    if table[z] != w:
                        return None
                else:
                    table[z] = w
                    frontier.append(z)
    if len(table) != g.order:
        return None  # gens did not generate
    return tuple(table[a] for a in range(g.order))


def find_isomorphism(g: FiniteGroup, h: FiniteGroup):
    """An explicit isomorphism g -> h as a GroupHom, or None.

    Brute force over generator images (documented exponential; orders <= 12).
    """
    if g.order != h.order:
        return None
    gens = generating_set(g)
    orders = [g.element_order(a) for a in gens]
    candidates = [[b for b in range(h.order) if h.element_order(b) == o] for o in orders]
    for images in itertools.product(*candidates):
        table = _extend_hom(g, h, gens, list(images))
        if table is not None and len(set(table)) == g.order:
            return make_hom(g, h, table)
    return None


# -- free words --------------------------------------------------------------

Letter = tuple[int, int]  # (generator index, sign +1/-1)


@dataclass(frozen=True)
class FreeWord:
    """A freely reduced word in abstract generators."""

    letters: tuple[Letter, ...]

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        return free_reduce(self.letters + other.letters)

    def inverse(self) -> "FreeWord":
        return FreeWord(tuple((g, -s) for g, s in reversed(self.letters)))

    def __len__(self) -> int:
        return len(self.letters)


def free_reduce(letters: Iterable[Letter]) -> FreeWord:
    """Cancel adjacent inverse pairs; confluent, so the order is irrelevant."""
    stack: list[Letter] = []
    for g, s in letters:
        if s not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {s}")
        if stack and stack[-1][0] == g and stack[-1][1] == -s:
            stack.pop()
        else:
            stack.append((int(g), int(s)))
    return FreeWord(tuple(stack))


def empty_word() -> FreeWord:
    return FreeWord(())


def generator(i: int, sign: int = 1) -> FreeWord:
    return FreeWord(((i, sign),))
