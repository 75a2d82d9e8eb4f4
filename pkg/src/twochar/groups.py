"""Finite groups as dense Cayley tables, with the subgroup/coset machinery
used everywhere else in the package.

Conventions, fixed once and relied on for byte-deterministic output:

* elements are ``0 .. order-1`` and the identity is always index ``0``
  (``from_cayley_table`` relabels if needed);
* ``table[a][b]`` is the product ``a * b``;
* every representative (conjugacy classes, subgroup classes, double cosets,
  transversals, commuting pairs) is the lexicographically least member of its
  orbit, and orbit listings are sorted.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

import numpy as np

from .errors import ClosureTooLarge, NotAGroup, NotAPermutation


class FiniteGroup:
    """Immutable dense-table finite group; hashable, equal iff tables equal.

    ``origin`` records provenance when the group was built by relabeling a
    subgroup of some parent (see :func:`subgroup_group`); it does not affect
    equality or hashing.
    """

    __slots__ = ("name", "order", "table", "inverse", "origin", "_hash")

    def __init__(self, table: np.ndarray, name: str, inverse: np.ndarray):
        self.table = table
        self.name = name
        self.inverse = inverse
        self.order = int(table.shape[0])
        self.origin = None
        self._hash = hash(table.tobytes())
        table.setflags(write=False)
        inverse.setflags(write=False)

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name!r}, order={self.order})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, FiniteGroup):
            return NotImplemented
        return self.order == other.order and np.array_equal(self.table, other.table)

    def __hash__(self) -> int:
        return self._hash

    @property
    def elements(self) -> range:
        return range(self.order)

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inv(self, a: int) -> int:
        return int(self.inverse[a])

    def conj(self, g: int, x: int) -> int:
        """g * x * g^-1."""
        return int(self.table[self.table[g, x], self.inverse[g]])

    def commutes(self, a: int, b: int) -> bool:
        return self.table[a, b] == self.table[b, a]

    def power(self, g: int, k: int) -> int:
        if k < 0:
            g, k = self.inv(g), -k
        out = 0
        for _ in range(k):
            out = int(self.table[out, g])
        return out

    def order_of(self, g: int) -> int:
        out, n = g, 1
        while out != 0:
            out = int(self.table[out, g])
            n += 1
        return n


def _validate_table(table: np.ndarray) -> int:
    """Check group axioms on a raw table; return the identity's input label."""
    if table.ndim != 2 or table.shape[0] != table.shape[1]:
        raise NotAGroup(f"table must be square, got shape {table.shape}")
    n = table.shape[0]
    if n == 0:
        raise NotAGroup("empty table")
    if table.min() < 0 or table.max() >= n:
        bad = tuple(int(v) for v in np.argwhere((table < 0) | (table >= n))[0])
        raise NotAGroup(f"entry out of range at {bad}", witness=bad)
    identity = None
    rng = np.arange(n)
    for e in range(n):
        if np.array_equal(table[e], rng) and np.array_equal(table[:, e], rng):
            identity = e
            break
    if identity is None:
        raise NotAGroup("no two-sided identity element")
    for a in range(n):
        row = np.flatnonzero(table[a] == identity)
        if not any(table[b, a] == identity for b in row):
            raise NotAGroup(f"element {a} has no two-sided inverse", witness=(a,))
    left = table[table, :]            # left[a,b,c] = (a*b)*c
    right = table[:, table]           # right[a,b,c] = a*(b*c)
    if not np.array_equal(left, right):
        a, b, c = (int(v) for v in np.argwhere(left != right)[0])
        raise NotAGroup(f"associativity fails at ({a}, {b}, {c})", witness=(a, b, c))
    return identity


def _finish(table: np.ndarray, name: str) -> FiniteGroup:
    n = table.shape[0]
    inverse = np.empty(n, dtype=np.int64)
    for a in range(n):
        inverse[a] = int(np.flatnonzero(table[a] == 0)[0])
    return FiniteGroup(table, name, inverse)


def from_cayley_table(table, name: str = "G") -> FiniteGroup:
    """Validate a Cayley table and build the group, identity relabeled to 0.

    Raises :class:`NotAGroup` with a witness (the violating triple for an
    associativity failure) when the table is not a group.
    """
    arr = np.array(table, dtype=np.int64)
    e = _validate_table(arr)
    if e != 0:
        sigma = np.arange(arr.shape[0])
        sigma[0], sigma[e] = e, 0          # involution swapping 0 and e
        arr = sigma[arr[np.ix_(sigma, sigma)]]
    return _finish(arr, name)


def from_permutation_generators(
    degree: int, generators, name: str = "G", max_order: int = 10000
) -> FiniteGroup:
    """Close a generating set of permutations of ``range(degree)`` and build
    the Cayley table of the generated group.

    Permutations compose as functions: ``(p * q)(x) = p(q(x))``.  Element 0 is
    the identity; the rest follow breadth-first discovery order, which makes
    the labeling deterministic for a fixed generator list.
    """
    gens = []
    for i, g in enumerate(generators):
        row = tuple(int(v) for v in g)
        if sorted(row) != list(range(degree)):
            raise NotAPermutation(f"generator {i} is not a permutation of range({degree})", witness=row)
        gens.append(row)
    ident = tuple(range(degree))
    elems = [ident]
    index = {ident: 0}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = tuple(p[g[x]] for x in range(degree))    # p∘g
                if q not in index:
                    if len(elems) >= max_order:
                        raise ClosureTooLarge(f"closure exceeded {max_order} elements")
                    index[q] = len(elems)
                    elems.append(q)
                    nxt.append(q)
        frontier = nxt
    n = len(elems)
    table = np.empty((n, n), dtype=np.int64)
    for i, p in enumerate(elems):
        for j, q in enumerate(elems):
            table[i, j] = index[tuple(p[q[x]] for x in range(degree))]
    return _finish(table, name)


# ---------------------------------------------------------------------------
# Subgroups


@dataclass(frozen=True)
class Subgroup:
    """A validated subgroup, stored as its sorted element tuple."""

    parent: FiniteGroup
    elements: tuple[int, ...]

    def __post_init__(self):
        els = self.elements
        if tuple(sorted(set(els))) != els:
            raise ValueError(f"subgroup elements must be sorted and distinct: {els}")
        if not els or els[0] != 0:
            raise ValueError("subgroup must contain the identity 0")
        member = set(els)
        t, inv = self.parent.table, self.parent.inverse
        for a in els:
            if int(inv[a]) not in member:
                raise ValueError(f"subgroup not closed under inverse at {a}")
            for b in els:
                if int(t[a, b]) not in member:
                    raise ValueError(f"subgroup not closed under product at ({a}, {b})")

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def index(self) -> int:
        return self.parent.order // len(self.elements)

    def __contains__(self, g: int) -> bool:
        return g in self._member_set()

    def _member_set(self) -> frozenset:
        return _member_set(self)

    def __repr__(self) -> str:
        return f"Subgroup({self.parent.name}, {self.elements})"


@lru_cache(maxsize=None)
def _member_set(sub: Subgroup) -> frozenset:
    return frozenset(sub.elements)


@lru_cache(maxsize=None)
def subgroup_group(sub: Subgroup):
    """Relabel a subgroup as a standalone group.

    Returns ``(group, to_sub, to_parent)`` where ``to_parent[i]`` is the parent
    index of subgroup element ``i`` and ``to_sub`` maps parent indices back
    (-1 for non-members).  The identity stays at index 0.
    """
    els = sub.elements
    k = len(els)
    to_sub = np.full(sub.parent.order, -1, dtype=np.int64)
    for i, g in enumerate(els):
        to_sub[g] = i
    table = to_sub[sub.parent.table[np.ix_(els, els)]]
    grp = _finish(table.copy(), f"{sub.parent.name}[{','.join(map(str, els))}]")
    grp.origin = sub
    to_sub.setflags(write=False)
    return grp, to_sub, els


def full_subgroup(G: FiniteGroup) -> Subgroup:
    return Subgroup(G, tuple(range(G.order)))


def trivial_subgroup(G: FiniteGroup) -> Subgroup:
    return Subgroup(G, (0,))


def generated_subgroup(G: FiniteGroup, gens) -> Subgroup:
    """Subgroup generated by ``gens`` (closure under product and inverse)."""
    t = G.table
    closed = {0} | {int(G.inverse[g]) for g in gens} | {int(g) for g in gens}
    frontier = list(closed)
    while frontier:
        x = frontier.pop()
        for y in tuple(closed):
            for z in (int(t[x, y]), int(t[y, x])):
                if z not in closed:
                    closed.add(z)
                    frontier.append(z)
    return Subgroup(G, tuple(sorted(closed)))


def conjugate_subgroup(G: FiniteGroup, g: int, sub: Subgroup) -> Subgroup:
    return Subgroup(G, tuple(sorted(G.conj(g, x) for x in sub.elements)))


@lru_cache(maxsize=None)
def all_subgroups(G: FiniteGroup) -> tuple[Subgroup, ...]:
    """All subgroups, sorted by (order, element tuple)."""
    found = {(0,)}
    frontier = [(0,)]
    while frontier:
        base = frontier.pop()
        for g in range(1, G.order):
            if g in base:
                continue
            ext = generated_subgroup(G, base + (g,)).elements
            if ext not in found:
                found.add(ext)
                frontier.append(ext)
    subs = [Subgroup(G, els) for els in found]
    subs.sort(key=lambda s: (s.order, s.elements))
    return tuple(subs)


@lru_cache(maxsize=None)
def subgroup_conjugacy_classes(G: FiniteGroup) -> tuple[tuple[Subgroup, ...], ...]:
    """Conjugacy classes of subgroups; each class sorted, classes ordered by
    (order, representative elements) with the representative = least member."""
    remaining = {s.elements for s in all_subgroups(G)}
    classes = []
    for sub in all_subgroups(G):
        if sub.elements not in remaining:
            continue
        orbit = set()
        for g in G.elements:
            orbit.add(conjugate_subgroup(G, g, sub).elements)
        remaining -= orbit
        classes.append(tuple(Subgroup(G, els) for els in sorted(orbit)))
    classes.sort(key=lambda c: (c[0].order, c[0].elements))
    return tuple(classes)


def subgroup_class_representatives(G: FiniteGroup) -> tuple[Subgroup, ...]:
    return tuple(c[0] for c in subgroup_conjugacy_classes(G))


@lru_cache(maxsize=None)
def centralizer(G: FiniteGroup, a: int) -> Subgroup:
    t = G.table
    return Subgroup(G, tuple(g for g in G.elements if t[g, a] == t[a, g]))


@lru_cache(maxsize=None)
def normalizer(G: FiniteGroup, sub: Subgroup) -> Subgroup:
    els = []
    for g in G.elements:
        if conjugate_subgroup(G, g, sub).elements == sub.elements:
            els.append(g)
    return Subgroup(G, tuple(els))


@lru_cache(maxsize=None)
def conjugacy_classes(G: FiniteGroup) -> tuple[tuple[int, ...], ...]:
    """Element conjugacy classes as sorted tuples, ordered by least member."""
    seen = set()
    classes = []
    for a in G.elements:
        if a in seen:
            continue
        orbit = sorted({G.conj(g, a) for g in G.elements})
        seen.update(orbit)
        classes.append(tuple(orbit))
    return tuple(classes)


def double_cosets(G: FiniteGroup, P: Subgroup, Q: Subgroup) -> tuple[tuple[int, ...], ...]:
    """P\\x/Q double cosets as sorted element tuples; representative = least
    member = first entry, and the list is ordered by representative."""
    t = G.table
    seen = set()
    out = []
    for g in G.elements:
        if g in seen:
            continue
        coset = sorted({int(t[t[p, g], q]) for p in P.elements for q in Q.elements})
        seen.update(coset)
        out.append(tuple(coset))
    return tuple(out)


@lru_cache(maxsize=None)
def right_transversal(G: FiniteGroup, Q: Subgroup) -> tuple[int, ...]:
    """Lex-least representatives for the right cosets Q·g, identity first."""
    t = G.table
    seen = set()
    reps = []
    for g in G.elements:
        if g in seen:
            continue
        reps.append(g)
        seen.update(int(t[q, g]) for q in Q.elements)
    return tuple(reps)


@lru_cache(maxsize=None)
def coset_representative_map(G: FiniteGroup, Q: Subgroup) -> np.ndarray:
    """Array mapping each g to the transversal representative of Q·g."""
    t = G.table
    rep = np.full(G.order, -1, dtype=np.int64)
    for r in right_transversal(G, Q):
        for q in Q.elements:
            rep[int(t[q, r])] = r
    rep.setflags(write=False)
    return rep


@dataclass(frozen=True)
class CommutingPairClass:
    """Simultaneous-conjugation class of a commuting pair, with the least
    pair as representative and the full sorted orbit."""

    representative: tuple[int, int]
    orbit: tuple[tuple[int, int], ...]


@lru_cache(maxsize=None)
def commuting_pair_classes(G: FiniteGroup) -> tuple[CommutingPairClass, ...]:
    t = G.table
    pairs = [(a, b) for a in G.elements for b in G.elements if t[a, b] == t[b, a]]
    seen = set()
    classes = []
    for pair in pairs:
        if pair in seen:
            continue
        orbit = sorted({(G.conj(g, pair[0]), G.conj(g, pair[1])) for g in G.elements})
        seen.update(orbit)
        classes.append(CommutingPairClass(orbit[0], tuple(orbit)))
    classes.sort(key=lambda c: c.representative)
    return tuple(classes)


def exponent(G: FiniteGroup) -> int:
    out = 1
    for g in G.elements:
        o = G.order_of(g)
        out = out * o // gcd(out, o)
    return out


# ---------------------------------------------------------------------------
# Serialization


def group_to_json(G: FiniteGroup) -> dict:
    """Canonical JSON form: name, order, dense Cayley table."""
    return {"name": G.name, "order": G.order, "cayley": [[int(v) for v in row] for row in G.table]}


def group_from_json(doc: dict) -> FiniteGroup:
    """Accepts either the Cayley form or a permutation-generator form
    ``{"name", "degree", "generators"}``."""
    if not isinstance(doc, dict):
        raise ValueError("group document must be a JSON object")
    name = doc.get("name", "G")
    if "cayley" in doc:
        G = from_cayley_table(doc["cayley"], name=name)
        if "order" in doc and doc["order"] != G.order:
            raise ValueError(f"declared order {doc['order']} != table size {G.order}")
        return G
    if "generators" in doc:
        return from_permutation_generators(int(doc["degree"]), doc["generators"], name=name)
    raise ValueError("group document needs either 'cayley' or 'generators'")
