"""Crossed modules (H → G with a compatible G-action on H) and the strict
2-group they present.

Validation checks, with witnesses: the boundary is a homomorphism, the action
table defines a left action by automorphisms, the boundary is equivariant
(∂(ᵍh) = g·∂h·g⁻¹), and the Peiffer identity holds (^(∂h)h' = h·h'·h⁻¹).

2-morphisms g₁ ⇒ g₂ are labeled by h ∈ H with g₂ = ∂h·g₁; vertical and
horizontal composition follow the 2-group structure.  The commuting-triple
set is the elements (a, b, h) with ∂h·a·b = b·a, carrying the conjugation
action g·(a,b,h) = (gag⁻¹, gbg⁻¹, ᵍh).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import (
    EquivarianceFailure,
    NotAHomomorphism,
    NotAnAction,
    NotComposable,
    PeifferFailure,
    TooLarge,
)
from .groups import FiniteGroup, Subgroup, from_cayley_table, group_from_json, group_to_json


class CrossedModule:
    """Validated crossed module: boundary[h] = ∂h, action[g][h] = ᵍh."""

    __slots__ = ("H", "G", "boundary", "action", "_hash")

    def __init__(self, H: FiniteGroup, G: FiniteGroup, boundary, action):
        boundary = np.ascontiguousarray(boundary, dtype=np.int64)
        action = np.ascontiguousarray(action, dtype=np.int64)
        if boundary.shape != (H.order,):
            raise ValueError("boundary must assign one G-element per H-element")
        if action.shape != (G.order, H.order):
            raise ValueError("action must be a |G| × |H| table")
        _validate(H, G, boundary, action)
        boundary.setflags(write=False)
        action.setflags(write=False)
        self.H, self.G = H, G
        self.boundary = boundary
        self.action = action
        self._hash = hash((H, G, boundary.tobytes(), action.tobytes()))

    def act(self, g: int, h: int) -> int:
        return int(self.action[g, h])

    def __eq__(self, other) -> bool:
        if not isinstance(other, CrossedModule):
            return NotImplemented
        return (
            self.H == other.H
            and self.G == other.G
            and np.array_equal(self.boundary, other.boundary)
            and np.array_equal(self.action, other.action)
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"CrossedModule({self.H.name} → {self.G.name})"


def _validate(H: FiniteGroup, G: FiniteGroup, boundary: np.ndarray, action: np.ndarray):
    if boundary.min() < 0 or boundary.max() >= G.order:
        raise ValueError("boundary values out of range")
    if action.min() < 0 or action.max() >= H.order:
        raise ValueError("action values out of range")
    for h1 in H.elements:
        for h2 in H.elements:
            lhs = G.mul(int(boundary[h1]), int(boundary[h2]))
            rhs = int(boundary[H.mul(h1, h2)])
            if lhs != rhs:
                raise NotAHomomorphism(
                    f"∂({h1})·∂({h2}) ≠ ∂({h1}·{h2})", witness=(h1, h2)
                )
    rng = np.arange(H.order)
    if not np.array_equal(action[0], rng):
        raise NotAnAction("identity must act trivially", witness=(0,))
    for g in G.elements:
        if not np.array_equal(np.sort(action[g]), rng):
            raise NotAnAction(f"element {g} does not act bijectively", witness=(g,))
        for h1 in H.elements:
            for h2 in H.elements:
                if action[g, H.mul(h1, h2)] != H.mul(int(action[g, h1]), int(action[g, h2])):
                    raise NotAnAction(
                        f"{g} does not act by an automorphism at ({h1},{h2})",
                        witness=(g, h1, h2),
                    )
    composed = action[:, action]
    expected = action[G.table]
    if not np.array_equal(composed, expected):
        g1, g2, h = (int(v) for v in np.argwhere(composed != expected)[0])
        raise NotAnAction(f"not a left action at (g₁={g1}, g₂={g2}, h={h})", witness=(g1, g2, h))
    for g in G.elements:
        for h in H.elements:
            if int(boundary[action[g, h]]) != G.conj(g, int(boundary[h])):
                raise EquivarianceFailure(
                    f"∂(^{g}{h}) ≠ {g}·∂{h}·{g}⁻¹", witness=(g, h)
                )
    for h1 in H.elements:
        for h2 in H.elements:
            if int(action[boundary[h1], h2]) != H.conj(h1, h2):
                raise PeifferFailure(
                    f"^(∂{h1}){h2} ≠ {h1}·{h2}·{h1}⁻¹", witness=(h1, h2)
                )


def crossed_module(H: FiniteGroup, G: FiniteGroup, boundary, action) -> CrossedModule:
    return CrossedModule(H, G, boundary, action)


# ---------------------------------------------------------------------------
# π₁ and π₂


@lru_cache(maxsize=None)
def _pi1_data(K: CrossedModule):
    G = K.G
    image = sorted({int(v) for v in K.boundary})
    # normal by equivariance; checked all the same
    member = frozenset(image)
    for g in G.elements:
        for x in image:
            assert G.conj(g, x) in member, "boundary image must be normal"
    rep_of = np.full(G.order, -1, dtype=np.int64)
    reps = []
    for g in G.elements:
        if rep_of[g] >= 0:
            continue
        coset = sorted(G.mul(x, g) for x in image)
        reps.append(coset[0])
        for y in coset:
            rep_of[y] = coset[0]
    idx_of_rep = {r: i for i, r in enumerate(reps)}
    table = [[idx_of_rep[int(rep_of[G.mul(a, b)])] for b in reps] for a in reps]
    quotient = from_cayley_table(table, name=f"{G.name}/∂")
    proj = np.array([idx_of_rep[int(rep_of[g])] for g in G.elements], dtype=np.int64)
    proj.setflags(write=False)
    return quotient, proj, tuple(reps)


def pi1(K: CrossedModule) -> FiniteGroup:
    """Cokernel of the boundary: G modulo the (normal) image of ∂."""
    return _pi1_data(K)[0]


def pi1_projection(K: CrossedModule) -> np.ndarray:
    """Array mapping each G-element to its π₁ index."""
    return _pi1_data(K)[1]


def pi2(K: CrossedModule) -> Subgroup:
    """Kernel of the boundary as a subgroup of H (central, hence abelian)."""
    els = tuple(h for h in K.H.elements if K.boundary[h] == 0)
    sub = Subgroup(K.H, els)
    for h in els:
        assert all(K.H.commutes(h, x) for x in K.H.elements), "kernel must be central"
    return sub


def restrict(K: CrossedModule, P: Subgroup) -> CrossedModule:
    """Pull back to the preimage in G of a subgroup P ≤ π₁."""
    quotient, proj, _ = _pi1_data(K)
    if P.parent != quotient:
        raise ValueError("P must be a subgroup of π₁ of this crossed module")
    member = set(P.elements)
    pre = tuple(g for g in K.G.elements if int(proj[g]) in member)
    from .groups import subgroup_group

    sub = Subgroup(K.G, pre)
    grp, to_sub, _ = subgroup_group(sub)
    boundary = to_sub[K.boundary]
    assert boundary.min() >= 0, "boundary image must land in the preimage"
    action = K.action[list(pre)]
    return CrossedModule(K.H, grp, boundary, action)


# ---------------------------------------------------------------------------
# 2-morphisms


@dataclass(frozen=True)
class TwoMorphism:
    """2-morphism source ⇒ target labeled by ``label`` ∈ H, with
    target = ∂(label)·source."""

    K: CrossedModule
    source: int
    label: int

    @property
    def target(self) -> int:
        return self.K.G.mul(int(self.K.boundary[self.label]), self.source)


def vertical_compose(f: TwoMorphism, e: TwoMorphism) -> TwoMorphism:
    """Compose e: g₁ ⇒ g₂ then f: g₂ ⇒ g₃; label f.label·e.label."""
    if f.K != e.K:
        raise NotComposable("2-morphisms over different crossed modules")
    if f.source != e.target:
        raise NotComposable(
            f"source {f.source} of the second 2-morphism ≠ target {e.target} of the first"
        )
    return TwoMorphism(f.K, e.source, f.K.H.mul(f.label, e.label))


def horizontal_compose(f: TwoMorphism, f1: TwoMorphism) -> TwoMorphism:
    """Compose along 1-morphism multiplication: sources multiply, label
    f.label · ^(f.source)f₁.label."""
    if f.K != f1.K:
        raise NotComposable("2-morphisms over different crossed modules")
    K = f.K
    label = K.H.mul(f.label, K.act(f.source, f1.label))
    return TwoMorphism(K, K.G.mul(f.source, f1.source), label)


# ---------------------------------------------------------------------------
# Commuting triples


DEFAULT_TRIPLE_BOUND = 4096


def triples(K: CrossedModule, bound: int = DEFAULT_TRIPLE_BOUND) -> tuple[tuple[int, int, int], ...]:
    """All (a, b, h) with ∂h·a·b = b·a, in lexicographic order."""
    G, H = K.G, K.H
    total = G.order * G.order * H.order
    if total > bound:
        raise TooLarge(f"{total} candidate triples exceed the bound {bound}")
    out = []
    for a in G.elements:
        for b in G.elements:
            ab, ba = G.mul(a, b), G.mul(b, a)
            for h in H.elements:
                if G.mul(int(K.boundary[h]), ab) == ba:
                    out.append((a, b, h))
    return tuple(out)


def triple_classes(
    K: CrossedModule, bound: int = DEFAULT_TRIPLE_BOUND
) -> tuple[tuple[tuple[int, int, int], ...], ...]:
    """Conjugation orbits on the commuting triples, each orbit sorted, listed
    by least representative."""
    G = K.G
    all_triples = triples(K, bound)
    seen = set()
    classes = []
    for tr in all_triples:
        if tr in seen:
            continue
        a, b, h = tr
        orbit = sorted(
            {(G.conj(g, a), G.conj(g, b), K.act(g, h)) for g in G.elements}
        )
        seen.update(orbit)
        classes.append(tuple(orbit))
    return tuple(classes)


# ---------------------------------------------------------------------------
# Serialization


def crossed_to_json(K: CrossedModule) -> dict:
    return {
        "H": group_to_json(K.H),
        "G": group_to_json(K.G),
        "boundary": [int(v) for v in K.boundary],
        "action": [[int(v) for v in row] for row in K.action],
    }


def crossed_from_json(doc: dict) -> CrossedModule:
    return CrossedModule(
        group_from_json(doc["H"]),
        group_from_json(doc["G"]),
        doc["boundary"],
        doc["action"],
    )
