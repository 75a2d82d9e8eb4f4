"""2-representations of a finite group in classified form.

A 2-representation is stored as a decorated G-set: a multiset of orbits, each
an (up-to-conjugacy) subgroup P ≤ G decorated with a cocycle class over P
(one of :func:`linear_classes`).  This classified form is a complete
equivalence invariant, so every constructor canonicalizes:

* the subgroup is replaced by its conjugacy-class representative via a fixed
  least conjugator, pulling the cocycle back along the conjugation;
* the cocycle is identified with its class index, minimized over the residual
  normalizer action;
* the orbit list is sorted.

Constructions: direct sum, tensor product (double-coset decomposition with
pulled-back cocycle addition), contragradient, induction to a bigger ambient
group, Mackey restriction to a subgroup, and the round trip between decorated
sets and permutation-valued 2-cocycles via the Shapiro transfer maps.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .cochains import (
    Cochain,
    CohomologyClassSet,
    GModule,
    cochain_to_json,
    conjugate_pullback,
    differential,
    is_cocycle,
    random_cochain,
    restrict,
    schur_classes,
    raise_level,
)
from .errors import AmbientMismatch, NotACocycle, NotASubgroup
from .groups import (
    FiniteGroup,
    Subgroup,
    all_subgroups,
    conjugate_subgroup,
    double_cosets,
    full_subgroup,
    normalizer,
    subgroup_conjugacy_classes,
    subgroup_group,
    trivial_subgroup,
)
from .shapiro import psi, shapiro_context


@lru_cache(maxsize=None)
def linear_classes(P: Subgroup) -> CohomologyClassSet:
    """Cocycle classes over ℂ^× decorating an orbit with stabilizer P,
    presented at level |P| over the relabeled subgroup."""
    grp, _, _ = subgroup_group(P)
    return schur_classes(grp)


def trivial_decoration(P: Subgroup) -> Cochain:
    """The trivially decorated cocycle over P (class index 0)."""
    return linear_classes(P).representatives[0]


# ---------------------------------------------------------------------------
# Canonical form


@lru_cache(maxsize=None)
def _class_reps(G: FiniteGroup) -> dict:
    """For every subgroup P ≤ G: (class representative P₀, least conjugator c
    with c·P₀·c⁻¹ = P)."""
    out = {}
    for cls in subgroup_conjugacy_classes(G):
        rep = cls[0]
        for P in cls:
            c = next(g for g in G.elements if conjugate_subgroup(G, g, rep) == P)
            out[P] = (rep, c)
    return out


@lru_cache(maxsize=None)
def _normalizer_min(P0: Subgroup) -> tuple[int, ...]:
    """Map each class index of linear_classes(P0) to the least index in its
    orbit under pullback along the normalizer of P0."""
    sc = linear_classes(P0)
    G = P0.parent
    k = len(sc)
    # pullbacks along a subgroup compose within themselves, so one sweep over
    # the normalizer covers each full orbit
    best = list(range(k))
    for n in normalizer(G, P0).elements:
        for i in range(k):
            j = sc.index_of(conjugate_pullback(sc.representatives[i], n, P0))
            if j < best[i]:
                best[i] = j
    return tuple(best)


@dataclass(frozen=True)
class Orbit:
    """One canonical orbit: class-representative subgroup plus the canonical
    (normalizer-minimal) index into its linear classes."""

    subgroup: Subgroup
    schur_index: int

    @property
    def cocycle(self) -> Cochain:
        return linear_classes(self.subgroup).representatives[self.schur_index]

    @property
    def index_in_group(self) -> int:
        return self.subgroup.index


def _orbit_key(o: Orbit):
    return (o.subgroup.order, o.subgroup.elements, o.schur_index)


def canonical_orbit(G: FiniteGroup, P: Subgroup, mu: Cochain) -> Orbit:
    """Canonicalize one decorated orbit (P ≤ G, cocycle over P)."""
    P0, c = _class_reps(G)[P]
    mu0 = conjugate_pullback(mu, c, P0)
    i = linear_classes(P0).index_of(mu0)
    return Orbit(P0, _normalizer_min(P0)[i])


class Rep2:
    """A 2-representation in canonical decorated-set form."""

    __slots__ = ("group", "orbits", "_hash")

    def __init__(self, group: FiniteGroup, orbits: tuple[Orbit, ...]):
        self.group = group
        self.orbits = orbits
        self._hash = hash((group, orbits))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Rep2):
            return NotImplemented
        return self.group == other.group and self.orbits == other.orbits

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        parts = ", ".join(
            f"⟨{o.schur_index}, {list(o.subgroup.elements)}⟩" for o in self.orbits
        )
        return f"Rep2({self.group.name}: {parts or '0'})"


def rep2(G: FiniteGroup, terms) -> Rep2:
    """Build a canonical Rep2 from (subgroup, cocycle-over-subgroup) terms."""
    orbits = sorted((canonical_orbit(G, P, mu) for P, mu in terms), key=_orbit_key)
    return Rep2(G, tuple(orbits))


def zero_rep2(G: FiniteGroup) -> Rep2:
    return Rep2(G, ())


def trivial_rep2(G: FiniteGroup) -> Rep2:
    """The monoidal unit: one orbit with full stabilizer, trivial decoration."""
    P = full_subgroup(G)
    return rep2(G, [(P, trivial_decoration(P))])


def regular_rep2(G: FiniteGroup) -> Rep2:
    """One free orbit (trivial stabilizer, trivial decoration)."""
    P = trivial_subgroup(G)
    return rep2(G, [(P, trivial_decoration(P))])


def linear_rep2(G: FiniteGroup, mu: Cochain) -> Rep2:
    """Single-point 2-representation decorated by a cocycle over all of G."""
    return rep2(G, [(full_subgroup(G), mu)])


def degree(r: Rep2) -> int:
    return sum(o.index_in_group for o in r.orbits)


def equivalent(r: Rep2, s: Rep2) -> bool:
    """Equality of canonical forms (complete equivalence invariant)."""
    return r == s


# ---------------------------------------------------------------------------
# Ring constructions


def direct_sum(r: Rep2, s: Rep2) -> Rep2:
    if r.group != s.group:
        raise AmbientMismatch("summands live over different groups")
    return Rep2(r.group, tuple(sorted(r.orbits + s.orbits, key=_orbit_key)))


def _intersection(P: Subgroup, other_elements) -> Subgroup:
    els = tuple(sorted(set(P.elements) & set(other_elements)))
    return Subgroup(P.parent, els)


def tensor(r: Rep2, s: Rep2) -> Rep2:
    """Orbit-pairwise double-coset decomposition; decorations restrict, pull
    back, and add at a common level."""
    if r.group != s.group:
        raise AmbientMismatch("factors live over different groups")
    G = r.group
    terms = []
    for o1 in r.orbits:
        P, mu = o1.subgroup, o1.cocycle
        for o2 in s.orbits:
            Q, nu = o2.subgroup, o2.cocycle
            M = math.lcm(mu.level, nu.level)
            mu_M, nu_M = raise_level(mu, M), raise_level(nu, M)
            for coset in double_cosets(G, P, Q):
                x = coset[0]
                conj_Q = {G.conj(x, q) for q in Q.elements}
                J = _intersection(P, conj_Q)
                t = restrict(mu_M, J) + conjugate_pullback(nu_M, G.inv(x), J)
                terms.append((J, t))
    return rep2(G, terms)


def contragradient(r: Rep2) -> Rep2:
    """Negate every decoration class (the monoidal inverse on linear parts)."""
    orbits = []
    for o in r.orbits:
        sc = linear_classes(o.subgroup)
        neg = _normalizer_min(o.subgroup)[sc.neg(o.schur_index)]
        orbits.append(Orbit(o.subgroup, neg))
    return Rep2(r.group, tuple(sorted(orbits, key=_orbit_key)))


def induce(r: Rep2, G: FiniteGroup) -> Rep2:
    """View a 2-representation of a subgroup as one of the ambient group:
    the underlying set and decorations are unchanged."""
    if r.group == G:
        return r
    origin = r.group.origin
    if origin is None or origin.parent != G:
        raise NotASubgroup("the representation's group is not a relabeled subgroup of G")
    lift = origin.elements
    terms = []
    for o in r.orbits:
        Q_els = tuple(lift[q] for q in o.subgroup.elements)
        Q = Subgroup(G, Q_els)
        # the relabeling is monotone, so the subgroup tables and hence the
        # class indexing agree verbatim
        terms.append((Q, linear_classes(Q).representatives[o.schur_index]))
    return rep2(G, terms)


def mackey_restrict(r: Rep2, P: Subgroup) -> Rep2:
    """Restrict to P ≤ G by double-coset decomposition of each orbit."""
    G = r.group
    if P.parent != G:
        raise NotASubgroup("P is not a subgroup of the representation's group")
    p_grp, to_sub, _ = subgroup_group(P)
    terms = []
    for o in r.orbits:
        Q, mu = o.subgroup, o.cocycle
        for coset in double_cosets(G, P, Q):
            x = coset[0]
            conj_Q = {G.conj(x, q) for q in Q.elements}
            J = _intersection(P, conj_Q)
            t = conjugate_pullback(mu, G.inv(x), J)
            J_sub = Subgroup(p_grp, tuple(int(to_sub[j]) for j in J.elements))
            grp_J, _, _ = subgroup_group(J_sub)
            mod = GModule.trivial(grp_J, t.level)
            terms.append((J_sub, Cochain(mod, 2, t.values)))
    return rep2(p_grp, terms)


# ---------------------------------------------------------------------------
# Permutation-cocycle form


class PermCocycleRep:
    """A finite G-set together with a degree-2 cocycle valued in the
    permutation module on the set."""

    __slots__ = ("group", "point_action", "theta")

    def __init__(self, group: FiniteGroup, point_action, theta: Cochain):
        point_action = np.ascontiguousarray(point_action, dtype=np.int64)
        module = GModule.permutation(group, point_action, theta.level)
        if theta.degree != 2 or theta.module != module:
            raise ValueError("theta must be a degree-2 cochain over the permutation module")
        if not is_cocycle(theta):
            raise NotACocycle("theta is not a 2-cocycle for the permutation action")
        point_action.setflags(write=False)
        self.group = group
        self.point_action = point_action
        self.theta = theta

    @property
    def size(self) -> int:
        return self.point_action.shape[1]

    def __repr__(self) -> str:
        return f"PermCocycleRep({self.group.name}, |X|={self.size}, Z/{self.theta.level})"


def to_perm_cocycle(r: Rep2) -> PermCocycleRep:
    """Disjoint union of coset spaces, with the transferred cocycle on each
    block."""
    G = r.group
    m = G.order
    level = math.lcm(1, *(o.cocycle.level for o in r.orbits))
    blocks_act = []
    blocks_val = []
    total = 0
    for o in r.orbits:
        Q = o.subgroup
        qgrp, _, _ = subgroup_group(Q)
        ctx = shapiro_context(G, Q, GModule.trivial(qgrp, level))
        theta = psi(ctx, raise_level(o.cocycle, level))
        blocks_act.append(ctx.coinduced.action + total)
        blocks_val.append(theta.values)
        total += ctx.nT
    if blocks_act:
        action = np.concatenate(blocks_act, axis=1)
        values = np.concatenate(blocks_val, axis=2)
    else:
        action = np.zeros((m, 0), dtype=np.int64)
        values = np.zeros((m, m, 0), dtype=np.int64)
    theta = Cochain(GModule.permutation(G, action, level), 2, values)
    return PermCocycleRep(G, action, theta)


def from_perm_cocycle(p: PermCocycleRep) -> Rep2:
    """Recover the canonical decorated set: one orbit per G-orbit of the set,
    decorated by the cocycle's values at the least point of the orbit."""
    G = p.group
    act = p.point_action
    unseen = set(range(p.size))
    terms = []
    while unseen:
        x0 = min(unseen)
        orbit = sorted({int(act[g, x0]) for g in G.elements})
        unseen.difference_update(orbit)
        P = Subgroup(G, tuple(g for g in G.elements if act[g, x0] == x0))
        grp, _, els = subgroup_group(P)
        vals = p.theta.values[np.ix_(els, els, [x0])]
        terms.append((P, Cochain(GModule.trivial(grp, p.theta.level), 2, vals)))
    return rep2(G, terms)


# ---------------------------------------------------------------------------
# Random generation (for property runs) and serialization


def random_rep2(G: FiniteGroup, rng, max_orbits: int = 3) -> Rep2:
    """Random canonical Rep2: random subgroups, random decoration classes,
    noised by coboundaries and conjugation before canonicalization."""
    subs = all_subgroups(G)
    terms = []
    for _ in range(rng.randrange(max_orbits + 1)):
        P = subs[rng.randrange(len(subs))]
        sc = linear_classes(P)
        mu = sc.representatives[rng.randrange(len(sc))]
        noise = differential(random_cochain(mu.module, 1, rng))
        mu = mu + noise
        g = rng.randrange(G.order)
        P2 = conjugate_subgroup(G, g, P)
        terms.append((P2, conjugate_pullback(mu, G.inv(g), P2)))
    return rep2(G, terms)


def rep2_to_json(r: Rep2) -> dict:
    return {
        "group": r.group.name,
        "orbits": [
            {
                "subgroup": [int(g) for g in o.subgroup.elements],
                "cocycle": cochain_to_json(o.cocycle),
            }
            for o in r.orbits
        ],
    }


def rep2_from_json(G: FiniteGroup, doc: dict) -> Rep2:
    terms = []
    for entry in doc["orbits"]:
        P = Subgroup(G, tuple(int(g) for g in entry["subgroup"]))
        grp, _, _ = subgroup_group(P)
        cdoc = entry["cocycle"]
        level = int(cdoc["level"])
        k = grp.order
        vals = np.array(cdoc["values"], dtype=np.int64).reshape(k, k, 1)
        terms.append((P, Cochain(GModule.trivial(grp, level), 2, vals)))
    return rep2(G, terms)
