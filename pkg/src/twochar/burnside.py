"""The Burnside-style ring of decorated G-sets.

Elements are cyclotomic-rational combinations of canonical basis pairs — one
pair per conjugation orbit of (subgroup P, linear class over P); the basis
pair is exactly a canonical :class:`~twochar.reps.Orbit`.  Multiplication is
the bilinear extension of the orbit tensor product (a double-coset sum).

Mark homomorphisms evaluate an element against a pair (P, α) with α a
character of the linear-class group of P: averaging α over the conjugators
carrying P into each basis subgroup gives a ring homomorphism to ℚ(ζ).  The
matrix of all marks against all basis pairs (the table of marks, decorated)
is invertible over ℚ(ζ); its exact determinant is computed by fraction-free
Gaussian elimination over the cyclotomic field.
"""

from __future__ import annotations

from functools import lru_cache

from .cochains import abelian_structure, conjugate_pullback
from .cyclo import CycloRat, RootOfUnity, root_to_cyclo
from .errors import AlphaNotHomomorphism, GroupMismatch
from .groups import FiniteGroup, Subgroup, full_subgroup, subgroup_class_representatives
from .reps import Orbit, Rep2, _normalizer_min, _orbit_key, linear_classes, tensor

BasisPair = Orbit


@lru_cache(maxsize=None)
def basis(G: FiniteGroup) -> tuple[BasisPair, ...]:
    """Canonical basis pairs: one per conjugation orbit of (subgroup,
    linear class)."""
    out = []
    for P0 in subgroup_class_representatives(G):
        for i in sorted(set(_normalizer_min(P0))):
            out.append(Orbit(P0, i))
    return tuple(sorted(out, key=_orbit_key))


class BurnsideElement:
    """Finite ℚ(ζ)-combination of basis pairs; zero coefficients dropped."""

    __slots__ = ("group", "coefficients")

    def __init__(self, group: FiniteGroup, coefficients: dict):
        self.group = group
        self.coefficients = {
            pair: coeff for pair, coeff in coefficients.items() if not coeff.is_zero()
        }

    def __eq__(self, other) -> bool:
        if not isinstance(other, BurnsideElement):
            return NotImplemented
        return self.group == other.group and self.coefficients == other.coefficients

    def __repr__(self) -> str:
        if not self.coefficients:
            return "BurnsideElement(0)"
        parts = []
        for pair in sorted(self.coefficients, key=_orbit_key):
            c = self.coefficients[pair]
            parts.append(f"({c})·⟨{pair.schur_index}, {list(pair.subgroup.elements)}⟩")
        return "BurnsideElement(" + " + ".join(parts) + ")"


def zero_element(G: FiniteGroup) -> BurnsideElement:
    return BurnsideElement(G, {})


def basis_element(G: FiniteGroup, pair: BasisPair) -> BurnsideElement:
    return BurnsideElement(G, {pair: CycloRat.one()})


def identity_element(G: FiniteGroup) -> BurnsideElement:
    """⟨trivial class, G⟩ — the ring identity."""
    return basis_element(G, Orbit(full_subgroup(G), 0))


def add(u: BurnsideElement, v: BurnsideElement) -> BurnsideElement:
    if u.group != v.group:
        raise GroupMismatch("elements live over different groups")
    coeffs = dict(u.coefficients)
    for pair, c in v.coefficients.items():
        coeffs[pair] = coeffs.get(pair, CycloRat.zero()) + c
    return BurnsideElement(u.group, coeffs)


def scale(a, u: BurnsideElement) -> BurnsideElement:
    if not isinstance(a, CycloRat):
        a = CycloRat.from_int(int(a))
    return BurnsideElement(u.group, {p: a * c for p, c in u.coefficients.items()})


def from_rep2(r: Rep2) -> BurnsideElement:
    coeffs: dict = {}
    one = CycloRat.one()
    for o in r.orbits:
        coeffs[o] = coeffs.get(o, CycloRat.zero()) + one
    return BurnsideElement(r.group, coeffs)


@lru_cache(maxsize=None)
def _pair_product(G: FiniteGroup, a: BasisPair, b: BasisPair) -> BurnsideElement:
    return from_rep2(tensor(Rep2(G, (a,)), Rep2(G, (b,))))


def mul(u: BurnsideElement, v: BurnsideElement) -> BurnsideElement:
    if u.group != v.group:
        raise GroupMismatch("elements live over different groups")
    G = u.group
    out = zero_element(G)
    for a, ca in u.coefficients.items():
        for b, cb in v.coefficients.items():
            out = add(out, scale(ca * cb, _pair_product(G, a, b)))
    return out


# ---------------------------------------------------------------------------
# Mark homomorphisms


@lru_cache(maxsize=None)
def _mark_pullback_classes(P: Subgroup, pair: BasisPair) -> tuple[int, ...]:
    """For each g ∈ G with g·P·g⁻¹ ⊆ pair.subgroup: the linear-class index
    over P of the decoration pulled back along conjugation by g."""
    G = P.parent
    Q = pair.subgroup
    q_members = frozenset(Q.elements)
    theta = pair.cocycle
    sc_P = linear_classes(P)
    out = []
    for g in G.elements:
        if all(G.conj(g, p) in q_members for p in P.elements):
            out.append(sc_P.index_of(conjugate_pullback(theta, g, P)))
    return tuple(out)


def _check_alpha(P: Subgroup, alpha) -> list[CycloRat]:
    sc = linear_classes(P)
    values = [alpha(i) if callable(alpha) else alpha[i] for i in range(len(sc))]
    values = [v if isinstance(v, CycloRat) else CycloRat.from_int(int(v)) for v in values]
    for i in range(len(sc)):
        for j in range(len(sc)):
            if values[sc.add(i, j)] != values[i] * values[j]:
                raise AlphaNotHomomorphism(
                    f"α breaks the class group law at ({i}, {j})", witness=(i, j)
                )
    return values


def mark(P: Subgroup, alpha, u: BurnsideElement) -> CycloRat:
    """Evaluate the mark homomorphism for (P, α) on u: per basis pair
    ⟨Θ, Q⟩, average α over the pulled-back classes of Θ along every
    conjugator carrying P into Q, weighted 1/|Q|."""
    if P.parent != u.group:
        raise GroupMismatch("P is not a subgroup of the element's group")
    values = _check_alpha(P, alpha)
    total = CycloRat.zero()
    for pair, coeff in u.coefficients.items():
        acc = CycloRat.zero()
        for idx in _mark_pullback_classes(P, pair):
            acc = acc + values[idx]
        total = total + coeff * (acc / pair.subgroup.order)
    return total


@lru_cache(maxsize=None)
def _character_table(P: Subgroup):
    """All characters of the linear-class group of P, as value tuples indexed
    by class, in mixed-radix character order."""
    sc = linear_classes(P)
    n = len(sc)
    factors, coords = abelian_structure(n, sc.add)
    chars = []
    count = 1
    for f in factors:
        count *= f
    for ci in range(count):
        digits = []
        rem = ci
        for f in reversed(factors):
            digits.append(rem % f)
            rem //= f
        digits.reverse()
        vals = []
        for x in range(n):
            root = RootOfUnity(1, 0)
            for d, c, f in zip(digits, coords[x], factors):
                root = root * RootOfUnity(f, (d * c) % f)
            vals.append(CycloRat.from_cyclo(root_to_cyclo(root)))
        chars.append(tuple(vals))
    return tuple(chars)


def mark_matrix(G: FiniteGroup):
    """Rows: (class-representative subgroup P, character α of its linear
    classes); columns: basis pairs; entries: exact mark values."""
    cols = basis(G)
    rows = []
    labels = []
    for P0 in subgroup_class_representatives(G):
        for ci, char in enumerate(_character_table(P0)):
            row = [mark(P0, char, basis_element(G, pair)) for pair in cols]
            rows.append(row)
            labels.append((P0, ci))
    return labels, cols, rows


def determinant(rows: list[list[CycloRat]]) -> CycloRat:
    """Exact determinant by Gaussian elimination over ℚ(ζ)."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("matrix must be square")
    a = [list(r) for r in rows]
    det = CycloRat.one()
    for k in range(n):
        pivot = next((i for i in range(k, n) if not a[i][k].is_zero()), None)
        if pivot is None:
            return CycloRat.zero()
        if pivot != k:
            a[k], a[pivot] = a[pivot], a[k]
            det = -det
        det = det * a[k][k]
        inv = a[k][k].inverse()
        for i in range(k + 1, n):
            if a[i][k].is_zero():
                continue
            factor = a[i][k] * inv
            a[i] = [x - factor * y for x, y in zip(a[i], a[k])]
    return det


# ---------------------------------------------------------------------------
# Serialization


def element_to_json(u: BurnsideElement) -> dict:
    from .cyclo import rat_to_json

    pairs = sorted(u.coefficients, key=_orbit_key)
    return {
        "group": u.group.name,
        "terms": [
            {
                "subgroup": [int(g) for g in p.subgroup.elements],
                "class": p.schur_index,
                "coefficient": rat_to_json(u.coefficients[p]),
            }
            for p in pairs
        ],
    }


def pretty_element(u: BurnsideElement) -> str:
    if not u.coefficients:
        return "0"
    parts = []
    for pair in sorted(u.coefficients, key=_orbit_key):
        c = u.coefficients[pair]
        sub = ",".join(str(g) for g in pair.subgroup.elements)
        parts.append(f"({c})·⟨{pair.schur_index}|{{{sub}}}⟩")
    return " + ".join(parts)
