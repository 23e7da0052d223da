"""Finite groups by multiplication table, and their integral homology.

Groups are small enough here to store complete tables: group axioms are
verified exhaustively at construction (associativity up to a configurable
ceiling), and homomorphisms are verified to be multiplicative when built.

Homology is computed from the normalized inhomogeneous bar complex: chains
in degree q are spanned by q-tuples of non-identity elements, tuples that
acquire an identity entry under face maps are dropped, and the resulting
free complex is reduced with the exact integer machinery from the abelian
module.  Ceilings keep tuple counts bounded; beyond the size where the
change-of-basis data is retained (needed for induced maps) the invariants
are still computed from the rank of d_q and the Smith divisors of d_{q+1}.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .abelian import (
    CyclePresentation,
    FgAbGroup,
    IntMatrix,
    PresentedGroup,
    AbHom,
    TRIVIAL_GROUP,
    _engine_for,
    invariant_factors,
)
from .errors import TooLargeError
from .field import quadratic_extension


@dataclass(frozen=True)
class BarLimits:
    """Size ceilings for homology computations.

    max_order and max_degree bound what bar_homology accepts at all;
    dense_columns bounds the tuple count (|G|-1)^(q+1) up to which the
    cycle basis is kept, which induced_map requires.
    """

    max_order: int = 24
    max_degree: int = 3
    dense_columns: int = 600


DEFAULT_LIMITS = BarLimits()


class FiniteGroup:
    """Group given by its multiplication table over indexed elements.

    elements are arbitrary hashable keys (field elements, matrices as
    tuples, coset representatives); the table works on indices.  Equality
    and hashing use only the table and identity, so structurally identical
    groups share cached homology.
    """

    def __init__(self, elements, table, name="", assoc_ceiling=64):
        self.elements = tuple(elements)
        self.index = {e: i for i, e in enumerate(self.elements)}
        if len(self.index) != len(self.elements):
            raise ValueError("duplicate elements")
        self.order = len(self.elements)
        self.table = tuple(tuple(row) for row in table)
        self.name = name or f"group({self.order})"
        if len(self.table) != self.order or any(len(r) != self.order for r in self.table):
            raise ValueError("table shape mismatch")
        ident = [
            i
            for i in range(self.order)
            if all(self.table[i][j] == j and self.table[j][i] == j for j in range(self.order))
        ]
        if len(ident) != 1:
            raise ValueError("group must have exactly one identity")
        self.identity = ident[0]
        self.inverses = []
        for i in range(self.order):
            inv = [j for j in range(self.order) if self.table[i][j] == self.identity]
            if len(inv) != 1 or self.table[inv[0]][i] != self.identity:
                raise ValueError(f"element {i} has no two-sided inverse")
            self.inverses.append(inv[0])
        self.inverses = tuple(self.inverses)
        if self.order <= assoc_ceiling:
            t = self.table
            for a in range(self.order):
                for b in range(self.order):
                    ab = t[a][b]
                    for c in range(self.order):
                        if t[ab][c] != t[a][t[b][c]]:
                            raise ValueError("multiplication is not associative")

    def mul(self, i, j):
        return self.table[i][j]

    def is_abelian(self):
        t = self.table
        return all(t[i][j] == t[j][i] for i in range(self.order) for j in range(self.order))

    def __eq__(self, other):
        if not isinstance(other, FiniteGroup):
            return NotImplemented
        return self.table == other.table and self.identity == other.identity

    def __hash__(self):
        return hash((self.table, self.identity))

    def __repr__(self):
        return f"{self.name}[order {self.order}]"


def group_from_elements(elements, mul, name="", assoc_ceiling=64):
    """Build a FiniteGroup from element keys and a multiplication function."""
    elements = list(elements)
    index = {e: i for i, e in enumerate(elements)}
    table = []
    for a in elements:
        row = []
        for b in elements:
            c = mul(a, b)
            if c not in index:
                raise ValueError(f"product {c!r} escapes the element set")
            row.append(index[c])
        table.append(row)
    return FiniteGroup(elements, table, name=name, assoc_ceiling=assoc_ceiling)


class GroupHom:
    """Homomorphism as an index mapping, verified multiplicative."""

    def __init__(self, source, target, mapping):
        self.source = source
        self.target = target
        self.mapping = tuple(mapping)
        if len(self.mapping) != source.order:
            raise ValueError("mapping length mismatch")
        if self.mapping[source.identity] != target.identity:
            raise ValueError("identity is not preserved")
        for a in range(source.order):
            for b in range(source.order):
                if self.mapping[source.table[a][b]] != target.table[self.mapping[a]][self.mapping[b]]:
                    raise ValueError("mapping is not multiplicative")

    def __call__(self, i):
        return self.mapping[i]

    def is_injective(self):
        return len(set(self.mapping)) == self.source.order


def hom_from_function(source, target, fn):
    """Hom from a function on element keys."""
    return GroupHom(source, target, [target.index[fn(e)] for e in source.elements])


# ---------------------------------------------------------------------------
# constructors


def cyclic(n):
    return group_from_elements(range(n), lambda a, b: (a + b) % n, name=f"C{n}")


def direct_product(g, h):
    return group_from_elements(
        [(a, b) for a in g.elements for b in h.elements],
        lambda x, y: (g.elements[g.table[g.index[x[0]]][g.index[y[0]]]],
                      h.elements[h.table[h.index[x[1]]][h.index[y[1]]]]),
        name=f"{g.name}x{h.name}",
    )


def unit_group(field):
    return group_from_elements(field.units(), lambda a, b: a * b, name=f"{field!r}^*")


def additive_group(field):
    return group_from_elements(field.elements(), lambda a, b: a + b, name=f"{field!r}+")


def _det2(m):
    a, b, c, d = m
    return a * d - b * c


def gl2(field):
    """Invertible 2x2 matrices as (a, b, c, d) row-major tuples."""
    els = [
        m
        for m in product(field.elements(), repeat=4)
        if not _det2(m).is_zero()
    ]

    def mul(x, y):
        a, b, c, d = x
        e, f, g, h = y
        return (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)

    return group_from_elements(els, mul, name=f"GL2({field!r})")


def pgl2_canonical(m):
    """Scale a nonzero 2x2 matrix so its first nonzero entry is 1."""
    lead = next(v for v in m if not v.is_zero())
    inv = lead.inverse()
    return tuple(v * inv for v in m)


def pgl2(field):
    """GL2 modulo scalars; elements are the scaled canonical representatives."""
    seen = {}
    for m in product(field.elements(), repeat=4):
        if _det2(m).is_zero():
            continue
        seen.setdefault(pgl2_canonical(m), None)
    els = sorted(seen, key=lambda m: tuple(v.coeffs for v in m))

    def mul(x, y):
        a, b, c, d = x
        e, f, g, h = y
        return pgl2_canonical((a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h))

    return group_from_elements(els, mul, name=f"PGL2({field!r})")


def triangular_group(field, n):
    """Matrices [[p, q], [0, s]] with units p, s and q an n-vector entry.

    Multiplication follows the 2x2 pattern with the vector slot acted on
    coordinatewise: (p1,s1,q1)(p2,s2,q2) = (p1p2, s1s2, p1*q2 + q1*s2).
    For n = 0 this is the diagonal torus, a product of two unit groups.
    """
    units = field.units()
    vectors = list(product(field.elements(), repeat=n))
    els = [(p, s, q) for p in units for s in units for q in vectors]

    def mul(x, y):
        p1, s1, q1 = x
        p2, s2, q2 = y
        return (p1 * p2, s1 * s2, tuple(p1 * b + a * s2 for a, b in zip(q1, q2)))

    return group_from_elements(els, mul, name=f"Tri({field!r},{n})")


def scalar_subgroup_indices(tri):
    """Indices of the scalar matrices (l, l, 0) inside a triangular group."""
    out = []
    for i, (p, s, q) in enumerate(tri.elements):
        if p == s and all(v.is_zero() for v in q):
            out.append(i)
    return out


# ---------------------------------------------------------------------------
# subgroups and quotients


def subgroup_closure(group, generator_indices):
    """Sorted indices of the subgroup generated by the given elements."""
    gens = set(generator_indices)
    gens |= {group.inverses[g] for g in gens}
    members = {group.identity} | gens
    frontier = list(members)
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = group.table[a][g]
                if b not in members:
                    members.add(b)
                    nxt.append(b)
        frontier = nxt
    return sorted(members)


def commutator_subgroup(group):
    comms = {
        group.table[group.table[a][b]][group.table[group.inverses[a]][group.inverses[b]]]
        for a in range(group.order)
        for b in range(group.order)
    }
    return subgroup_closure(group, comms)


def quotient_by_normal(group, subgroup_indices):
    """(quotient group, projection hom) for a normal subgroup.

    Coset representatives are the least member of each coset, so the
    construction is deterministic.
    """
    sub = set(subgroup_indices)
    if group.identity not in sub:
        raise ValueError("subgroup must contain the identity")
    for a in sub:
        for b in sub:
            if group.table[a][b] not in sub:
                raise ValueError("subset is not closed under multiplication")
    for g in range(group.order):
        gi = group.inverses[g]
        for n in sub:
            if group.table[group.table[g][n]][gi] not in sub:
                raise ValueError("subgroup is not normal")
    coset_of = {}
    reps = []
    for g in range(group.order):
        if g in coset_of:
            continue
        members = {group.table[g][n] for n in sub}
        for m in members:
            coset_of[m] = len(reps)
        reps.append(g)
    table = [
        [coset_of[group.table[a][b]] for b in reps]
        for a in reps
    ]
    quotient = FiniteGroup([group.elements[r] for r in reps], table,
                           name=f"{group.name}/N{len(sub)}")
    proj = GroupHom(group, quotient, [coset_of[g] for g in range(group.order)])
    return quotient, proj


def quotient_by_central(group, subgroup_indices):
    """Quotient by a subgroup required to be central."""
    for n in subgroup_indices:
        for g in range(group.order):
            if group.table[n][g] != group.table[g][n]:
                raise ValueError("subgroup is not central")
    return quotient_by_normal(group, subgroup_indices)


# ---------------------------------------------------------------------------
# bar homology


def _bar_tuples(group, q):
    nonid = [i for i in range(group.order) if i != group.identity]
    return list(product(nonid, repeat=q))


def _bar_boundary_cols(group, q, tuples_q, prev_index):
    """Sparse columns of d_q : C_q -> C_{q-1} in the normalized complex."""
    e = group.identity
    t = group.table
    cols = []
    for tup in tuples_q:
        col = {}

        def add(key, c):
            v = col.get(key, 0) + c
            if v:
                col[key] = v
            else:
                col.pop(key, None)

        add(prev_index[tup[1:]], 1)
        sign = -1
        for i in range(1, q):
            m = t[tup[i - 1]][tup[i]]
            if m != e:
                add(prev_index[tup[: i - 1] + (m,) + tup[i + 1 :]], sign)
            sign = -sign
        add(prev_index[tup[:-1]], sign)
        cols.append(col)
    return cols


class BarHomology:
    """Homology of a group in one degree, with chain-level access.

    Wraps a CyclePresentation over the bar complex so induced maps can
    translate between homology classes and explicit chains.
    """

    def __init__(self, group, q):
        self.group = group
        self.q = q
        self.tuples = _bar_tuples(group, q)
        self.tuple_index = {t: i for i, t in enumerate(self.tuples)}
        n_q = len(self.tuples)
        if n_q == 0:
            self.cycles = None
            self.presented = PresentedGroup(0)
            return
        prev = _bar_tuples(group, q - 1)
        prev_index = {t: i for i, t in enumerate(prev)}
        d_q_cols = _bar_boundary_cols(group, q, self.tuples, prev_index)
        d_q = IntMatrix.from_sparse_cols(d_q_cols, len(prev))
        nxt = _bar_tuples(group, q + 1)
        d_next_cols = _bar_boundary_cols(group, q + 1, nxt, self.tuple_index)
        d_next = IntMatrix.from_sparse_cols(d_next_cols, n_q)
        self.cycles = CyclePresentation(n_q, d_q, d_next)
        self.presented = self.cycles.presented

    def canonical(self):
        return self.presented.canonical()


@lru_cache(maxsize=None)
def _bar_data(group, q):
    return BarHomology(group, q)


def _check_limits(group, q, limits):
    if group.order > limits.max_order:
        raise TooLargeError(f"bar homology of {group.name}", group.order, limits.max_order)
    if q > limits.max_degree:
        raise TooLargeError(f"homology degree for {group.name}", q, limits.max_degree)


def _tuple_count(group, q):
    return max(group.order - 1, 1) ** q if group.order > 1 else (1 if q == 0 else 0)


@lru_cache(maxsize=None)
def _bar_invariants_large(group, q):
    """Rank-nullity route for sizes where the cycle basis is not kept."""
    tuples_q = _bar_tuples(group, q)
    n_q = len(tuples_q)
    if n_q == 0:
        return TRIVIAL_GROUP
    tuple_index = {t: i for i, t in enumerate(tuples_q)}
    prev = _bar_tuples(group, q - 1)
    prev_index = {t: i for i, t in enumerate(prev)}
    d_q = IntMatrix.from_sparse_cols(
        _bar_boundary_cols(group, q, tuples_q, prev_index), len(prev)
    )
    rank_dq = _engine_for(d_q).rank
    nxt = _bar_tuples(group, q + 1)
    d_next_cols = _bar_boundary_cols(group, q + 1, nxt, tuple_index)
    factors = invariant_factors(IntMatrix.from_sparse_cols(d_next_cols, n_q))
    betti = n_q - rank_dq - len(factors)
    return FgAbGroup(betti, tuple(d for d in factors if d > 1))


def bar_homology(group, q, limits=DEFAULT_LIMITS):
    """H_q(G; Z) from the normalized bar complex.

    >>> bar_homology(cyclic(4), 1)
    Z/4
    >>> bar_homology(cyclic(4), 0)
    Z
    """
    if q < 0:
        return TRIVIAL_GROUP
    if q == 0:
        return FgAbGroup(1, ())
    _check_limits(group, q, limits)
    if _tuple_count(group, q + 1) <= limits.dense_columns:
        return _bar_data(group, q).canonical()
    return _bar_invariants_large(group, q)


def induced_map(hom, q, limits=DEFAULT_LIMITS):
    """The map on degree-q homology induced by a group homomorphism.

    Needs the chain-level data on both sides, so both groups must be within
    the dense ceiling.  Entrywise application of the hom is a chain map of
    normalized bar complexes (tuples hitting the identity are dropped).
    """
    for g in (hom.source, hom.target):
        _check_limits(g, q, limits)
        if _tuple_count(g, q + 1) > limits.dense_columns:
            raise TooLargeError(f"induced map chain data for {g.name}",
                                _tuple_count(g, q + 1), limits.dense_columns)
    src = _bar_data(hom.source, q)
    tgt = _bar_data(hom.target, q)
    if q == 0:
        return AbHom(src.presented, tgt.presented, IntMatrix.identity(1), check=False)
    cols = []
    e = hom.target.identity
    for i in range(src.presented.gens):
        chain = src.cycles.cycle_of_generator(i)
        pushed = {}
        for tidx, coeff in chain.items():
            image = tuple(hom.mapping[g] for g in src.tuples[tidx])
            if e in image:
                continue
            key = tgt.tuple_index[image]
            v = pushed.get(key, 0) + coeff
            if v:
                pushed[key] = v
            else:
                pushed.pop(key, None)
        cols.append(tgt.cycles.coords_of_cycle(pushed))
    matrix = IntMatrix.from_sparse_cols(cols, tgt.presented.gens)
    return AbHom(src.presented, tgt.presented, matrix)


def homology_presentation(group, q, limits=DEFAULT_LIMITS):
    """The presented homology group in degree q (dense path only)."""
    _check_limits(group, q, limits)
    if _tuple_count(group, q + 1) > limits.dense_columns:
        raise TooLargeError(f"homology presentation for {group.name}",
                            _tuple_count(group, q + 1), limits.dense_columns)
    return _bar_data(group, q).presented


def abelianization(group):
    """G/[G,G] as a canonical abelian group.

    The commutator subgroup is enumerated and closed off, the quotient
    group is formed, and its multiplication table is flattened into the
    relation lattice x_a + x_b - x_ab over the non-identity elements.
    """
    comm = commutator_subgroup(group)
    quotient, _ = quotient_by_normal(group, comm)
    nonid = [i for i in range(quotient.order) if i != quotient.identity]
    pos = {g: i for i, g in enumerate(nonid)}
    cols = []
    e = quotient.identity
    for a in nonid:
        for b in nonid:
            col = {}

            def add(g, c):
                if g == e:
                    return
                v = col.get(pos[g], 0) + c
                if v:
                    col[pos[g]] = v
                else:
                    col.pop(pos[g], None)

            add(a, 1)
            add(b, 1)
            add(quotient.table[a][b], -1)
            cols.append(col)
    return PresentedGroup(len(nonid), IntMatrix.from_sparse_cols(cols, len(nonid))).canonical()


# ---------------------------------------------------------------------------
# stabilizer-flavored constructions tied to a field


@lru_cache(maxsize=None)
def cusp_group(field, n):
    """(quotient, projection, triangular parent) of the depth-n cusp group.

    The parent is the triangular group with an n-vector slot; the quotient
    removes the central scalars, which is the stabilizer seen by the
    projective action.
    """
    tri = triangular_group(field, n)
    quotient, proj = quotient_by_central(tri, scalar_subgroup_indices(tri))
    return quotient, proj, tri


@lru_cache(maxsize=None)
def cusp_chain_inclusion(field, n):
    """Depth-n cusp group into depth-(n+1), padding the vector with a zero."""
    q_n, proj_n, tri_n = cusp_group(field, n)
    q_next, proj_next, tri_next = cusp_group(field, n + 1)

    def fn(key):
        p, s, vec = key
        padded = tri_next.index[(p, s, vec + (field.zero,))]
        return q_next.elements[proj_next.mapping[padded]]

    return hom_from_function(q_n, q_next, fn)


@lru_cache(maxsize=None)
def additive_to_cusp(field):
    """k into the depth-1 cusp group as the unipotent part (1, 1, (u,))."""
    add = additive_group(field)
    q1, proj, tri = cusp_group(field, 1)

    def fn(u):
        return q1.elements[proj.mapping[tri.index[(field.one, field.one, (u,))]]]

    return hom_from_function(add, q1, fn)


@lru_cache(maxsize=None)
def units_to_cusp(field):
    """k^* into the depth-1 cusp group as (l, 1, (0,))."""
    units = unit_group(field)
    q1, proj, tri = cusp_group(field, 1)

    def fn(u):
        return q1.elements[proj.mapping[tri.index[(u, field.one, (field.zero,))]]]

    return hom_from_function(units, q1, fn)


@lru_cache(maxsize=None)
def cusp_to_pgl2(field):
    """Depth-1 cusp group onto the upper-triangular subgroup of PGL2."""
    q1, proj, tri = cusp_group(field, 1)
    target = pgl2(field)

    def fn(key):
        p, s, (u,) = key
        return pgl2_canonical((p, u, field.zero, s))

    return hom_from_function(q1, target, fn)


@lru_cache(maxsize=None)
def quad_units_group(field):
    """Units of the quadratic extension modulo the embedded base units."""
    ext, emb = quadratic_extension(field)
    big = unit_group(ext)
    embedded = sorted(big.index[emb(u)] for u in field.units())
    quotient, proj = quotient_by_central(big, embedded)
    return quotient, proj


@lru_cache(maxsize=None)
def diagonal_to_triangular(field, n):
    """The diagonal torus (p, s) included into the triangular group."""
    torus = triangular_group(field, 0)
    tri = triangular_group(field, n)
    zero_vec = (field.zero,) * n

    def fn(key):
        p, s, _ = key
        return (p, s, zero_vec)

    return hom_from_function(torus, tri, fn)
