"""Exact linear algebra over the integers and finitely generated abelian groups.

Everything here works with arbitrary-precision Python ints.  The central
routine is Smith normal form with unimodular transform tracking; on top of
it sit canonical forms of presented abelian groups, homomorphisms checked
for well-definedness at construction, and homology of chain complexes of
presented groups computed by lifting through the presentations.

The Smith elimination is deterministic: the pivot is always the entry of
least absolute value in the active region, ties broken by row-major
position.  Internally matrices are kept sparse (dict per row) so that the
large, mostly-unit-entry matrices coming from bar complexes and incidence
matrices of trees reduce quickly; small dense inputs pass through the same
code path.
"""

from dataclasses import dataclass
from functools import lru_cache


# ---------------------------------------------------------------------------
# dense integer matrices (the public value type)


class IntMatrix:
    """Immutable dense integer matrix with explicit shape.

    The shape is stored explicitly so 0 x n and m x 0 matrices behave; both
    arise routinely as boundary maps at the ends of chain complexes.
    """

    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, rows, nrows=None, ncols=None):
        rows = tuple(tuple(int(v) for v in r) for r in rows)
        if nrows is None:
            nrows = len(rows)
        if ncols is None:
            if not rows:
                raise ValueError("ncols required for a matrix with no rows")
            ncols = len(rows[0])
        if len(rows) != nrows or any(len(r) != ncols for r in rows):
            raise ValueError("ragged or mis-shaped matrix")
        self.nrows = nrows
        self.ncols = ncols
        self.rows = rows

    @staticmethod
    def zeros(nrows, ncols):
        return IntMatrix(((0,) * ncols,) * nrows, nrows, ncols)

    @staticmethod
    def identity(n):
        return IntMatrix(
            tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)), n, n
        )

    @staticmethod
    def from_cols(cols, nrows):
        cols = [list(c) for c in cols]
        return IntMatrix(
            tuple(tuple(c[i] for c in cols) for i in range(nrows)), nrows, len(cols)
        )

    @staticmethod
    def from_sparse_cols(col_dicts, nrows):
        """Build from a list of {row: value} dicts."""
        rows = [[0] * len(col_dicts) for _ in range(nrows)]
        for j, col in enumerate(col_dicts):
            for i, v in col.items():
                rows[i][j] = v
        return IntMatrix(rows, nrows, len(col_dicts))

    @staticmethod
    def from_sparse_rows(row_dicts, ncols):
        rows = []
        for rd in row_dicts:
            row = [0] * ncols
            for j, v in rd.items():
                row[j] = v
            rows.append(row)
        return IntMatrix(rows, len(row_dicts), ncols)

    def at(self, i, j):
        return self.rows[i][j]

    def col(self, j):
        return tuple(r[j] for r in self.rows)

    def col_dicts(self):
        return [
            {i: self.rows[i][j] for i in range(self.nrows) if self.rows[i][j]}
            for j in range(self.ncols)
        ]

    def sparse_rows(self):
        return [{j: v for j, v in enumerate(r) if v} for r in self.rows]

    def transpose(self):
        return IntMatrix(
            tuple(tuple(self.rows[i][j] for i in range(self.nrows)) for j in range(self.ncols)),
            self.ncols,
            self.nrows,
        )

    def __matmul__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch in matrix product")
        ot = other.transpose().rows
        return IntMatrix(
            tuple(
                tuple(sum(a * b for a, b in zip(r, c)) for c in ot) for r in self.rows
            ),
            self.nrows,
            other.ncols,
        )

    def matvec(self, col_dict):
        """Product with a sparse column vector, returned as a dict."""
        out = {}
        for i, r in enumerate(self.rows):
            acc = 0
            for j, v in col_dict.items():
                if r[j]:
                    acc += r[j] * v
            if acc:
                out[i] = acc
        return out

    def hstack(self, other):
        if self.nrows != other.nrows:
            raise ValueError("row count mismatch in hstack")
        return IntMatrix(
            tuple(a + b for a, b in zip(self.rows, other.rows)),
            self.nrows,
            self.ncols + other.ncols,
        )

    @staticmethod
    def block_diag(blocks):
        nrows = sum(b.nrows for b in blocks)
        ncols = sum(b.ncols for b in blocks)
        rows = [[0] * ncols for _ in range(nrows)]
        ri = ci = 0
        for b in blocks:
            for i, r in enumerate(b.rows):
                for j, v in enumerate(r):
                    rows[ri + i][ci + j] = v
            ri += b.nrows
            ci += b.ncols
        return IntMatrix(rows, nrows, ncols)

    def is_zero(self):
        return all(all(v == 0 for v in r) for r in self.rows)

    def __eq__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return (self.nrows, self.ncols, self.rows) == (other.nrows, other.ncols, other.rows)

    def __hash__(self):
        return hash((self.nrows, self.ncols, self.rows))

    def __repr__(self):
        return f"IntMatrix({self.nrows}x{self.ncols})"


def determinant(mat):
    """Exact determinant by fraction-free (Bareiss) elimination."""
    if mat.nrows != mat.ncols:
        raise ValueError("determinant of a non-square matrix")
    n = mat.nrows
    if n == 0:
        return 1
    a = [list(r) for r in mat.rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


# ---------------------------------------------------------------------------
# Smith normal form engine


def _dict_addmul(dst, src, c):
    """dst += c * src for {key: value} vectors, dropping zeros."""
    for k, v in src.items():
        nv = dst.get(k, 0) + c * v
        if nv:
            dst[k] = nv
        else:
            dst.pop(k, None)


class _SmithEngine:
    """Sparse Smith elimination with optional transform tracking.

    Maintains U * M * V = S throughout, where U and V are products of
    elementary row and column operations.  U and Vinv are stored row-major,
    Uinv and V column-major, so each update touches one vector.
    """

    def __init__(self, row_dicts, nrows, ncols, want_u=False, want_uinv=False,
                 want_v=False, want_vinv=False):
        self.m = nrows
        self.n = ncols
        self.rows = [dict(r) for r in row_dicts]
        self.colmap = [set() for _ in range(ncols)]
        for i, r in enumerate(self.rows):
            for j in r:
                self.colmap[j].add(i)
        self.U = [{i: 1} for i in range(nrows)] if want_u else None
        self.Uinv = [{i: 1} for i in range(nrows)] if want_uinv else None
        self.V = [{j: 1} for j in range(ncols)] if want_v else None
        self.Vinv = [{j: 1} for j in range(ncols)] if want_vinv else None
        self.rank = 0
        self.diag = []

    # elementary operations; each also updates the tracked transforms

    def _row_add(self, dst, src, c):
        rd = self.rows[dst]
        for j, v in self.rows[src].items():
            nv = rd.get(j, 0) + c * v
            if nv:
                rd[j] = nv
                self.colmap[j].add(dst)
            else:
                rd.pop(j, None)
                self.colmap[j].discard(dst)
        if self.U is not None:
            _dict_addmul(self.U[dst], self.U[src], c)
        if self.Uinv is not None:
            _dict_addmul(self.Uinv[src], self.Uinv[dst], -c)

    def _row_swap(self, i1, i2):
        if i1 == i2:
            return
        for j in set(self.rows[i1]) | set(self.rows[i2]):
            members = self.colmap[j]
            has1, has2 = i1 in members, i2 in members
            if has1 != has2:
                members.discard(i1 if has1 else i2)
                members.add(i2 if has1 else i1)
        self.rows[i1], self.rows[i2] = self.rows[i2], self.rows[i1]
        if self.U is not None:
            self.U[i1], self.U[i2] = self.U[i2], self.U[i1]
        if self.Uinv is not None:
            self.Uinv[i1], self.Uinv[i2] = self.Uinv[i2], self.Uinv[i1]

    def _row_negate(self, i):
        self.rows[i] = {j: -v for j, v in self.rows[i].items()}
        if self.U is not None:
            self.U[i] = {j: -v for j, v in self.U[i].items()}
        if self.Uinv is not None:
            self.Uinv[i] = {j: -v for j, v in self.Uinv[i].items()}

    def _col_add(self, dst, src, c):
        for i in list(self.colmap[src]):
            v = self.rows[i][src]
            nv = self.rows[i].get(dst, 0) + c * v
            if nv:
                self.rows[i][dst] = nv
                self.colmap[dst].add(i)
            else:
                self.rows[i].pop(dst, None)
                self.colmap[dst].discard(i)
        if self.V is not None:
            _dict_addmul(self.V[dst], self.V[src], c)
        if self.Vinv is not None:
            _dict_addmul(self.Vinv[src], self.Vinv[dst], -c)

    def _col_swap(self, j1, j2):
        if j1 == j2:
            return
        for i in self.colmap[j1] | self.colmap[j2]:
            r = self.rows[i]
            v1, v2 = r.pop(j1, None), r.pop(j2, None)
            if v2 is not None:
                r[j1] = v2
            if v1 is not None:
                r[j2] = v1
        self.colmap[j1], self.colmap[j2] = self.colmap[j2], self.colmap[j1]
        if self.V is not None:
            self.V[j1], self.V[j2] = self.V[j2], self.V[j1]
        if self.Vinv is not None:
            self.Vinv[j1], self.Vinv[j2] = self.Vinv[j2], self.Vinv[j1]

    def _col_negate(self, j):
        for i in self.colmap[j]:
            self.rows[i][j] = -self.rows[i][j]
        if self.V is not None:
            self.V[j] = {i: -v for i, v in self.V[j].items()}
        if self.Vinv is not None:
            self.Vinv[j] = {i: -v for i, v in self.Vinv[j].items()}

    # pivoting

    def _find_pivot(self, t):
        """Least |value| in the region (rows >= t, cols >= t), row-major ties."""
        best = None
        for i in range(t, self.m):
            row_best = None
            for j, v in self.rows[i].items():
                if j < t:
                    continue
                key = (abs(v), j)
                if row_best is None or key < row_best:
                    row_best = key
            if row_best is not None:
                key = (row_best[0], i, row_best[1])
                if best is None or key < best:
                    best = key
                if best[0] == 1:
                    break  # no smaller magnitude exists, later rows lose ties
        if best is None:
            return None
        return best[1], best[2]

    def _clear_cross(self, t):
        """Make row t and column t zero away from the pivot at (t, t)."""
        while True:
            redo = False
            for i in sorted(self.colmap[t]):
                if i == t:
                    continue
                a = self.rows[i].get(t, 0)
                if not a:
                    continue
                q = a // self.rows[t][t]
                if q:
                    self._row_add(i, t, -q)
                if self.rows[i].get(t, 0):
                    self._row_swap(t, i)  # strictly smaller pivot
                    redo = True
                    break
            if redo:
                continue
            for j in sorted(self.rows[t]):
                if j == t:
                    continue
                a = self.rows[t][j]
                q = a // self.rows[t][t]
                if q:
                    self._col_add(j, t, -q)
                if self.rows[t].get(j, 0):
                    self._col_swap(t, j)
                    redo = True
                    break
            if not redo:
                return

    def run(self):
        limit = min(self.m, self.n)
        t = 0
        while t < limit:
            piv = self._find_pivot(t)
            if piv is None:
                break
            self._row_swap(t, piv[0])
            self._col_swap(t, piv[1])
            self._clear_cross(t)
            t += 1
        self.rank = t
        for i in range(self.rank):
            if self.rows[i][i] < 0:
                self._row_negate(i)
        # enforce the divisibility chain d1 | d2 | ...
        i = 0
        while i + 1 < self.rank:
            a = self.rows[i][i]
            b = self.rows[i + 1][i + 1]
            if b % a:
                self._col_add(i, i + 1, 1)
                self._clear_cross(i)
                for k in (i, i + 1):
                    if self.rows[k][k] < 0:
                        self._row_negate(k)
                i = max(i - 1, 0)
            else:
                i += 1
        self.diag = [self.rows[i].get(i, 0) for i in range(limit)]
        return self

    # exports

    def smith_matrix(self):
        return IntMatrix.from_sparse_rows(
            [{i: d} if (d := self.rows[i].get(i, 0)) else {} for i in range(self.m)],
            self.n,
        )

    def u_matrix(self):
        return IntMatrix.from_sparse_rows(self.U, self.m)

    def v_matrix(self):
        return IntMatrix.from_sparse_cols(self.V, self.n)

    def uinv_matrix(self):
        return IntMatrix.from_sparse_cols(self.Uinv, self.m)

    def vinv_matrix(self):
        return IntMatrix.from_sparse_rows(self.Vinv, self.n)

    def vinv_matvec(self, col_dict):
        """Vinv applied to a sparse column, as a dict."""
        out = {}
        for i, row in enumerate(self.Vinv):
            acc = 0
            for j, v in col_dict.items():
                w = row.get(j)
                if w:
                    acc += w * v
            if acc:
                out[i] = acc
        return out

    def u_matvec(self, col_dict):
        out = {}
        for i, row in enumerate(self.U):
            acc = 0
            for j, v in col_dict.items():
                w = row.get(j)
                if w:
                    acc += w * v
            if acc:
                out[i] = acc
        return out

    def kernel_cols(self):
        """Sparse basis columns of the integer kernel (needs V tracking)."""
        return [dict(self.V[j]) for j in range(self.rank, self.n)]


def _engine_for(mat, **want):
    return _SmithEngine(mat.sparse_rows(), mat.nrows, mat.ncols, **want).run()


def smith_normal_form(mat):
    """(U, S, V) with U @ mat @ V == S, S diagonal with d1 | d2 | ...

    U and V are unimodular.  Deterministic for a given input.

    >>> U, S, V = smith_normal_form(IntMatrix([[2, 0], [0, 3]]))
    >>> S.rows
    ((1, 0), (0, 6))
    >>> U2, S2, V2 = smith_normal_form(IntMatrix([[4, 6], [2, 2]]))
    >>> S2.rows
    ((2, 0), (0, 2))
    """
    eng = _engine_for(mat, want_u=True, want_v=True)
    return eng.u_matrix(), eng.smith_matrix(), eng.v_matrix()


def invariant_factors(mat):
    """Nonzero diagonal of the Smith form, in divisibility order."""
    eng = _engine_for(mat)
    return [d for d in eng.diag if d]


def matrix_rank(mat):
    return _engine_for(mat).rank


def kernel_basis(mat):
    """Columns forming a basis of {x : mat @ x == 0}, as an IntMatrix."""
    eng = _engine_for(mat, want_v=True)
    return IntMatrix.from_sparse_cols(eng.kernel_cols(), mat.ncols)


# ---------------------------------------------------------------------------
# finitely generated abelian groups


@dataclass(frozen=True, order=True)
class FgAbGroup:
    """Canonical form: rank plus invariant factors d1 | d2 | ..., each >= 2.

    Equality of canonical forms is isomorphism, so == doubles as iso_eq.
    """

    rank: int
    torsion: tuple = ()

    def __post_init__(self):
        if self.rank < 0:
            raise ValueError("negative rank")
        for d in self.torsion:
            if d < 2:
                raise ValueError("torsion factors must be >= 2")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError("torsion factors must form a divisibility chain")

    @property
    def is_trivial(self):
        return self.rank == 0 and not self.torsion

    def iso_eq(self, other):
        return self == other

    def to_json(self):
        return {"rank": self.rank, "torsion": list(self.torsion)}

    @staticmethod
    def from_json(data):
        return FgAbGroup(data["rank"], tuple(data["torsion"]))

    def __repr__(self):
        parts = ["Z"] * self.rank + [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) if parts else "0"


TRIVIAL_GROUP = FgAbGroup(0, ())


def direct_sum_groups(groups):
    """Canonical form of a direct sum, recomputed through Smith reduction."""
    rank = sum(g.rank for g in groups)
    orders = [d for g in groups for d in g.torsion]
    if not orders:
        return FgAbGroup(rank, ())
    diag = IntMatrix.from_sparse_cols([{i: d} for i, d in enumerate(orders)], len(orders))
    factors = [d for d in invariant_factors(diag) if d > 1]
    return FgAbGroup(rank, tuple(factors))


class PresentedGroup:
    """Z^gens modulo the column lattice of a relation matrix."""

    __slots__ = ("gens", "relations", "_canonical", "_lattice")

    def __init__(self, gens, relations=None):
        self.gens = gens
        if relations is None:
            relations = IntMatrix.zeros(gens, 0)
        if relations.nrows != gens:
            raise ValueError("relation matrix must have one row per generator")
        self.relations = relations
        self._canonical = None
        self._lattice = None

    @staticmethod
    def free(n):
        return PresentedGroup(n)

    @staticmethod
    def from_group(fg):
        """Canonical presentation: free generators first, then torsion ones."""
        g = fg.rank + len(fg.torsion)
        cols = [{fg.rank + i: d} for i, d in enumerate(fg.torsion)]
        return PresentedGroup(g, IntMatrix.from_sparse_cols(cols, g))

    def canonical(self):
        if self._canonical is None:
            factors = invariant_factors(self.relations)
            rank = self.gens - len(factors)
            torsion = tuple(d for d in factors if d > 1)
            self._canonical = FgAbGroup(rank, torsion)
        return self._canonical

    def lattice(self):
        if self._lattice is None:
            self._lattice = _Lattice(self.relations)
        return self._lattice

    @staticmethod
    def direct_sum(groups):
        return PresentedGroup(
            sum(p.gens for p in groups),
            IntMatrix.block_diag([p.relations for p in groups]),
        )

    def __repr__(self):
        return f"PresentedGroup({self.gens} gens, {self.relations.ncols} relations)"


def canonical_group(presented):
    return presented.canonical()


class _Lattice:
    """Column lattice of an integer matrix, supporting membership tests."""

    def __init__(self, mat):
        self.mat = mat
        self._eng = _engine_for(mat, want_u=True)

    def contains(self, col_dict):
        if not col_dict:
            return True
        y = self._eng.u_matvec(col_dict)
        for i, v in y.items():
            if i >= self._eng.rank:
                return False
            if v % self._eng.diag[i]:
                return False
        return True


class AbHom:
    """Homomorphism of presented groups, given by a matrix on generators.

    Well-definedness (relations land in relations) is checked eagerly at
    construction so a bad map fails where it is built, not where it is used.
    """

    __slots__ = ("source", "target", "matrix")

    def __init__(self, source, target, matrix, check=True):
        if matrix.nrows != target.gens or matrix.ncols != source.gens:
            raise ValueError("hom matrix shape mismatch")
        self.source = source
        self.target = target
        self.matrix = matrix
        if check:
            lat = target.lattice()
            for col in source.relations.col_dicts():
                if not lat.contains(matrix.matvec(col)):
                    raise ValueError("matrix does not send relations into relations")

    @staticmethod
    def identity(group):
        return AbHom(group, group, IntMatrix.identity(group.gens), check=False)

    @staticmethod
    def zero(source, target):
        return AbHom(source, target, IntMatrix.zeros(target.gens, source.gens), check=False)

    def compose(self, other):
        """self after other."""
        if other.target is not self.source and other.target.gens != self.source.gens:
            raise ValueError("composition mismatch")
        return AbHom(other.source, self.target, self.matrix @ other.matrix, check=False)

    def is_zero_hom(self):
        lat = self.target.lattice()
        return all(lat.contains(col) for col in self.matrix.col_dicts())

    @staticmethod
    def direct_sum(homs):
        return AbHom(
            PresentedGroup.direct_sum([h.source for h in homs]),
            PresentedGroup.direct_sum([h.target for h in homs]),
            IntMatrix.block_diag([h.matrix for h in homs]),
            check=False,
        )

    def is_isomorphism(self):
        """Bijective on the underlying quotient groups."""
        # surjective: generators of the target are hit modulo relations
        cok = PresentedGroup(self.target.gens, self.matrix.hstack(self.target.relations))
        if not cok.canonical().is_trivial:
            return False
        # injective: anything mapped into the target lattice was already a relation
        aug = self.matrix.hstack(self.target.relations)
        eng = _engine_for(aug, want_v=True)
        src_lat = self.source.lattice()
        for col in eng.kernel_cols():
            head = {i: v for i, v in col.items() if i < self.source.gens}
            if not src_lat.contains(head):
                return False
        return True


# ---------------------------------------------------------------------------
# chain complexes and homology


class ChainComplexFg:
    """C_0 <- C_1 <- ... <- C_n with boundaries[i] : groups[i+1] -> groups[i].

    The composite of consecutive boundaries must be the zero homomorphism
    of the quotient groups; this is verified at construction.
    """

    def __init__(self, groups, boundaries, check=True):
        if len(boundaries) != max(len(groups) - 1, 0):
            raise ValueError("need one boundary per adjacent pair")
        for i, d in enumerate(boundaries):
            if d.source.gens != groups[i + 1].gens or d.target.gens != groups[i].gens:
                raise ValueError(f"boundary {i + 1} does not match its groups")
        self.groups = list(groups)
        self.boundaries = list(boundaries)
        if check:
            for i in range(len(boundaries) - 1):
                composite = boundaries[i].matrix @ boundaries[i + 1].matrix
                if not composite.is_zero():
                    lat = groups[i].lattice()
                    for col in composite.col_dicts():
                        if not lat.contains(col):
                            raise ValueError(f"boundary composite at {i + 2} is nonzero")

    def homology_at(self, n):
        return homology_at(self, n)


class CyclePresentation:
    """Presentation of ker(d_n)/im(d_next) at a free position.

    Keeps the change-of-basis data so chains can be translated to and from
    homology-class coordinates: generator i of the presented group is the
    cycle given by column rank+i of V, and a cycle's coordinates are the
    trailing entries of Vinv applied to it.
    """

    __slots__ = ("gens", "rank", "presented", "_eng")

    def __init__(self, g, d_n, d_next):
        self._eng = _engine_for(d_n, want_v=True, want_vinv=True)
        self.rank = self._eng.rank
        self.gens = g - self.rank
        rel_cols = []
        if d_next is not None:
            for col in d_next.col_dicts():
                rel_cols.append(self.coords_of_cycle(col))
        self.presented = PresentedGroup(
            self.gens, IntMatrix.from_sparse_cols(rel_cols, self.gens)
        )

    def coords_of_cycle(self, chain_dict):
        """Coordinates of a cycle in the kernel basis, as a sparse dict."""
        y = self._eng.vinv_matvec(chain_dict)
        if any(i < self.rank for i in y):
            raise AssertionError("chain is not a cycle")
        return {i - self.rank: v for i, v in y.items()}

    def cycle_of_generator(self, i):
        """The chain representing presented generator i, as a sparse dict."""
        return dict(self._eng.V[self.rank + i])


def _free_homology(g, d_n, d_next):
    """Homology at a free position with a free predecessor."""
    return CyclePresentation(g, d_n, d_next).presented.canonical()


def homology_at(complex_, n):
    """H_n = ker(d_n) / im(d_{n+1}) as a canonical FgAbGroup.

    Positions outside the complex are zero.  Kernels and images are lifted
    through the presentations: cycles are generator vectors whose boundary
    lies in the relation lattice below, and the quotient is taken by the
    relations at n together with the image of d_{n+1}.
    """
    if n < 0 or n >= len(complex_.groups):
        return TRIVIAL_GROUP
    group = complex_.groups[n]
    g = group.gens
    if g == 0:
        return TRIVIAL_GROUP
    d_next = complex_.boundaries[n].matrix if n < len(complex_.boundaries) else None
    if n == 0:
        rels = group.relations if d_next is None else d_next.hstack(group.relations)
        return PresentedGroup(g, rels).canonical()
    d_n = complex_.boundaries[n - 1].matrix
    prev_rels = complex_.groups[n - 1].relations
    if prev_rels.ncols == 0 and group.relations.ncols == 0:
        return _free_homology(g, d_n, d_next)
    # cycles: x with d_n(x) in the lattice below, found via the kernel of
    # [d_n | prev_rels] projected onto the x block
    aug = d_n.hstack(prev_rels)
    eng1 = _engine_for(aug, want_v=True)
    cycle_gens = []
    for col in eng1.kernel_cols():
        head = {i: v for i, v in col.items() if i < g}
        cycle_gens.append(head)
    kmat = IntMatrix.from_sparse_cols(cycle_gens, g)
    eng2 = _engine_for(kmat, want_u=True)
    s = eng2.rank
    if s == 0:
        return TRIVIAL_GROUP
    # rewrite the image of d_next and the relations at n in the basis of
    # the cycle lattice; both lie inside it, so the division is exact
    mod_cols = (d_next.col_dicts() if d_next is not None else []) + group.relations.col_dicts()
    rel_cols = []
    for m in mod_cols:
        y = eng2.u_matvec(m)
        col = {}
        for i, v in y.items():
            if i >= s or v % eng2.diag[i]:
                raise AssertionError("column does not lie in the cycle lattice")
            col[i] = v // eng2.diag[i]
        rel_cols.append(col)
    return PresentedGroup(s, IntMatrix.from_sparse_cols(rel_cols, s)).canonical()


@lru_cache(maxsize=None)
def cyclic_group_homology(n, q):
    """Closed form for H_q(Z/n): Z at 0, Z/n in odd degrees, 0 in even.

    Used as an oracle against the bar-complex computation.
    """
    if q == 0:
        return FgAbGroup(1, ())
    if n == 1:
        return TRIVIAL_GROUP
    if q % 2 == 1:
        return FgAbGroup(0, (n,))
    return TRIVIAL_GROUP
