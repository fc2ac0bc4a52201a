"""Exact integer linear algebra: Hermite and Smith forms, lattices, characters.

Everything runs on arbitrary-precision integers.  Lattices are stored by a
canonical row Hermite basis, so structural equality is lattice equality.
Partial characters attach a root of unity to every basis row; saturation of
a character enumerates all extensions to the saturation of its lattice.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import CharacterError, DomainError, InternalError, MembershipError
from .rings import ONE, RootOfUnity

Rows = tuple[tuple[int, ...], ...]


@dataclass(frozen=True, slots=True)
class IntMatrix:
    """An immutable integer matrix; cols is explicit so empty matrices keep a shape."""

    rows: Rows
    cols: int

    def __post_init__(self):
        for row in self.rows:
            if len(row) != self.cols:
                raise DomainError("ragged matrix rows")

    @classmethod
    def of(cls, rows, cols: int | None = None) -> IntMatrix:
        tup = tuple(tuple(int(x) for x in row) for row in rows)
        if cols is None:
            if not tup:
                raise DomainError("column count required for an empty matrix")
            cols = len(tup[0])
        return cls(tup, cols)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def mul(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.nrows:
            raise DomainError("matrix shape mismatch")
        return IntMatrix(tuple(tuple(_dot_row(r, other.rows, other.cols)) for r in self.rows), other.cols)

    def transpose(self) -> IntMatrix:
        return IntMatrix(tuple(zip(*self.rows)) if self.rows else (), self.nrows) if self.cols == 0 else IntMatrix(
            tuple(tuple(row[j] for row in self.rows) for j in range(self.cols)), self.nrows
        )


def _dot_row(r, rows, cols):
    return [sum(r[k] * rows[k][j] for k in range(len(r))) for j in range(cols)]


def _identity(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def det(M: IntMatrix) -> int:
    """Integer determinant by fraction-free (Bareiss) elimination."""
    n = M.nrows
    if n != M.cols:
        raise DomainError("determinant of a non-square matrix")
    if n == 0:
        return 1
    a = [list(r) for r in M.rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if pivot is None:
                return 0
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def hnf(M: IntMatrix) -> tuple[IntMatrix, IntMatrix]:
    """Row Hermite normal form.

    Returns (H, U) with U unimodular, U*M equal to H stacked over zero rows,
    H in row echelon form with positive pivots and entries above each pivot
    reduced into [0, pivot).  H is canonical for the row lattice of M.
    """
    m, n = M.nrows, M.cols
    rows = [list(r) for r in M.rows]
    U = _identity(m)
    r = 0
    for c in range(n):
        if r == m:
            break
        # gcd elimination: shrink column c at rows >= r to one nonzero entry
        while True:
            nz = [i for i in range(r, m) if rows[i][c] != 0]
            if not nz:
                break
            i0 = min(nz, key=lambda i: abs(rows[i][c]))
            if i0 != r:
                rows[r], rows[i0] = rows[i0], rows[r]
                U[r], U[i0] = U[i0], U[r]
            if rows[r][c] < 0:
                rows[r] = [-x for x in rows[r]]
                U[r] = [-x for x in U[r]]
            done = True
            for i in range(r + 1, m):
                if rows[i][c] != 0:
                    q = rows[i][c] // rows[r][c]
                    if q:
                        rows[i] = [a - q * b for a, b in zip(rows[i], rows[r])]
                        U[i] = [a - q * b for a, b in zip(U[i], U[r])]
                    if rows[i][c] != 0:
                        done = False
            if done:
                break
        if rows[r][c] != 0:
            for i in range(r):
                q = rows[i][c] // rows[r][c]
                if q:
                    rows[i] = [a - q * b for a, b in zip(rows[i], rows[r])]
                    U[i] = [a - q * b for a, b in zip(U[i], U[r])]
            r += 1
    H = IntMatrix(tuple(tuple(row) for row in rows[:r]), n)
    return H, IntMatrix(tuple(tuple(row) for row in U), m)


def snf(M: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Smith normal form: D = U*M*V diagonal with d1 | d2 | ... and U, V unimodular."""
    m, n = M.nrows, M.cols
    A = [list(r) for r in M.rows]
    U = _identity(m)
    V = _identity(n)

    def row_op(i, j, q):  # row_i -= q * row_j
        A[i] = [a - q * b for a, b in zip(A[i], A[j])]
        U[i] = [a - q * b for a, b in zip(U[i], U[j])]

    def col_op(i, j, q):  # col_i -= q * col_j
        for row in A:
            row[i] -= q * row[j]
        for row in V:
            row[i] -= q * row[j]

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def clear_at(t):
        """Make A[t][t] the only nonzero entry in its row and column below/right of t."""
        while True:
            entries = [(abs(A[i][j]), i, j) for i in range(t, m) for j in range(t, n) if A[i][j] != 0]
            if not entries:
                return False
            _, i, j = min(entries)
            if i != t:
                swap_rows(t, i)
            if j != t:
                swap_cols(t, j)
            if A[t][t] < 0:
                A[t] = [-x for x in A[t]]
                U[t] = [-x for x in U[t]]
            dirty = False
            for i in range(t + 1, m):
                if A[i][t] != 0:
                    row_op(i, t, A[i][t] // A[t][t])
                    if A[i][t] != 0:
                        dirty = True
            for j in range(t + 1, n):
                if A[t][j] != 0:
                    col_op(j, t, A[t][j] // A[t][t])
                    if A[t][j] != 0:
                        dirty = True
            if not dirty and all(A[i][t] == 0 for i in range(t + 1, m)) and all(
                A[t][j] == 0 for j in range(t + 1, n)
            ):
                return True

    rank = 0
    for t in range(min(m, n)):
        if clear_at(t):
            rank = t + 1
        else:
            break

    # enforce the divisibility chain d_i | d_{i+1}
    changed = True
    while changed:
        changed = False
        for t in range(rank - 1):
            a, b = A[t][t], A[t + 1][t + 1]
            if b % a != 0:
                # pull gcd(a, b) into position t and restart clearing there
                col_op(t, t + 1, -1)
                for s in range(t, rank):
                    clear_at(s)
                changed = True
                break
    return (
        IntMatrix(tuple(tuple(row) for row in A), n),
        IntMatrix(tuple(tuple(row) for row in U), m),
        IntMatrix(tuple(tuple(row) for row in V), n),
    )


def kernel_basis(M: IntMatrix) -> IntMatrix:
    """Rows spanning the saturated lattice {v : M v = 0}."""
    D, _, V = snf(M)
    rank = sum(1 for i in range(min(M.nrows, M.cols)) if D.rows[i][i] != 0)
    cols = [tuple(V.rows[i][j] for i in range(M.cols)) for j in range(rank, M.cols)]
    return IntMatrix(tuple(cols), M.cols)


@dataclass(frozen=True, slots=True)
class Lattice:
    """A sublattice of Z^ambient stored by its canonical Hermite row basis."""

    ambient: int
    basis: IntMatrix

    @classmethod
    def from_rows(cls, ambient: int, rows) -> Lattice:
        M = IntMatrix.of(rows, ambient)
        H, _ = hnf(M)
        return cls(ambient, H)

    @classmethod
    def zero(cls, ambient: int) -> Lattice:
        return cls(ambient, IntMatrix((), ambient))

    @property
    def rank(self) -> int:
        return self.basis.nrows

    def solve(self, vector) -> tuple[int, ...] | None:
        """Integer coordinates of vector in the basis rows, or None."""
        v = list(vector)
        if len(v) != self.ambient:
            raise DomainError("vector has the wrong length")
        coords = []
        for row in self.basis.rows:
            p = next((j for j, x in enumerate(row) if x != 0), None)
            if p is None:  # cannot happen: no zero rows
                raise InternalError("zero row in lattice basis")
            if v[p] % row[p] != 0:
                return None
            x = v[p] // row[p]
            coords.append(x)
            if x:
                v = [a - x * b for a, b in zip(v, row)]
        if any(v):
            return None
        return tuple(coords)

    def contains(self, vector) -> bool:
        return self.solve(vector) is not None

    def contains_lattice(self, other: Lattice) -> bool:
        return all(self.contains(row) for row in other.basis.rows)


def saturate_lattice(L: Lattice) -> tuple[Lattice, int]:
    """The saturation (L tensor Q) meet Z^ambient, and the index [Sat(L) : L]."""
    if L.rank == 0:
        return L, 1
    K = kernel_basis(L.basis)
    S = kernel_basis(K) if K.nrows else IntMatrix(
        tuple(tuple(1 if i == j else 0 for j in range(L.ambient)) for i in range(L.ambient)), L.ambient
    )
    sat = Lattice.from_rows(L.ambient, S.rows)
    if sat.rank != L.rank:
        raise InternalError("saturation changed the rank")
    X = _coordinates_matrix(L.basis, sat)
    index = abs(det(X))
    if index == 0:
        raise InternalError("degenerate change of basis during saturation")
    return sat, index


def _coordinates_matrix(B: IntMatrix, lattice: Lattice) -> IntMatrix:
    """Rows of B written in the Hermite basis of lattice."""
    coords = []
    for row in B.rows:
        c = lattice.solve(row)
        if c is None:
            raise InternalError("row not contained in the target lattice")
        coords.append(c)
    return IntMatrix.of(coords, lattice.rank) if coords else IntMatrix((), lattice.rank)


@dataclass(frozen=True, slots=True)
class PartialCharacter:
    """A homomorphism from a lattice to roots of unity, given on the Hermite basis."""

    lattice: Lattice
    values: tuple[RootOfUnity, ...]

    def __post_init__(self):
        if len(self.values) != self.lattice.rank:
            raise CharacterError("one value per basis row is required")

    @classmethod
    def trivial(cls, ambient: int) -> PartialCharacter:
        return cls(Lattice.zero(ambient), ())

    @classmethod
    def from_rows(cls, ambient: int, rows, values) -> PartialCharacter:
        """Build from any spanning rows with values; checks consistency.

        Rows may be dependent; every integer relation among them must map to
        the trivial root, otherwise the data defines no character.
        """
        M = IntMatrix.of(tuple(tuple(r) for r in rows), ambient)
        values = tuple(values)
        if M.nrows != len(values):
            raise CharacterError("one value per row is required")
        H, U = hnf(M)
        out = []
        for i in range(M.nrows):
            w = ONE
            for j, u in enumerate(U.rows[i]):
                if u:
                    w = w.mul(values[j].pow(u))
            if i < H.nrows:
                out.append(w)
            elif not w.is_one():
                raise CharacterError("values are inconsistent on dependent rows")
        char = cls(Lattice(ambient, H), tuple(out))
        for row, val in zip(M.rows, values):
            if char.eval(row) != val:
                raise CharacterError("values are inconsistent across rows")
        return char

    @property
    def ambient(self) -> int:
        return self.lattice.ambient

    @property
    def rank(self) -> int:
        return self.lattice.rank

    def eval(self, vector) -> RootOfUnity:
        coords = self.lattice.solve(vector)
        if coords is None:
            raise MembershipError("vector is not in the lattice")
        out = ONE
        for x, val in zip(coords, self.values):
            if x:
                out = out.mul(val.pow(x))
        return out

    def sort_key(self):
        return (self.lattice.basis.rows, tuple(v.q for v in self.values))


def character_eval(rho: PartialCharacter, vector) -> RootOfUnity:
    return rho.eval(vector)


def saturate_character(rho: PartialCharacter) -> list[PartialCharacter]:
    """All extensions of rho to the saturation of its lattice.

    Returns exactly [Sat(L) : L] characters, sorted by their value fractions
    on the Hermite basis of the saturation.
    """
    L = rho.lattice
    sat, index = saturate_lattice(L)
    if index == 1 and sat == L:
        return [rho]
    X = _coordinates_matrix(L.basis, sat)
    D, U, V = snf(X)
    r = L.rank
    _, v_inv = hnf(V)  # V is unimodular, so its Hermite transform is its inverse
    s_prime = v_inv.mul(sat.basis)
    divisors = [D.rows[i][i] for i in range(r)]
    if any(d <= 0 for d in divisors):
        raise InternalError("nonpositive divisor in character saturation")
    base_values = []
    for i in range(r):
        w = ONE
        for j, u in enumerate(U.rows[i]):
            if u:
                w = w.mul(rho.values[j].pow(u))
        base_values.append(w)

    results: list[PartialCharacter] = []
    choices: list[list[RootOfUnity]] = [w.nth_roots(d) for w, d in zip(base_values, divisors)]
    picks = [0] * r
    while True:
        vals = tuple(choices[i][picks[i]] for i in range(r))
        results.append(PartialCharacter.from_rows(L.ambient, s_prime.rows, vals))
        i = r - 1
        while i >= 0:
            picks[i] += 1
            if picks[i] < len(choices[i]):
                break
            picks[i] = 0
            i -= 1
        if i < 0:
            break
    if len(results) != index:
        raise InternalError("saturation count does not match the lattice index")
    results.sort(key=PartialCharacter.sort_key)
    return results
