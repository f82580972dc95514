"""Two-term L-infinity algebras: data model, bracket, and the axiom verifier.

An algebra lives on coordinates: degree 0 has basis e_0..e_{n0-1}, degree 1
has f_0..f_{n1-1}.  Structure data is stored densely:

* ``d``   : n0 x n1 matrix of the differential (degree 1 -> degree 0);
* ``b00`` : b00[i][j][t] = coefficient of e_t in [e_i, e_j];
* ``b01`` : b01[i][j][t] = coefficient of f_t in [e_i, f_j];
* ``jac`` : jac[i][j][k][t] = coefficient of f_t in J(e_i, e_j, e_k).

The bracket of two degree-1 elements vanishes for degree reasons and is not
stored; the bracket extends to mixed arguments by [v, x] = -[x, v].

Antisymmetry of ``b00``/``jac`` is stored redundantly (full tensors) and
validated as an explicit verifier stage, which keeps every contraction a
plain table lookup.  Because all structure maps are multilinear, checking
the five defining equations on basis tuples is sufficient; the verifier
walks tuples in lexicographic order and reports the first failure per
equation, so reports are deterministic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterator, Sequence

from .linalg import Matrix, ZERO, vec, vec_add, vec_sub, vec_zero, is_zero_vec

# ---------------------------------------------------------------------------
# shuffles
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ShuffleSet:
    """All (m, n)-shuffles with ordinary permutation signs.

    A shuffle is a permutation of {0..m+n-1} (images stored 0-based) that is
    increasing on its first m and on its last n positions.  Elements are
    listed in lexicographic order of the image tuple.
    """

    m: int
    n: int
    elements: tuple[tuple[tuple[int, ...], int], ...]


def perm_sign(perm: Sequence[int]) -> int:
    inversions = 0
    for a in range(len(perm)):
        pa = perm[a]
        for b in range(a + 1, len(perm)):
            if pa > perm[b]:
                inversions += 1
    return -1 if inversions & 1 else 1


@lru_cache(maxsize=None)
def shuffles(m: int, n: int) -> ShuffleSet:
    if m < 0 or n < 0:
        raise ValueError("shuffle arguments must be nonnegative")
    if m + n > 8:
        raise ValueError("shuffle size limited to m + n <= 8")
    total = m + n
    elements = []
    for head in combinations(range(total), m):
        head_set = set(head)
        tail = tuple(i for i in range(total) if i not in head_set)
        perm = head + tail
        elements.append((perm, perm_sign(perm)))
    elements.sort()
    expected = math.comb(total, m)
    assert len(elements) == expected
    return ShuffleSet(m, n, tuple(elements))


# ---------------------------------------------------------------------------
# tensors
# ---------------------------------------------------------------------------

Vec = tuple[Fraction, ...]
Tensor3 = tuple[tuple[Vec, ...], ...]
Tensor4 = tuple[tuple[tuple[Vec, ...], ...], ...]


def tensor3(data, shape: tuple[int, int, int]) -> Tensor3:
    a, b, c = shape
    data = tuple(tuple(vec(row) for row in plane) for plane in data)
    if len(data) != a or any(len(p) != b for p in data) or any(
        len(r) != c for p in data for r in p
    ):
        raise ValueError(f"tensor shape mismatch, expected {shape}")
    return data


def tensor4(data, shape: tuple[int, int, int, int]) -> Tensor4:
    a, b, c, dd = shape
    data = tuple(tuple(tuple(vec(row) for row in plane) for plane in block) for block in data)
    if (
        len(data) != a
        or any(len(bk) != b for bk in data)
        or any(len(p) != c for bk in data for p in bk)
        or any(len(r) != dd for bk in data for p in bk for r in p)
    ):
        raise ValueError(f"tensor shape mismatch, expected {shape}")
    return data


def zero_tensor3(shape: tuple[int, int, int]) -> Tensor3:
    a, b, c = shape
    return tuple(tuple(vec_zero(c) for _ in range(b)) for _ in range(a))


def zero_tensor4(shape: tuple[int, int, int, int]) -> Tensor4:
    a, b, c, dd = shape
    return tuple(tuple(tuple(vec_zero(dd) for _ in range(c)) for _ in range(b)) for _ in range(a))


# ---------------------------------------------------------------------------
# the algebra
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TwoTermAlgebra:
    n0: int
    n1: int
    d: Matrix
    b00: Tensor3
    b01: Tensor3
    jac: Tensor4

    def __post_init__(self):
        d = self.d
        if not isinstance(d, Matrix):
            d = Matrix.from_rows([tuple(r) for r in d], cols=self.n1)
        if d.rows != self.n0 or d.cols != self.n1:
            raise ValueError(f"d must be {self.n0}x{self.n1}")
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "b00", tensor3(self.b00, (self.n0, self.n0, self.n0)))
        object.__setattr__(self, "b01", tensor3(self.b01, (self.n0, self.n1, self.n1)))
        object.__setattr__(self, "jac", tensor4(self.jac, (self.n0, self.n0, self.n0, self.n1)))

    @classmethod
    def zero(cls, n0: int, n1: int) -> "TwoTermAlgebra":
        return cls(
            n0,
            n1,
            Matrix.zero(n0, n1),
            zero_tensor3((n0, n0, n0)),
            zero_tensor3((n0, n1, n1)),
            zero_tensor4((n0, n0, n0, n1)),
        )


@dataclass(frozen=True)
class Element:
    """An element of L0 + L1, stored as its pair of coordinate tuples."""

    deg0: Vec
    deg1: Vec

    def __post_init__(self):
        object.__setattr__(self, "deg0", vec(self.deg0))
        object.__setattr__(self, "deg1", vec(self.deg1))

    @classmethod
    def degree0(cls, L: TwoTermAlgebra, coords) -> "Element":
        return cls(vec(coords), vec_zero(L.n1))

    @classmethod
    def degree1(cls, L: TwoTermAlgebra, coords) -> "Element":
        return cls(vec_zero(L.n0), vec(coords))

    @classmethod
    def basis0(cls, L: TwoTermAlgebra, i: int) -> "Element":
        return cls.degree0(L, tuple(1 if k == i else 0 for k in range(L.n0)))

    @classmethod
    def basis1(cls, L: TwoTermAlgebra, i: int) -> "Element":
        return cls.degree1(L, tuple(1 if k == i else 0 for k in range(L.n1)))

    def __add__(self, other: "Element") -> "Element":
        return Element(vec_add(self.deg0, other.deg0), vec_add(self.deg1, other.deg1))

    def __sub__(self, other: "Element") -> "Element":
        return Element(vec_sub(self.deg0, other.deg0), vec_sub(self.deg1, other.deg1))

    def is_zero(self) -> bool:
        return is_zero_vec(self.deg0) and is_zero_vec(self.deg1)


# -- raw contractions on coordinate tuples ----------------------------------


def bracket00(L: TwoTermAlgebra, u: Vec, v: Vec) -> Vec:
    """[u, v] for two degree-0 coordinate vectors."""
    out = [ZERO] * L.n0
    for p, cp in enumerate(u):
        if not cp:
            continue
        plane = L.b00[p]
        for q, cq in enumerate(v):
            if not cq:
                continue
            c = cp * cq
            row = plane[q]
            for t in range(L.n0):
                if row[t]:
                    out[t] += c * row[t]
    return tuple(out)


def bracket_mixed(L: TwoTermAlgebra, u: Vec, w: Vec) -> Vec:
    """[u, w] for u in degree 0, w in degree 1."""
    out = [ZERO] * L.n1
    for p, cp in enumerate(u):
        if not cp:
            continue
        plane = L.b01[p]
        for q, cq in enumerate(w):
            if not cq:
                continue
            c = cp * cq
            row = plane[q]
            for t in range(L.n1):
                if row[t]:
                    out[t] += c * row[t]
    return tuple(out)


def jacobiator(L: TwoTermAlgebra, u: Vec, v: Vec, w: Vec) -> Vec:
    """J(u, v, w) for degree-0 coordinate vectors."""
    out = [ZERO] * L.n1
    for p, cp in enumerate(u):
        if not cp:
            continue
        for q, cq in enumerate(v):
            if not cq:
                continue
            cpq = cp * cq
            plane = L.jac[p][q]
            for r, cr in enumerate(w):
                if not cr:
                    continue
                c = cpq * cr
                row = plane[r]
                for t in range(L.n1):
                    if row[t]:
                        out[t] += c * row[t]
    return tuple(out)


def bracket(L: TwoTermAlgebra, x: Element, y: Element) -> Element:
    """Bilinear bracket on L0 + L1.

    Degree-0 output comes from the two degree-0 parts; mixed parts use
    [v, x] = -[x, v]; two degree-1 parts bracket to zero.
    """
    out0 = bracket00(L, x.deg0, y.deg0)
    out1 = vec_sub(bracket_mixed(L, x.deg0, y.deg1), bracket_mixed(L, y.deg0, x.deg1))
    return Element(out0, out1)


# ---------------------------------------------------------------------------
# verification
# ---------------------------------------------------------------------------

EQ_D_BRACKET = "d-bracket-compat"          # d([x,v]) = [x,d(v)]
EQ_D_SYMMETRY = "d-bracket-symmetry"       # [d(u),v] = [u,d(v)]
EQ_JACOBI_DEFECT = "jacobi-defect"         # d(J(x,y,z)) = jacobi defect of [.,.]
EQ_JACOBI_DEFECT_DEG1 = "jacobi-defect-deg1"  # J(d(v),y,z) = mixed jacobi defect
EQ_COHERENCE = "jacobiator-coherence"      # shuffle identity in four arguments

ALGEBRA_EQUATIONS = (
    EQ_D_BRACKET,
    EQ_D_SYMMETRY,
    EQ_JACOBI_DEFECT,
    EQ_JACOBI_DEFECT_DEG1,
    EQ_COHERENCE,
)


@dataclass(frozen=True)
class EquationFailure:
    equation: str
    args: tuple[int, ...]
    discrepancy: Vec


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of a basis-tuple check of a family of defining equations.

    ``structure_errors`` lists violated storage invariants (antisymmetry);
    equations are only checked when the structure is clean.  ``failures``
    holds the lexicographically first failing tuple per equation.
    """

    equations: tuple[str, ...]
    structure_errors: tuple[str, ...]
    failures: tuple[EquationFailure, ...]

    @property
    def passed(self) -> bool:
        return not self.structure_errors and not self.failures

    def failure_for(self, equation: str) -> EquationFailure | None:
        for f in self.failures:
            if f.equation == equation:
                return f
        return None

    def lines(self) -> list[str]:
        out = []
        for err in self.structure_errors:
            out.append(f"structure: {err}")
        if self.structure_errors:
            return out
        failed = {f.equation: f for f in self.failures}
        for eq in self.equations:
            if eq in failed:
                f = failed[eq]
                disc = ", ".join(str(c) for c in f.discrepancy)
                out.append(f"{eq}: FAIL at {f.args} discrepancy ({disc})")
            else:
                out.append(f"{eq}: ok")
        return out


def structure_violations(L: TwoTermAlgebra) -> tuple[str, ...]:
    """Antisymmetry of b00 in its two slots and of jac in its three slots."""
    errors = []
    for i in range(L.n0):
        for j in range(i, L.n0):
            if not is_zero_vec(vec_add(L.b00[i][j], L.b00[j][i])):
                errors.append(f"b00 antisymmetry violated at ({i}, {j})")
    for idx in _jac_violations(L):
        errors.append(f"jac antisymmetry violated at {idx}")
    return tuple(errors)


def _jac_violations(L: TwoTermAlgebra) -> Iterator[tuple[int, int, int]]:
    for i in range(L.n0):
        for j in range(L.n0):
            for k in range(L.n0):
                key = (i, j, k)
                if len({i, j, k}) < 3:
                    if not is_zero_vec(L.jac[i][j][k]):
                        yield key
                    continue
                srt = tuple(sorted(key))
                sign = perm_sign(_rank_pattern(key))
                expected = tuple(sign * c for c in L.jac[srt[0]][srt[1]][srt[2]])
                if L.jac[i][j][k] != expected:
                    yield key


def _rank_pattern(key: tuple[int, ...]) -> tuple[int, ...]:
    order = sorted(key)
    return tuple(order.index(k) for k in key)


def verify(L: TwoTermAlgebra) -> VerificationReport:
    """Check the five defining equations on all basis tuples.

    Multilinearity makes basis checks sufficient, so no random sampling is
    involved.  Tuple ranges follow the symmetries of each equation: all
    (n0 x n1) pairs, all (n1 x n1) pairs, strictly increasing triples,
    n1 x increasing pairs, and strictly increasing 4-tuples.
    """
    structure = structure_violations(L)
    if structure:
        return VerificationReport(ALGEBRA_EQUATIONS, structure, ())

    failures = []
    n0, n1 = L.n0, L.n1
    d = L.d
    dcols = [d.column(j) for j in range(n1)]

    # d([e_i, f_j]) = [e_i, d(f_j)]
    fail = None
    for i in range(n0):
        for j in range(n1):
            lhs = d.apply(L.b01[i][j])
            rhs = bracket00(L, _basis(n0, i), dcols[j])
            disc = vec_sub(lhs, rhs)
            if not is_zero_vec(disc):
                fail = EquationFailure(EQ_D_BRACKET, (i, j), disc)
                break
        if fail:
            break
    if fail:
        failures.append(fail)

    # [d(f_i), f_j] = [f_i, d(f_j)]
    fail = None
    for i in range(n1):
        for j in range(n1):
            lhs = bracket_mixed(L, dcols[i], _basis(n1, j))
            rhs = tuple(-c for c in bracket_mixed(L, dcols[j], _basis(n1, i)))
            disc = vec_sub(lhs, rhs)
            if not is_zero_vec(disc):
                fail = EquationFailure(EQ_D_SYMMETRY, (i, j), disc)
                break
        if fail:
            break
    if fail:
        failures.append(fail)

    # d(J(e_i,e_j,e_k)) = [e_i,[e_j,e_k]] - [[e_i,e_j],e_k] - [e_j,[e_i,e_k]]
    fail = None
    for (i, j, k) in combinations(range(n0), 3):
        lhs = d.apply(L.jac[i][j][k])
        rhs = _jacobi_defect00(L, i, j, k)
        disc = vec_sub(lhs, rhs)
        if not is_zero_vec(disc):
            fail = EquationFailure(EQ_JACOBI_DEFECT, (i, j, k), disc)
            break
    if fail:
        failures.append(fail)

    # J(d(f_l),e_j,e_k) = [f_l,[e_j,e_k]] - [[f_l,e_j],e_k] - [e_j,[f_l,e_k]]
    fail = None
    for l in range(n1):
        if fail:
            break
        for (j, k) in combinations(range(n0), 2):
            lhs = jacobiator(L, dcols[l], _basis(n0, j), _basis(n0, k))
            rhs = _jacobi_defect_mixed(L, l, j, k)
            disc = vec_sub(lhs, rhs)
            if not is_zero_vec(disc):
                fail = EquationFailure(EQ_JACOBI_DEFECT_DEG1, (l, j, k), disc)
                break
    if fail:
        failures.append(fail)

    # coherence of the Jacobiator in four arguments
    fail = None
    for quad in combinations(range(n0), 4):
        disc = coherence_lhs(L, quad)
        if not is_zero_vec(disc):
            fail = EquationFailure(EQ_COHERENCE, quad, disc)
            break
    if fail:
        failures.append(fail)

    return VerificationReport(ALGEBRA_EQUATIONS, (), tuple(failures))


def _basis(n: int, i: int) -> Vec:
    return tuple(Fraction(1) if k == i else ZERO for k in range(n))


def _jacobi_defect00(L: TwoTermAlgebra, i: int, j: int, k: int) -> Vec:
    t1 = [ZERO] * L.n0
    for t, c in enumerate(L.b00[j][k]):
        if c:
            row = L.b00[i][t]
            for s in range(L.n0):
                if row[s]:
                    t1[s] += c * row[s]
    for t, c in enumerate(L.b00[i][j]):
        if c:
            row = L.b00[t][k]
            for s in range(L.n0):
                if row[s]:
                    t1[s] -= c * row[s]
    for t, c in enumerate(L.b00[i][k]):
        if c:
            row = L.b00[j][t]
            for s in range(L.n0):
                if row[s]:
                    t1[s] -= c * row[s]
    return tuple(t1)


def _jacobi_defect_mixed(L: TwoTermAlgebra, l: int, j: int, k: int) -> Vec:
    out = [ZERO] * L.n1
    # [f_l, [e_j, e_k]] = - [[e_j,e_k], f_l]
    for t, c in enumerate(L.b00[j][k]):
        if c:
            row = L.b01[t][l]
            for s in range(L.n1):
                if row[s]:
                    out[s] -= c * row[s]
    # - [[f_l, e_j], e_k] = - [e_k, [e_j, f_l]]   (two sign flips cancel)
    for t, c in enumerate(L.b01[j][l]):
        if c:
            row = L.b01[k][t]
            for s in range(L.n1):
                if row[s]:
                    out[s] -= c * row[s]
    # - [e_j, [f_l, e_k]] = + [e_j, [e_k, f_l]]
    for t, c in enumerate(L.b01[k][l]):
        if c:
            row = L.b01[j][t]
            for s in range(L.n1):
                if row[s]:
                    out[s] += c * row[s]
    return tuple(out)


def coherence_lhs(L: TwoTermAlgebra, args: tuple[int, int, int, int]) -> Vec:
    """Left side of the four-argument coherence identity on basis indices.

    Arguments need not be increasing or distinct; this is used both by the
    verifier (increasing tuples) and by antisymmetry smoke tests.
    """
    out = [ZERO] * L.n1
    for perm, sign in shuffles(1, 3).elements:
        a = args[perm[0]]
        w = L.jac[args[perm[1]]][args[perm[2]]][args[perm[3]]]
        row_plane = L.b01[a]
        for t, c in enumerate(w):
            if c:
                row = row_plane[t]
                for s in range(L.n1):
                    if row[s]:
                        out[s] += sign * c * row[s]
    for perm, sign in shuffles(2, 2).elements:
        a, b = args[perm[0]], args[perm[1]]
        c_idx, d_idx = args[perm[2]], args[perm[3]]
        for t, c in enumerate(L.b00[a][b]):
            if c:
                row = L.jac[t][c_idx][d_idx]
                for s in range(L.n1):
                    if row[s]:
                        out[s] -= sign * c * row[s]
    return tuple(out)


def homology_dims(L: TwoTermAlgebra) -> tuple[int, int]:
    """(dim L0 - rank d, dim L1 - rank d)."""
    r = L.d.rank()
    return (L.n0 - r, L.n1 - r)
