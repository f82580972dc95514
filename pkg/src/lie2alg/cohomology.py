"""Lie algebra cohomology with coefficients in a representation.

Cochains of degree n are alternating multilinear maps from n-fold wedge
powers of the Lie algebra into the coefficient space V.  They are stored on
the canonical basis: strictly increasing index tuples, each carrying a
coordinate vector in V.  Evaluation at arbitrary tuples applies the
permutation sign; repeated indices give zero.

The differential follows the shuffle-sum convention (one action term over
(1,n)-shuffles minus one bracket term over (2,n-1)-shuffles, with ordinary
permutation signs), which matches the coherence equation of the algebra
verifier.  Degree 0 is included with C_0 = V and (delta f)(x) = rho(x) f, so
square-zero and dimension formulas hold uniformly.

Matrix flattening convention: increasing tuples ordered lexicographically,
V index fastest.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations

from .linalg import (
    Matrix,
    ZERO,
    image_basis,
    is_zero_vec,
    kernel_basis,
    solve,
    vec,
    vec_add,
    vec_scale,
    vec_sub,
    vec_zero,
)
from .core import perm_sign, shuffles, tensor3, Tensor3


class LieMorphismError(ValueError):
    """The supplied linear map is not a Lie algebra morphism."""


class IntertwinerError(ValueError):
    """The supplied linear map does not intertwine the representations."""


@dataclass(frozen=True)
class LieAlgebra:
    """A Lie algebra by structure constants: [e_i, e_j] = sum_t sc[i][j][t] e_t.

    Construction validates antisymmetry and the Jacobi identity on basis
    triples, so every held instance is a genuine Lie algebra.
    """

    dim: int
    sc: Tensor3

    def __post_init__(self):
        object.__setattr__(self, "sc", tensor3(self.sc, (self.dim, self.dim, self.dim)))
        for i in range(self.dim):
            for j in range(i, self.dim):
                if not is_zero_vec(vec_add(self.sc[i][j], self.sc[j][i])):
                    raise ValueError(f"structure constants not antisymmetric at ({i}, {j})")
        for (i, j, k) in combinations(range(self.dim), 3):
            if not is_zero_vec(self._jacobi(i, j, k)):
                raise ValueError(f"Jacobi identity fails at ({i}, {j}, {k})")

    def _jacobi(self, i: int, j: int, k: int):
        acc = [ZERO] * self.dim
        for t, c in enumerate(self.sc[j][k]):
            if c:
                for s, cc in enumerate(self.sc[i][t]):
                    acc[s] += c * cc
        for t, c in enumerate(self.sc[i][j]):
            if c:
                for s, cc in enumerate(self.sc[t][k]):
                    acc[s] -= c * cc
        for t, c in enumerate(self.sc[i][k]):
            if c:
                for s, cc in enumerate(self.sc[j][t]):
                    acc[s] -= c * cc
        return tuple(acc)

    def bracket_vec(self, u, v):
        out = [ZERO] * self.dim
        for p, cp in enumerate(u):
            if not cp:
                continue
            for q, cq in enumerate(v):
                if not cq:
                    continue
                c = cp * cq
                row = self.sc[p][q]
                for t in range(self.dim):
                    if row[t]:
                        out[t] += c * row[t]
        return tuple(out)

    def ad(self, i: int) -> Matrix:
        """Matrix of ad(e_i): x -> [e_i, x]."""
        return Matrix.from_rows(
            [[self.sc[i][s][t] for s in range(self.dim)] for t in range(self.dim)],
            cols=self.dim,
        )


@dataclass(frozen=True)
class Representation:
    """rho: g -> gl(V), one dimV x dimV matrix per basis element of g.

    Construction validates rho([x,y]) = rho(x) rho(y) - rho(y) rho(x) on all
    basis pairs.
    """

    g: LieAlgebra
    dimV: int
    rho: tuple[Matrix, ...]

    def __post_init__(self):
        mats = []
        for m in self.rho:
            if not isinstance(m, Matrix):
                m = Matrix.from_rows([tuple(r) for r in m], cols=self.dimV)
            if m.rows != self.dimV or m.cols != self.dimV:
                raise ValueError(f"rho matrices must be {self.dimV}x{self.dimV}")
            mats.append(m)
        if len(mats) != self.g.dim:
            raise ValueError("need one rho matrix per basis element")
        object.__setattr__(self, "rho", tuple(mats))
        for i in range(self.g.dim):
            for j in range(i + 1, self.g.dim):
                lhs = Matrix.zero(self.dimV, self.dimV)
                for t, c in enumerate(self.g.sc[i][j]):
                    if c:
                        lhs = lhs + c * self.rho[t]
                rhs = self.rho[i] @ self.rho[j] - self.rho[j] @ self.rho[i]
                if lhs != rhs:
                    raise ValueError(f"representation law fails at ({i}, {j})")

    def rho_vec(self, x) -> Matrix:
        """rho of an arbitrary coordinate vector of g."""
        out = Matrix.zero(self.dimV, self.dimV)
        for i, c in enumerate(x):
            if c:
                out = out + c * self.rho[i]
        return out


@lru_cache(maxsize=None)
def increasing_tuples(dim: int, n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(combinations(range(dim), n))


@dataclass(frozen=True)
class Cochain:
    """Degree-n alternating cochain with values in V.

    ``values`` maps every strictly increasing n-tuple of basis indices to a
    V coordinate vector; missing keys are filled with zero at construction.
    """

    n: int
    g: LieAlgebra
    dimV: int
    values: dict = field(default_factory=dict)

    def __post_init__(self):
        canonical = {}
        keys = increasing_tuples(self.g.dim, self.n)
        key_set = set(keys)
        supplied = dict(self.values)
        for key in supplied:
            if tuple(key) not in key_set:
                raise ValueError(f"not an increasing {self.n}-tuple: {key}")
        for key in keys:
            raw = supplied.get(key)
            v = vec(raw) if raw is not None else vec_zero(self.dimV)
            if len(v) != self.dimV:
                raise ValueError(f"value at {key} has wrong length")
            canonical[key] = v
        object.__setattr__(self, "values", canonical)

    @classmethod
    def zero(cls, n: int, g: LieAlgebra, dimV: int) -> "Cochain":
        return cls(n, g, dimV)

    def is_zero(self) -> bool:
        return all(is_zero_vec(v) for v in self.values.values())

    def value_at_basis(self, idx: tuple[int, ...]):
        """Alternating evaluation at an arbitrary basis index tuple."""
        if len(set(idx)) < len(idx):
            return vec_zero(self.dimV)
        order = tuple(sorted(idx))
        sign = perm_sign(tuple(sorted(range(len(idx)), key=lambda p: idx[p])))
        base = self.values[order]
        return base if sign == 1 else tuple(-c for c in base)

    def evaluate(self, vectors) -> tuple[Fraction, ...]:
        """Full alternating multilinear evaluation at coordinate vectors of g."""
        if len(vectors) != self.n:
            raise ValueError(f"expected {self.n} arguments")
        out = vec_zero(self.dimV)
        for key in increasing_tuples(self.g.dim, self.n):
            coeff = _minor_det([v for v in vectors], key)
            if coeff:
                out = vec_add(out, vec_scale(coeff, self.values[key]))
        return out


def _minor_det(vectors, rows: tuple[int, ...]) -> Fraction:
    """det of the square minor picking the given coordinates of each vector."""
    n = len(vectors)
    if n == 0:
        return Fraction(1)
    total = ZERO
    for perm_positions, sign in _sym_group(n):
        prod = Fraction(1)
        for col, r in enumerate(perm_positions):
            prod *= vectors[col][rows[r]]
            if not prod:
                break
        if prod:
            total += sign * prod
    return total


@lru_cache(maxsize=None)
def _sym_group(n: int):
    return tuple((p, perm_sign(p)) for p in permutations(range(n)))


# ---------------------------------------------------------------------------
# the differential
# ---------------------------------------------------------------------------


def delta(f: Cochain, rep: Representation) -> Cochain:
    """Cochain differential: action sum over (1,n)-shuffles minus bracket sum
    over (2,n-1)-shuffles, ordinary permutation signs."""
    if f.g != rep.g or f.dimV != rep.dimV:
        raise ValueError("cochain and representation live on different data")
    g = f.g
    n = f.n
    target = {}
    for key in increasing_tuples(g.dim, n + 1):
        acc = vec_zero(f.dimV)
        for perm, sign in shuffles(1, n).elements:
            x = key[perm[0]]
            rest = tuple(key[p] for p in perm[1:])
            val = f.values[rest]          # rest is increasing by the shuffle condition
            if not is_zero_vec(val):
                acc = vec_add(acc, vec_scale(sign, rep.rho[x].apply(val)))
        if n >= 1:
            for perm, sign in shuffles(2, n - 1).elements:
                a, b = key[perm[0]], key[perm[1]]
                rest = tuple(key[p] for p in perm[2:])
                for t, c in enumerate(g.sc[a][b]):
                    if c:
                        acc = vec_sub(acc, vec_scale(sign * c, f.value_at_basis((t,) + rest)))
        target[key] = acc
    return Cochain(n + 1, g, f.dimV, target)


def cochain_to_vec(f: Cochain) -> tuple[Fraction, ...]:
    out = []
    for key in increasing_tuples(f.g.dim, f.n):
        out.extend(f.values[key])
    return tuple(out)


def vec_to_cochain(n: int, g: LieAlgebra, dimV: int, flat) -> Cochain:
    values = {}
    for pos, key in enumerate(increasing_tuples(g.dim, n)):
        values[key] = tuple(flat[pos * dimV : (pos + 1) * dimV])
    return Cochain(n, g, dimV, values)


def delta_matrix(n: int, rep: Representation) -> Matrix:
    """Matrix of the degree-n differential on the increasing-tuple (x) V basis."""
    g = rep.g
    dimV = rep.dimV
    n_cols = math.comb(g.dim, n) * dimV
    n_rows = math.comb(g.dim, n + 1) * dimV
    columns = []
    for key in increasing_tuples(g.dim, n):
        for v_idx in range(dimV):
            basis_cochain = Cochain(
                n, g, dimV,
                {key: tuple(Fraction(1) if t == v_idx else ZERO for t in range(dimV))},
            )
            columns.append(cochain_to_vec(delta(basis_cochain, rep)))
    return Matrix.from_columns(columns, rows=n_rows) if columns else Matrix.zero(n_rows, 0)


def is_cocycle(f: Cochain, rep: Representation) -> bool:
    return delta(f, rep).is_zero()


def is_coboundary(f: Cochain, rep: Representation) -> Cochain | None:
    """A primitive g with delta(g) = f, or None.

    Deterministic: the primitive is the solve() solution with free
    coefficients zeroed.  Degree must be at least 1 (there is no complex
    below degree 0).
    """
    if f.n < 1:
        raise ValueError("is_coboundary needs degree >= 1")
    a = delta_matrix(f.n - 1, rep)
    b = Matrix.from_columns([cochain_to_vec(f)], rows=a.rows)
    x = solve(a, b)
    if x is None:
        return None
    return vec_to_cochain(f.n - 1, f.g, f.dimV, x.column(0))


def cohomology_dim(n: int, rep: Representation) -> int:
    """dim ker(delta_n) - rank(delta_{n-1})."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    dn = delta_matrix(n, rep)
    kernel_dim = dn.cols - dn.rank()
    image_rank = delta_matrix(n - 1, rep).rank() if n >= 1 else 0
    return kernel_dim - image_rank


def cohomology_basis(n: int, rep: Representation) -> tuple[Cochain, ...]:
    """Cocycle representatives spanning degree-n cohomology."""
    dn = delta_matrix(n, rep)
    cocycles = kernel_basis(dn).basis
    if n >= 1:
        img = image_basis(delta_matrix(n - 1, rep)).basis
    else:
        img = ()
    chosen = []
    current = list(img)
    current_rank = len(current)
    for cand in cocycles:
        trial = current + [cand]
        if Matrix.from_columns(trial, rows=dn.cols).rank() == current_rank + 1:
            current = trial
            current_rank += 1
            chosen.append(vec_to_cochain(n, rep.g, rep.dimV, cand))
    return tuple(chosen)


# ---------------------------------------------------------------------------
# cohomologous pairs across different algebras
# ---------------------------------------------------------------------------


def is_lie_morphism(psi: Matrix, g: LieAlgebra, h: LieAlgebra) -> bool:
    if psi.rows != h.dim or psi.cols != g.dim:
        return False
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            lhs = psi.apply(g.sc[i][j])
            rhs = h.bracket_vec(psi.column(i), psi.column(j))
            if lhs != rhs:
                return False
    return True


def pullback_representation(rep: Representation, psi: Matrix, g: LieAlgebra) -> Representation:
    """The representation of g on rep's space obtained by composing with psi.

    Valid whenever psi is a Lie algebra morphism g -> rep.g; the constructor
    re-checks the representation law.
    """
    if psi.rows != rep.g.dim or psi.cols != g.dim:
        raise ValueError("psi shape incompatible with the pullback")
    mats = []
    for i in range(g.dim):
        acc = Matrix.zero(rep.dimV, rep.dimV)
        for b, c in enumerate(psi.column(i)):
            if c:
                acc = acc + c * rep.rho[b]
        mats.append(acc)
    return Representation(g, rep.dimV, tuple(mats))


def is_intertwiner(t: Matrix, rep_source: Representation, pullback: Representation) -> bool:
    """t(rho(x) v) = (pullback rho)(x) t(v) on all basis x of the common g."""
    if rep_source.g != pullback.g:
        return False
    if t.rows != pullback.dimV or t.cols != rep_source.dimV:
        return False
    for i in range(rep_source.g.dim):
        if t @ rep_source.rho[i] != pullback.rho[i] @ t:
            return False
    return True


def cohomologous(
    J: Cochain,
    K: Cochain,
    psi: Matrix,
    t: Matrix,
    rep_source: Representation,
    rep_target_pullback: Representation,
) -> Cochain | None:
    """Solve t(J(x_1..x_n)) - K(psi x_1, .., psi x_n) = (delta Phi)(x_1..x_n).

    The unknown Phi has degree n-1 and lives in the complex of J's algebra
    with the pulled-back coefficients ``rep_target_pullback``.  Returns the
    deterministic solve() solution, or None when no primitive exists.

    Raises LieMorphismError / IntertwinerError when psi or t fail their
    structural preconditions.  psi and t are not required to be invertible.
    """
    if J.n != K.n:
        raise ValueError("cochains must have the same degree")
    if not is_lie_morphism(psi, J.g, K.g):
        raise LieMorphismError("psi is not a Lie algebra morphism")
    if rep_target_pullback.g != J.g or rep_target_pullback.dimV != K.dimV:
        raise ValueError("rep_target_pullback must act on J's algebra with K's coefficients")
    if rep_source.g != J.g or rep_source.dimV != J.dimV:
        raise ValueError("rep_source must be J's representation data")
    if not is_intertwiner(t, rep_source, rep_target_pullback):
        raise IntertwinerError("t does not intertwine the representations over psi")

    n = J.n
    g = J.g
    diff = {}
    psi_cols = [psi.column(i) for i in range(g.dim)]
    for key in increasing_tuples(g.dim, n):
        lhs = t.apply(J.values[key])
        rhs = K.evaluate([psi_cols[i] for i in key])
        diff[key] = vec_sub(lhs, rhs)
    target = Cochain(n, g, K.dimV, diff)
    a = delta_matrix(n - 1, rep_target_pullback)
    b = Matrix.from_columns([cochain_to_vec(target)], rows=a.rows)
    x = solve(a, b)
    if x is None:
        return None
    return vec_to_cochain(n - 1, g, K.dimV, x.column(0))


# ---------------------------------------------------------------------------
# classification data built from this complex
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Quadruple:
    """(Lie algebra, dim of the transported space, representation, 3-cocycle).

    Exactly the data needed to assemble a standard-shape 2-term algebra;
    construction re-checks that ``jtilde`` is a cocycle of the right degree.
    """

    g: LieAlgebra
    dim_u: int
    rep: Representation
    jtilde: Cochain

    def __post_init__(self):
        if self.dim_u < 0:
            raise ValueError("dim_u must be nonnegative")
        if self.rep.g != self.g:
            raise ValueError("representation acts on a different Lie algebra")
        if self.jtilde.n != 3 or self.jtilde.g != self.g or self.jtilde.dimV != self.rep.dimV:
            raise ValueError("jtilde must be a degree-3 cochain on g with values in V")
        if not is_cocycle(self.jtilde, self.rep):
            raise ValueError("jtilde is not a cocycle")
