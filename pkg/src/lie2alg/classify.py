"""Classification machinery for 2-term L-infinity algebras.

The pipeline: ``decompose`` fixes a deterministic direct-sum decomposition of
both degrees, ``extract_triple`` reads off a Lie algebra, a representation on
the kernel of the differential and a 3-cocycle, ``normal_form`` rebuilds the
standard-shape algebra on that data together with an explicit verified
isomorphism, and ``certify_isomorphism`` / ``extract_quadruple_maps`` convert
between isomorphisms of algebras and isomorphisms of their classifying
quadruples.  ``invariants`` computes a fingerprint of necessary conditions
used by ``distinguish`` to refute isomorphism.

A full search for a Lie algebra isomorphism is deliberately out of scope:
the module certifies user-supplied maps and refutes via invariants.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations
from typing import NamedTuple

from .linalg import (
    Matrix,
    Subspace,
    ZERO,
    block_diag,
    complement,
    image_basis,
    invert,
    is_zero_vec,
    kernel_basis,
    vec_add,
    vec_sub,
    vec_zero,
)
from .core import (
    TwoTermAlgebra,
    bracket00,
    bracket_mixed,
    jacobiator,
    perm_sign,
    shuffles,
    tensor3,
    verify,
)
from .morphisms import (
    Morphism,
    compose,
    inverse,
    is_isomorphism,
    verify_morphism,
)
from .cohomology import (
    Cochain,
    IntertwinerError,
    LieAlgebra,
    LieMorphismError,
    Quadruple,
    Representation,
    cohomologous,
    cohomology_dim,
    delta,
    increasing_tuples,
    is_coboundary,
    is_lie_morphism,
    pullback_representation,
    is_intertwiner,
)
from .builders import killing_form, normal_form_algebra


class InvertibilityError(ValueError):
    """A map that must be invertible is singular or has the wrong shape."""


# ---------------------------------------------------------------------------
# decomposition
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Decomposition:
    """A choice of complements: degree 0 splits into a Lie-algebra part and
    the image of d, degree 1 into the kernel of d and a transported copy U.

    ``coords0``/``coords1`` change standard coordinates into decomposition
    coordinates (g then image; kernel then U).  ``f`` maps degree 1 to
    (kernel, image-of-d) coordinates: the identity on the kernel and d on U.
    ``h`` sends x in degree 0 to the unique element of U whose image under d
    is the image-part of x; it vanishes on the g part.
    """

    source: TwoTermAlgebra
    g_basis: Subspace
    imd_basis: Subspace
    kerd_basis: Subspace
    u_basis: Subspace
    f: Matrix
    h: Matrix
    coords0: Matrix
    coords1: Matrix


def decompose(L: TwoTermAlgebra) -> Decomposition:
    """Deterministic decomposition via greedy standard-basis complements.

    Precondition: ``verify(L)`` passes.
    """
    imd = image_basis(L.d)
    g_b = complement(imd)
    kerd = kernel_basis(L.d)
    u_b = complement(kerd)
    gdim, r, kdim = g_b.dim, imd.dim, kerd.dim

    p0 = Matrix.from_columns(g_b.basis + imd.basis, rows=L.n0)
    p1 = Matrix.from_columns(kerd.basis + u_b.basis, rows=L.n1)
    coords0 = invert(p0)
    coords1 = invert(p1)
    if coords0 is None or coords1 is None:
        raise RuntimeError("complements failed to complete a basis")

    # image-of-d coordinates of d restricted to U; invertible r x r block
    du_coords = coords0 @ (L.d @ u_b.matrix())
    m_block = du_coords.submatrix(range(gdim, L.n0), range(r))
    m_inv = invert(m_block)
    if m_inv is None:
        raise RuntimeError("d restricted to U is not invertible")

    f = block_diag(Matrix.identity(kdim), m_block) @ coords1
    imd_rows = coords0.submatrix(range(gdim, L.n0), range(L.n0))
    h = (u_b.matrix() @ m_inv) @ imd_rows

    return Decomposition(L, g_b, imd, kerd, u_b, f, h, coords0, coords1)


def extract_triple(L: TwoTermAlgebra, dec: Decomposition) -> Quadruple:
    """Read the classifying quadruple off a decomposition.

    The Lie bracket is the degree-0 bracket projected to the g part, the
    representation is the mixed bracket on the kernel of d, and the cocycle
    corrects the Jacobiator by the shuffle sum of h-brackets.  All three
    structure laws are re-checked by the constructors; a failure indicates
    an invalid input algebra or an implementation bug.
    """
    if dec.source != L:
        raise ValueError("decomposition belongs to a different algebra")
    gdim = dec.g_basis.dim
    kdim = dec.kerd_basis.dim
    g_cols = dec.g_basis.basis
    k_cols = dec.kerd_basis.basis

    sc = [[list(vec_zero(gdim)) for _ in range(gdim)] for _ in range(gdim)]
    for i in range(gdim):
        for j in range(i + 1, gdim):
            w = bracket00(L, g_cols[i], g_cols[j])
            gpart = dec.coords0.apply(w)[:gdim]
            sc[i][j] = list(gpart)
            sc[j][i] = [-c for c in gpart]
    g = LieAlgebra(gdim, sc)

    rho = []
    for i in range(gdim):
        cols = []
        for b in range(kdim):
            w = bracket_mixed(L, g_cols[i], k_cols[b])
            cols.append(dec.coords1.apply(w)[:kdim])
        rho.append(Matrix.from_columns(cols, rows=kdim))
    rep = Representation(g, kdim, tuple(rho))

    sh12 = shuffles(1, 2).elements
    values = {}
    for key in combinations(range(gdim), 3):
        total = jacobiator(L, g_cols[key[0]], g_cols[key[1]], g_cols[key[2]])
        for perm, sign in sh12:
            x1 = g_cols[key[perm[0]]]
            inner = bracket00(L, g_cols[key[perm[1]]], g_cols[key[perm[2]]])
            term = bracket_mixed(L, x1, dec.h.apply(inner))
            if sign == 1:
                total = vec_sub(total, term)
            else:
                total = vec_add(total, term)
        values[key] = dec.coords1.apply(total)[:kdim]
    jtilde = Cochain(3, g, kdim, values)

    return Quadruple(g, dec.u_basis.dim, rep, jtilde)


# ---------------------------------------------------------------------------
# transport of structure
# ---------------------------------------------------------------------------


def transport(
    L: TwoTermAlgebra, phi0, phi1, correction
) -> tuple[TwoTermAlgebra, Morphism]:
    """Push the structure of L through a graded linear isomorphism.

    The new differential, brackets and Jacobiator are the unique ones making
    (phi0, phi1, correction) a morphism; the new Jacobiator uses the already
    transported mixed bracket.  Returns the new algebra and the connecting
    morphism; both are re-verified before returning.

    Precondition: ``verify(L)`` passes and ``correction`` is antisymmetric.
    """
    if not isinstance(phi0, Matrix):
        phi0 = Matrix.from_rows([tuple(r) for r in phi0], cols=L.n0)
    if not isinstance(phi1, Matrix):
        phi1 = Matrix.from_rows([tuple(r) for r in phi1], cols=L.n1)
    if phi0.rows != phi0.cols or phi0.rows != L.n0:
        raise InvertibilityError("phi0 must be square of size n0")
    if phi1.rows != phi1.cols or phi1.rows != L.n1:
        raise InvertibilityError("phi1 must be square of size n1")
    inv0 = invert(phi0)
    inv1 = invert(phi1)
    if inv0 is None:
        raise InvertibilityError("phi0 is singular")
    if inv1 is None:
        raise InvertibilityError("phi1 is singular")
    corr = tensor3(correction, (L.n0, L.n0, L.n1))

    n0, n1 = L.n0, L.n1
    x_cols = [inv0.column(a) for a in range(n0)]    # preimages of target basis
    v_cols = [inv1.column(b) for b in range(n1)]

    d_new = phi0 @ (L.d @ inv1)

    def corr_eval(u, w):
        out = [ZERO] * n1
        for p, cp in enumerate(u):
            if not cp:
                continue
            plane = corr[p]
            for q, cq in enumerate(w):
                if not cq:
                    continue
                c = cp * cq
                row = plane[q]
                for t in range(n1):
                    if row[t]:
                        out[t] += c * row[t]
        return tuple(out)

    b00_new = [[list(vec_zero(n0)) for _ in range(n0)] for _ in range(n0)]
    for a in range(n0):
        for b in range(a + 1, n0):
            val = vec_sub(
                phi0.apply(bracket00(L, x_cols[a], x_cols[b])),
                d_new.apply(corr_eval(x_cols[a], x_cols[b])),
            )
            b00_new[a][b] = list(val)
            b00_new[b][a] = [-c for c in val]

    b01_new = [[list(vec_zero(n1)) for _ in range(n1)] for _ in range(n0)]
    for a in range(n0):
        for b in range(n1):
            dv = L.d.apply(v_cols[b])
            val = vec_add(
                phi1.apply(bracket_mixed(L, x_cols[a], v_cols[b])),
                corr_eval(dv, x_cols[a]),
            )
            b01_new[a][b] = list(val)

    sh12 = shuffles(1, 2).elements
    jac_new = [[[list(vec_zero(n1)) for _ in range(n0)] for _ in range(n0)] for _ in range(n0)]
    for key in combinations(range(n0), 3):
        val = phi1.apply(jacobiator(L, x_cols[key[0]], x_cols[key[1]], x_cols[key[2]]))
        for perm, sign in sh12:
            p = key[perm[0]]
            corr_val = corr_eval(x_cols[key[perm[1]]], x_cols[key[perm[2]]])
            mixed = [ZERO] * n1
            for t, c in enumerate(corr_val):
                if c:
                    row = b01_new[p][t]
                    for s in range(n1):
                        if row[s]:
                            mixed[s] += c * row[s]
            term = vec_add(
                tuple(mixed),
                corr_eval(x_cols[p], bracket00(L, x_cols[key[perm[1]]], x_cols[key[perm[2]]])),
            )
            if sign == 1:
                val = vec_sub(val, term)
            else:
                val = vec_add(val, term)
        for order in permutations(range(3)):
            sign = perm_sign(order)
            a, b, c = key[order[0]], key[order[1]], key[order[2]]
            jac_new[a][b][c] = [sign * x for x in val]

    out = TwoTermAlgebra(n0, n1, d_new, b00_new, b01_new, jac_new)
    mor = Morphism(L, out, phi0, phi1, corr)
    report = verify_algebra_or_raise(out, "transported algebra")
    mreport = verify_morphism(mor)
    if not mreport.passed:
        raise ValueError(f"transport produced an invalid morphism: {mreport.lines()}")
    return out, mor


def verify_algebra_or_raise(L: TwoTermAlgebra, what: str):
    report = verify(L)
    if not report.passed:
        raise ValueError(f"{what} failed verification: {report.lines()}")
    return report


# ---------------------------------------------------------------------------
# normal form
# ---------------------------------------------------------------------------


class NormalFormResult(NamedTuple):
    algebra: TwoTermAlgebra
    morphism: Morphism
    quadruple: Quadruple


def normal_form(L: TwoTermAlgebra) -> NormalFormResult:
    """The standard-shape algebra isomorphic to L, with an explicit verified
    isomorphism from L onto it.

    Precondition: ``verify(L)`` passes.  Deterministic via ``decompose``;
    idempotent on its own output up to structural equality.
    """
    dec = decompose(L)
    q = extract_triple(L, dec)
    target = normal_form_algebra(q)

    gdim = dec.g_basis.dim
    kdim = dec.kerd_basis.dim
    n0, n1 = L.n0, L.n1
    g_std = [_embed(dec.g_basis, dec.coords0.column(i)[:gdim], n0) for i in range(n0)]
    imd_std = [
        _embed(dec.imd_basis, dec.coords0.column(i)[gdim:], n0) for i in range(n0)
    ]

    phi_corr = [[list(vec_zero(n1)) for _ in range(n0)] for _ in range(n0)]
    for i in range(n0):
        h_i = dec.h.column(i)
        for j in range(i + 1, n0):
            h_j = dec.h.column(j)
            s = vec_add(
                bracket_mixed(L, imd_std[i], h_j),
                vec_sub(
                    bracket_mixed(L, g_std[i], h_j),
                    bracket_mixed(L, g_std[j], h_i),
                ),
            )
            ker_part = dec.coords1.apply(s)[:kdim]
            e_i = tuple(Fraction(1) if t == i else ZERO for t in range(n0))
            e_j = tuple(Fraction(1) if t == j else ZERO for t in range(n0))
            u_part = dec.coords0.apply(bracket00(L, e_i, e_j))[gdim:]
            value = tuple(ker_part) + tuple(u_part)
            phi_corr[i][j] = list(value)
            phi_corr[j][i] = [-c for c in value]

    mor = Morphism(L, target, dec.coords0, dec.f, phi_corr)
    report = verify_morphism(mor)
    if not report.passed or not is_isomorphism(mor):
        raise RuntimeError(f"normalizing morphism failed verification: {report.lines()}")
    return NormalFormResult(target, mor, q)


def _embed(sub: Subspace, coords, ambient: int):
    out = [ZERO] * ambient
    for c, basis_vec in zip(coords, sub.basis):
        if c:
            for t in range(ambient):
                if basis_vec[t]:
                    out[t] += c * basis_vec[t]
    return tuple(out)


def skeleton(L: TwoTermAlgebra) -> TwoTermAlgebra:
    """The standard shape with the transported space removed (U = 0)."""
    q = extract_triple(L, decompose(L))
    return normal_form_algebra(Quadruple(q.g, 0, q.rep, q.jtilde))


def split_normal_form(L: TwoTermAlgebra) -> Quadruple:
    """Recover the quadruple of an algebra already in standard shape.

    Raises ValueError when L is not bit-for-bit a standard-shape algebra.
    """
    u = L.d.rank()
    gdim = L.n0 - u
    v = L.n1 - u
    if gdim < 0 or v < 0:
        raise ValueError("not a standard-shape algebra")
    for i in range(L.n0):
        for j in range(L.n1):
            expected = Fraction(1) if (i >= gdim and j >= v and i - gdim == j - v) else ZERO
            if L.d[i, j] != expected:
                raise ValueError("differential is not the standard embedding")
    sc = [[list(L.b00[i][j][:gdim]) for j in range(gdim)] for i in range(gdim)]
    g = LieAlgebra(gdim, sc)
    rho = tuple(
        Matrix.from_rows([[L.b01[i][jv][t] for jv in range(v)] for t in range(v)], cols=v)
        for i in range(gdim)
    )
    rep = Representation(g, v, rho)
    values = {
        key: L.jac[key[0]][key[1]][key[2]][:v]
        for key in combinations(range(gdim), 3)
    }
    q = Quadruple(g, u, rep, Cochain(3, g, v, values))
    if normal_form_algebra(q) != L:
        raise ValueError("algebra carries structure outside the standard shape")
    return q


# ---------------------------------------------------------------------------
# invariants and refutation
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class InvariantVector:
    """Deterministic isomorphism-invariant fingerprint of an algebra.

    Every field is computable from the algebra alone and agrees for any two
    decompositions, so a mismatch in any field refutes isomorphism.  Equality
    of all fields is necessary but not sufficient.
    """

    dim_g: int
    dim_u: int
    dim_v: int
    n0: int
    n1: int
    h0: int
    h1: int
    derived_series: tuple[int, ...]
    lower_central_series: tuple[int, ...]
    center_dim: int
    killing_rank: int
    cohomology_h0: int
    cohomology_h1: int
    cohomology_h2: int
    cohomology_h3: int
    jtilde_is_coboundary: bool

    FIELDS = (
        ("dim_g", "dim g"),
        ("dim_u", "dim U"),
        ("dim_v", "dim V"),
        ("n0", "n0"),
        ("n1", "n1"),
        ("h0", "h0"),
        ("h1", "h1"),
        ("derived_series", "derived series"),
        ("lower_central_series", "lower central series"),
        ("center_dim", "center dim"),
        ("killing_rank", "Killing rank"),
        ("cohomology_h0", "H0"),
        ("cohomology_h1", "H1"),
        ("cohomology_h2", "H2"),
        ("cohomology_h3", "H3"),
        ("jtilde_is_coboundary", "Jtilde coboundary flag"),
    )

    def lines(self) -> list[str]:
        out = []
        for attr, label in self.FIELDS:
            out.append(f"{label}={_render_value(getattr(self, attr))}")
        return out


def _render_value(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, tuple):
        return ",".join(str(v) for v in value)
    return str(value)


def _span_dim(g: LieAlgebra, vectors) -> int:
    vectors = [v for v in vectors if not is_zero_vec(v)]
    if not vectors:
        return 0
    return Matrix.from_columns(vectors, rows=g.dim).rank()


def _subspace_basis(g: LieAlgebra, vectors):
    vectors = [v for v in vectors if not is_zero_vec(v)]
    if not vectors:
        return ()
    return image_basis(Matrix.from_columns(vectors, rows=g.dim)).basis


def derived_series_dims(g: LieAlgebra) -> tuple[int, ...]:
    """Dimensions along g, [g,g], [[g,g],[g,g]], ... until they stabilize."""
    dims = [g.dim]
    current = tuple(
        tuple(Fraction(1) if t == i else ZERO for t in range(g.dim)) for i in range(g.dim)
    )
    while True:
        brackets = [
            g.bracket_vec(current[a], current[b])
            for a in range(len(current))
            for b in range(a + 1, len(current))
        ]
        nxt = _subspace_basis(g, brackets)
        if len(nxt) == dims[-1]:
            break
        dims.append(len(nxt))
        current = nxt
        if not nxt:
            break
    return tuple(dims)


def lower_central_series_dims(g: LieAlgebra) -> tuple[int, ...]:
    """Dimensions along g, [g,g], [g,[g,g]], ... until they stabilize."""
    dims = [g.dim]
    basis_g = tuple(
        tuple(Fraction(1) if t == i else ZERO for t in range(g.dim)) for i in range(g.dim)
    )
    current = basis_g
    while True:
        brackets = [
            g.bracket_vec(x, c) for x in basis_g for c in current
        ]
        nxt = _subspace_basis(g, brackets)
        if len(nxt) == dims[-1]:
            break
        dims.append(len(nxt))
        current = nxt
        if not nxt:
            break
    return tuple(dims)


def center_dim(g: LieAlgebra) -> int:
    if g.dim == 0:
        return 0
    stacked = g.ad(0)
    for i in range(1, g.dim):
        stacked = stacked.vstack(g.ad(i))
    return kernel_basis(stacked).dim


def invariants(L: TwoTermAlgebra) -> InvariantVector:
    """Compute the full fingerprint from the extracted quadruple.

    Precondition: ``verify(L)`` passes.
    """
    q = extract_triple(L, decompose(L))
    rank_d = q.dim_u
    h_dims = tuple(cohomology_dim(n, q.rep) for n in range(4))
    return InvariantVector(
        dim_g=q.g.dim,
        dim_u=rank_d,
        dim_v=q.rep.dimV,
        n0=L.n0,
        n1=L.n1,
        h0=L.n0 - rank_d,
        h1=L.n1 - rank_d,
        derived_series=derived_series_dims(q.g),
        lower_central_series=lower_central_series_dims(q.g),
        center_dim=center_dim(q.g),
        killing_rank=killing_form(q.g).rank(),
        cohomology_h0=h_dims[0],
        cohomology_h1=h_dims[1],
        cohomology_h2=h_dims[2],
        cohomology_h3=h_dims[3],
        jtilde_is_coboundary=is_coboundary(q.jtilde, q.rep) is not None,
    )


def distinguish(L: TwoTermAlgebra, M: TwoTermAlgebra) -> str | None:
    """Name the first differing invariant field, or None when all agree.

    A returned field name proves the algebras are not isomorphic; None is
    inconclusive (invariants are necessary, not sufficient).
    """
    a = invariants(L)
    b = invariants(M)
    for attr, label in InvariantVector.FIELDS:
        if getattr(a, attr) != getattr(b, attr):
            return label
    return None


# ---------------------------------------------------------------------------
# isomorphism certificates
# ---------------------------------------------------------------------------


def certify_isomorphism(
    L: TwoTermAlgebra, M: TwoTermAlgebra, chi, f_u, t_v
) -> Morphism | None:
    """Build a verified isomorphism L -> M from quadruple-level maps.

    ``chi`` must be a Lie algebra isomorphism, ``f_u`` a linear isomorphism
    between the transported spaces, and ``t_v`` an invertible intertwiner,
    all stated against the normalized bases (the inputs are normalized
    first when not already in standard shape).  When the two cocycles are
    not cohomologous under (chi, t_v) the answer is None; invalid maps raise
    LieMorphismError / InvertibilityError / IntertwinerError.
    """
    nf_l = normal_form(L)
    nf_m = normal_form(M)
    q_l, q_m = nf_l.quadruple, nf_m.quadruple

    if not isinstance(chi, Matrix):
        chi = Matrix.from_rows([tuple(r) for r in chi], cols=q_l.g.dim)
    if not isinstance(f_u, Matrix):
        f_u = Matrix.from_rows([tuple(r) for r in f_u], cols=q_l.dim_u)
    if not isinstance(t_v, Matrix):
        t_v = Matrix.from_rows([tuple(r) for r in t_v], cols=q_l.rep.dimV)

    if chi.rows != q_m.g.dim or chi.cols != q_l.g.dim or invert_or_none(chi) is None:
        raise InvertibilityError("chi is not an invertible map between the Lie algebra parts")
    if not is_lie_morphism(chi, q_l.g, q_m.g):
        raise LieMorphismError("chi is not a Lie algebra morphism")
    if f_u.rows != q_m.dim_u or f_u.cols != q_l.dim_u or invert_or_none(f_u) is None:
        raise InvertibilityError("fU is not an invertible map between the transported spaces")
    pulled = pullback_representation(q_m.rep, chi, q_l.g)
    if t_v.rows != q_m.rep.dimV or t_v.cols != q_l.rep.dimV or invert_or_none(t_v) is None:
        raise InvertibilityError("tV is not invertible")
    if not is_intertwiner(t_v, q_l.rep, pulled):
        raise IntertwinerError("tV does not intertwine the representations over chi")

    witness = cohomologous(q_l.jtilde, q_m.jtilde, chi, t_v, q_l.rep, pulled)
    if witness is None:
        return None

    gdim = q_l.g.dim
    n0, n1 = nf_l.algebra.n0, nf_l.algebra.n1
    target_n1 = nf_m.algebra.n1
    phi0 = block_diag(chi, f_u)
    phi1 = block_diag(t_v, f_u)
    corr = [[list(vec_zero(target_n1)) for _ in range(n0)] for _ in range(n0)]
    for i in range(gdim):
        for j in range(i + 1, gdim):
            value = witness.values[(i, j)]
            padded = tuple(value) + vec_zero(q_m.dim_u)
            corr[i][j] = list(padded)
            corr[j][i] = [-c for c in padded]

    mor_nf = Morphism(nf_l.algebra, nf_m.algebra, phi0, phi1, corr)
    report = verify_morphism(mor_nf)
    if not report.passed:
        raise RuntimeError(f"certificate morphism failed verification: {report.lines()}")

    inv_m = inverse(nf_m.morphism)
    if inv_m is None:
        raise RuntimeError("normalizing morphism is not invertible")
    result = compose(compose(nf_l.morphism, mor_nf), inv_m)
    final = verify_morphism(result)
    if not final.passed or not is_isomorphism(result):
        raise RuntimeError(f"assembled isomorphism failed verification: {final.lines()}")
    return result


def invert_or_none(m: Matrix):
    if m.rows != m.cols:
        return None
    return invert(m)


class QuadrupleMaps(NamedTuple):
    tau: Matrix
    f_u: Matrix
    t_v: Matrix
    witness: Cochain


def extract_quadruple_maps(m: Morphism) -> QuadrupleMaps:
    """Recover quadruple-level maps from an isomorphism of standard shapes.

    Returns the induced Lie algebra isomorphism (projection of phi0 on the
    Lie part), the restriction of phi0 to the transported space, the
    restriction of phi1 to the coefficient space, and the projected
    correction witnessing that the two cocycles are cohomologous.  Every
    consistency condition is re-checked and failure raises RuntimeError:
    for a verified isomorphism of standard shapes these checks cannot fail.
    """
    q_src = split_normal_form(m.source)
    q_tgt = split_normal_form(m.target)
    g, u, v = q_src.g.dim, q_src.dim_u, q_src.rep.dimV
    g2, u2, v2 = q_tgt.g.dim, q_tgt.dim_u, q_tgt.rep.dimV

    if not is_isomorphism(m):
        raise RuntimeError("morphism is not an isomorphism")
    if (g, u, v) != (g2, u2, v2):
        raise RuntimeError("standard shapes have different dimensions")

    # phi0 maps U into U' and phi1 maps V into V' exactly
    for i in range(g2):
        for j in range(u):
            if m.phi0[i, g + j] != 0:
                raise RuntimeError("phi0 does not map the transported space into itself")
    for i in range(v2, v2 + u2):
        for j in range(v):
            if m.phi1[i, j] != 0:
                raise RuntimeError("phi1 does not map the coefficient space into itself")

    tau = m.phi0.submatrix(range(g2), range(g))
    f_u = m.phi0.submatrix(range(g2, g2 + u2), range(g, g + u))
    t_v = m.phi1.submatrix(range(v2), range(v))

    if invert_or_none(tau) is None or not is_lie_morphism(tau, q_src.g, q_tgt.g):
        raise RuntimeError("projected map is not a Lie algebra isomorphism")
    if invert_or_none(f_u) is None:
        raise RuntimeError("restriction to the transported space is not invertible")
    pulled = pullback_representation(q_tgt.rep, tau, q_src.g)
    if invert_or_none(t_v) is None or not is_intertwiner(t_v, q_src.rep, pulled):
        raise RuntimeError("restriction to the coefficient space is not an intertwiner")

    witness = Cochain(
        2,
        q_src.g,
        v2,
        {
            (i, j): m.Phi[i][j][:v2]
            for (i, j) in combinations(range(g), 2)
        },
    )

    # t_v(J(x)) - J'(tau x) must equal delta(witness) in the pulled-back complex
    lhs = {}
    tau_cols = [tau.column(i) for i in range(g)]
    for key in increasing_tuples(q_src.g.dim, 3):
        val = vec_sub(
            t_v.apply(q_src.jtilde.values[key]),
            q_tgt.jtilde.evaluate([tau_cols[i] for i in key]),
        )
        lhs[key] = val
    expected = delta(witness, pulled)
    if Cochain(3, q_src.g, v2, lhs) != expected:
        raise RuntimeError("correction does not witness the cocycles as cohomologous")

    return QuadrupleMaps(tau, f_u, t_v, witness)
