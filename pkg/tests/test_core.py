import math
from fractions import Fraction
from itertools import permutations

import pytest

from lie2alg import (
    Element,
    TwoTermAlgebra,
    bracket,
    coherence_lhs,
    homology_dims,
    quaternion_example,
    shuffles,
    skeletal_string,
    so3,
    structure_violations,
    verify,
)
from lie2alg.core import EQ_JACOBI_DEFECT, perm_sign

F = Fraction


def brute_force_shuffles(m, n):
    """Independent oracle: enumerate the symmetric group and filter."""
    out = []
    for perm in permutations(range(m + n)):
        ok = True
        for i in range(m + n - 1):
            if i == m - 1:
                continue
            if perm[i] > perm[i + 1]:
                ok = False
                break
        if ok:
            inv = sum(
                1
                for a in range(len(perm))
                for b in range(a + 1, len(perm))
                if perm[a] > perm[b]
            )
            out.append((perm, -1 if inv % 2 else 1))
    return sorted(out)


class TestShuffles:
    def test_sh_1_2_exact(self):
        got = shuffles(1, 2).elements
        assert got == (((0, 1, 2), 1), ((1, 0, 2), -1), ((2, 0, 1), 1))

    def test_sh_2_2_count(self):
        assert len(shuffles(2, 2).elements) == 6

    def test_against_brute_force(self):
        for m in range(0, 4):
            for n in range(0, 4):
                assert tuple(brute_force_shuffles(m, n)) == shuffles(m, n).elements

    def test_identity_cases(self):
        for n in range(0, 5):
            assert shuffles(0, n).elements == ((tuple(range(n)), 1),)
            assert shuffles(n, 0).elements == ((tuple(range(n)), 1),)

    def test_sizes_are_binomial(self):
        for m in range(0, 4):
            for n in range(0, 4):
                elems = shuffles(m, n).elements
                assert len(elems) == math.comb(m + n, m)
                assert len({p for p, _ in elems}) == len(elems)

    def test_size_limit(self):
        with pytest.raises(ValueError):
            shuffles(5, 4)


class TestVerifyExamples:
    @pytest.mark.parametrize("v", ["0", "1", "i", "1+2i+3j+5k"])
    def test_quaternion_passes(self, v):
        assert verify(quaternion_example(v)).passed

    @pytest.mark.parametrize("dims", [(0, 0), (3, 0), (2, 2), (4, 1)])
    def test_zero_algebra_passes(self, dims):
        assert verify(TwoTermAlgebra.zero(*dims)).passed

    def test_imaginary_output_perturbation_breaks_jacobi(self):
        # adding e_i to [i, j] changes the bracket's Jacobi defect while the
        # Jacobiator stays fixed, so the defect equation must fail at (i,j,k)
        L = quaternion_example("1+2i+3j+5k")
        b00 = [[list(row) for row in plane] for plane in L.b00]
        b00[1][2][1] += 1
        b00[2][1][1] -= 1
        perturbed = TwoTermAlgebra(4, 4, L.d, b00, L.b01, L.jac)
        report = verify(perturbed)
        assert not report.passed
        failure = report.failure_for(EQ_JACOBI_DEFECT)
        assert failure is not None
        assert failure.args == (1, 2, 3)

    def test_central_output_perturbation_still_verifies(self):
        # adding the real unit to [i, j] leaves every defining equation
        # intact: the extra term brackets to zero and never reaches the
        # Jacobiator, so the perturbed algebra is a genuinely new valid one
        L = quaternion_example("1+2i+3j+5k")
        b00 = [[list(row) for row in plane] for plane in L.b00]
        b00[1][2][0] += 1
        b00[2][1][0] -= 1
        perturbed = TwoTermAlgebra(4, 4, L.d, b00, L.b01, L.jac)
        assert verify(perturbed).passed

    def test_non_antisymmetric_reported_before_equations(self):
        L = quaternion_example("0")
        b00 = [[list(row) for row in plane] for plane in L.b00]
        b00[0][0][0] = 1
        broken = TwoTermAlgebra(4, 4, L.d, b00, L.b01, L.jac)
        report = verify(broken)
        assert not report.passed
        assert report.structure_errors
        assert "b00 antisymmetry violated at (0, 0)" in report.structure_errors[0]
        assert report.failures == ()

    def test_structure_violations_jac(self):
        L = TwoTermAlgebra.zero(3, 1)
        jac = [[[list(row) for row in plane] for plane in block] for block in L.jac]
        jac[0][1][2][0] = 1  # no antisymmetric counterparts
        broken = TwoTermAlgebra(3, 1, L.d, L.b00, L.b01, jac)
        assert any("jac antisymmetry" in e for e in structure_violations(broken))


class TestBracket:
    def test_quaternion_i_j_gives_k(self):
        L = quaternion_example("0")
        x = Element.basis0(L, 1)
        y = Element.basis0(L, 2)
        out = bracket(L, x, y)
        assert out.deg0 == (F(0), F(0), F(0), F(1))
        assert out.deg1 == (F(0),) * 4

    def test_degree_one_brackets_vanish(self):
        L = quaternion_example("1+2i+3j+5k")
        u = Element.basis1(L, 1)
        v = Element.basis1(L, 3)
        assert bracket(L, u, v).is_zero()

    def test_skeletal_string_mixed_bracket_vanishes(self):
        L = skeletal_string(so3(), 1)
        x = Element.basis0(L, 0)
        v = Element.basis1(L, 0)
        assert bracket(L, x, v).is_zero()

    def test_graded_antisymmetry(self):
        L = quaternion_example("1+2i+3j+5k")
        x = Element.degree0(L, (1, 2, 0, 1))
        v = Element.degree1(L, (0, 1, 1, 2))
        xy = bracket(L, x, v)
        yx = bracket(L, v, x)
        assert xy.deg1 == tuple(-c for c in yx.deg1)


class TestCoherenceSmoke:
    def test_repeated_argument_vanishes(self):
        # on a valid algebra the coherence sum is alternating, so a repeated
        # basis index must collapse to zero
        L = quaternion_example("1+2i+3j+5k")
        for args in ((0, 0, 1, 2), (1, 1, 2, 3), (0, 2, 2, 3), (3, 1, 0, 3)):
            assert all(c == 0 for c in coherence_lhs(L, args))


class TestHomology:
    def test_quaternion(self):
        assert homology_dims(quaternion_example("1")) == (3, 3)

    def test_skeletal_string(self):
        assert homology_dims(skeletal_string(so3(), 1)) == (3, 1)

    def test_zero(self):
        assert homology_dims(TwoTermAlgebra.zero(5, 0)) == (5, 0)


class TestPermSign:
    def test_values(self):
        assert perm_sign((0, 1, 2)) == 1
        assert perm_sign((1, 0, 2)) == -1
        assert perm_sign((2, 0, 1)) == 1

    def test_composition_property(self):
        for p in permutations(range(4)):
            inv = sum(
                1 for a in range(4) for b in range(a + 1, 4) if p[a] > p[b]
            )
            assert perm_sign(p) == (-1) ** inv
