import json
import os

import pytest

from lie2alg import TwoTermAlgebra, quaternion_example
from lie2alg.cli import main
from lie2alg.documents import (
    algebra_to_document,
    dumps,
    load_algebra,
    load_morphism,
    save_document,
)

DATA = os.path.join(os.path.dirname(__file__), "data")


def data(name):
    return os.path.join(DATA, name)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestVerify:
    def test_quaternion_passes(self, capsys):
        code, out, _ = run(capsys, "verify", data("quaternion.json"))
        assert code == 0
        assert "PASS" in out

    def test_zero_passes(self, capsys):
        code, _, _ = run(capsys, "verify", data("zero_2_1.json"))
        assert code == 0

    def test_equation_failure_exits_1(self, capsys, tmp_path):
        L = quaternion_example("1+2i+3j+5k")
        b00 = [[list(row) for row in plane] for plane in L.b00]
        b00[1][2][1] += 1
        b00[2][1][1] -= 1
        bad = TwoTermAlgebra(4, 4, L.d, b00, L.b01, L.jac)
        path = tmp_path / "bad.json"
        save_document(str(path), algebra_to_document(bad))
        code, out, _ = run(capsys, "verify", str(path))
        assert code == 1
        assert "jacobi-defect: FAIL at (1, 2, 3)" in out

    def test_structural_failure_exits_2(self, capsys, tmp_path):
        doc = algebra_to_document(TwoTermAlgebra.zero(2, 0))
        doc["b00"] = [[["1", "0"], ["0", "0"]], [["0", "0"], ["0", "0"]]]
        path = tmp_path / "struct.json"
        with open(path, "w") as fh:
            fh.write(dumps(doc))
        code, _, err = run(capsys, "verify", str(path))
        assert code == 2
        assert "antisymmetry violated at (0, 0)" in err

    def test_unreadable_exits_2(self, capsys):
        code, _, err = run(capsys, "verify", "/no/such/file.json")
        assert code == 2
        assert "cannot read" in err

    def test_quiet(self, capsys):
        code, out, _ = run(capsys, "verify", "--quiet", data("quaternion.json"))
        assert code == 0
        assert out == ""


class TestNormalize:
    def test_summary_and_outputs(self, capsys, tmp_path):
        nf = tmp_path / "nf.json"
        mor = tmp_path / "mor.json"
        code, out, _ = run(
            capsys,
            "normalize",
            data("quaternion.json"),
            "--out",
            str(nf),
            "--out-morphism",
            str(mor),
        )
        assert code == 0
        assert "g=3, U=1, V=3, coboundary=true" in out
        from lie2alg import verify, verify_morphism

        assert verify(load_algebra(str(nf))).passed
        assert verify_morphism(load_morphism(str(mor))).passed

    def test_skeletal_summary(self, capsys):
        code, out, _ = run(capsys, "normalize", data("skeletal_string_so3_k1.json"))
        assert code == 0
        assert "g=3, U=0, V=1, coboundary=false" in out


class TestInvariants:
    def test_golden_quaternion(self, capsys):
        code, out, _ = run(capsys, "invariants", data("quaternion.json"))
        assert code == 0
        with open(data("quaternion.invariants.txt")) as fh:
            assert out == fh.read()

    def test_golden_skeletal(self, capsys):
        code, out, _ = run(capsys, "invariants", data("skeletal_string_so3_k1.json"))
        assert code == 0
        with open(data("skeletal_string_so3_k1.invariants.txt")) as fh:
            assert out == fh.read()

    def test_byte_identical_across_runs(self, capsys):
        _, first, _ = run(capsys, "invariants", data("quaternion.json"))
        _, second, _ = run(capsys, "invariants", data("quaternion.json"))
        assert first == second

    def test_k0_k1_differ_exactly_in_coboundary_line(self, capsys):
        _, out0, _ = run(capsys, "invariants", data("skeletal_string_so3_k0.json"))
        _, out1, _ = run(capsys, "invariants", data("skeletal_string_so3_k1.json"))
        diff = [
            (a, b)
            for a, b in zip(out0.splitlines(), out1.splitlines())
            if a != b
        ]
        assert diff == [
            ("Jtilde coboundary flag=true", "Jtilde coboundary flag=false")
        ]


class TestCohomology:
    @pytest.fixture()
    def so3_doc(self, tmp_path):
        from lie2alg import Matrix, so3
        from lie2alg.core import zero_tensor3, zero_tensor4

        g = so3()
        L = TwoTermAlgebra(
            3, 0, Matrix.zero(3, 0), g.sc,
            zero_tensor3((3, 0, 0)), zero_tensor4((3, 3, 3, 0)),
        )
        path = tmp_path / "so3.json"
        save_document(str(path), algebra_to_document(L, name="so3"))
        return str(path)

    def test_trivial_h3(self, capsys, so3_doc):
        code, out, _ = run(capsys, "cohomology", so3_doc, "trivial", "3")
        assert code == 0
        assert out.startswith("dim H^3 = 1")

    def test_adjoint_h3(self, capsys, so3_doc):
        code, out, _ = run(capsys, "cohomology", so3_doc, "adjoint", "3")
        assert code == 0
        assert "dim H^3 = 0" in out

    def test_basis_flag(self, capsys, so3_doc):
        code, out, _ = run(capsys, "cohomology", so3_doc, "trivial", "3", "--basis")
        assert code == 0
        assert "cocycle 0" in out

    def test_abelian2(self, capsys, tmp_path):
        doc = algebra_to_document(TwoTermAlgebra.zero(2, 0))
        path = tmp_path / "ab2.json"
        save_document(str(path), doc)
        code, out, _ = run(capsys, "cohomology", str(path), "trivial", "1")
        assert code == 0
        assert "dim H^1 = 2" in out

    def test_nonzero_degree1_rejected(self, capsys):
        code, _, err = run(capsys, "cohomology", data("quaternion.json"), "trivial", "1")
        assert code == 2
        assert "n1 = 0" in err


class TestCompare:
    def test_distinguished(self, capsys):
        code, out, _ = run(
            capsys,
            "compare",
            data("skeletal_string_so3_k0.json"),
            data("skeletal_string_so3_k1.json"),
        )
        assert code == 1
        assert "DISTINGUISHED: Jtilde coboundary flag" in out

    def test_self_inconclusive(self, capsys):
        code, out, _ = run(
            capsys,
            "compare",
            data("quaternion.json"),
            data("quaternion.json"),
        )
        assert code == 0
        assert "INCONCLUSIVE (invariants equal)" in out

    def test_certified_isomorphic(self, capsys, tmp_path):
        iso = tmp_path / "iso.json"
        code, out, _ = run(
            capsys,
            "compare",
            data("skeletal_string_so3_k1.json"),
            data("skeletal_string_so3_k2.json"),
            "--maps",
            data("maps_identity_scale2.json"),
            "--out",
            str(iso),
        )
        assert code == 0
        assert "ISOMORPHIC" in out
        from lie2alg import is_isomorphism, verify_morphism

        written = load_morphism(str(iso))
        assert verify_morphism(written).passed
        assert is_isomorphism(written)

    def test_not_cohomologous(self, capsys):
        code, out, _ = run(
            capsys,
            "compare",
            data("skeletal_string_so3_k0.json"),
            data("skeletal_string_so3_k1.json"),
            "--maps",
            data("maps_identity_scale2.json"),
        )
        assert code == 1
        assert "cocycles not cohomologous" in out


class TestGeneration:
    def test_example_writes_verified_document(self, capsys, tmp_path):
        out_path = tmp_path / "q.json"
        code, _, _ = run(
            capsys, "example", "quaternion", "--v", "i", "--out", str(out_path)
        )
        assert code == 0
        code, _, _ = run(capsys, "verify", "--quiet", str(out_path))
        assert code == 0

    def test_example_stdout(self, capsys):
        code, out, _ = run(capsys, "example", "zero", "--n0", "1", "--n1", "1")
        assert code == 0
        doc = json.loads(out)
        assert doc["kind"] == "algebra"

    def test_random_deterministic(self, capsys, tmp_path):
        a = tmp_path / "a.json"
        b = tmp_path / "b.json"
        run(capsys, "random", "--seed", "7", "--out", str(a))
        run(capsys, "random", "--seed", "7", "--out", str(b))
        assert a.read_bytes() == b.read_bytes()

    def test_random_verifies(self, capsys, tmp_path):
        path = tmp_path / "r.json"
        code, _, _ = run(capsys, "random", "--seed", "3", "--out", str(path))
        assert code == 0
        code, _, _ = run(capsys, "verify", "--quiet", str(path))
        assert code == 0


class TestComposeTransport:
    def test_compose_with_inverse_gives_identity_document(self, capsys, tmp_path):
        from lie2alg import example27_automorphism, inverse
        from lie2alg.documents import morphism_to_document

        m = example27_automorphism("1+2i+3j+5k")
        a = tmp_path / "m.json"
        b = tmp_path / "minv.json"
        out_path = tmp_path / "id.json"
        save_document(str(a), morphism_to_document(m))
        save_document(str(b), morphism_to_document(inverse(m)))
        code, _, _ = run(capsys, "compose", str(a), str(b), "--out", str(out_path))
        assert code == 0
        from lie2alg import Matrix, identity_morphism

        written = load_morphism(str(out_path))
        assert written == identity_morphism(m.source)

    def test_transport_identity_echoes_canonically(self, capsys, tmp_path):
        from lie2alg import Matrix
        from lie2alg.core import zero_tensor3
        from lie2alg.documents import transport_to_document

        L = load_algebra(data("quaternion.json"))
        maps = tmp_path / "tid.json"
        save_document(
            str(maps),
            transport_to_document(
                Matrix.identity(4), Matrix.identity(4), zero_tensor3((4, 4, 4))
            ),
        )
        out_path = tmp_path / "echo.json"
        code, _, _ = run(
            capsys, "transport", data("quaternion.json"), str(maps), "--out", str(out_path)
        )
        assert code == 0
        assert load_algebra(str(out_path)) == L

    def test_transport_automorphism_returns_same_algebra(self, capsys, tmp_path):
        from lie2alg import example27_automorphism
        from lie2alg.documents import transport_to_document

        m = example27_automorphism("1+2i+3j+5k")
        maps = tmp_path / "t27.json"
        save_document(str(maps), transport_to_document(m.phi0, m.phi1, m.Phi))
        out_path = tmp_path / "same.json"
        mor_path = tmp_path / "mor.json"
        code, _, _ = run(
            capsys,
            "transport",
            data("quaternion.json"),
            str(maps),
            "--out",
            str(out_path),
            "--out-morphism",
            str(mor_path),
        )
        assert code == 0
        assert load_algebra(str(out_path)) == m.source
        from lie2alg import verify_morphism

        assert verify_morphism(load_morphism(str(mor_path))).passed
