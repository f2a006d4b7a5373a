import json

import pytest

from occpoly.cli import main, run_verify


class TestConstraints:
    def test_text_output(self, capsys):
        code = main(["constraints", "--N", "4", "--twoS", "2", "--d", "4", "--w", "7/10,3/10"])
        out = capsys.readouterr().out
        assert code == 0
        assert "2*l1 + l2 + l3 <= 57/10" in out

    def test_symbolic_singlet(self, capsys):
        code = main(
            ["constraints", "--N", "6", "--twoS", "0", "--d", "6", "--w", "1/2,3/10,1/5", "--symbolic"]
        )
        out = capsys.readouterr().out
        assert code == 0
        assert "14+2*w1+w2" in out

    def test_pure_weight_ladder(self, capsys):
        code = main(["constraints", "--N", "4", "--twoS", "2", "--d", "4", "--w", "1"])
        out = capsys.readouterr().out
        assert code == 0
        assert "l1 <= 2" in out and "l1 + l2 <= 3" in out

    def test_json_format(self, capsys):
        code = main(
            ["constraints", "--N", "4", "--twoS", "2", "--d", "4", "--w", "7/10,3/10", "--format", "json"]
        )
        payload = json.loads(capsys.readouterr().out)
        assert code == 0
        assert payload["w"] == ["7/10", "3/10"]

    def test_ine_format(self, capsys):
        code = main(
            ["constraints", "--N", "4", "--twoS", "2", "--d", "4", "--w", "7/10,3/10", "--format", "ine"]
        )
        out = capsys.readouterr().out
        assert code == 0 and out.startswith("H-representation")

    def test_decimal_weights_rejected(self, capsys):
        code = main(["constraints", "--N", "4", "--twoS", "2", "--d", "4", "--w", "0.7,0.3"])
        assert code == 2

    def test_bad_parity(self, capsys):
        code = main(["constraints", "--N", "4", "--twoS", "1", "--d", "4", "--w", "1"])
        assert code == 2

    def test_rank_consistency_flag(self, capsys):
        code = main(
            ["constraints", "--N", "4", "--twoS", "2", "--d", "4", "--w", "7/10,3/10", "--r", "3"]
        )
        assert code == 2

    def test_rank_beyond_dimension(self, capsys):
        code = main(
            ["constraints", "--N", "2", "--twoS", "0", "--d", "1", "--w", "1/2,1/4,1/4"]
        )
        assert code == 3


class TestCheck:
    def test_vertex_member(self, capsys):
        code = main(
            ["check", "--N", "4", "--twoS", "2", "--d", "4", "--w", "7/10,3/10", "--lambda", "2,1,7/10,3/10"]
        )
        assert code == 0
        assert "member" in capsys.readouterr().out

    def test_non_member_names_rows(self, capsys):
        code = main(
            ["check", "--N", "4", "--twoS", "2", "--d", "4", "--w", "7/10,3/10", "--lambda", "2,2,0,0"]
        )
        out = capsys.readouterr().out
        assert code == 1
        assert "l1 + l2 <= 3" in out

    def test_normalization_error(self, capsys):
        code = main(
            ["check", "--N", "4", "--twoS", "2", "--d", "4", "--w", "7/10,3/10", "--lambda", "1,1,1,0"]
        )
        assert code == 4

    def test_matrix_member(self, tmp_path, capsys):
        path = tmp_path / "g.json"
        path.write_text(json.dumps({"matrix": [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]}))
        code = main(
            ["check", "--N", "4", "--twoS", "2", "--d", "4", "--w", "7/10,3/10", "--matrix", str(path)]
        )
        assert code == 0

    def test_matrix_hermiticity(self, tmp_path, capsys):
        path = tmp_path / "g.json"
        path.write_text(json.dumps({"matrix": [[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]}))
        code = main(
            ["check", "--N", "4", "--twoS", "2", "--d", "4", "--w", "7/10,3/10", "--matrix", str(path)]
        )
        assert code == 4

    def test_requires_exactly_one_input(self, capsys):
        code = main(["check", "--N", "4", "--twoS", "2", "--d", "4", "--w", "7/10,3/10"])
        assert code == 2


class TestEnergy:
    def test_ground(self, capsys):
        code = main(["energy", "--N", "4", "--twoS", "2", "--d", "4", "--w", "1", "--h", "0,1,2,3"])
        out = capsys.readouterr().out.strip()
        assert code == 0
        assert out == "3 == 3"

    def test_zero_spectrum(self, capsys):
        code = main(["energy", "--N", "4", "--twoS", "2", "--d", "4", "--w", "1", "--h", "0,0,0,0"])
        assert code == 0
        assert capsys.readouterr().out.strip() == "0 == 0"

    def test_doublet_mixture(self, capsys):
        code = main(["energy", "--N", "3", "--twoS", "1", "--d", "3", "--w", "1/2,1/2", "--h", "0,1,2"])
        out = capsys.readouterr().out.strip()
        assert code == 0
        left, _, right = out.partition(" == ")
        assert left == right


class TestVerify:
    def test_small_grid(self, capsys):
        code = main(["verify", "--grid", "4:2:4:2;6:0:6:2", "--samples", "60", "--seed", "2"])
        out = capsys.readouterr().out
        assert code == 0
        assert out.count("ok ") == 2

    def test_corrupted_catalog_detected(self, capsys):
        from occpoly.affine import AffineForm
        from occpoly.geometry.polytope import HRep, LinearConstraint

        def corrupted(system, w, r):
            row = LinearConstraint(a=(1,) + (0,) * (system.d - 1), rhs=AffineForm.constant(1))
            return HRep(system=system, w=w, rows=(row,))

        code = run_verify([(4, 2, 4, 2)], samples=10, seed=1, catalog_hrep=corrupted)
        out = capsys.readouterr().out
        assert code == 1
        assert "FAIL" in out


class TestExportSlice:
    def test_triplet_slice(self, capsys):
        code = main(["export-slice", "--N", "4", "--twoS", "2", "--d", "4", "--w", "7/10,3/10"])
        out = capsys.readouterr().out
        assert code == 0
        assert "v,2,1,7/10" in out
        assert any(line.startswith("f,") for line in out.splitlines())

    def test_singlet_slice(self, capsys):
        code = main(["export-slice", "--N", "4", "--twoS", "0", "--d", "4", "--w", "3/5,2/5"])
        out = capsys.readouterr().out
        assert code == 0
        assert "v,2,8/5,2/5" in out

    def test_pure_weight_slice(self, capsys):
        code = main(["export-slice", "--N", "4", "--twoS", "2", "--d", "4", "--w", "1"])
        out = capsys.readouterr().out
        assert code == 0
        assert "v,2,1,1" in out

    def test_wrong_dimension(self, capsys):
        code = main(["export-slice", "--N", "4", "--twoS", "2", "--d", "5", "--w", "1"])
        assert code == 3
