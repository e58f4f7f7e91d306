import itertools
import json

import pytest

from trisect.diagram import (GeomIntersections, PairAnnotation,
                             TrisectionDiagram, TrisectionSignature,
                             connected_sum, good_pair_check, spun_lens,
                             stabilize, standard_diagram, validate,
                             STANDARD_NAMES)
from trisect.errors import InvalidInput
from trisect.homology import CutSystem, SymplecticSpace, pairing
from trisect.zmatrix import cokernel


@pytest.fixture
def stock():
    return {name: standard_diagram(name) for name in STANDARD_NAMES}


class TestSignature:
    def test_k_bounded_by_genus(self):
        with pytest.raises(InvalidInput):
            TrisectionSignature(1, 2, 0, 0)

    def test_negative_rejected(self):
        with pytest.raises(InvalidInput):
            TrisectionSignature(1, -1, 0, 0)


class TestStandardDiagrams:
    def test_all_validate(self, stock):
        for name, diagram in stock.items():
            report = validate(diagram)
            assert report.passed, (name, report.failures())

    def test_classical_signatures(self, stock):
        expected = {"S4": [0, 0, 0, 0], "S1xS3": [1, 1, 1, 1],
                    "CP2": [1, 0, 0, 0], "CP2bar": [1, 0, 0, 0],
                    "S2xS2": [2, 0, 0, 0]}
        for name, sig in expected.items():
            assert stock[name].signature.to_json() == sig

    def test_s1xs3_systems_coincide(self, stock):
        d = stock["S1xS3"]
        assert d.alpha.classes == d.beta.classes == d.gamma.classes

    def test_projective_plane_matrices_are_units(self, stock):
        for name in ("CP2", "CP2bar"):
            for key in ("alpha_beta", "beta_gamma", "gamma_alpha"):
                [[m]] = stock[name].pairing_matrix(key)
                assert abs(m) == 1

    def test_doubled_pattern_is_unimodular(self, stock):
        d = stock["S2xS2"]
        for key in ("alpha_beta", "beta_gamma", "gamma_alpha"):
            m = d.pairing_matrix(key)
            det = m[0][0] * m[1][1] - m[0][1] * m[1][0]
            assert abs(det) == 1

    def test_unknown_name(self):
        with pytest.raises(InvalidInput):
            standard_diagram("T4")


class TestValidate:
    def test_wrong_k_fails(self):
        space = SymplecticSpace(1)
        a = CutSystem.from_classes([space.a(0)])
        b = CutSystem.from_classes([space.b(0)])
        diagram = TrisectionDiagram(
            space=space, alpha=a, beta=b, gamma=a,
            signature=TrisectionSignature(1, 1, 1, 1))
        report = validate(diagram)
        failed = {name for name, _ in report.failures()}
        assert "alpha_beta_homology" in failed

    def test_invalid_cut_system_reported(self):
        space = SymplecticSpace(1)
        bad = CutSystem.from_classes([2 * space.a(0)])
        diagram = TrisectionDiagram(
            space=space, alpha=bad, beta=bad, gamma=bad,
            signature=TrisectionSignature(1, 1, 1, 1))
        failed = {name for name, _ in validate(diagram).failures()}
        assert "alpha_cut_system" in failed

    def test_annotation_with_wrong_parallel_count_fails(self, stock):
        d = stock["CP2"]
        wrong = TrisectionDiagram(
            space=d.space, alpha=d.alpha, beta=d.beta, gamma=d.gamma,
            signature=d.signature,
            annotations={"alpha_beta": PairAnnotation.identity(("P",))},
            name="broken")
        failed = {name for name, _ in validate(wrong).failures()}
        assert "alpha_beta_annotation" in failed

    def test_geometric_parity_violation_fails(self, stock):
        d = stock["CP2"]
        wrong = TrisectionDiagram(
            space=d.space, alpha=d.alpha, beta=d.beta, gamma=d.gamma,
            signature=d.signature,
            geom=GeomIntersections(alpha_beta=((2,),)),
            name="broken")
        failed = {name for name, _ in validate(wrong).failures()}
        assert "alpha_beta_geometric" in failed


class TestGoodPair:
    def test_parallel_pair(self):
        space = SymplecticSpace(1)
        a = CutSystem.from_classes([space.a(0)])
        ann = PairAnnotation.identity(("P",))
        assert good_pair_check(a, a, ann)

    def test_dual_pair(self):
        space = SymplecticSpace(1)
        a = CutSystem.from_classes([space.a(0)])
        b = CutSystem.from_classes([space.b(0)])
        assert good_pair_check(a, b, PairAnnotation.identity(("D",)))

    def test_mislabeled_pair(self):
        # the second index claims a unit pairing that is actually zero,
        # and the cross pair (a1, b1) pairs nontrivially
        space = SymplecticSpace(2)
        cs1 = CutSystem.from_classes([space.a(0), space.a(1)])
        cs2 = CutSystem.from_classes([space.a(0), space.b(0)])
        ann = PairAnnotation.identity(("P", "D"))
        assert not good_pair_check(cs1, cs2, ann)

    def test_sign_checked_for_parallel(self):
        space = SymplecticSpace(1)
        a = CutSystem.from_classes([space.a(0)])
        minus = CutSystem.from_classes([-space.a(0)])
        assert good_pair_check(a, minus,
                               PairAnnotation.identity(("P",), (-1,)))
        assert not good_pair_check(a, minus,
                                   PairAnnotation.identity(("P",), (1,)))

    def test_geometry_must_match_labels(self):
        space = SymplecticSpace(1)
        a = CutSystem.from_classes([space.a(0)])
        b = CutSystem.from_classes([space.b(0)])
        ann = PairAnnotation.identity(("D",))
        assert good_pair_check(a, b, ann, geom=((1,),))
        assert not good_pair_check(a, b, ann, geom=((3,),))

    def test_matched_matrix_shape_implies_cokernel(self):
        # a passing annotation forces the sigma-permuted pairing matrix to
        # be diagonal 0/±1, so the cokernel condition follows
        space = SymplecticSpace(3)
        cs1 = CutSystem.from_classes([space.a(i) for i in range(3)])
        sigma = (2, 0, 1)
        labels = ("P", "D", "D")
        classes = [None] * 3
        classes[sigma[0]] = space.a(0)
        classes[sigma[1]] = space.b(1)
        classes[sigma[2]] = space.b(2)
        cs2 = CutSystem.from_classes(classes)
        ann = PairAnnotation(sigma, labels, (1, 1, 1))
        assert good_pair_check(cs1, cs2, ann)
        matrix = [[pairing(x, y) for y in cs2] for x in cs1]
        permuted = [[matrix[i][sigma[j]] for j in range(3)] for i in range(3)]
        for i in range(3):
            for j in range(3):
                if i == j:
                    assert abs(permuted[i][j]) == (0 if labels[i] == "P" else 1)
                else:
                    assert permuted[i][j] == 0
        free, torsion = cokernel(matrix)
        assert free == 1 and not torsion


class TestConnectedSum:
    def test_signatures_add(self, stock):
        d = connected_sum(stock["S1xS3"], stock["S1xS3"])
        assert d.signature.to_json() == [2, 2, 2, 2]
        assert validate(d).passed

    def test_genus_zero_is_identity(self, stock):
        d = connected_sum(stock["S4"], stock["CP2"])
        assert d.signature.to_json() == [1, 0, 0, 0]
        assert d.alpha.classes == stock["CP2"].alpha.classes
        assert validate(d).passed

    def test_block_diagonal_pairing(self, stock):
        d = connected_sum(stock["CP2"], stock["CP2"])
        assert d.pairing_matrix("alpha_beta") == [[1, 0], [0, 1]]
        assert validate(d).passed

    def test_associative_on_the_nose(self, stock):
        d1, d2, d3 = (stock[n] for n in ("CP2", "S2xS2", "S1xS3"))
        left = connected_sum(connected_sum(d1, d2), d3)
        right = connected_sum(d1, connected_sum(d2, d3))
        assert left.signature == right.signature
        for which in ("alpha", "beta", "gamma"):
            assert left.system(which).classes == right.system(which).classes

    def test_all_pairwise_sums_validate(self, stock):
        for n1, n2 in itertools.combinations(STANDARD_NAMES, 2):
            d = connected_sum(stock[n1], stock[n2])
            assert validate(d).passed, (n1, n2)


class TestStabilize:
    def test_from_empty_diagram(self, stock):
        d = stabilize(stock["S4"], 1)
        assert d.signature.to_json() == [1, 1, 0, 0]
        assert validate(d).passed
        # beta parallels alpha on the new index, gamma meets them once
        assert d.alpha.classes == d.beta.classes
        assert abs(pairing(d.alpha[0], d.gamma[0])) == 1

    @pytest.mark.parametrize("which,expected", [
        (1, [2, 1, 0, 0]), (2, [2, 0, 1, 0]), (3, [2, 0, 0, 1])])
    def test_signature_increment(self, stock, which, expected):
        d = stabilize(stock["CP2"], which)
        assert d.signature.to_json() == expected
        assert validate(d).passed, validate(d).failures()

    def test_triple_stabilization_of_sphere(self, stock):
        d = stock["S4"]
        for which in (1, 2, 3):
            d = stabilize(d, which)
        assert d.signature.to_json() == [3, 1, 1, 1]
        assert validate(d).passed

    def test_bad_slot(self, stock):
        with pytest.raises(InvalidInput):
            stabilize(stock["S4"], 0)


class TestSpunLens:
    @pytest.mark.parametrize("p", [2, 3, 4, 5])
    def test_validates(self, p):
        report = validate(spun_lens(p, 1))
        assert report.passed, report.failures()

    def test_signature(self):
        assert spun_lens(2, 1).signature.to_json() == [3, 1, 1, 1]

    def test_linking_row_presents_z_mod_p(self):
        for p, q in [(2, 1), (3, 1), (5, 2), (7, 3)]:
            d = spun_lens(p, q)
            row = [pairing(d.alpha[0], g) for g in d.gamma]
            assert cokernel([row]) == (0, [p])

    def test_coprimality_enforced(self):
        with pytest.raises(InvalidInput):
            spun_lens(4, 2)
        with pytest.raises(InvalidInput):
            spun_lens(1, 1)


class TestJson:
    def test_diagram_roundtrip(self, stock):
        for name, diagram in stock.items():
            data = json.loads(json.dumps(diagram.to_json()))
            recovered = TrisectionDiagram.from_json(data)
            assert recovered.to_json() == diagram.to_json()
            assert validate(recovered).passed

    def test_classes_serialized_as_strings(self):
        data = spun_lens(2, 1).to_json()
        assert data["gamma"][0][1] == "2"

    def test_signature_genus_mismatch_rejected(self, stock):
        data = stock["CP2"].to_json()
        data["signature"] = [2, 0, 0, 0]
        with pytest.raises(InvalidInput):
            TrisectionDiagram.from_json(data)
