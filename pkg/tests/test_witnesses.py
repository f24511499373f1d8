import math
from fractions import Fraction as F

import pytest

from amalgam.errors import IndicesNotApplicable, UnsupportedIndices
from amalgam.extreal import ExtReal
from amalgam.witnesses import (chlp_family, geometric_certificate, local_integrability_witness,
                               pseries_certificate, rwnbfs_p4_family, rwnbfs_p5_family,
                               tem_global_witness, tem_local_witness)


def ex(x):
    return ExtReal.exact(F(x))


def _side(bundle, prefix):
    return next(s for s in bundle.finite + bundle.infinite if s.label.startswith(prefix))


class TestSeries:
    def test_zeta_three_halves(self):
        c = pseries_certificate(F(3, 2), 1000)
        assert c.convergent and c.valid()
        zeta = 2.6123753486854883
        assert zeta <= float(c.bound) <= 2.613
        assert float(c.partial_sum) <= zeta

    def test_divergent_three_quarters(self):
        c = pseries_certificate(F(3, 4), 10000)
        assert not c.convergent and c.valid()
        assert float(c.bound) == pytest.approx(4 * (10001 ** 0.25 - 1), rel=1e-12)
        assert float(c.bound) > 36.0

    def test_harmonic(self):
        c = pseries_certificate(1, 10)
        assert not c.convergent
        assert float(c.bound) == pytest.approx(math.log(11), rel=1e-12)
        assert c.valid()

    def test_lower_bound_monotone_in_N(self):
        bounds = [float(pseries_certificate(F(3, 4), N).bound) for N in (10, 100, 1000, 10000)]
        assert bounds == sorted(bounds)

    def test_geometric(self):
        c = geometric_certificate(50)
        assert c.bound == ex(2) and c.valid()


class TestEmbeddingWitnesses:
    def test_local_two_three(self):
        b = tem_local_witness(2, 3)
        assert b.verify()
        assert _side(b, "L:2").value.close(ex(3) ** F(1, 2))
        assert not _side(b, "L:3").value.is_finite

    def test_local_one_two(self):
        b = tem_local_witness(1, 2)
        assert b.verify() and _side(b, "L:1").value == ex(2)

    def test_local_precondition(self):
        with pytest.raises(UnsupportedIndices):
            tem_local_witness(2, 2)

    def test_local_sup_target(self):
        assert tem_local_witness(1, "inf").verify()

    def test_global_two_one(self):
        b = tem_global_witness(2, 1)
        assert b.verify() and _side(b, "L:2").value == ex(1)

    def test_global_three_two(self):
        b = tem_global_witness(3, 2)
        assert b.verify()
        assert _side(b, "L:3").value.close(ex(2) ** F(1, 3))

    def test_global_precondition(self):
        with pytest.raises(UnsupportedIndices):
            tem_global_witness(2, 2)

    def test_local_integrability(self):
        b = local_integrability_witness(F(1, 2))
        assert b.verify() and _side(b, "L:1/2").value == ex(16)


class TestWienerFamilies:
    def test_p4_two_one(self):
        b = rwnbfs_p4_family(2, 1, 10000)
        assert b.params["a"] == "3/2" and b.verify()
        measure = _side(b, "lambda").certificate
        assert measure.convergent and float(measure.bound) <= 2.613
        norm = _side(b, "|chi_E|").certificate
        assert not norm.convergent and float(norm.bound) > 36.0
        assert float(b.truncation["|chi_E_N|_W"]) > 30

    def test_p4_sup_local(self):
        b = rwnbfs_p4_family("inf", 1, 200)
        assert b.verify()
        assert _side(b, "lambda").value == ex(2)

    def test_p4_not_applicable(self):
        with pytest.raises(IndicesNotApplicable):
            rwnbfs_p4_family(2, 2)

    def test_p5_one_two(self):
        b = rwnbfs_p5_family(1, 2, 10000)
        assert (b.params["a"], b.params["b"]) == ("3/4", "2")
        assert b.verify()
        assert float(_side(b, "lambda").certificate.bound) <= 1.645
        assert float(_side(b, "|f|").certificate.bound) <= 2.613
        integral = _side(b, "int_E").certificate
        assert not integral.convergent and float(integral.bound) > 36.0
        assert float(b.truncation["int_E_N f"]) >= 35

    def test_p5_sup_global(self):
        b = rwnbfs_p5_family(2, "inf", 500)
        assert b.params["b"] == "3/2" and b.verify()
        assert _side(b, "|f|").value == ex(1)

    def test_p5_not_applicable(self):
        with pytest.raises(IndicesNotApplicable):
            rwnbfs_p5_family(2, 1)

    def test_parameter_override_checked(self):
        assert rwnbfs_p4_family(2, 1, 200, a=F(7, 4)).verify()
        with pytest.raises(ValueError):
            rwnbfs_p4_family(2, 1, 200, a=F(1, 2))


class TestChlp:
    def test_examples(self):
        fam = chlp_family(F(1, 2), 100)
        assert fam.dominated and fam.ratio == ex(F(9802, 100))
        assert chlp_family(F(1, 2), 2).ratio == ex(1)

    def test_ratio_increasing(self):
        ratios = [chlp_family(F(1, 2), N).ratio for N in (2, 3, 10, 100, 1000)]
        assert all(a < b for a, b in zip(ratios, ratios[1:]))

    def test_banach_boundary(self):
        assert all(chlp_family(1, N).ratio == ex(1) for N in (2, 10, 1000))

    def test_bundle_json_is_verified(self):
        doc = chlp_family(F(1, 2), 100).to_json()
        assert doc["verified"] and doc["ratio"] == {"kind": "exact", "value": "4901/50"}
