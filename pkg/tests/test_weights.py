"""Category weight and the module-weight obstruction on the fixtures."""

import pytest

from lscat.spaces import builtin
from lscat.weights import LoopSpaceModel, WeightError


@pytest.fixture(scope="module")
def spin9():
    return LoopSpaceModel(builtin("spin9"))


def test_generator_weights(spin9):
    """Criterion 7: every generator has weight 1."""
    alg = spin9.algebra
    for name in ("x3", "x5", "x7", "x15"):
        assert spin9.wgt(alg.gen(name)) == 1


def test_space_weight(spin9):
    """Criterion 7: wgt(Spin(9)) = 6, on the top class."""
    assert spin9.wgt_space() == 6
    alg = spin9.algebra
    top = alg.parse_element(["x3^3*x5*x7*x15"])
    assert spin9.wgt(top) == 6


def test_weight_is_filtration(spin9):
    """Weight of a monomial equals its E-infinity column."""
    alg = spin9.algebra
    assert spin9.wgt(alg.parse_element(["x3^2"])) == 2
    assert spin9.wgt(alg.parse_element(["x3*x5"])) == 2
    assert spin9.wgt(alg.parse_element(["x3^2*x5*x7"])) == 4
    # min over terms
    assert spin9.wgt(alg.parse_element(["x3^2", "x3"])) == 1


def test_weight_undefined_cases(spin9):
    alg = spin9.algebra
    with pytest.raises(WeightError):
        spin9.wgt(alg.zero())
    with pytest.raises(WeightError):
        spin9.wgt(alg.one())


def test_cup_length_vs_weight_ladder(spin9):
    assert spin9.cup_length() <= spin9.wgt_space()


def test_witness_at_stage_seven(spin9):
    """Criterion 8: the k = 4 witness with H^32 = 0 appears at m = 7."""
    w = spin9.find_obstruction(7)
    assert w is not None
    assert w.k == 4
    assert w.u_degree == 36
    assert w.vanishing_degree == 32
    assert w.z_label == "x3^3*x5*x7*x11"
    assert w.u == "x3^3*x5*x7*x15"
    assert not spin9.algebra.basis(32)


def test_no_witness_at_stage_eight(spin9):
    """The stage-8 model has a residual class in the target degree."""
    assert spin9.find_obstruction(8) is None
    from lscat.specseq import BUCKET_RESIDUAL

    residual_36 = [
        c
        for c in spin9.stage_report(8)
        if c.bucket == BUCKET_RESIDUAL and c.degree == 36
    ]
    assert residual_36  # this is exactly what blocks the witness


def test_mwgt_lower_bound(spin9):
    """Criterion 8: mwgt_lower_bound = 8."""
    assert spin9.mwgt_lower_bound() == 8
    witnessed = {
        m for m in range(37) if spin9.find_obstruction(m) is not None
    }
    assert max(witnessed) == 7
    assert 8 not in witnessed


def test_ladder(spin9):
    assert (
        spin9.cup_length() <= spin9.wgt_space() <= spin9.mwgt_lower_bound()
    )


def test_toy_has_no_obstruction():
    model = LoopSpaceModel(builtin("toy-trunc-poly"))
    assert model.mwgt_lower_bound() == 0
    assert model.wgt_space() == 3
    assert model.cup_length() == 3


def test_unit_space():
    model = LoopSpaceModel(builtin("unit"))
    assert model.cup_length() == 0
    assert model.wgt_space() == 0
    assert model.mwgt_lower_bound() == 0


def test_degree_cap_override():
    model = LoopSpaceModel(builtin("spin9"), degree_cap=20)
    assert model.space.degree_cap == 20
    assert model.algebra.degree_cap == 20
    # the forced differential is still found under the smaller cap
    assert model.differentials[0].r == 3
