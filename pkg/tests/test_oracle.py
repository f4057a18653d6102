import math

import pytest

from specdet import (
    BranchCut,
    ExponentialRay,
    LogarithmicRay,
    OracleConfig,
    PowerRays,
    ShiftedLine,
    Spectrum,
    build_zeta,
    direct_zeta,
    divergence_witness,
    eval_zeta,
    exp_blowup_witness,
    fd_zeta_prime,
    zeta_prime_at_zero,
)
from specdet.errors import NearPole, OutsideConvergenceRegion, ValidationError
from specdet.oracle import gaps_nondecaying
from specdet.zetafuncs import riemann_zeta_ds

from conftest import DEFINED_CORPUS, PI, dwe

SAMPLE_POINTS = (1.5, 2, 3, 3 + 1j, 2.5 - 2j)
CORPUS_CASES = [(spec, beta) for spec, cuts in DEFINED_CORPUS for beta in cuts]
LOG_RAY = Spectrum.of(LogarithmicRay(1, math.e, 0))
EXP_RAY = Spectrum.of(ExponentialRay(1, 1, 0))


def close(oracle, engine):
    return abs(oracle - engine) <= max(1e-7 * abs(engine), 1e-9)


class TestDirectZeta:
    def test_dwe_zero_value(self):
        got = direct_zeta(dwe(1), BranchCut(-PI), 3)
        assert abs(got.value) <= 1e-8
        assert abs(eval_zeta(build_zeta(dwe(1), BranchCut(-PI)), 3)) <= 1e-14

    def test_shifted_line(self):
        spec = Spectrum.of(ShiftedLine(1))
        got = direct_zeta(spec, BranchCut(0), 2, OracleConfig(truncation=10**5))
        assert close(got.value, eval_zeta(build_zeta(spec, BranchCut(0)), 2))

    def test_exponential(self):
        got = direct_zeta(EXP_RAY, BranchCut(-PI), 1)
        assert got.value == pytest.approx(1 / (math.e - 1), rel=1e-13)

    @pytest.mark.parametrize("spec, beta", CORPUS_CASES)
    def test_matches_engine(self, spec, beta):
        cut = BranchCut(beta)
        form = build_zeta(spec, cut)
        for s in SAMPLE_POINTS:
            got = direct_zeta(spec, cut, s)
            want = eval_zeta(form, s)
            assert close(got.value, want), (s, got, want)
            assert got.error >= 0

    def test_outside_region(self):
        with pytest.raises(OutsideConvergenceRegion):
            direct_zeta(dwe(1), BranchCut(-PI), 1.0)
        with pytest.raises(OutsideConvergenceRegion):
            direct_zeta(Spectrum.of(PowerRays(1, 3, (1.0,))), BranchCut(0), 0.3)
        with pytest.raises(OutsideConvergenceRegion):
            direct_zeta(Spectrum.of(ShiftedLine(0.5)), BranchCut(0), 0.9 + 3j)
        with pytest.raises(OutsideConvergenceRegion):
            direct_zeta(EXP_RAY, BranchCut(-PI), -0.5)
        with pytest.raises(OutsideConvergenceRegion):
            direct_zeta(LOG_RAY, BranchCut(1), 5)

    def test_config_validation(self):
        with pytest.raises(ValidationError):
            OracleConfig(truncation=10)
        with pytest.raises(ValidationError):
            OracleConfig(fd_step=0)


class TestFiniteDifference:
    def test_dwe(self):
        assert fd_zeta_prime(build_zeta(dwe(1), BranchCut(-PI)), 0) == pytest.approx(-math.log(2), abs=1e-7)
        assert fd_zeta_prime(build_zeta(dwe(1), BranchCut(0)), 0) == pytest.approx(1j * PI - math.log(2), abs=1e-7)

    def test_riemann_kernel(self):
        # a single ray of moduli j on the positive axis is the bare Riemann kernel
        form = build_zeta(Spectrum.of(PowerRays(1, 1, (0.0,))), BranchCut(-PI))
        assert fd_zeta_prime(form, 0) == pytest.approx(riemann_zeta_ds(0), abs=1e-7)
        assert fd_zeta_prime(form, 0) == pytest.approx(-0.5 * math.log(2 * PI), abs=1e-7)

    @pytest.mark.parametrize("spec, beta", CORPUS_CASES)
    def test_matches_analytic(self, spec, beta):
        form = build_zeta(spec, BranchCut(beta))
        assert abs(fd_zeta_prime(form, 0) - zeta_prime_at_zero(form)) <= 1e-6

    def test_near_pole(self):
        form = build_zeta(EXP_RAY, BranchCut(-PI))
        with pytest.raises(NearPole):
            fd_zeta_prime(form, 0)


class TestDivergenceWitness:
    def test_s_zero_counts_terms(self):
        assert divergence_witness(LOG_RAY, 0, [100, 1000, 12345]) == [100.0, 1000.0, 12345.0]

    @pytest.mark.parametrize("s", [2.0, 1.0])
    def test_increasing_slow_decay(self, s):
        sums = divergence_witness(LOG_RAY, s, [10**2, 10**3, 10**4])
        assert sums[0] < sums[1] < sums[2]
        assert gaps_nondecaying(sums)
        assert sums[2] - sums[1] > 0.5 * (sums[1] - sums[0])

    def test_faster_growth_at_smaller_s(self):
        at2 = divergence_witness(LOG_RAY, 2, [10**4])[0]
        at1 = divergence_witness(LOG_RAY, 1, [10**4])[0]
        assert at1 > at2

    def test_checkpoint_independence(self):
        a = divergence_witness(LOG_RAY, 2, [1000])
        b = divergence_witness(LOG_RAY, 2, [10, 1000, 5000])
        assert a[0] == b[1]

    @pytest.mark.parametrize("s", [0.5, 3.0, 6.0])
    def test_increasing_for_positive_s(self, s):
        spec = Spectrum.of(LogarithmicRay(2, 1, 1.0))
        sums = divergence_witness(spec, s, [10, 100, 1000, 10**4])
        assert all(b > a for a, b in zip(sums, sums[1:]))

    def test_needs_log_ray(self):
        with pytest.raises(ValidationError):
            divergence_witness(dwe(), 2, [10])


class TestBlowup:
    def test_examples(self):
        v01, v001, v0001 = exp_blowup_witness(EXP_RAY, [0.1, 0.01, 0.001])
        assert 50 < v01 < 200
        # exact derivative of 1/(e^s - 1) is -e^s/(e^s - 1)^2 = -1/s^2 + 1/12 + O(s^2)
        for s, v in ((0.1, v01), (0.01, v001), (0.001, v0001)):
            assert v == pytest.approx(math.exp(s) / math.expm1(s) ** 2, rel=1e-12)
        assert v0001 > 1e6 - 1
        assert v01 < v001 < v0001
        assert exp_blowup_witness(EXP_RAY, [1.0])[0] < 10

    def test_validation(self):
        with pytest.raises(ValidationError):
            exp_blowup_witness(EXP_RAY, [0.01, 0.1])
        with pytest.raises(ValidationError):
            exp_blowup_witness(EXP_RAY, [0.1, -0.1])
        with pytest.raises(ValidationError):
            exp_blowup_witness(dwe(), [0.1])
