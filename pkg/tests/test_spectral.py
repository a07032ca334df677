import numpy as np
import pytest

from phasorqm.core import NATURAL, Grid1D, Potential, normalize
from phasorqm.errors import NonUniformSampling, TooFewSamples
from phasorqm.propagator import Trajectory, propagate, stability_limit
from phasorqm.representation import (
    Helicity,
    box_energy,
    box_energy_discrete,
    box_state,
    helicity_flip,
)
from phasorqm.spectral import (
    MIN_SAMPLES,
    Correlation,
    autocorrelation,
    planck_check,
    spectrum,
)

BOX = Grid1D(np.pi, 101)


def tone(omega, n=512, dt=0.05, amplitude=1.0, sign=-1):
    t = np.arange(n) * dt
    return Correlation(t, amplitude * np.cos(omega * t), sign * amplitude * np.sin(omega * t))


def box_run(levels, offset=0.0, grid=BOX, target_bw=0.01, helicity=Helicity.MINUS):
    v = None
    for n in levels:
        term = box_state(n, helicity, grid, 0.0, NATURAL)
        v = term if v is None else v + term
    v = normalize(v)
    V = Potential.zero(grid, offset)
    dt = 0.85 * stability_limit(V.without_offset(), grid, NATURAL)
    every = 200  # keeps the offset peaks well below Nyquist
    n_samples = int(np.ceil(2 * np.pi / (target_bw * every * dt)))
    return propagate(v, V, dt, (n_samples - 1) * every, every, NATURAL)


@pytest.fixture(scope="module")
def box_123():
    traj = box_run((1, 2, 3))
    return traj, spectrum(autocorrelation(traj))


class TestAutocorrelation:
    @pytest.mark.parametrize("sense", list(Helicity))
    @pytest.mark.parametrize("n", [1, 2, 4])
    def test_single_eigenstate_rotation(self, n, sense):
        # the state rotates in the integrator's sense; PLUS gives c_im = +sin
        omega = box_energy_discrete(n, BOX, NATURAL) / NATURAL.hbar
        v = box_state(n, Helicity.PLUS, BOX, 0.0, NATURAL)
        traj = propagate(v, Potential.zero(BOX), 1e-4, 20_000, 500, NATURAL, sense=sense)
        corr = autocorrelation(traj)
        np.testing.assert_allclose(corr.c_re, np.cos(omega * corr.times), atol=1e-6)
        np.testing.assert_allclose(corr.c_im, sense.sign * np.sin(omega * corr.times), atol=1e-6)
        modulus = corr.c_re**2 + corr.c_im**2
        np.testing.assert_allclose(modulus, modulus[0], atol=1e-6)

    def test_initial_value_is_norm_squared(self):
        v = box_state(1, Helicity.PLUS, BOX, 0.0, NATURAL).scaled(1.7)
        traj = propagate(v, Potential.zero(BOX), 5e-4, 10, 5, NATURAL)
        corr = autocorrelation(traj)
        assert corr.c_re[0] ** 2 + corr.c_im[0] ** 2 == pytest.approx(1.7**4, rel=1e-12)

    def test_two_level_superposition(self):
        w1, w2 = (box_energy_discrete(n, BOX, NATURAL) for n in (1, 2))
        v = box_state(1, Helicity.MINUS, BOX, 0.0, NATURAL) + box_state(2, Helicity.MINUS, BOX, 0.0, NATURAL)
        v = normalize(v)
        traj = propagate(v, Potential.zero(BOX), 1e-4, 30_000, 300, NATURAL)
        corr = autocorrelation(traj)
        t = corr.times
        np.testing.assert_allclose(corr.c_re, 0.5 * np.cos(w1 * t) + 0.5 * np.cos(w2 * t), atol=1e-5)
        np.testing.assert_allclose(corr.c_im, -0.5 * np.sin(w1 * t) - 0.5 * np.sin(w2 * t), atol=1e-5)

    def test_non_uniform_sampling(self):
        v = box_state(1, Helicity.PLUS, BOX, 0.0, NATURAL)
        traj = Trajectory.from_fields([0.0, 0.1, 0.3], [v, v, v])
        with pytest.raises(NonUniformSampling):
            autocorrelation(traj)

    def test_needs_two_samples(self):
        v = box_state(1, Helicity.PLUS, BOX, 0.0, NATURAL)
        with pytest.raises(TooFewSamples):
            autocorrelation(Trajectory.from_fields([0.0], [v]))


class TestSpectrum:
    @pytest.mark.parametrize("omega", [0.37, 1.0, 5.5, 20.0])
    def test_single_tone(self, omega):
        result = spectrum(tone(omega))
        assert len(result.peaks) == 1
        p = result.peaks[0]
        assert abs(p.omega - omega) <= p.bin_width / 2
        assert p.helicity is Helicity.MINUS
        assert p.amplitude == pytest.approx(1.0, rel=0.05)

    def test_tone_refinement_is_sub_bin(self):
        bw = 2 * np.pi / (512 * 0.05)
        worst = max(abs(spectrum(tone(omega)).peaks[0].omega - omega)
                    for omega in 3.0 + bw * np.linspace(0, 1, 11))
        assert worst <= 0.05 * bw

    def test_plus_rotation_is_labelled(self):
        p = spectrum(tone(2.0, sign=+1)).peaks
        assert len(p) == 1 and p[0].helicity is Helicity.PLUS
        assert abs(p[0].omega - 2.0) <= p[0].bin_width / 2

    def test_bin_width_and_band(self):
        result = spectrum(tone(1.0, n=200, dt=0.1))
        assert result.bin_width == pytest.approx(2 * np.pi / 20.0)
        assert result.peaks[0].bin_width == pytest.approx(2 * np.pi / 20.0)
        assert np.all(np.abs(result.omegas) <= np.pi / 0.1 + 1e-12)
        assert np.all(result.magnitudes >= 0)

    def test_sidelobes_are_not_peaks(self):
        corr = tone(1.0)
        strong = spectrum(corr)
        t = corr.times
        # the Hann first sidelobe is ~2.7% in magnitude, below 1% of the power
        assert len(strong.peaks) == 1
        for extra, expected in ((0.05, 1), (0.15, 2)):
            c = Correlation(t, corr.c_re + extra * np.cos(7 * t), corr.c_im - extra * np.sin(7 * t))
            assert len(spectrum(c).peaks) == expected

    def test_too_few_samples(self):
        with pytest.raises(TooFewSamples):
            spectrum(tone(1.0, n=MIN_SAMPLES - 1))

    def test_non_uniform(self):
        c = tone(1.0, n=100)
        t = c.times.copy()
        t[50:] += 0.01
        with pytest.raises(NonUniformSampling):
            spectrum(Correlation(t, c.c_re, c.c_im))


class TestBoxSpectrum:
    def test_peaks_at_n_squared_over_two(self, box_123):
        _, result = box_123
        bw = result.bin_width
        assert bw <= 0.01
        omegas = result.peak_omegas()
        assert omegas.size == 3
        np.testing.assert_allclose(omegas, [0.5, 2.0, 4.5], rtol=0, atol=bw)
        np.testing.assert_allclose(omegas / omegas[0], [1, 4, 9], rtol=0.02)

    def test_equal_weights_give_equal_amplitudes(self, box_123):
        _, result = box_123
        amps = np.array([p.amplitude for p in result.peaks])
        np.testing.assert_allclose(amps, 1 / 3, rtol=0.05)

    def test_offset_shifts_every_peak(self, box_123):
        base_traj, base = box_123
        traj = box_run((1, 2, 3), offset=3.0)
        shifted = spectrum(autocorrelation(traj))
        assert len(shifted.peaks) == 3
        np.testing.assert_allclose(
            shifted.peak_omegas(), base.peak_omegas() + 3.0, rtol=0, atol=shifted.bin_width
        )
        np.testing.assert_allclose(traj.magnitude, base_traj.magnitude, rtol=0, atol=1e-9)

    def test_flipped_state_has_same_frequencies(self, box_123):
        # under the same integrator sense the flipped state is still a sum of
        # MINUS rotations at the same rates
        _, base = box_123
        traj = box_run((1, 2, 3), helicity=Helicity.PLUS)
        result = spectrum(autocorrelation(traj))
        np.testing.assert_allclose(result.peak_omegas(), base.peak_omegas(), atol=1e-9)

    def test_opposite_sense_labels_plus(self, box_123):
        _, base = box_123
        traj = box_run((1, 2, 3))
        flipped = Trajectory(traj.sample_times, traj.psi_x, -traj.psi_y, traj.grid, traj.recorded_every)
        result = spectrum(autocorrelation(flipped))
        assert {p.helicity for p in result.peaks} == {Helicity.PLUS}
        np.testing.assert_allclose(result.peak_omegas(), base.peak_omegas(), atol=1e-9)


class TestPlanckCheck:
    def test_exact_synthetic_match(self):
        result = spectrum(tone(2.0, n=1024, dt=2 * np.pi / (1024 * 0.05)))
        # tone sits exactly on a bin, so interpolation returns it exactly
        rows = planck_check(result, [result.peaks[0].omega * NATURAL.hbar], NATURAL)
        assert rows[0].relative_error == 0.0

    def test_box_run_within_bin(self, box_123):
        _, result = box_123
        expected = [box_energy(n, np.pi, NATURAL) for n in (1, 2, 3)]
        rows = planck_check(result, expected, NATURAL)
        for row, e in zip(rows, expected):
            assert row.relative_error <= result.bin_width * NATURAL.hbar / e

    def test_empty_expected(self, box_123):
        assert planck_check(box_123[1], [], NATURAL) == []

    def test_no_peaks(self):
        t = np.arange(100) * 0.1
        result = spectrum(Correlation(t, np.zeros(100), np.zeros(100)))
        assert result.peaks == []
        rows = planck_check(result, [1.0], NATURAL)
        assert np.isnan(rows[0].peak_omega) and rows[0].relative_error == np.inf


def test_helicity_flip_of_initial_state_matches_opposite_sense_spectrum():
    v = box_state(2, Helicity.MINUS, BOX, 0.0, NATURAL)
    dt = 5e-4
    a = propagate(helicity_flip(v), Potential.zero(BOX), dt, 128_000, 1000, NATURAL, sense=Helicity.PLUS)
    p = spectrum(autocorrelation(a)).peaks
    assert len(p) == 1 and p[0].helicity is Helicity.PLUS
    assert abs(p[0].omega - box_energy_discrete(2, BOX, NATURAL)) <= p[0].bin_width / 2
