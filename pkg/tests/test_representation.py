import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from phasorqm.core import NATURAL, SI_ELECTRON, Boundary, ComplexField, Grid1D, Potential
from phasorqm.errors import BadQuantumNumber, IncommensurateWave
from phasorqm.propagator import discrete_hamiltonian
from phasorqm.representation import (
    Helicity,
    WaveParams,
    box_energy,
    box_energy_discrete,
    box_state,
    complex_from_vector,
    de_broglie,
    gaussian_packet,
    helicity_flip,
    plane_wave,
    rest_mass_offset,
    vector_from_complex,
)

EV = 1.602176634e-19


def ring(n=64, length=2 * np.pi):
    return Grid1D(length, n, Boundary.PERIODIC)


finite = st.floats(-1e6, 1e6, allow_nan=False)


class TestMapping:
    def test_identity_values(self):
        g = ring(4)
        c = ComplexField([1, 0.6, 1, 1], [0, -0.8, 0, 0], g)
        v = vector_from_complex(c)
        np.testing.assert_array_equal(v.psi_x, [1, 0.6, 1, 1])
        np.testing.assert_array_equal(v.psi_y, [0, -0.8, 0, 0])
        back = complex_from_vector(v)
        np.testing.assert_array_equal(back.re, c.re)
        np.testing.assert_array_equal(back.im, c.im)

    @settings(max_examples=50, deadline=None)
    @given(arrays(np.float64, 16, elements=finite), arrays(np.float64, 16, elements=finite))
    def test_round_trip_bit_identical(self, re, im):
        c = ComplexField(re, im, ring(16))
        back = complex_from_vector(vector_from_complex(c))
        assert back.re.tobytes() == c.re.tobytes()
        assert back.im.tobytes() == c.im.tobytes()
        v = vector_from_complex(c)
        again = vector_from_complex(complex_from_vector(v))
        assert again.psi_y.tobytes() == v.psi_y.tobytes()

    def test_helicity_flip_examples(self):
        g = ring(3)
        v = vector_from_complex(ComplexField([1, 0, 0.5], [0, 1, -2], g))
        f = helicity_flip(v)
        np.testing.assert_array_equal(f.psi_x, [1, 0, 0.5])
        np.testing.assert_array_equal(f.psi_y, [0, -1, 2])

    @settings(max_examples=50, deadline=None)
    @given(arrays(np.float64, 16, elements=finite), arrays(np.float64, 16, elements=finite))
    def test_flip_is_conjugation_and_involution(self, re, im):
        v = vector_from_complex(ComplexField(re, im, ring(16)))
        np.testing.assert_array_equal(
            complex_from_vector(helicity_flip(v)).to_array(),
            np.conj(complex_from_vector(v).to_array()),
        )
        twice = helicity_flip(helicity_flip(v))
        assert twice.psi_y.tobytes() == v.psi_y.tobytes()
        np.testing.assert_array_equal(
            helicity_flip(vector_from_complex(ComplexField(re, im, ring(16)))).psi_y,
            vector_from_complex(ComplexField(re, im, ring(16)).conj()).psi_y,
        )

    def test_helicity_enum(self):
        assert Helicity.PLUS.flip() is Helicity.MINUS
        assert Helicity.PLUS.flip().flip() is Helicity.PLUS
        assert Helicity.parse("plus") is Helicity.PLUS
        assert Helicity.parse("-") is Helicity.MINUS


class TestPlaneWave:
    def test_origin_at_t0(self):
        g = ring()
        for h in Helicity:
            v = plane_wave(WaveParams(1.7, 3.0, 2.0, h), g, 0.0)
            assert (v.psi_x[0], v.psi_y[0]) == (1.7, 0.0)

    def test_quarter_phase_plus(self):
        g = ring()
        omega = 2.0
        t = (np.pi / 2) / omega  # omega t - k z = pi/2 at z = 0
        v = plane_wave(WaveParams(1.0, 3.0, omega, Helicity.PLUS), g, t)
        assert v.psi_x[0] == pytest.approx(0.0, abs=1e-15)
        assert v.psi_y[0] == pytest.approx(1.0, abs=1e-15)

    @pytest.mark.parametrize("t", [0.0, 0.3, 11.7])
    def test_constant_magnitude(self, t):
        v = plane_wave(WaveParams(0.8, 5.0, 12.5, Helicity.PLUS), ring(), t)
        np.testing.assert_allclose(v.magnitude, 0.8, rtol=1e-14)

    def test_minus_is_flip_of_plus(self):
        g = ring()
        plus = plane_wave(WaveParams(1.0, 2.0, 2.0, Helicity.PLUS), g, 0.37)
        minus = plane_wave(WaveParams(1.0, 2.0, 2.0, Helicity.MINUS), g, 0.37)
        np.testing.assert_array_equal(minus.psi_x, helicity_flip(plus).psi_x)
        np.testing.assert_array_equal(minus.psi_y, helicity_flip(plus).psi_y)

    def test_incommensurate(self):
        with pytest.raises(IncommensurateWave):
            plane_wave(WaveParams(1.0, 2.5, 1.0), ring())
        with pytest.raises(IncommensurateWave):
            plane_wave(WaveParams(1.0, 1.0, 1.0), Grid1D(2 * np.pi, 64))

    def test_minus_matches_conventional_complex_wave(self):
        g = ring()
        k, omega, t = 3.0, 4.5, 0.2
        v = plane_wave(WaveParams(1.0, k, omega, Helicity.MINUS), g, t)
        expected = np.exp(-1j * (omega * t - k * g.z))
        np.testing.assert_allclose(complex_from_vector(v).to_array(), expected, atol=1e-14)


class TestBox:
    def test_ground_state_t0(self):
        g = Grid1D(2.0, 51)
        v = box_state(1, Helicity.PLUS, g, 0.0, NATURAL)
        expected = np.sqrt(2 / 2.0) * np.sin(np.pi * g.z / 2.0)
        np.testing.assert_allclose(v.psi_x[1:-1], expected[1:-1], rtol=1e-15)
        assert v.psi_x[0] == 0.0 and v.psi_x[-1] == 0.0
        np.testing.assert_array_equal(v.psi_y, 0.0)

    def test_n2_quarter_turn(self):
        g = Grid1D(np.pi, 101)
        omega2 = box_energy(2, np.pi, NATURAL)
        v = box_state(2, Helicity.PLUS, g, (np.pi / 2) / omega2, NATURAL)
        np.testing.assert_allclose(v.psi_x, 0.0, atol=1e-15)
        np.testing.assert_allclose(
            v.psi_y[1:-1], np.sqrt(2 / np.pi) * np.sin(2 * g.z[1:-1]), rtol=1e-14
        )

    def test_n3_has_two_interior_nodes(self):
        g = Grid1D(1.0, 300)
        env = box_state(3, Helicity.PLUS, g, 0.0, NATURAL).psi_x[1:-1]
        assert np.count_nonzero(np.diff(np.sign(env)) != 0) == 2

    def test_bad_n(self):
        g = Grid1D(1.0, 11)
        for n in (0, -1, 1.5, 10):
            with pytest.raises(BadQuantumNumber):
                box_state(n, Helicity.PLUS, g, 0.0, NATURAL)
        box_state(9, Helicity.PLUS, g, 0.0, NATURAL)

    def test_times_differ_by_global_rotation(self):
        g = Grid1D(np.pi, 201)
        n, t1, t2 = 3, 0.4, 2.9
        a = box_state(n, Helicity.PLUS, g, t1, NATURAL)
        b = box_state(n, Helicity.PLUS, g, t2, NATURAL)
        angle = box_energy(n, np.pi, NATURAL) * (t2 - t1)
        rotated = a.rotated(angle)
        np.testing.assert_allclose(rotated.psi_x, b.psi_x, atol=1e-12)
        np.testing.assert_allclose(rotated.psi_y, b.psi_y, atol=1e-12)
        # MINUS rotates the other way
        c = box_state(n, Helicity.MINUS, g, t1, NATURAL).rotated(-angle)
        np.testing.assert_allclose(c.psi_y, box_state(n, Helicity.MINUS, g, t2, NATURAL).psi_y, atol=1e-12)

    @pytest.mark.parametrize("n", [1, 2, 5, 17])
    def test_stationary_under_discrete_hamiltonian(self, n):
        g = Grid1D(2.5, 121)
        v = box_state(n, Helicity.PLUS, g, 0.0, NATURAL)
        hv = discrete_hamiltonian(v.psi_x, Potential.zero(g), g, NATURAL)
        e = box_energy_discrete(n, g, NATURAL)
        residual = np.linalg.norm(hv - e * v.psi_x) / np.linalg.norm(e * v.psi_x)
        assert residual <= 1e-10

    def test_discrete_levels_match_dense_eigensolver(self):
        # independent oracle: eigenvalues of the dense tridiagonal matrix
        g = Grid1D(np.pi, 60)
        m = g.n_points - 2
        c1 = 1 / (2 * g.spacing**2)
        H = np.diag(np.full(m, 2 * c1)) - c1 * (np.eye(m, k=1) + np.eye(m, k=-1))
        dense = np.linalg.eigvalsh(H)[:6]
        ours = [box_energy_discrete(n, g, NATURAL) for n in range(1, 7)]
        np.testing.assert_allclose(ours, dense, rtol=1e-12)

    def test_rest_mass_toggle(self):
        g = Grid1D(np.pi, 101)
        t = 0.3
        with_rest = box_state(1, Helicity.PLUS, g, t, NATURAL, rest_mass=True)
        plain = box_state(1, Helicity.PLUS, g, t, NATURAL)
        np.testing.assert_allclose(plain.rotated(1.0 * t).psi_y, with_rest.psi_y, atol=1e-14)

    def test_amplitude_parameter(self):
        g = Grid1D(1.0, 11)
        v = box_state(1, Helicity.PLUS, g, 0.0, NATURAL, amplitude=3.0)
        assert v.psi_x.max() == pytest.approx(3.0)


class TestEnergies:
    def test_natural_ground(self):
        assert box_energy(1, np.pi, NATURAL) == 0.5

    @pytest.mark.parametrize("n", range(1, 6))
    def test_quadratic_in_n(self, n):
        assert box_energy(n, 1.3, NATURAL) / box_energy(1, 1.3, NATURAL) == pytest.approx(n**2, rel=1e-14)

    def test_si_one_nanometre(self):
        # hbar^2 pi^2 / (2 m_e L^2), L = 1e-9 m, evaluated by hand: 6.0247e-20 J
        assert box_energy(1, 1e-9, SI_ELECTRON) == pytest.approx(6.025e-20, rel=1e-3)

    def test_bad_quantum_number(self):
        with pytest.raises(BadQuantumNumber):
            box_energy(0, 1.0, NATURAL)

    def test_de_broglie(self):
        assert de_broglie(0.0, 0.0, NATURAL) == (0.0, 0.0)
        assert de_broglie(0.5, 1.0, NATURAL) == (0.5, 1.0)
        mc2 = SI_ELECTRON.mass * SI_ELECTRON.c**2
        omega, _ = de_broglie(mc2, 0.0, SI_ELECTRON)
        assert omega == pytest.approx(7.76e20, rel=5e-3)

    def test_rest_mass_offset(self):
        assert rest_mass_offset(NATURAL) == 1.0
        e_si = rest_mass_offset(SI_ELECTRON)
        assert e_si == pytest.approx(8.187e-14, rel=1e-3)
        assert e_si / EV / 1e3 == pytest.approx(511.0, rel=1e-3)
        assert rest_mass_offset(SI_ELECTRON) / SI_ELECTRON.hbar == de_broglie(e_si, 0, SI_ELECTRON)[0]


def test_gaussian_packet_normalized_and_moving_right():
    g = Grid1D(20.0, 256, Boundary.PERIODIC)
    v = gaussian_packet(g, 10.0, 1.0, k=2.0)
    c = complex_from_vector(v).to_array()
    # <k> from the discrete momentum operator -i d/dz (central difference)
    dpsi = (np.roll(c, -1) - np.roll(c, 1)) / (2 * g.spacing)
    mean_k = np.real(np.sum(np.conj(c) * (-1j) * dpsi) * g.spacing)
    assert mean_k == pytest.approx(2.0, rel=1e-2)
    assert np.sum(np.abs(c) ** 2) * g.spacing == pytest.approx(1.0, abs=1e-12)
