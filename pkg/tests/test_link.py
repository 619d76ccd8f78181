import math

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from ghtet.errors import DegenerateError
from ghtet.link import LinkTriangle, link_amplitude, link_angle, link_angle_derivatives, link_angles

SQ2, SQ3 = math.sqrt(2), math.sqrt(3)
HYPERIDEAL_EQ_B = 1.7049128323580138
HYP_LINK_COS = 0.7396746633535972
HYP_LINK_ANGLE = 0.7382095349385618


def test_link_angle_examples():
    assert link_angle(LinkTriangle(0, (SQ2,) * 3), 0) == pytest.approx(math.pi / 3, abs=1e-15)
    assert link_angle(LinkTriangle(1, (math.pi / 2,) * 3), 1) == pytest.approx(math.pi / 2, abs=1e-15)
    b = HYPERIDEAL_EQ_B
    cb, sb = math.cosh(b), math.sinh(b)
    assert (cb * cb - cb) / (sb * sb) == pytest.approx(HYP_LINK_COS, abs=1e-14)
    assert link_angle(LinkTriangle(-1, (b,) * 3), 2) == pytest.approx(HYP_LINK_ANGLE, abs=1e-14)


def test_link_amplitude_examples():
    assert link_amplitude(LinkTriangle(0, (SQ2,) * 3)) == pytest.approx(SQ3, rel=1e-14)
    assert link_amplitude(LinkTriangle(1, (math.pi / 2,) * 3)) == pytest.approx(1.0, abs=1e-15)


def test_link_derivative_examples():
    d = link_angle_derivatives(LinkTriangle(0, (SQ2,) * 3), 0)
    assert d[0] == pytest.approx(SQ2 / SQ3, rel=1e-14)
    assert d[1] == pytest.approx(-SQ2 / (2 * SQ3), rel=1e-14)
    d = link_angle_derivatives(LinkTriangle(1, (math.pi / 2,) * 3), 2)
    assert d[2] == pytest.approx(1.0, rel=1e-14)


def test_degenerate_link():
    with pytest.raises(DegenerateError):
        link_angle(LinkTriangle(0, (1.0, 1.0, 2.0)), 2)


@st.composite
def links(draw, geometry=None):
    eps = draw(st.sampled_from((1, 0, -1))) if geometry is None else geometry
    top = 2.5 if eps == 1 else 4.0
    edges = tuple(draw(st.floats(min_value=0.1, max_value=top)) for _ in range(3))
    lt = LinkTriangle(eps, edges)
    try:
        angles = link_angles(lt)
    except DegenerateError:
        assume(False)
    assume(np.all(np.sin(angles) > 0.05))
    return lt


@settings(max_examples=200)
@given(links())
def test_amplitude_well_defined(lt):
    amps = [link_amplitude(lt, m) for m in range(3)]
    assert max(amps) - min(amps) < 1e-12 * max(1.0, max(amps))


@settings(max_examples=200)
@given(links())
def test_link_derivative_lemma_matches_fd(lt):
    h = 1e-6
    for m in range(3):
        analytic = link_angle_derivatives(lt, m)
        for p in range(3):
            step = np.zeros(3)
            step[p] = h
            up = LinkTriangle(lt.geometry, np.add(lt.edges, step))
            dn = LinkTriangle(lt.geometry, np.subtract(lt.edges, step))
            fd = (link_angle(up, m) - link_angle(dn, m)) / (2 * h)
            assert fd == pytest.approx(analytic[p], rel=1e-6, abs=1e-8)


@given(links(geometry=0))
def test_euclidean_similarity(lt):
    base = link_angles(lt)
    for t in (0.5, 2.0, 10.0):
        scaled = LinkTriangle(0, tuple(t * b for b in lt.edges))
        np.testing.assert_allclose(link_angles(scaled), base, atol=1e-12)
