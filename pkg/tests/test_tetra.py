import math

import numpy as np
import pytest

from ghtet.edges import ALL_PERMUTATIONS, EDGES, vertex_permutation_to_edges
from ghtet.errors import DomainError, InadmissibleError
from ghtet.tetra import (
    TetConfig,
    admissible,
    angles_cofactor,
    angles_link,
    angles_link_detail,
    det_identities,
    gram,
    principal_minor_dets,
)

LN2 = math.log(2.0)


def regular_finite_angle(x):
    """Dihedral angle of the regular compact tetrahedron with edge x.

    Face angle from the hyperbolic law of cosines, then the spherical law
    on the equilateral vertex link.
    """
    c = math.cosh(x) / (1.0 + math.cosh(x))
    return math.acos(c / (1.0 + c))


def test_config_validation():
    with pytest.raises(DomainError):
        TetConfig((1, 1, 1), [1] * 6)
    with pytest.raises(DomainError):
        TetConfig((1, 1, 1, 1), [1] * 5)
    with pytest.raises(DomainError):
        TetConfig((1, 1, 1, 1), [1, 1, 1, 1, 1, float("nan")])


def test_gram_examples(regular_ideal, regular_finite):
    np.testing.assert_allclose(gram(regular_ideal), -(np.ones((4, 4)) - np.eye(4)), atol=1e-15)
    g = gram(regular_finite)
    np.testing.assert_allclose(np.diag(g), -1.0)
    np.testing.assert_allclose(g[~np.eye(4, dtype=bool)], -math.cosh(1.0))

    x = [0.7, 1.1, 0.9, 1.3, 0.8, 1.2]
    g = gram(TetConfig((1, 1, 0, -1), x))
    assert g[0, 1] == pytest.approx(-math.cosh(x[0]))
    assert g[0, 2] == pytest.approx(-0.5 * math.exp(x[1]))
    assert g[0, 3] == pytest.approx(-math.sinh(x[2]))
    np.testing.assert_array_equal(np.diag(g), [-1, -1, 0, 1])
    assert np.array_equal(g, g.T)


def test_regular_ideal_determinants(regular_ideal):
    # -(J - I) has eigenvalues -3, 1, 1, 1; its 3x3 principal minors -2, 1, 1.
    g = gram(regular_ideal)
    assert np.linalg.det(g) == pytest.approx(-3.0, abs=1e-12)
    np.testing.assert_allclose(principal_minor_dets(g), -2.0, atol=1e-12)
    assert admissible(regular_ideal).ok


def test_admissible_examples(regular_finite):
    assert admissible(regular_finite).ok
    # A tiny regular tetrahedron is still a genuine hyperbolic tetrahedron.
    small = TetConfig((1, 1, 1, 1), [0.01] * 6)
    assert np.linalg.det(gram(small)) < -1e-14
    assert admissible(small).ok


def test_inadmissible_reports_everything():
    flat = TetConfig((1, 1, 1, 1), [0.2, 0.2, 0.2, 0.2, 0.2, 3.0])
    report = admissible(flat)
    assert not report.ok
    checks = {f["check"] for f in report.failures}
    assert "face_determinant" in checks
    assert len(report.failures) >= 2

    neg = TetConfig((1, 1, 1, 1), [1, 1, -1, 1, 1, 1])
    report = admissible(neg)
    assert [f["check"] for f in report.failures] == ["length_positivity"]
    with pytest.raises(InadmissibleError):
        angles_cofactor(neg)


def test_regular_angles(regular_ideal, regular_finite, regular_hyperideal):
    np.testing.assert_allclose(angles_cofactor(regular_ideal), math.pi / 3, atol=1e-12)
    np.testing.assert_allclose(angles_link(regular_ideal), math.pi / 3, atol=1e-12)
    expected = regular_finite_angle(1.0)
    np.testing.assert_allclose(angles_cofactor(regular_finite), expected, atol=1e-12)
    np.testing.assert_allclose(angles_link(regular_finite), expected, atol=1e-12)
    # Hyperideal equilateral link with b from the right-angled hexagon law.
    np.testing.assert_allclose(angles_link(regular_hyperideal), 0.7382095349385618, atol=1e-12)
    np.testing.assert_allclose(angles_cofactor(regular_hyperideal), 0.7382095349385618, atol=1e-12)


def test_route_agreement(corpus):
    for cfg in corpus:
        detail = angles_link_detail(cfg)
        assert detail.discrepancy < 1e-10
        np.testing.assert_allclose(angles_cofactor(cfg), detail.angles, atol=1e-10)


def test_det_identities(corpus, regular_ideal, regular_finite, regular_hyperideal):
    res = det_identities(regular_ideal)
    assert res.link_absolute.max() < 1e-12
    for cfg in [regular_finite, regular_hyperideal, *corpus]:
        assert det_identities(cfg).max_relative < 1e-10


def test_relabeling_permutes_angles(corpus):
    for cfg in corpus[::5]:
        base = angles_cofactor(cfg)
        for perm in ALL_PERMUTATIONS:
            emap = vertex_permutation_to_edges(perm)
            types = [None] * 4
            for v in range(4):
                types[perm[v]] = cfg.types[v]
            lengths = np.empty(6)
            lengths[list(emap)] = cfg.lengths
            moved = angles_cofactor(TetConfig(types, lengths))
            np.testing.assert_allclose(moved[list(emap)], base, atol=1e-12)


def test_horoball_shift_invariance(rng, corpus):
    ideal = [cfg for cfg in corpus if cfg.types == (0, 0, 0, 0)]
    assert ideal
    for cfg in ideal:
        base = angles_cofactor(cfg)
        for v in range(4):
            t = rng.uniform(-0.1, 0.5)
            x = cfg.lengths.copy()
            for e, (i, j) in enumerate(EDGES):
                if v in (i, j):
                    x[e] += t
            np.testing.assert_allclose(angles_cofactor(TetConfig(cfg.types, x)), base, atol=1e-10)
