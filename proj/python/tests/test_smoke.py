import math

import numpy as np
import pytest

import spectral_perturb as sp


def test_jacobi_matches_numpy():
    rng = np.random.default_rng(0)
    g = rng.standard_normal((6, 6))
    m = (g + g.T) / 2
    values, vectors = sp.jacobi_eigen(m.tolist())
    assert np.allclose(values, np.sort(np.linalg.eigvalsh(m))[::-1], atol=1e-10)
    for lam, v in zip(values, vectors):
        assert np.allclose(m @ v, lam * np.asarray(v), atol=1e-10)


def test_bordered_identity_is_sharp():
    report = sp.analyze_spec(np.eye(3), [0.3, 0.4, 0.0], 1.0)
    lili = next(r for r in report["bounds"] if r["method"] == "lili_two_sided")
    assert lili["lower"] == pytest.approx(1.5)
    assert lili["upper"] == pytest.approx(1.5)
    assert report["lambda_max_oracle"] == pytest.approx(1.5, abs=1e-12)


def test_secular_against_numpy():
    rng = np.random.default_rng(1)
    poles = np.sort(rng.standard_normal(5))[::-1]
    b = rng.standard_normal(5)
    c = 0.3
    arrow = np.diag(np.concatenate([[c], poles]))
    arrow[0, 1:] = arrow[1:, 0] = b
    ev = np.linalg.eigvalsh(arrow)
    assert sp.secular_largest(poles.tolist(), (b**2).tolist(), c) == pytest.approx(ev[-1], abs=1e-10)
    assert sp.secular_smallest(poles.tolist(), (b**2).tolist(), c) == pytest.approx(ev[0], abs=1e-10)


def test_scalar_bounds():
    assert sp.lili_two_sided(1.0, 1.0, 0.5, 0.5) == pytest.approx((1.5, 1.5))
    assert sp.weyl_arrowhead(1.0, 3.0, 0.0) == 3.0
    assert sp.mathias_arrowhead(2.0, 0.0, 1.0) == 2.5
    assert sp.mathias_arrowhead(1.0, 1.0, 1.0) is None
    b1, b2, b3 = sp.opnorm_bounds(1.0, 0.0, 0.1, 1.0)
    assert (b1, b2, b3) == pytest.approx((1.1, 1.01, 1.01))


def test_graph_functions():
    p4 = [(0, 1), (1, 2), (2, 3)]
    assert sp.algebraic_connectivity(4, p4) == pytest.approx(2 - math.sqrt(2))
    assert sp.connectivity_lower_from_complement(3, [(0, 1), (1, 2)]) == pytest.approx(1.0)
    r = sp.edge_deletion(3, [(0, 1), (1, 2)], 0, 1)
    assert r["lower"] <= r["exact"] + 1e-12


def test_pinning_report():
    c4 = [(0, 1), (1, 2), (2, 3), (0, 3)]
    r = sp.pinning(4, c4, [0], kappa=4.0, f_bound=0.2, q_norm=1.0, qb_min=2.0)
    assert r["iterative_bound"] == pytest.approx(1.0)
    assert r["exact"] == pytest.approx(0.396124528, abs=1e-8)
    assert r["weighted_bound"] <= r["exact"]


def test_cs_is_deterministic():
    a = sp.cross_gram_tail("gaussian", 20, 40, s=4, trials=200, seed=42, threads=1)
    b = sp.cross_gram_tail("gaussian", 20, 40, s=4, trials=200, seed=42, threads=3)
    assert a == b
    assert a["bound_violations"] == 0


def test_verify_and_errors():
    assert sp.verify(seed=1, trials=20)["violations"] == 0
    assert sp.verify(trials=5, inject_fault=True)["violations"] > 0
    with pytest.raises(ValueError):
        sp.analyze_spec([[1.0, 2.0], [3.0, 1.0]], [0.0, 0.0], 0.0)
    with pytest.raises(ValueError):
        sp.algebraic_connectivity(1, [])
