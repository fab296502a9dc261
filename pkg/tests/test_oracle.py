import numpy as np
import pytest

from conftest import ANNULUS, MOEBIUS, PANTS, TORUS1
from surfcurves import oracle
from surfcurves.geodesics import common_root, pair_intersection_geom, self_intersection_geom
from surfcurves.words import cyclic_classes

LAMS = (2.0, 3.0, 5.0)


def test_annulus_is_diagonal():
    rep = oracle.realize(ANNULUS, 3.0)
    assert np.allclose(rep.matrices["a"], np.diag([3.0, 1 / 3.0]))
    assert oracle.count_self_numeric(rep, "a") == 0


@pytest.mark.parametrize("s", [PANTS, TORUS1])
@pytest.mark.parametrize("lam", LAMS)
def test_ping_pong_configuration(s, lam):
    rep = oracle.realize(s, lam)
    assert oracle.check_disjoint(rep.disks) >= 1e-6
    for m in rep.matrices.values():
        assert abs(np.linalg.det(m) - 1) < 1e-9
        assert abs(np.trace(m)) > 2


@pytest.mark.parametrize("lam", LAMS)
def test_torus_commutator_is_hyperbolic(lam):
    # the commutator of a one-holed torus representation has negative trace
    tr = oracle.commutator_trace(oracle.realize(TORUS1, lam), "a", "b")
    assert abs(tr) > 2


@pytest.mark.parametrize("lam", LAMS)
def test_frozen_counts(lam):
    pants, torus = oracle.realize(PANTS, lam), oracle.realize(TORUS1, lam)
    assert oracle.count_self_numeric(pants, "aB") == 1
    assert oracle.count_self_numeric(pants, "aaB") == 2
    assert oracle.count_pair_numeric(pants, "a", "b") == 0
    assert oracle.count_pair_numeric(pants, "aB", "ab") == 0
    assert oracle.count_pair_numeric(torus, "a", "b") == 1


def test_errors():
    with pytest.raises(oracle.OracleError, match="oracle requires orientable"):
        oracle.realize(MOEBIUS)
    rep = oracle.realize(PANTS)
    with pytest.raises(oracle.OracleError, match="common root"):
        oracle.count_pair_numeric(rep, "aB", "Ba")
    with pytest.raises(oracle.OracleError, match="proper power"):
        oracle.count_self_numeric(rep, "aBaB")
    with pytest.raises(oracle.OracleError, match="within tolerance"):
        oracle._check_separated(np.array([[0.0, 1.0], [0.0 + 1e-13, 2.0]]))


@pytest.mark.parametrize("s", [PANTS, TORUS1])
@pytest.mark.parametrize("w", ["aB", "ab", "aaB"])
def test_conjugate_search_is_stable_and_matches_domain_axes(s, w):
    rep = oracle.realize(s, 2.0)
    direct = np.array(sorted(map(tuple, oracle.axes_through_domain(rep, w))))
    r = oracle.default_radius(w)
    for radius in (r, r + 2) if len(w) < 3 else (r,):
        found = oracle.search_axes_through_domain(rep, w, radius)
        assert found.shape == direct.shape
        assert np.allclose(found, direct, atol=1e-9)


@pytest.mark.parametrize("s", [ANNULUS, PANTS, TORUS1])
def test_agrees_with_counter_up_to_length_6(s):
    reps = [oracle.realize(s, lam) for lam in LAMS]
    for c in cyclic_classes(s.generators, 6, primitive_only=True):
        n = self_intersection_geom(s, c)
        assert [oracle.count_self_numeric(r, c) for r in reps] == [n] * 3, c


def test_pairs_agree_with_counter():
    rep = oracle.realize(TORUS1, 3.0)
    words = cyclic_classes("ab", 3, primitive_only=True)
    for u in words[:10]:
        for v in words[10:]:
            if common_root(u, v):
                continue
            assert oracle.count_pair_numeric(rep, u, v) == pair_intersection_geom(TORUS1, u, v)


def test_stable_helpers():
    assert oracle.stable_self(PANTS, "aaB") == 2
    assert oracle.stable_pair(TORUS1, "a", "b", lams=LAMS) == 1
