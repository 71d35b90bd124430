import cmath
import math
from fractions import Fraction

import pytest

import salie


def test_salie_frozen_values():
    assert salie.salie(1, 1, 1) == 1
    v = salie.salie(1, 1, 3)
    assert abs(v - complex(0, -math.sqrt(3))) < 1e-12
    assert abs(salie.salie(1, 1, 5).real + 3.6180339887) < 1e-9
    with pytest.raises(ValueError):
        salie.salie(1, 1, 4)


def test_modes_agree():
    direct = salie.salie(2, 7, 45, mode="direct")
    fast = salie.salie(2, 7, 45, mode="fast")
    assert abs(direct - fast) < 1e-9


def test_gauss_and_ramanujan():
    assert abs(salie.gauss(5) - math.sqrt(5)) < 1e-12
    assert salie.ramanujan(3, 3) == 2
    assert salie.ramanujan(4, 2) == -2


def test_t_kernel_is_exact():
    assert salie.t_kernel(1, 1, 7) == Fraction(7, 6)
    assert salie.t_kernel(3, 1, 3) == 0


def test_basis_and_norms():
    b = salie.basis(125, 1)
    assert [(e.t, e.s, e.q) for e in b] == [(1, 1, 1), (1, 1, 5), (5, 1, 1)]
    e = salie.BasisElement(1, 1, 1)
    assert salie.norm_squared(1, 1, e) == pytest.approx(2 * math.pi, rel=1e-12)
    c = salie.normalization(1, 1, e)
    assert c * c * salie.norm_squared(1, 1, e) == pytest.approx(1.0, rel=1e-12)


def test_spectral_pairing():
    r = salie.spectral_sum(27, 1, 1, 1)
    want = -(1 + 1j) / (24 * math.pi)
    assert abs(r["lhs"] - want) < 1e-13
    assert abs(r["rhs"] - want) < 1e-13
    z = salie.zeta_constant(1, 1, 1, 1)
    assert abs(z - 16 / math.pi**2) < 1e-13


def test_constants_and_presets():
    assert salie.constant(27, 1, "trivial", 1, 1) == pytest.approx(
        1 / (3 * math.pi**2), rel=1e-12
    )
    assert salie.constant(1, 1, "trivial", 2, 2) == 0.0
    assert salie.corollary_constant(1, 1) == pytest.approx(8 / math.pi**2, rel=1e-12)
    ps = salie.presets()
    assert [p["id"] for p in ps] == [1, 2, 3, 4, 5, 6]
    assert ps[0]["target_label"] == "1/(3 pi^2)"


def test_decompose():
    d = salie.decompose(27, 1, "trivial", 1, 1)
    assert d == {"t": 1, "s": 1, "m_prime": 1, "n_prime": 1, "D_t": 1, "D_0": 3, "D_1": 3}
    assert salie.decompose(1, 1, "trivial", 2, 2) is None


def test_series_runs_and_is_deterministic():
    a = salie.moment_series(1, 1, "trivial", 1, 1, 2000, workers=1, chunk_size=128)
    b = salie.moment_series(1, 1, "trivial", 1, 1, 2000, workers=3, chunk_size=128)
    assert a["partial_sum"] == b["partial_sum"]
    assert a["evaluated_terms"] == 1000
    assert cmath.isclose(a["average"], a["partial_sum"] / 2000)
    cor = salie.corollary_series(1, 1, 500, checkpoints=[250, 500])
    assert [x for x, _ in cor["checkpoints"]] == [250, 500]
