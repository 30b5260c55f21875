import math
import os

import pytest

import relayarea

DATA = os.environ.get("RELAYAREA_DATA_DIR", os.path.join(os.path.dirname(__file__), "..", "..", "data"))


def test_default_config_round_trip():
    cfg = relayarea.default_config()
    assert cfg["relay_distance_m"] == 600.0
    assert relayarea.normalize_config({}) == cfg
    assert relayarea.normalize_config({"rate_bps_hz": 5})["rate_bps_hz"] == 5.0


def test_rea_default():
    rows = relayarea.rea()
    assert [r["scheme"] for r in rows] == ["fulldf", "eopdf"]
    for r in rows:
        assert r["accepted"]
        assert 0.0 < r["D_min[m]"] <= 600.0
        assert r["R_DTx[m]"] < r["R_cov[m]"]


def test_metrics_beta_zero_has_unit_cost_ratio():
    (row,) = relayarea.metrics(schemes="fulldf", beta=0.0)
    assert row["cost_ratio"] == 1.0
    assert 0.0 < row["P_RTx"] < 1.0


def test_simulation_matches_model():
    (row,) = relayarea.simulate(samples=20000, seed=3)
    assert abs(row["p_rtx_hat"] - row["p_rtx_model"]) <= 0.03
    again = relayarea.simulate(samples=20000, seed=3)
    assert again[0] == row


def test_sweep_from_shipped_spec():
    rows = relayarea.sweep(os.path.join(DATA, "sweeps", "relay_height.json"))
    assert [r["value"] for r in rows] == [10.0, 20.0, 30.0]


def test_sweep_from_dict():
    rows = relayarea.sweep({"parameter": "beta", "values": [0.0, 1.0]})
    assert rows[0]["R_cov[m]"] == rows[0]["R_DTx[m]"]
    assert rows[1]["R_cov[m]"] == rows[1]["R_cov_max[m]"]


def test_gains_and_probability():
    g = relayarea.link_gains(600.0, 0.0)
    assert g["gs"] > g["gd"]
    assert relayarea.p_rtx(300.0, 800.0, 1200.0) == pytest.approx(
        1.0 - 8.0 / (math.sqrt(3.0) * 1200.0**2) * (300.0**2 / 2.0 * math.tan(math.pi / 6.0)))


def test_errors():
    with pytest.raises(relayarea.ConfigError):
        relayarea.rea({"relay_hieght_m": 20})
    with pytest.raises(ValueError):
        relayarea.metrics(beta=2.0)
    with pytest.raises(relayarea.ConfigError):
        relayarea.rea(schemes="dtx")
    with pytest.raises(relayarea.ConfigError):
        relayarea.metrics({"relay_distance_m": 100})
