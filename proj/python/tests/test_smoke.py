import json
import math

import pytest

import wigqpi


def test_closed_forms():
    for a in (0.5, 1.0, 2.0):
        g = math.exp(-a * a)
        assert wigqpi.disk_eigenvalue(0, a) == pytest.approx(1 - g, abs=1e-12)
        assert wigqpi.disk_eigenvalue(1, a) == pytest.approx(1 - (1 + 2 * a * a) * g, abs=1e-12)
        assert wigqpi.circle_eigenvalue(0, a) == pytest.approx(2 * a * g, abs=1e-14)


def test_spectrum_and_bounds():
    s = wigqpi.spectrum("disk", 1.0, 10)
    assert len(s) == 11
    b = wigqpi.bounds("disk", 1.0, 64)
    assert b["arg_lower"] == 1 and b["arg_upper"] == 0
    assert b["lower"] == pytest.approx(1 - 3 / math.e, abs=1e-12)
    assert b["lower"] < 0


def test_qpi_matches_oracle_for_superposition():
    coeffs = [0.6, 0.0, 0.8]
    spectral = wigqpi.qpi([0.36, 0.0, 0.64], "disk", 1.3)
    assert wigqpi.qpi_oracle_disk(coeffs, 1.3) == pytest.approx(spectral, abs=1e-7)


def test_scaling_identity():
    for row in wigqpi.scale_check("circle", 4, 1.0, 0.5):
        assert row["discrepancy"] < 1e-7
    direct = wigqpi.disk_eigenvalue(3, 2.0)
    assert wigqpi.scaled_spectrum("disk", 3, 1.0, 2.0) == pytest.approx(direct, abs=1e-7)


def test_wigner_origin_values():
    assert wigqpi.fock_wigner(0, 0.0, 0.0) == pytest.approx(1 / math.pi, abs=1e-14)
    assert wigqpi.wigner_value([0.0, 1.0], 0.0, 0.0) == pytest.approx(-1 / math.pi, abs=1e-14)


def test_errors_are_typed():
    with pytest.raises(wigqpi.DomainError):
        wigqpi.disk_eigenvalue(-1, 1.0)
    with pytest.raises(wigqpi.DomainError):
        wigqpi.qpi([0.5, 0.2], "disk", 1.0)


def test_cli_round_trip():
    code, out, _ = wigqpi.run_cli(["spectrum", "--region", "circle", "--radius", "1", "--nmax", "3", "--format", "json"])
    assert code == 0
    doc = json.loads(out)
    assert doc["payload"]["conventions_hash"] == wigqpi.conventions_hash()
    lam = [row["lambda"] for row in doc["payload"]["results"]]
    assert lam == [wigqpi.circle_eigenvalue(n, 1.0) for n in range(4)]
    code, _, _ = wigqpi.run_cli(["scale-check", "--radius", "1", "--xi", "1"])
    assert code == 2
