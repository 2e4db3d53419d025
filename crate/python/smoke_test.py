"""Smoke test for the wbroadcast Python extension.

Build and install first, e.g.
    pip install maturin && maturin build --release -m crates/python/Cargo.toml -o dist
    pip install dist/wbroadcast-*.whl
"""
import math

import wbroadcast as wb


def main():
    p = wb.WParams.symmetric(0.1)
    assert math.isclose(p.beta2, 0.45)

    out = wb.broadcast_pipeline(p)
    assert out["rho_1245"].labels == ["1", "4", "2", "5"]
    rho15, rho14 = out["rho_15"], out["rho_14"]
    assert math.isclose(rho15.trace(), 1.0)

    w3, w4 = wb.w3_w4(rho15)
    assert w3 > 0 and w4 < 0
    assert not wb.ppt_verdict(rho15)["separable"]
    assert wb.ppt_verdict(rho14)["separable"]
    assert wb.concurrence(rho14) == 0.0
    assert 0.08 < wb.concurrence(rho15) < 0.09
    assert math.isclose(wb.linear_entropy(rho14), 8 / 27 * (3 - 0.01), rel_tol=1e-12)

    bell = [[0.5, 0, 0, 0.5], [0, 0, 0, 0], [0, 0, 0, 0], [0.5, 0, 0, 0.5]]
    bell = wb.DensityMatrix(bell)
    assert math.isclose(wb.concurrence(bell), 1.0)
    assert math.isclose(wb.eof(0.5), 0.35457890266526988, rel_tol=1e-12)
    assert bell.partial_trace(["1"]).dim == 2

    w = wb.analyze(1 / 3)
    assert all(w[k]["separable"] for k in ("rho_15", "rho_14", "rho_25", "rho_42"))

    csv = wb.sweep_csv(0.01, 0.21, 21)
    assert csv == wb.sweep_csv(0.01, 0.21, 21, parallel=False)
    assert len(csv.splitlines()) == 22

    t = wb.thresholds()
    assert abs(t["local_sep_root"] - math.sqrt(3) / 2) < 1e-7
    assert abs(t["nonlocal_insep_root"] - (26 - 5 * math.sqrt(13)) / 36) < 1e-7
    assert "ERRATUM" in wb.table2()

    try:
        wb.WParams(0.1, 0.95, -0.05)
    except ValueError:
        pass
    else:
        raise AssertionError("invalid parameters accepted")

    print("python smoke test: ok")


if __name__ == "__main__":
    main()
