"""Smoke test for the compiled extension.

    maturin develop -m crates/python/Cargo.toml
    python python/smoke_test.py
"""

import math

import pyincomparable as inc


def close(a, b, tol):
    return all(abs(x - y) < tol for x, y in zip(a, b))


def main():
    h = 1 / (2 * math.sqrt(3))
    chi_i = inc.chi_initial_spectrum()
    chi_f = inc.chi_final_spectrum(inc.UnitaryParams(0.9, 0.2, 2.5))
    assert close(chi_i, [2 / 3, 1 / 6, 1 / 6], 1e-12)
    assert close(chi_f, [1 / 3 + h, 1 / 3, 1 / 3 - h], 1e-10)
    assert inc.classify_pair(chi_i, chi_f) == "INCOMPARABLE"

    for name in ("flipping", "hadamard"):
        check = inc.verify_prediction(getattr(inc.IppParams, name)())
        assert check["observed"] == "INCOMPARABLE", (name, check)
        assert check["agree"]
    assert inc.verify_prediction(inc.IppParams.identity())["observed"] == "EQUAL"

    records = inc.sweep_real(360)
    counts = {}
    for r in records:
        counts[r["observed"]] = counts.get(r["observed"], 0) + 1
        assert abs(r["lam1"] + r["lam2"] + r["lam3"] - 1) < 1e-10
    assert all(r["agree"] for r in records)
    assert inc.sweep_gamma(4, 4, 4)["max_deviation"] < 1e-10

    print("pyincomparable smoke test passed:", dict(sorted(counts.items())))


if __name__ == "__main__":
    main()
