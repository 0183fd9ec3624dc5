#!/usr/bin/env python3
"""Smoke test for the lpcoh extension module.

Build and stage the module first (or use ./python/run_smoke.sh):

    cargo build --release -p lpcoh-py
    cp target/release/liblpcoh.so python/lpcoh.so
    python3 python/smoke_test.py
"""

import sys
from fractions import Fraction

sys.path.insert(0, "python")
sys.path.insert(0, ".")

import lpcoh


def frac(s):
    return Fraction(s)


def main():
    # hyperbolic plane: [t, x] = x
    aff = lpcoh.LieAlgebra(2, [(1, 2, 2, "1")], basis=["t", "x"])
    assert aff.validate() == []
    assert aff.is_solvable() and not aff.is_nilpotent()
    assert aff.modular_character() == ["1", "0"]
    c = aff.classify()
    assert c.verdict == "heintze", c.verdict
    assert c.exponent == ("1", "1"), c.exponent
    assert aff.harmonic_l2_query() == "yes"

    # Heisenberg: unimodular, closed at infinity
    heis = lpcoh.LieAlgebra(3, [(1, 2, 3, "1")], basis=["x", "y", "z"])
    assert heis.is_nilpotent()
    ch = heis.classify()
    assert ch.verdict == "closed-at-infinity"
    assert ch.exponent is None
    assert heis.harmonic_l2_query() == "no"

    # mixed signs vanish
    mixed = lpcoh.LieAlgebra(3, [(1, 2, 2, "2"), (1, 3, 3, "-1")])
    assert mixed.classify().verdict == "vanishing"

    # fractional weights stay exact end to end
    scaled = lpcoh.LieAlgebra(3, [(1, 2, 2, "1/2"), (1, 3, 3, "3")])
    cs = scaled.classify()
    assert cs.verdict == "heintze"
    assert frac(cs.exponent[0]) == frac("7")  # (1/2 + 3) / (1/2)
    assert cs.exponent[0] == cs.exponent[1]

    # catalog regression: computed verdicts match stored expectations
    entries = lpcoh.catalog()
    assert len(entries) >= 12
    for name, algebra, expected_verdict, expected_exponent in entries:
        got = algebra.classify()
        assert got.verdict == expected_verdict, (name, got.verdict, expected_verdict)
        if expected_exponent is not None:
            assert got.exponent == (expected_exponent, expected_exponent), name

    # threshold lab: verdict flips at p(G) = 3 for weights (1, 2)
    assert lpcoh.critical_exponent(["1", "2"]) == "3"
    for p, want in [("2", "divergent"), ("3", "divergent"), ("7/2", "convergent")]:
        verdict, rates, pg = lpcoh.rate_analysis(["1", "2"], p)
        assert verdict == want, (p, verdict)
        assert pg == "3"
    v1 = lpcoh.quadrature_norm(["1", "2"], "4", cutoff=20.0, resolution=32)
    v2 = lpcoh.quadrature_norm(["1", "2"], "4", cutoff=40.0, resolution=32)
    assert v1 > 0 and abs(v2 - v1) / v2 < 0.01
    err = lpcoh.flow_decay_error(["1", "2"], "2", 1.0, window=10.0, resolution=64)
    assert err < 1e-3, err

    # isoperimetry lab: tree ball vs grid ball
    tree = lpcoh.generate_ball("tree:3", 2)
    assert tree.vertex_count == 10
    lo, hi, method = lpcoh.cheeger_estimate(tree)
    assert lo == hi and method == "BruteForce"
    rows, trend = lpcoh.dichotomy_scan("grid:2", [2, 3, 4], p=1.0)
    assert rows[0][4] > rows[-1][4], rows
    rows, trend = lpcoh.dichotomy_scan("tree:3", [2, 3, 4], p=1.0)
    assert min(r[4] for r in rows) >= 0.2
    assert trend == "BoundedBelow"

    # invalid input surfaces as ValueError
    try:
        lpcoh.LieAlgebra(2, [(1, 2, 3, "1")])
    except ValueError:
        pass
    else:
        raise AssertionError("out-of-range index accepted")

    print("smoke test OK")


if __name__ == "__main__":
    main()
