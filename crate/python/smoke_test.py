"""Smoke test for the `riccati` extension module.

Build and run from the repository root:

    cargo build -p riccati-python --release --features extension-module
    cp target/release/libriccati.so python/riccati.so
    python3 python/smoke_test.py
"""

import os
import sys
from fractions import Fraction

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import riccati  # noqa: E402


def check_poly():
    eq = riccati.RiccatiEq(a="(x-1)(x-2)(x-3)", b1="3x^2-12x+11", b2=1)
    assert (eq.eta, eq.degree_bound, eq.count_bound) == (3, 3, 4)
    sols = eq.solve()
    assert len(sols) == 4 and sols.complete_over_rationals
    values = sols.values()
    assert riccati.Poly.parse("-(x-2)(x-3)") in values
    assert all(eq.verify(y) for y in values)
    assert riccati.cross_ratio(*values) not in ("0", "1")

    seeded = eq.solve(seeds=["-(x-1)(x-2)"])
    assert [str(v) for v in seeded.values()] == [str(v) for v in values]

    p = riccati.Poly([1, "-3/2", Fraction(1, 1)])
    assert p == "x^2 - 3/2x + 1"
    assert p.coeffs() == ["1", "-3/2", "1"]
    assert p.eval(2) == "2"


def check_trig():
    eq = riccati.TrigRiccatiEq(
        a="5sin(t)+8sin(2t)+5sin(3t)",
        b1="2+6cos(t)+18cos(2t)+10cos(3t)",
        b2=-1,
    )
    sols = eq.solve()
    assert len(sols) == 6 and sols.count_bound == 6
    last = sols.values()[-1]
    assert last == "10+16cos(t)+10cos(2t)"
    assert abs(last.eval(0.0) - 36.0) < 1e-12
    provenances = {s.provenance for s in sols.solutions}
    assert provenances <= {"seeded", "base-search", "closure"}

    csv = eq.sample_csv(361)
    rows = csv.strip().split("\r\n")
    assert rows[0] == "theta,A,Y1,Y2,Y3,Y4,Y5,Y6" and len(rows) == 362

    num, nu = last.to_rational_form()
    assert nu == 2 and riccati.TrigPoly.from_rational_form(num, nu) == last

    eq, gen = riccati.gen_extremal_trig(3, [2, 3, 4])
    assert len(gen) == 6
    assert len(eq.solve()) == 6


def check_errors():
    try:
        riccati.RiccatiEq(a="x", b1=1, b2=0)
    except riccati.RiccatiError as e:
        assert "linear" in str(e)
    else:
        raise AssertionError("linear equation accepted")
    try:
        riccati.Poly.parse("x^^2")
    except ValueError as e:
        assert "byte 2" in str(e)
    else:
        raise AssertionError("bad expression accepted")


if __name__ == "__main__":
    check_poly()
    check_trig()
    check_errors()
    print("smoke test passed")
