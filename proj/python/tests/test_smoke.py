import itertools
import json
from fractions import Fraction

import numpy as np
import pytest
import sympy

import pyarr


def as_sympy(coeffs):
    q = sympy.Symbol("q")
    return sympy.expand(sum(sympy.Rational(c.numerator, c.denominator) * q**k for k, c in enumerate(coeffs)))


def naive_points(arr_json, p):
    doc = json.loads(arr_json)
    hs = [([int(Fraction(c)) for c in h["normal"]], int(Fraction(h["offset"]))) for h in doc["hyperplanes"]]
    return sum(
        all((sum(a * x for a, x in zip(normal, pt)) - off) % p for normal, off in hs)
        for pt in itertools.product(range(p), repeat=doc["dim"])
    )


def test_linial_chi_and_regions():
    a = pyarr.build_family("linial", 4)
    assert a.dim == 4 and len(a) == 6
    chi = pyarr.chi(a)
    assert chi == pyarr.chi(a, engine="whitney") == pyarr.chi(a, engine="nbc-linear", threads=2)
    assert pyarr.regions(a) == (36, 4)
    assert pyarr.regions(a, engine="nbc") == (36, 4)


def test_point_counts_match_chi():
    a = pyarr.build_family("catalan0", 3)
    q = sympy.Symbol("q")
    chi = as_sympy(pyarr.chi(a))
    for p in (11, 13):
        assert naive_points(a.to_json(), p) == chi.subs(q, p) == pyarr.chi_finite_field(a, p)


def test_closed_forms_against_sympy():
    q = sympy.Symbol("q")
    assert as_sympy(pyarr.chi_operator(1, 2, 5)) == sympy.expand((q - 5) ** 4)
    n = 4
    linial = sum(sympy.binomial(n, k) * (q - k) ** (n - 1) for k in range(n + 1)) / 2**n
    assert as_sympy(pyarr.chi_operator(0, 2, n)) == sympy.expand(linial)
    assert as_sympy(pyarr.chi_balanced(2, 4)) == sympy.expand((q - 7) * (q - 6) * (q - 5))


def test_shi_regions():
    for n in range(1, 5):
        a = pyarr.build_family("shi", n)
        assert pyarr.regions(a, engine="nbc")[0] == (n + 1) ** (n - 1)


def test_roots_against_numpy():
    coeffs = pyarr.chi_operator(0, 3, 6)
    report = pyarr.check_root_location(coeffs, "6")
    assert report["passes"]
    ours = sorted(report["roots"], key=lambda z: (z.real, z.imag))
    theirs = sorted(np.roots([float(c) for c in reversed(coeffs)]), key=lambda z: (z.real, z.imag))
    assert np.allclose(sorted(z.imag for z in ours), sorted(z.imag for z in theirs), atol=1e-6)
    assert pyarr.exceptional_chi("F4")[2] == 258


def test_series_and_counts():
    assert pyarr.solve_truncated_affine_egf(0, 2, 6) == [1, 1, 2, 7, 36, 246, 2104]
    assert pyarr.solve_semigeneric(5)["z"] == [1, 1, 3, 19, 195, 2831]
    assert [pyarr.count("alternating-trees", n) for n in range(5)] == [1, 1, 2, 7, 36]
    assert pyarr.count("semiorders-unlabelled", 4) == 14
    assert pyarr.count("graded-forests", 3, a=1, b=2) == 16


def test_errors():
    with pytest.raises(ValueError):
        pyarr.build_family("nonsense", 3)
    with pytest.raises(pyarr.CapExceeded):
        pyarr.chi(pyarr.build_family("catalan0", 5), engine="whitney")
    with pytest.raises(ValueError):
        pyarr.chi_operator(2, 2, 3)


def test_verify_roots_suite():
    results = pyarr.verify("roots")
    assert [r["id"] for r in results] == [7, 8]
    assert all(r["passed"] for r in results)
