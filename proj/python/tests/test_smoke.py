from fractions import Fraction

import pytest

import spinorfact as sf
from spinorfact import Multivector as M


def test_metric_and_products():
    assert M("e1") * M("e1") == M(1)
    assert M("e-") * M("e-") == M(-1)
    assert M("e1") * M("e2") == M("e12")
    assert (M("e12") * M("e12")) == M(-1)
    assert M({"e12": 1, "e3+": 2}).reverse() == M({"e12": -1, "e3+": -2})


def test_point_round_trip():
    p = (Fraction(1, 2), Fraction(-3), Fraction(2, 7))
    assert M.point(*p).decode_point() == p


def test_norm_polynomials():
    expected = [1, 0, 2, 0, 1]
    assert sf.norm("circular-translation") == expected
    assert sf.norm("villarceau") == expected


def test_family_reconstructs_motion():
    h1, h2 = sf.family("villarceau", [0, 0, Fraction(1, 2)])
    assert h1 == M("e12") and h2 == M("e3+")
    c0, c1, c2 = sf.motion("villarceau")
    assert c2 == M(1)
    assert c1 == -(h1 + h2)
    assert c0 == h1 * h2
    with pytest.raises(sf.SpinorfactError):
        sf.family("villarceau", [0, 0, 1])


def test_villarceau_trajectory_is_circle():
    p = (1, Fraction(1, 3), Fraction(-1, 2))
    pts = [sf.trajectory_point("villarceau", p, t) for t in (0, 1, -1, 2)]
    assert all(q is not None for q in pts)
    assert sf.cocircular(pts)
    assert not sf.cocircular([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)])


def test_classify():
    assert sf.classify(1, M({"e12": -1})) == ("rotation", 1)
    assert sf.classify(1, M({"e+-": -1}))[0] == "scaling"


def test_verify_suite():
    report = sf.verify("algebra", seed=3)
    assert report["suite"] == "algebra"
    assert report["passed"]
    with pytest.raises(sf.SpinorfactError):
        sf.verify("nosuch")
    with pytest.raises(sf.SpinorfactError):
        sf.verify("algebra", tolerance=1)
