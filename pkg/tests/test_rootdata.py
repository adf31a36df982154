import math
from fractions import Fraction

import pytest

from alcoves.affine import length, longest_finite_element, simple_reflection
from alcoves.linalg import QVector
from alcoves.radicals import RadScalar
from alcoves.rootdata import (RootSystemId, build_root_system,
                              dominant_representative, weyl_order)

ALL_SMALL = ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "D3", "D4", "G2", "F4", "E6"]


def test_id_validation():
    RootSystemId("A", 1)
    RootSystemId("E", 7)
    for fam, rank in [("A", 0), ("B", 1), ("D", 2), ("E", 5), ("F", 3), ("G", 3), ("H", 2)]:
        with pytest.raises(ValueError):
            RootSystemId(fam, rank)


def test_a2_constants():
    d = build_root_system("A2")
    assert d.wf_order == 6
    assert d.marks == (1, 1)
    assert d.index_of_connection == 3


def test_g2_constants():
    d = build_root_system("G2")
    assert math.prod(d.marks) == 6
    assert d.det_coweight_lattice == RadScalar(1, Fraction(1, 3))   # 1/sqrt(3)
    assert d.alcove_volume == RadScalar(Fraction(1, 12), Fraction(1, 3))  # 1/(12 sqrt 3)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_an_alcove_volume(n):
    d = build_root_system("A", n)
    expected = RadScalar.sqrt(n + 1) / math.factorial(n + 1)
    assert d.alcove_volume == expected


def test_weyl_order_examples():
    a3 = build_root_system("A3")
    assert weyl_order(a3, [1, 3]) == 4
    a4 = build_root_system("A4")
    assert weyl_order(a4, [1, 2, 4]) == 12
    assert weyl_order(a4, []) == 1
    assert weyl_order(a4, [1, 2, 3, 4]) == a4.wf_order


def test_weyl_order_against_closure():
    # independent oracle: generate W_J explicitly and count
    from alcoves.affine import AffineElement
    a4 = build_root_system("A4")
    for J in [(1, 2, 4), (1, 3), (2, 3, 4)]:
        gens = [simple_reflection(a4, j) for j in J]
        seen = {AffineElement.identity(4)}
        frontier = list(seen)
        while frontier:
            new = []
            for u in frontier:
                for s in gens:
                    v = u @ s
                    if v not in seen:
                        seen.add(v)
                        new.append(v)
            frontier = new
        assert len(seen) == weyl_order(a4, J)


def test_weyl_order_mixed_subdiagrams():
    f4 = build_root_system("F4")
    assert weyl_order(f4, [2, 3]) == 8       # B2
    assert weyl_order(f4, [1, 2, 3, 4]) == 1152
    d4 = build_root_system("D4")
    assert weyl_order(d4, [1, 3, 4]) == 8    # three A1 components
    assert weyl_order(d4, [1, 2, 3, 4]) == 192
    e6 = build_root_system("E6")
    assert weyl_order(e6, [1, 2, 3, 4, 5, 6]) == 51840
    assert weyl_order(e6, [2, 3, 4, 5]) == 192  # D4 inside E6


@pytest.mark.parametrize("name", ALL_SMALL)
def test_positive_root_count_equals_longest_length(name):
    d = build_root_system(name)
    w0, _ = longest_finite_element(d)
    assert len(d.positive_roots) == length(d, w0)


@pytest.mark.parametrize("name", ALL_SMALL + ["E7", "E8"])
def test_cartan_shape(name):
    d = build_root_system(name)
    for i in range(d.rank):
        for j in range(d.rank):
            c = d.cartan[i][j]
            assert c.denominator == 1
            assert (c == 2) if i == j else (c <= 0)


def test_dominant_representative_examples():
    a2 = build_root_system("A2")
    rho = a2.fundamental_coweights[0] + a2.fundamental_coweights[1]
    v, word = dominant_representative(a2, rho)
    assert v == rho and word == []
    # s1(rho) comes back to rho with one reflection
    s1rho = rho - rho.dot(a2.simple_roots[0]) * a2.simple_coroots[0]
    v, word = dominant_representative(a2, s1rho)
    assert v == rho and word == [1]
    a1 = build_root_system("A1")
    w1 = a1.fundamental_coweights[0]
    v, word = dominant_representative(a1, -1 * w1)
    assert v == w1 and word == [1]


def test_dominant_representative_idempotent_and_invariant():
    a2 = build_root_system("A2")
    v0 = 2 * a2.fundamental_coweights[0] + 1 * a2.fundamental_coweights[1]
    plus, _ = dominant_representative(a2, v0)
    assert plus == v0
    # every W_f image maps to the same representative
    images = [v0]
    for _ in range(4):
        nxt = []
        for v in images:
            for a, av in zip(a2.simple_roots, a2.simple_coroots):
                nxt.append(v - v.dot(a) * av)
        images.extend(nxt)
    for v in images:
        got, _ = dominant_representative(a2, v)
        assert got == v0


def test_stabilizer_matches_vanishing_set():
    a3 = build_root_system("A3")
    lam = 2 * a3.fundamental_coweights[0] + 0 * a3.fundamental_coweights[1] \
        + 1 * a3.fundamental_coweights[2]
    for i in range(3):
        s_lam = lam - lam.dot(a3.simple_roots[i]) * a3.simple_coroots[i]
        fixed = s_lam == lam
        assert fixed == (lam.dot(a3.simple_roots[i]) == 0)


def test_vector_outside_span_rejected():
    a2 = build_root_system("A2")
    with pytest.raises(ValueError):
        dominant_representative(a2, QVector([1, 0, 0]))  # nonzero coordinate sum


def test_rootdata_json():
    d = build_root_system("B2")
    obj = d.to_json()
    assert obj["weyl_order"] == 8
    assert obj["marks"] == [1, 2]
    assert obj["index_of_connection"] == 2
    assert len(obj["simple_roots"]) == 2
