from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from ksets.cell600 import (
    build_600cell,
    format_vectors,
    parse_vectors,
    verify_assignment,
    _vertices_600cell,
)
from ksets.coloring import is_ks
from ksets.golden import (
    KAPPA,
    ONE,
    TAU,
    ZERO,
    GoldenNumber,
    Ray,
    golden,
    inner_product,
)
from ksets.mmp import parse_mmp, serialize_mmp, validate_mmp


def test_golden_identities():
    assert TAU * TAU == TAU + ONE
    assert TAU * KAPPA == ONE
    assert TAU - KAPPA == ONE
    assert (TAU + KAPPA) * (TAU - KAPPA) == TAU * TAU - KAPPA * KAPPA


rationals = st.fractions(
    min_value=-10, max_value=10, max_denominator=16
)


@given(rationals, rationals)
def test_sign_matches_float(a, b):
    g = GoldenNumber(a, b)
    f = float(g)
    if abs(f) > 1e-9:
        assert g.sign() == (1 if f > 0 else -1)
    if g.is_zero():
        assert g.sign() == 0


@given(rationals, rationals, rationals, rationals)
def test_ordering_consistent_with_float(a, b, c, d):
    x, y = GoldenNumber(a, b), GoldenNumber(c, d)
    if abs(float(x) - float(y)) > 1e-9:
        assert (x < y) == (float(x) < float(y))


@given(rationals, rationals)
def test_golden_str_parse_round_trip(a, b):
    g = GoldenNumber(a, b)
    assert GoldenNumber.parse(str(g)) == g


def test_ray_canonicalizes_antipodes():
    r1 = Ray.of(ONE, ZERO, ZERO, ZERO)
    r2 = Ray.of(-ONE, ZERO, ZERO, ZERO)
    assert r1 == r2
    with pytest.raises(ValueError):
        Ray.of(ZERO, ZERO, ZERO, ZERO)
    with pytest.raises(ValueError):
        Ray.of(ONE, ZERO)


def test_vertex_counts():
    verts = _vertices_600cell()
    assert len(verts) == 120
    assert len(set(verts)) == 120


def test_construction_counts(cell600):
    assert len(cell600.rays) == 60
    assert len(cell600.bases) == 75
    membership = [0] * 60
    for b in cell600.bases:
        assert len(set(b)) == 4
        for v in b:
            membership[v] += 1
    assert set(membership) == {5}


def test_bases_exactly_orthogonal(cell600):
    for b in cell600.bases:
        for i in range(4):
            for j in range(i + 1, 4):
                ip = inner_product(cell600.rays[b[i]], cell600.rays[b[j]])
                assert ip.is_zero()


def test_no_floating_point(cell600):
    for r in cell600.rays:
        for c in r.components:
            assert isinstance(c.a, Fraction) and isinstance(c.b, Fraction)


def test_known_orthogonal_pair():
    half = Fraction(1, 2)
    u = Ray.of(TAU.scale(half), ZERO, ONE.scale(-half), KAPPA.scale(-half))
    v = Ray.of(ZERO, ONE, ZERO, ZERO)
    assert inner_product(u, v).is_zero()
    assert not inner_product(u, u).is_zero()


def test_hypergraph_is_valid_and_ks(h75):
    assert h75.signature == "60-75"
    assert validate_mmp(h75) == []
    assert is_ks(h75)
    assert parse_mmp(serialize_mmp(h75)).edges == h75.edges


def test_verify_assignment_full(cell600, h75):
    assignment = dict(enumerate(cell600.rays))
    assert verify_assignment(h75, assignment) == []


def test_verify_assignment_perturbation_is_local(cell600, h75):
    assignment = dict(enumerate(cell600.rays))
    # replace ray 0 with something orthogonal to nothing it needs
    assignment[0] = Ray.of(ONE, TAU, KAPPA, golden(3))
    violations = verify_assignment(h75, assignment)
    assert violations
    touched = {ei for ei, e in enumerate(h75.edges) if 0 in e}
    assert {v.edge for v in violations} <= touched
    for v in violations:
        assert 0 in (v.u, v.v)


def test_verify_assignment_missing_vertex(h75, cell600):
    partial = dict(enumerate(cell600.rays))
    del partial[3]
    with pytest.raises(ValueError):
        verify_assignment(h75, partial)


def test_vector_file_round_trip(cell600):
    text = format_vectors(cell600.rays)
    back = parse_vectors(text)
    assert tuple(back) == cell600.rays
    assert format_vectors(back) == text
    with pytest.raises(ValueError):
        parse_vectors("1+0t 0+0t\n")


def test_build_is_deterministic(cell600):
    again = build_600cell()
    assert again.rays == cell600.rays
    assert again.bases == cell600.bases
