import pytest

from syzygy import Ideal, betti_table, build, standard_entries
from syzygy.catalog import BUILDERS, STANDARD
from syzygy.io import parse_ideal_text


def test_standard_names_build_and_are_homogeneous():
    entries = standard_entries()
    assert [E.name for E in entries] == list(STANDARD)
    for E in entries:
        assert E.ideal.is_homogeneous()
        assert E.ideal.is_nondegenerate() or E.name == "hyperquadric"


def test_twisted_cubic_has_three_quadrics():
    E = build("rnc(3)")
    assert len(E.ideal.generators) == 3 and all(g.degree == 2 for g in E.ideal.generators)
    assert build("rnc3").ideal == E.ideal


def test_skew_lines_ideal():
    E = build("skew_lines")
    R = E.ideal.ring
    assert E.ideal == Ideal.from_strings(R, ["x0*x2", "x0*x3", "x1*x2", "x1*x3"])
    assert E.category == "AlgSet"


@pytest.mark.parametrize("name", ["rnc(4)", "scroll(2,2)", "scroll(1,1,1)", "cone(rnc(3))", "cone(cone(rnc(3)))"])
def test_vmd_family_degrees(name):
    E = build(name)
    h = E.ideal.hilbert_data()
    assert h.degree == h.codim + 1
    assert dict(betti_table(E.ideal).nonzero()) == dict(E.expected)


def test_cone_adds_an_unused_variable():
    base, c = build("rnc(3)"), build("cone(rnc(3))")
    assert c.ideal.ring.nvars == base.ideal.ring.nvars + 1
    assert all(m[-1] == 0 for g in c.ideal.generators for m in g.terms)


def test_invalid_parameters():
    with pytest.raises(ValueError):
        build("scroll(0,2)")
    with pytest.raises(ValueError):
        build("rnc(x)")
    with pytest.raises(ValueError):
        build("no_such_thing")


@pytest.mark.parametrize("name", ["line_cup_tcubic", "conics_meet_pt", "planecubic_cup_conic"])
def test_linearly_joined_unions_meet_in_one_reduced_point(name):
    E = build(name)
    A, B = E.components
    meet = (A + B).saturate()
    h = meet.hilbert_data()
    assert (h.dim, h.degree) == (1, 1)
    # the spans meet exactly in that point
    spans = Ideal(A.ring, A.linear_forms() + B.linear_forms())
    assert spans.hilbert_data().dim == 1


def test_double_point_configuration():
    E = build("conic_cup_tcubic_dbl")
    A, B = E.components
    meet = (A + B).saturate()
    h = meet.hilbert_data()
    assert (h.dim, h.degree) == (1, 2)  # a length-2 scheme
    radical_point = Ideal.from_strings(A.ring, ["x1", "x2", "x3", "x4"])
    assert radical_point.contains_ideal(meet)  # supported at (1:0:0:0:0)
    spans = Ideal(A.ring, A.linear_forms() + B.linear_forms())
    assert spans.hilbert_data().dim == 2  # the spans meet in a line


@pytest.mark.parametrize("name", STANDARD)
def test_emitted_files_parse_back(name):
    E = build(name)
    assert parse_ideal_text(E.to_ideal_file()) == E.ideal


def test_every_builder_is_listed():
    heads = {n.split("(")[0] for n in STANDARD} - {"cone"}
    assert heads == set(BUILDERS)
