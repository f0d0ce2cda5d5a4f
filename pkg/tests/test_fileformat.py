import json

import pytest

from hopfgrow.catalog import (exterior_presentation, qplane_presentation,
                              skew_free_presentation, skew_trunc_presentation,
                              taft_presentation)
from hopfgrow.errors import PresentationError
from hopfgrow.fileformat import (load_presentation, parse_element_expr,
                                 parse_group_element, parse_presentation_data,
                                 parse_scalar_expr, presentation_to_jsonable)
from hopfgrow.scalars import ScalarDomain
from hopfgrow.serialize import (element_to_str, scalar_from_jsonable,
                                scalar_to_expr, scalar_to_jsonable)

BUILTINS = [
    skew_free_presentation(v=2),
    skew_free_presentation(v=1, tau=1),
    skew_trunc_presentation(3, beta=1, v=2),
    taft_presentation(5),
    qplane_presentation(3),
    exterior_presentation(2),
]


def equivalent(p1, p2):
    if p1.domain != p2.domain or p1.group != p2.group:
        return False
    if len(p1.gens) != len(p2.gens) or len(p1.rules) != len(p2.rules):
        return False
    for g1, g2 in zip(p1.gens, p2.gens):
        if g1.name != g2.name or g1.weight != g2.weight:
            return False
        if any(a != b for a, b in zip(g1.character, g2.character)):
            return False
        if any(a != b for a, b in zip(g1.tau, g2.tau)):
            return False
    for r1, r2 in zip(p1.rules, p2.rules):
        if r1.lhs != r2.lhs or r1.rhs != r2.rhs:
            return False
    return True


@pytest.mark.parametrize("p", BUILTINS, ids=lambda p: p.name)
def test_round_trip(p):
    data = presentation_to_jsonable(p)
    data = json.loads(json.dumps(data))  # force plain JSON types
    again = parse_presentation_data(data, name=p.name)
    assert equivalent(p, again)


def test_scalar_expr_parsing():
    dom = ScalarDomain(6, ("q1", "q2"))
    assert parse_scalar_expr(dom, "2/3") == dom.rational("2/3")
    assert parse_scalar_expr(dom, "zeta^2") == dom.zeta(2)
    assert parse_scalar_expr(dom, "-1 * q1^2 * q2^-1") == \
        dom.rational(-1) * dom.q(0) ** 2 * dom.q(1) ** -1
    assert parse_scalar_expr(dom, "1 + zeta") == dom.one() + dom.zeta()
    with pytest.raises(PresentationError):
        parse_scalar_expr(dom, "nope")


def test_scalar_expr_round_trip():
    dom = ScalarDomain(6, ("q1",))
    for s in [dom.one(), dom.rational(-2), dom.zeta(2), dom.q(0) ** -3,
              dom.rational("3/5") * dom.zeta() * dom.q(0)]:
        assert parse_scalar_expr(dom, scalar_to_expr(s)) == s


def test_scalar_jsonable_round_trip():
    dom = ScalarDomain(6, ("q1",))
    for s in [dom.one(), dom.zeta(5) * dom.q(0) ** 2, dom.rational("-7/3"),
              dom.one() + dom.q(0), (dom.one() + dom.zeta()) / dom.q(0)]:
        data = json.loads(json.dumps(scalar_to_jsonable(s)))
        assert scalar_from_jsonable(dom, data) == s


def test_element_expr():
    p = qplane_presentation(2)
    elt = parse_element_expr(p, "2 * g1 y1 + y2 y1 - g1^-1")
    manual = (p.multiply(p.group_element(p.group.generator(0)), p.y(0))
              .scale(p.domain.rational(2))
              + p.multiply(p.y(1), p.y(0))
              - p.group_element(p.group.inv(p.group.generator(0))))
    assert elt == manual
    # powers expand
    assert parse_element_expr(p, "y1^3") == p.power(p.y(0), 3)
    with pytest.raises(PresentationError):
        parse_element_expr(p, "y9")


def test_element_string_round_trip():
    p = skew_trunc_presentation(3, beta=1, v=2)
    elt = parse_element_expr(p, "zeta * g1 y1 y2 + 1/2 * y1 - g1^3")
    assert parse_element_expr(p, element_to_str(p, elt)) == elt


def test_group_word_parsing():
    p = exterior_presentation(2)
    assert parse_group_element(p.group, "g1") == (1,)
    assert parse_group_element(p.group, "g1^2") == (0,)
    assert parse_group_element(p.group, "1") == (0,)


def test_file_loading(tmp_path):
    doc = {
        "scalars": {"cyclotomic_order": 3, "transcendentals": []},
        "group": {"free_rank": 0, "torsion": [3]},
        "generators": [
            {"name": "y", "weight": [1],
             "character": [{"root": [1, 3], "exps": []}]}
        ],
        "relations": [{"lhs": "y y y", "rhs": ""}],
        "meta": {"name": "taft3-from-file"},
    }
    path = tmp_path / "taft3.json"
    path.write_text(json.dumps(doc))
    p, meta = load_presentation(str(path))
    assert equivalent(p, taft_presentation(3))
    assert meta["name"] == "taft3-from-file"


def test_file_error_reports_location(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{\n  \"scalars\": [,]\n}")
    with pytest.raises(PresentationError) as err:
        load_presentation(str(path))
    assert "line 2" in str(err.value)


def test_semantic_error_names_generator():
    doc = {
        "scalars": {"cyclotomic_order": 4, "transcendentals": []},
        "group": {"free_rank": 0, "torsion": [3]},
        "generators": [
            {"name": "y", "weight": [1],
             "character": [{"root": [1, 4], "exps": []}]}
        ],
    }
    with pytest.raises(PresentationError) as err:
        parse_presentation_data(doc)
    assert "y" in str(err.value)


def test_bad_sanity_order_rejected():
    dom = ScalarDomain(4)
    with pytest.raises(PresentationError):
        parse_presentation_data({
            "scalars": {"cyclotomic_order": 4, "transcendentals": []},
            "group": {"free_rank": 1, "torsion": []},
            "generators": [{"name": "y", "weight": [1],
                            "character": [{"root": [1, 3], "exps": []}]}],
        })
