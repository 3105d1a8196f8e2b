import json

import pytest

import polyforge as pf


def test_build_and_f_vector():
    p = pf.build("ta:4")
    assert p.dim == 4
    assert p.num_vertices == 8
    assert p.f_vector() == [8, 18, 17, 7]


def test_constructions_compose():
    sq = pf.build("sq")
    pyr = pf.pyramid(sq)
    assert pyr.f_vector() == [5, 8, 5]
    wp = pf.wedge(pyr, [0, 1])
    assert wp.f_vector() == [8, 18, 17, 7]
    assert pf.are_isomorphic(wp, pf.build("wp"))


def test_formulas():
    assert pf.phi(1, 4, 4) == 16
    assert pf.zeta(2, 4, 4) == 17
    assert pf.binomial(6, 3) == 20
    assert pf.eval_formula("pentasm:2,4") == 17
    with pytest.raises(ValueError):
        pf.phi(1, 4, 9)


def test_lattice_queries():
    z4 = pf.build("z:4")
    degrees = sorted(z4.degrees())
    assert degrees == [4, 4, 4, 5, 5, 6, 6]
    assert z4.validate() == []
    assert z4.count_faces_meeting(list(range(7)), 1) == 17
    figure = z4.vertex_figure(degrees.index(4))
    assert figure.dim == 3


def test_json_round_trip():
    p = pf.build("pm:3:pyr=1")
    blob = json.loads(p.to_json())
    assert blob["dim"] == 4
    q = pf.from_json(json.dumps(blob))
    assert pf.are_isomorphic(p, q)


def test_audit_small():
    report = pf.audit(dmax=4, checks=["small-catalog", "uniqueness-markers"])
    assert report["summary"]["fail"] == 0
    claims = {r["claim_id"] for r in report["reports"]}
    assert "prop3.3-8v-iso" in claims
    assert "thm1.1-uniqueness" in claims
