import json
import os

import pytest

from xq import structfile as sf
from xq.quadratic import QCMorphism
from xq.shipped import shipped_structures
from xq.sphere import build_cylinder_Q, build_sphere_D, retraction_candidate


def test_shipped_files_are_fresh(structures_dir):
    expected = shipped_structures()
    on_disk = sorted(os.listdir(structures_dir))
    assert on_disk == sorted(expected)
    for name, obj in expected.items():
        with open(os.path.join(structures_dir, name), encoding="utf-8") as fh:
            assert fh.read() == sf.serialize_structure(obj), \
                f"{name} is stale; regenerate with python3 -m xq.shipped"


def test_shipped_files_load_and_pass_checks(structures_dir):
    for name in sorted(os.listdir(structures_dir)):
        with open(os.path.join(structures_dir, name), encoding="utf-8") as fh:
            structure = sf.load_structure(fh.read())
        rep = structure.check(samples=40, seed=0)
        assert rep.ok, f"{name}: {rep.text()}"


def test_rqc4_round_trip_is_byte_identical():
    d = build_sphere_D()
    q = build_cylinder_Q(d)
    for cx in (d, q):
        text = sf.serialize_structure(sf.rqc4_structure(cx))
        rebuilt = sf.load_structure(text).value
        assert sf.serialize_structure(sf.rqc4_structure(rebuilt)) == text


def test_morphism_round_trip_is_byte_identical():
    d = build_sphere_D()
    q = build_cylinder_Q(d)
    m = retraction_candidate(q, d, 1, 0, 1)
    text = sf.serialize_structure(sf.morphism_structure(m))
    rebuilt = sf.load_structure(text).value
    assert isinstance(rebuilt, QCMorphism)
    assert sf.serialize_structure(sf.morphism_structure(rebuilt)) == text


def test_self_under_reference_round_trips():
    d = build_sphere_D()
    raw = sf.rqc4_structure(d)
    assert raw["body"]["under"]["base"] == "self"
    rebuilt = sf.load_structure(sf.serialize_structure(raw)).value
    assert rebuilt.under.base is rebuilt


def test_syntax_error_has_line_and_column():
    with pytest.raises(sf.StructureError) as exc:
        sf.parse_structure('{"version": "1",\n  "kind": ')
    assert exc.value.line == 2
    assert exc.value.col is not None
    assert "line 2" in str(exc.value)


@pytest.mark.parametrize("text,path_fragment", [
    ('[]', "$"),
    ('{"kind": "group", "body": {}}', "$.version"),
    ('{"version": "2", "kind": "group", "body": {}}', "$.version"),
    ('{"version": "1", "kind": "blob", "body": {}}', "$.kind"),
    ('{"version": "1", "kind": "group"}', "$.body"),
    ('{"version": "1", "kind": "group", "body": []}', "$.body"),
])
def test_top_level_semantic_errors(text, path_fragment):
    with pytest.raises(sf.StructureError) as exc:
        sf.parse_structure(text)
    assert exc.value.path == path_fragment or \
        str(exc.value).startswith(path_fragment)


def test_negative_rank_reports_exact_path():
    raw = {"version": "1", "kind": "group",
           "body": {"group": {"kind": "fg_abelian", "rank": -1}}}
    with pytest.raises(sf.StructureError) as exc:
        sf.build_structure(raw)
    assert exc.value.path == "$.body.group.rank"
    assert "nonnegative" in str(exc.value)


def test_bad_relation_row_path():
    raw = {"version": "1", "kind": "group",
           "body": {"group": {"kind": "fg_abelian", "rank": 2,
                              "relations": [[1, 0], [1]]}}}
    with pytest.raises(sf.StructureError) as exc:
        sf.build_structure(raw)
    assert exc.value.path == "$.body.group.relations[1]"


def test_wrong_image_count_path():
    d = build_sphere_D()
    raw = sf.rqc4_structure(d)
    raw["body"]["d3"]["images"] = []
    with pytest.raises(sf.StructureError) as exc:
        sf.build_structure(raw)
    assert exc.value.path == "$.body.d3.images"
    assert "1 images" in str(exc.value)


def test_omega_shape_path():
    d = build_sphere_D()
    raw = sf.rqc4_structure(d)
    raw["body"]["omega"] = [[[0]], [[0]]]
    with pytest.raises(sf.StructureError) as exc:
        sf.build_structure(raw)
    assert exc.value.path == "$.body.omega"


def test_mixed_pair_kinds_rejected():
    d = build_sphere_D()
    xc3_body = {
        "m1": {"kind": "free_nil2", "rank": 1, "names": ["a"]},
        "m2": {"kind": "free_nil2", "rank": 1, "names": ["x"]},
        "m3": {"kind": "free_abelian", "rank": 1, "names": ["t"]},
        "d2": {"images": [{"base": [0], "comm": []}]},
        "d3": {"images": [{"base": [0], "comm": []}]},
        "action2": {"kind": "trivial"},
        "action3": {"kind": "trivial"},
    }
    raw = {"version": "1", "kind": "pair",
           "body": {"source": {"kind": "rqc4", "body": sf.rqc4_body(d)},
                    "target": {"kind": "xc3", "body": xc3_body}}}
    with pytest.raises(sf.StructureError) as exc:
        sf.build_structure(raw)
    assert "xc3" in str(exc.value)
    assert exc.value.path.endswith(".kind")


def test_homotopy_witness_length_checked():
    d = build_sphere_D()
    q = build_cylinder_Q(d)
    f = retraction_candidate(q, d, 1, 0, 0)
    g = retraction_candidate(q, d, 1, 0, 1)
    from xq.quadratic import rq_homotopic
    h = rq_homotopic(f, g)
    raw = sf.homotopy_structure(f, g, h)
    raw["body"]["witness"]["alpha2"] = raw["body"]["witness"]["alpha2"][:1]
    with pytest.raises(sf.StructureError) as exc:
        sf.build_structure(raw)
    assert exc.value.path == "$.body.witness.alpha2"


def test_structures_agree_ignores_version_key_position():
    d = build_sphere_D()
    a = sf.rqc4_structure(d)
    b = json.loads(sf.serialize_structure(a))
    assert sf.structures_agree(a, b)
    b["body"]["name"] = "renamed"
    assert not sf.structures_agree(a, b)


def test_canonical_serialization_is_stable():
    d = build_sphere_D()
    raw = sf.rqc4_structure(d)
    text = sf.serialize_structure(raw)
    assert text == sf.serialize_structure(json.loads(text))
    assert text.endswith("\n")
