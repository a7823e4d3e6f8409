import json

import pytest

from qdu_typeb_hecke.Hecke.hecke_module import HeckeModule, HeckeModuleException
from qdu_typeb_hecke.Hecke.poset_modules import module_MBP, module_sfMBP
from qdu_typeb_hecke.Harness.export import (
    extensions_frame,
    hasse_dot,
    quiver_dot,
    render,
    report_frame,
)


def test_hasse_diagram(vee_2):
    dot = hasse_dot(vee_2)
    lines = dot.splitlines()
    assert lines[0] == "digraph {"
    assert lines[-1] == "}"
    assert '"1" -> "0"' in lines
    assert '"0" -> "2"' in lines
    assert sum("->" in line for line in lines) == 4
    assert lines[3:8] == ['"-2"', '"-1"', '"0"', '"1"', '"2"']


def test_quiver(vee_2):
    lines = quiver_dot(module_MBP(vee_2)).splitlines()
    assert '"[-1,2]" -> "[-1,2]" [label="π̄0" style=dashed]' in lines
    assert '"[-1,2]" -> "[2,-1]" [label="π̄1"]' in lines
    assert '"[2,-1]" -> "[2,-1]" [label="π̄1" style=dashed]' in lines
    sf_lines = quiver_dot(module_sfMBP(vee_2)).splitlines()
    assert '"[-1,2]" -> "[2,-1]" [label="(π1-1)"]' in sf_lines


def test_quiver_of_empty_module():
    with pytest.raises(HeckeModuleException):
        quiver_dot(HeckeModule("B", 1, [], {0: []}))


def test_extensions_frame(vee_2):
    frame = extensions_frame(vee_2)
    assert list(frame["window"]) == ["[-1,2]", "[2,-1]"]
    assert list(frame["descents"]) == ["{0}", "{1}"]
    assert list(frame["composition"]) == ["(0,2)", "(1,1)"]


def test_render_report():
    frame = report_frame([
        {"case": "twists n=1", "status": "pass", "details": {}},
        {"case": "twists n=2", "status": "fail", "details": {"trace": ["chi"]}},
    ])
    records = json.loads(render(frame, "json"))
    assert records[1] == {"case": "twists n=2", "status": "fail", "details": {"trace": ["chi"]}}
    text = render(frame, "text")
    assert "twists n=2" in text
    assert '{"trace": ["chi"]}' in text
    assert render(report_frame([]), "text") == "(empty)"
