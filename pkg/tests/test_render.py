import json

from oddwalk.gadget import build_gadget
from oddwalk.generators import complete_graph
from oddwalk.limitgraph import level_quotient
from oddwalk.render import (_edge_base_count, gadget_to_dot, gadget_to_json_dict,
                            gadget_to_text, gadget_to_tikz, graph_to_dot,
                            graph_to_tikz, quotient_to_dot)


def test_edge_base_count():
    # an edge-based recursion starts at 2 and doubles-plus-joins the same way
    assert _edge_base_count(()) == 2
    assert _edge_base_count((1,)) == 6
    assert _edge_base_count((1, 3, 5)) == 38


def test_gadget_dot_output():
    dot = gadget_to_dot(build_gadget((1, 3, 5)))
    lines = dot.splitlines()
    assert lines[0] == "// path gadget for c=1,3,5: 30 vertices, 29 edges"
    assert "38 vertices" in lines[1]
    assert sum(1 for ln in lines if "[label=" in ln) == 30
    assert sum(1 for ln in lines if " -- " in ln) == 29
    assert lines[-1] == "}"


def test_gadget_dot_empty_prefix():
    dot = gadget_to_dot(build_gadget(()))
    assert "c=(empty)" in dot.splitlines()[0]
    assert sum(1 for ln in dot.splitlines() if "[label=" in ln) == 1
    assert " -- " not in dot


def test_gadget_tikz_output():
    tikz = gadget_to_tikz(build_gadget((1,)))
    lines = tikz.splitlines()
    assert lines[0].startswith("% path gadget for c=1:")
    assert sum(1 for ln in lines if "\\node" in ln) == 4
    assert sum(1 for ln in lines if "\\draw" in ln) == 3
    assert "\\definecolor{lvl0}" in tikz and "\\definecolor{lvl1}" in tikz
    assert lines[-1] == "\\end{tikzpicture}"


def test_gadget_json_output():
    d = gadget_to_json_dict(build_gadget((1, 3)))
    assert d["c"] == [1, 3]
    assert d["oddPrefix"] is True
    assert d["vertexCount"] == 12 and d["edgeCount"] == 11
    assert "38" not in d["sizeNote"]  # 16 for this prefix
    assert d["vertices"][0] == {"label": "p0.00", "k": 0, "t": "00",
                                "birthLevel": 0}
    assert d["edges"][0] == ["p0.00", "p0.0"]
    assert len(d["edges"]) == 11
    json.dumps(d)  # serializable as-is


def test_gadget_text_output():
    text = gadget_to_text(build_gadget((1,)))
    lines = text.splitlines()
    assert lines[0].startswith("# path gadget")
    assert lines[-1] == "p0.0 -- p0 -- p1 -- p0.1"


def test_graph_dot_output():
    dot = graph_to_dot(complete_graph(3))
    lines = dot.splitlines()
    assert lines[0] == "// witnessed graph: 3 vertices, 3 witnesses"
    assert '  "k0" -- "k1" [label="w0"];' in lines
    assert sum(1 for ln in lines if ln.endswith('";')) == 3


def test_graph_tikz_output():
    tikz = graph_to_tikz(complete_graph(3))
    assert sum(1 for ln in tikz.splitlines() if "\\node" in ln) == 3
    assert sum(1 for ln in tikz.splitlines() if "\\draw" in ln) == 3


def test_quotient_dot_output():
    dot = quotient_to_dot(level_quotient((1,)))
    lines = dot.splitlines()
    assert lines[0] == "// level quotient for c=1: 4 classes"
    assert any("m=0 k=0 t=0" in ln for ln in lines)
    assert any("t=-" in ln for ln in lines)  # the join path has empty bits
    assert sum(1 for ln in lines if " -- " in ln) == 3
