from __future__ import annotations

import re
import xml.etree.ElementTree as ET

from springer_sing.linkpattern import LinkPattern, enumerate_patterns, parse
from springer_sing.render import render_ascii, render_brackets, render_svg

NINE = parse("n=9 (2,6)(3,8)(4,5)")
SVG = "{http://www.w3.org/2000/svg}"


def test_svg_structure():
    root = ET.fromstring(render_svg(NINE))
    assert len(root.findall(f"{SVG}circle")) == 9
    assert len(root.findall(f"{SVG}path")) == 3
    assert [t.text for t in root.findall(f"{SVG}text")] == [str(i) for i in range(1, 10)]
    assert root.find(f"{SVG}title").text == "n=9 (2,6)(3,8)(4,5)"


def test_svg_arcs_are_semicircles_between_their_points():
    svg = render_svg(NINE)
    xs = {int(m.group(2)): int(m.group(1)) for m in re.finditer(r'<text x="(\d+)"[^>]*>(\d+)<', svg)}
    for (i, j), m in zip(NINE.arcs, re.finditer(r'd="M (\d+) (\d+) A (\d+) (\d+) 0 0 1 (\d+) (\d+)"', svg)):
        x1, _, r1, r2, x2, _ = map(int, m.groups())
        assert (x1, x2) == (xs[i], xs[j]) and r1 == r2 == (x2 - x1) // 2


def test_svg_empty_pattern():
    root = ET.fromstring(render_svg(LinkPattern(3, ())))
    assert len(root.findall(f"{SVG}circle")) == 3 and not root.findall(f"{SVG}path")


def test_output_is_deterministic():
    for s in enumerate_patterns(6, 2):
        assert render_svg(s) == render_svg(parse(str(s)))
        assert render_ascii(s) == render_ascii(parse(str(s)))


def test_ascii_examples():
    assert render_ascii(LinkPattern(3, ())) == "o  o  o\n1  2  3\n"
    assert render_ascii(parse("(1,2)")) == "+--+\n|  |\no  o\n1  2\n"
    art = render_ascii(NINE).split("\n")
    assert art[-3] == "  ".join("o" * 9)
    assert art[-2].split() == [str(i) for i in range(1, 10)]


def test_ascii_nested_arcs_stack():
    art = render_ascii(parse("(1,4)(2,3)")).split("\n")
    assert art[0] == "+--------+"
    assert art[1] == "|  +--+  |"


def test_brackets():
    assert render_brackets(NINE) == ".((()).)."
    assert render_brackets(parse("(2,3)(4,5) n=6")) == ".()()."
    assert render_brackets(parse("(1,4)(2,3)")) == "(())"
