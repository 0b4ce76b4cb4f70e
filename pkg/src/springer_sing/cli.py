"""
Command-line entry point: ``springer-sing <command> [options]``.

Exit codes: 0 success, 2 unparsable input, 3 request outside the direct
algorithm's scope, 4 oracle size guard, 5 disagreement between methods.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .crosscheck import crosscheck
from .errors import ParseError, PatternError, ScopeError, SizeLimitError
from .linkpattern import (
    LinkPattern,
    enumerate_patterns,
    format_pattern,
    is_maximal,
    parse,
    rho,
    tau_star,
)
from .orbitgraph import build_graph, d0, dim_component, p_sigma
from .render import render_ascii, render_svg
from .singdirect import SingReport, sing_any, sing_graph
from .tableau import format_tableau, linkpattern_to_tableau, parse_tableau, tableau_to_linkpattern

EXIT_PARSE, EXIT_SCOPE, EXIT_SIZE, EXIT_MISMATCH = 2, 3, 4, 5


class _Exit(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


# ---------------------------------------------------------------------------
# input helpers

def _read_input(args) -> LinkPattern:
    sources = [x for x in (args.lp, args.tableau, getattr(args, "pattern", None)) if x]
    if len(sources) != 1:
        raise _Exit(EXIT_PARSE, "give exactly one input: --lp STRING, --tableau FILE or a positional pattern")
    if args.tableau:
        try:
            text = Path(args.tableau).read_text()
        except OSError as exc:
            raise _Exit(EXIT_PARSE, f"cannot read tableau file: {exc}") from None
        sigma = tableau_to_linkpattern(parse_tableau(text))
    else:
        sigma = parse(sources[0])
    if args.n is not None and args.n != sigma.n:
        if args.n < sigma.n:
            raise _Exit(EXIT_PARSE, f"--n {args.n} is smaller than the pattern's {sigma.n} points")
        sigma = LinkPattern(args.n, sigma.arcs)
    return sigma


def _emit(args, text: str) -> None:
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# commands

def cmd_classify(args) -> int:
    sigma = _read_input(args)
    info = {
        "sigma": format_pattern(sigma),
        "n": sigma.n,
        "k": sigma.k,
        "dim": dim_component(sigma),
        "d0": d0(sigma.n, sigma.k),
        "p_sigma": p_sigma(sigma),
        "maximal": is_maximal(sigma),
    }
    if info["maximal"]:
        r = rho(sigma)
        info.update(tau_star=sorted(tau_star(sigma)), rho=r, smooth=r <= 3,
                    tableau=format_tableau(linkpattern_to_tableau(sigma)).strip().split("\n"))
    else:
        info["note"] = "not a maximal pattern: it indexes an orbit, not a component; smoothness taken from the orbit graph"
        try:
            info["smooth"] = build_graph(sigma, args.max_n).is_regular()
        except SizeLimitError as exc:
            info["smooth"] = None
            info["note"] += f" (unavailable: {exc})"
    if args.format == "json":
        _emit(args, json.dumps(info, indent=2) + "\n")
        return 0
    lines = [f"sigma: {info['sigma']}", f"n: {info['n']}  k: {info['k']}"]
    if info["maximal"]:
        lines.append(f"tau*: {{{', '.join(map(str, info['tau_star']))}}}")
        lines.append(f"rho: {info['rho']}")
    smooth = info["smooth"]
    lines.append("status: " + ("unknown" if smooth is None else "smooth" if smooth else "singular"))
    lines.append(f"dim: {info['dim']}  d0: {info['d0']}  p_sigma: {info['p_sigma']}")
    if info["maximal"]:
        lines.append("tableau:")
        lines.extend("  " + row for row in info["tableau"])
    else:
        lines.append(f"note: {info['note']}")
    _emit(args, "\n".join(lines) + "\n")
    return 0


def _report_text(rep: SingReport, fmt: str) -> str:
    return rep.dumps() + "\n" if fmt == "json" else rep.to_text()


def cmd_sing(args) -> int:
    sigma = _read_input(args)
    method = args.method
    if method == "direct":
        if not is_maximal(sigma):
            raise _Exit(EXIT_SCOPE, f"{format_pattern(sigma)} is not maximal; the direct algorithm covers maximal "
                                    "patterns only (use --method graph)")
        _emit(args, _report_text(sing_any(sigma), args.format))
        return 0
    if method == "graph":
        _emit(args, _report_text(sing_graph(sigma, args.max_n), args.format))
        return 0
    # both
    if not is_maximal(sigma):
        raise _Exit(EXIT_SCOPE, f"{format_pattern(sigma)} is not maximal; --method both needs the direct algorithm")
    direct = sing_any(sigma)
    graph = sing_graph(sigma, args.max_n)
    agree = set(direct.patterns) == set(graph.patterns) and direct.smooth == graph.smooth
    if args.format == "json":
        out = json.dumps({"direct": direct.to_json(), "graph": graph.to_json(), "agree": agree}, indent=2) + "\n"
    else:
        out = direct.to_text() + "\n" + graph.to_text() + f"\nagreement: {'yes' if agree else 'NO'}\n"
    _emit(args, out)
    return 0 if agree else EXIT_MISMATCH


def cmd_graph(args) -> int:
    sigma = _read_input(args)
    g = build_graph(sigma, args.max_n)
    fmt = args.format
    if fmt == "json":
        data = g.to_json()
        if args.max_codim is not None:
            keep = {format_pattern(v) for v, c in zip(g.vertices, g.codims()) if c <= args.max_codim}
            data["vertices"] = [v for v in data["vertices"] if v in keep]
            data["degrees"] = {v: d for v, d in data["degrees"].items() if v in keep}
        _emit(args, json.dumps(data, indent=2) + "\n")
    elif fmt == "text":
        _emit(args, g.adjacency_text())
    else:
        _emit(args, g.to_dot(args.max_codim))
    return 0


def cmd_render(args) -> int:
    sigma = _read_input(args)
    _emit(args, render_svg(sigma) if args.format == "svg" else render_ascii(sigma))
    return 0


def cmd_enumerate(args) -> int:
    if args.n is None or args.k is None:
        raise _Exit(EXIT_PARSE, "enumerate needs --n and --k")
    try:
        pats = [format_pattern(p) for p in enumerate_patterns(args.n, args.k, args.maximal_only)]
    except PatternError as exc:
        raise _Exit(EXIT_PARSE, str(exc)) from None
    if args.format == "json":
        _emit(args, json.dumps(pats, indent=1) + "\n")
    else:
        _emit(args, "".join(p + "\n" for p in pats))
    return 0


def cmd_crosscheck(args) -> int:
    max_n = 8 if args.max_n is None else args.max_n
    res = crosscheck(max_n, workers=args.jobs)
    _emit(args, json.dumps(res.to_json(), indent=2) + "\n" if args.format == "json" else res.to_text())
    return 0 if res.ok else EXIT_MISMATCH


# ---------------------------------------------------------------------------
# parser

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="springer-sing",
        description="Smoothness and singular loci of components of Springer fibers for x^2 = 0.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, formats, default_format, inputs=True):
        if inputs:
            sp.add_argument("pattern", nargs="?", help="link pattern, e.g. '(2,3)(4,5) n=6'")
            sp.add_argument("--lp", metavar="STRING", help="link pattern text")
            sp.add_argument("--tableau", metavar="FILE", help="tableau file, one row per line")
        sp.add_argument("--n", type=int, help="number of points")
        sp.add_argument("--k", type=int, help="number of arcs")
        sp.add_argument("--format", choices=formats, default=default_format)
        sp.add_argument("--out", metavar="FILE", help="write output here instead of stdout")
        sp.add_argument("--max-n", type=int, dest="max_n", metavar="INT",
                        help="oracle size guard (default 14 or $SPRINGER_SING_MAX_N)")
        return sp

    common(sub.add_parser("classify", help="smooth or singular, with the basic numbers"),
           ["text", "json"], "text").set_defaults(func=cmd_classify)

    sp = common(sub.add_parser("sing", help="components of the singular locus"), ["text", "json"], "text")
    sp.add_argument("--method", choices=["direct", "graph", "both"], default="direct")
    sp.set_defaults(func=cmd_sing)

    sp = common(sub.add_parser("graph", help="export the orbit graph"), ["dot", "json", "text"], "dot")
    sp.add_argument("--max-codim", type=int, dest="max_codim", metavar="INT")
    sp.set_defaults(func=cmd_graph)

    common(sub.add_parser("render", help="draw a link pattern"), ["ascii", "svg"], "ascii").set_defaults(func=cmd_render)

    sp = common(sub.add_parser("enumerate", help="list I_{n,k}"), ["text", "json"], "text", inputs=False)
    sp.add_argument("--maximal-only", action="store_true", dest="maximal_only")
    sp.set_defaults(func=cmd_enumerate)

    sp = common(sub.add_parser("crosscheck", help="direct vs oracle over all maximal patterns"),
                ["text", "json"], "text", inputs=False)
    sp.add_argument("--jobs", type=int, default=1, help="worker processes")
    sp.set_defaults(func=cmd_crosscheck)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _Exit as exc:
        print(f"springer-sing: {exc}", file=sys.stderr)
        return exc.code
    except ParseError as exc:
        print(f"springer-sing: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ScopeError as exc:
        print(f"springer-sing: out of scope: {exc}", file=sys.stderr)
        return EXIT_SCOPE
    except SizeLimitError as exc:
        print(f"springer-sing: {exc}", file=sys.stderr)
        return EXIT_SIZE
    except PatternError as exc:
        print(f"springer-sing: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
