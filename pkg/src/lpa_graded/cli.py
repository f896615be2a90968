"""
Command-line interface for lpa-graded.
"""

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Tuple

from . import __version__
from .algebra.expressions import parse_expression
from .algebra.terms import LpaContext
from .config import Config, load_special_edges
from .domain.graph import Graph
from .domain.structure import classify_vertices, simple_cycles
from .grading.decompositions import graded_socle
from .ingest.corpus import corpus_names, parse_corpus_spec
from .ingest.parsers import load_graph_file, parse_graph, serialize
from .modules.sink import analyze_sink_module
from .services.classifier import graded_naimark, necessary_conditions, socular_chain
from .services.reports import (
    render_blocks,
    render_chain,
    render_classification,
    render_json,
    render_module,
    render_naimark,
)
from .services.selfcheck import run_selfcheck
from .utils.errors import InputError, InvariantViolation
from .utils.log import configure_logging, progress

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_INVARIANT_VIOLATION = 2


@dataclass
class AnalysisRequest:
    """One invocation: command, input source, output mode and options."""

    command: str
    files: List[str] = field(default_factory=list)
    corpus: Optional[str] = None
    output: str = "text"
    config: Config = field(default_factory=Config)
    special_edges: Optional[Dict[str, str]] = None
    argument: Optional[str] = None

    def __post_init__(self):
        if self.files and self.corpus:
            raise InputError("give either graph files or --corpus, not both")
        if self.output not in ("text", "json"):
            raise InputError(f"unknown output mode {self.output!r}")

    @property
    def bound(self) -> int:
        return self.config.get("max_path_len")

    def sources(self) -> List[Tuple[str, Graph]]:
        """Resolve the input source to (label, graph) pairs."""
        if self.corpus:
            return [(self.corpus, parse_corpus_spec(self.corpus))]
        if self.files:
            graphs = []
            for path in self.files:
                progress(f"reading {path}")
                graphs.append((path, load_graph_file(path)))
            return graphs
        return [("<stdin>", parse_graph(sys.stdin.read()))]

    def context(self, g: Graph) -> LpaContext:
        return LpaContext.for_graph(g, self.special_edges, self.config.get("rewrite_bound"))


def _naimark(request: AnalysisRequest, g: Graph) -> Tuple[str, Dict[str, Any]]:
    verdict = graded_naimark(g, request.bound)
    conditions = necessary_conditions(g, request.config.get("hsat_bruteforce_limit"))
    if verdict.holds and not conditions.all_pass:
        raise InvariantViolation(f"{g.name}: graded Naimark holds but a necessary condition fails")
    return render_naimark(verdict, conditions), {
        "naimark": verdict.to_dict(),
        "conditions": conditions.to_dict(),
    }


def _chain(request: AnalysisRequest, g: Graph) -> Tuple[str, Dict[str, Any]]:
    report = socular_chain(g, request.bound)
    return render_chain(report), {"chain": report.to_dict()}


def _socle(request: AnalysisRequest, g: Graph) -> Tuple[str, Dict[str, Any]]:
    blocks = graded_socle(g, request.bound)
    return render_blocks(blocks), {"socle": [b.to_dict() for b in blocks]}


def _classify(request: AnalysisRequest, g: Graph) -> Tuple[str, Dict[str, Any]]:
    profiles = classify_vertices(g)
    data = {
        "vertices": {v: profiles[v].to_dict() for v in g.vertices},
        "cycles": [record.to_dict() for record in simple_cycles(g)],
    }
    return render_classification(g, profiles), data


def _nf(request: AnalysisRequest, g: Graph) -> Tuple[str, Dict[str, Any]]:
    element = parse_expression(request.context(g), request.argument)
    text = str(element.normal_form())
    return text, {"expression": request.argument, "normal_form": text, "degrees": element.degrees()}


def _module(request: AnalysisRequest, g: Graph) -> Tuple[str, Dict[str, Any]]:
    report = analyze_sink_module(g, request.argument, request.config.get("oracle_dim_limit"))
    return render_module(report), report.to_dict()


ANALYSES: Dict[str, Callable[[AnalysisRequest, Graph], Tuple[str, Dict[str, Any]]]] = {
    "naimark": _naimark,
    "chain": _chain,
    "socle": _socle,
    "classify": _classify,
    "nf": _nf,
    "module": _module,
}


def run(request: AnalysisRequest) -> int:
    """Run one analysis over every input graph and write the reports to stdout."""
    analysis = ANALYSES[request.command]
    sources = request.sources()
    texts, documents = [], {}
    for label, g in sources:
        progress(f"{request.command} on {g.name}")
        text, data = analysis(request, g)
        texts.append((label, text))
        documents[label] = data
    if request.output == "json":
        payload = documents[sources[0][0]] if len(sources) == 1 else documents
        print(render_json(payload))
    elif len(texts) == 1:
        print(texts[0][1])
    else:
        print("\n\n".join(f"== {label} ==\n{text}" for label, text in texts))
    return EXIT_OK


def _run_corpus(args: argparse.Namespace) -> int:
    if args.list or not args.name:
        print("\n".join(corpus_names()))
        return EXIT_OK
    g = parse_corpus_spec(args.name)
    sys.stdout.write(serialize(g, "json" if args.json else "text"))
    return EXIT_OK


def _run_selfcheck(args: argparse.Namespace) -> int:
    report = run_selfcheck(args.suite, args.only, args.seed, verbose=args.verbose)
    if args.json:
        print(json.dumps(report, indent=2))
    else:
        for suite_id, entry in report["per_suite"].items():
            status = "PASS" if entry["pass"] else "FAIL"
            print(f"{suite_id} {entry['property']}: {status} ({entry['checked']} checks)")
            for violation in entry["violations"]:
                print(f"    {violation}")
        print(f"passed {len(report['passed_suites'])}/{report['total_suites']}")
    return EXIT_OK if not report["failed_suites"] else EXIT_INVARIANT_VIOLATION


def _add_analysis_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("files", nargs="*", help="Graph files (text or JSON); stdin when omitted")
    parser.add_argument("--corpus", metavar="NAME[:PARAM]", help="Use a built-in corpus graph")
    parser.add_argument("--json", action="store_true", help="Emit JSON reports")
    parser.add_argument("--max-path-len", type=int, metavar="N", help="Sampling and witness bound")
    parser.add_argument("--special-edges", metavar="FILE", help="YAML/JSON vertex -> special edge map")
    parser.add_argument("--config", metavar="FILE", help="YAML/JSON configuration file")
    parser.add_argument("--log-level", help="Logging level (default from config)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lpa-graded",
        description="Graded structure of Leavitt path algebras of finite graphs",
        epilog="""
Example:
  lpa-graded naimark --corpus G1
  lpa-graded nf "e1 e1^*" graph.txt
        """,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    for name, help_text in (
        ("naimark", "Decide the graded Naimark property"),
        ("chain", "Compute the socular chain and count graded-simple classes"),
        ("socle", "Graded matrix blocks of the graded socle"),
        ("classify", "Vertex classification table"),
    ):
        _add_analysis_options(commands.add_parser(name, help=help_text))

    nf = commands.add_parser("nf", help="Normal form of an expression")
    nf.add_argument("argument", metavar="EXPR")
    _add_analysis_options(nf)

    module = commands.add_parser("module", help="Build and check the sink module N_w")
    module.add_argument("argument", metavar="SINK")
    _add_analysis_options(module)

    corpus = commands.add_parser("corpus", help="Print a built-in corpus graph")
    corpus.add_argument("name", nargs="?", metavar="NAME[:PARAM]")
    corpus.add_argument("--list", action="store_true", help="List corpus names")
    corpus.add_argument("--json", action="store_true", help="Emit the JSON graph format")

    selfcheck = commands.add_parser("selfcheck", help="Run the property suites")
    selfcheck.add_argument("--suite", help="Suite YAML file (default: packaged suite)")
    selfcheck.add_argument("--only", nargs="+", metavar="SUITE_ID", help="Run only these suites")
    selfcheck.add_argument("--seed", type=int, help="Override the suite seed")
    selfcheck.add_argument("--json", action="store_true", help="Emit the JSON summary")
    selfcheck.add_argument("--config", metavar="FILE", help="YAML/JSON configuration file")
    selfcheck.add_argument("--log-level", help="Logging level (default from config)")
    selfcheck.add_argument("-v", "--verbose", action="store_true", help="Per-suite progress on stderr")
    return parser


def _dispatch(args: argparse.Namespace) -> int:
    config = Config(getattr(args, "config", None))
    if getattr(args, "log_level", None):
        config.set("log_level", args.log_level)
    configure_logging(config.get("log_level"))

    if args.command == "corpus":
        return _run_corpus(args)
    if args.command == "selfcheck":
        return _run_selfcheck(args)

    if args.max_path_len is not None:
        config.set("max_path_len", args.max_path_len)
    output = "json" if args.json else config.get("output_format")
    special = load_special_edges(args.special_edges) if args.special_edges else None
    request = AnalysisRequest(
        command=args.command,
        files=args.files,
        corpus=args.corpus,
        output=output,
        config=config,
        special_edges=special,
        argument=getattr(args, "argument", None),
    )
    return run(request)


def main(argv: Optional[List[str]] = None) -> None:
    """Main CLI entry point."""
    args = build_parser().parse_args(argv)
    try:
        status = _dispatch(args)
    except InvariantViolation as e:
        print(f"internal invariant violated: {e}", file=sys.stderr)
        sys.exit(EXIT_INVARIANT_VIOLATION)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        sys.exit(EXIT_INPUT_ERROR)
    sys.exit(status)


if __name__ == "__main__":
    main()
