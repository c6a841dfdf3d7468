"""Command-line entry point: check, eval, classify, serve, effcost."""
from __future__ import annotations

import argparse
import sys

from . import efficiency, reasoner, suite
from .parser import ParseError, parse_ontology


def _add_budget(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--budget", type=int, default=reasoner.DEFAULT_NODE_BUDGET,
        help="tableau node budget per reasoning call",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ontotdd")
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="run a suite of test axioms against an ontology")
    p_check.add_argument("ontology")
    p_check.add_argument("suite")
    p_check.add_argument("--report", choices=("text", "json"), default="text")
    _add_budget(p_check)

    p_eval = sub.add_parser("eval", help="evaluate one test axiom")
    p_eval.add_argument("ontology")
    p_eval.add_argument("axiom")
    _add_budget(p_eval)

    p_classify = sub.add_parser("classify", help="classify an ontology and print the hierarchy")
    p_classify.add_argument("ontology")
    _add_budget(p_classify)

    p_serve = sub.add_parser("serve", help="run the interactive HTTP service")
    p_serve.add_argument("--port", type=int, default=8000)
    p_serve.add_argument("--host", default="127.0.0.1")
    _add_budget(p_serve)

    p_eff = sub.add_parser("effcost", help="emit the editing-efficiency cost table as CSV")
    p_eff.add_argument("--params", help="CSV with columns name,tclassify,aC,bC,aOP,bOP,c")
    p_eff.add_argument("--scenario", choices=sorted(efficiency.SCENARIOS), default="default")
    p_eff.add_argument("--reasoner", action="store_true", help="include reasoner time in totals")
    p_eff.add_argument("--per-type", action="store_true", help="include per-axiom-type rows")
    p_eff.add_argument("--out", default="-", help="output path, '-' for stdout")
    return parser


def _cmd_check(args) -> int:
    try:
        report = suite.run_suite(args.ontology, args.suite, args.budget)
    except (ParseError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return suite.EXIT_INPUT_ERROR
    if args.report == "json":
        print(suite.format_json(report))
    else:
        print(suite.format_text(report))
    return report.exit_code


def _cmd_eval(args) -> int:
    try:
        result = suite.eval_one(args.ontology, args.axiom, args.budget)
    except (ParseError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return suite.EXIT_INPUT_ERROR
    payload = suite.result_to_json(result)
    line = payload["value"]
    if payload.get("missing"):
        line += " (" + ", ".join(payload["missing"]) + ")"
    print(line)
    return 0


def _cmd_classify(args) -> int:
    try:
        with open(args.ontology, encoding="utf-8") as f:
            axioms, sig = parse_ontology(f.read())
    except (ParseError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return suite.EXIT_INPUT_ERROR
    state = reasoner.classify(reasoner.make_state(axioms, sig, args.budget))
    index = state.index
    print(f"consistent: {index.consistent}")
    if not index.consistent:
        return 0
    print(f"coherent: {index.coherent}")
    if index.unsatisfiable_named:
        print("unsatisfiable: " + ", ".join(sorted(index.unsatisfiable_named)))
    for name in sorted(sig.classes):
        supers = sorted(index.subsumers[name] - {name})
        print(f"{name} SubClassOf: {', '.join(supers) if supers else 'owl:Thing'}")
    return 0


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(node_budget=args.budget), host=args.host, port=args.port)
    return 0


def _cmd_effcost(args) -> int:
    if args.params:
        try:
            with open(args.params, encoding="utf-8") as f:
                params = efficiency.load_params_csv(f.read())
        except (OSError, KeyError, ValueError) as err:
            print(f"error: {err}", file=sys.stderr)
            return suite.EXIT_INPUT_ERROR
    else:
        params = list(efficiency.TABLE1)
    scenario = efficiency.SCENARIOS[args.scenario]
    out_lines = [",".join(efficiency.CSV_COLUMNS)]
    for p in params:
        if args.per_type:
            for t in efficiency.AXIOM_TYPES:
                pc = efficiency.protege_cost(t, p, scenario)
                tc = efficiency.tdd_cost(t, p, scenario)
                out_lines.append(
                    f"{p.name},{args.scenario},{t},n/a,"
                    f"{pc.clicks:g},{pc.keystrokes:g},{pc.seconds:g},"
                    f"{tc.clicks:g},{tc.keystrokes:g},{tc.seconds:g}"
                )
        mode = "with" if args.reasoner else "without"
        p_total, t_total = efficiency.totals(p, scenario, args.reasoner)
        out_lines.append(f"{p.name},{args.scenario},total,{mode},,,{p_total:g},,,{t_total:g}")
    text = "\n".join(out_lines) + "\n"
    if args.out == "-":
        sys.stdout.write(text)
    else:
        with open(args.out, "w", encoding="utf-8") as f:
            f.write(text)
    return 0


_COMMANDS = {
    "check": _cmd_check,
    "eval": _cmd_eval,
    "classify": _cmd_classify,
    "serve": _cmd_serve,
    "effcost": _cmd_effcost,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return _COMMANDS[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
