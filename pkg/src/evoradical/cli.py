"""Command-line interface.

Exit status: 0 on success, 1 on bad input or usage, 2 when two internal
computations disagree.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import decompose, oracle, radical
from .algebra import EvolutionAlgebra
from .digraph import from_algebra
from .errors import EvolutionAlgebraError, InternalConsistencyError
from .io import emit_dot, format_rational, parse_algebra, parse_index_list
from .quotient import quotient_by_radical, split_by_ideal

EXIT_OK, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def _span(alg: EvolutionAlgebra, indices) -> str:
    names = [alg.labels[i] for i in sorted(indices)]
    return "span{" + ", ".join(names) + "}" if names else "{0}"


def _names(alg, indices) -> list[str]:
    return [alg.labels[i] for i in sorted(indices)]


def _matrix_text(rows) -> str:
    return "[" + ",".join("[" + ",".join(format_rational(w) for w in r) + "]" for r in rows) + "]"


def _matrix_json(rows) -> list[list[str]]:
    return [[format_rational(w) for w in r] for r in rows]


def cmd_graph(alg, args):
    g = from_algebra(alg)
    edges = [[alg.labels[u], alg.labels[v]] for u, v in g.edges()]
    if args.dot:
        dot = emit_dot(g, alg.labels)
        return dot.rstrip("\n"), {"dot": dot}
    w = max(len(s) for s in alg.labels)
    lines = [" " * (w + 1) + " ".join(s.rjust(w) for s in alg.labels)]
    lines += [
        alg.labels[i].rjust(w) + " " + " ".join(str(int(a)).rjust(w) for a in row)
        for i, row in enumerate(g.adj)
    ]
    lines.append("edges: " + (", ".join(f"{u}->{v}" for u, v in edges) or "none"))
    return "\n".join(lines), {
        "labels": list(alg.labels),
        "adjacency": [[int(a) for a in row] for row in g.adj],
        "edges": edges,
    }


def cmd_radical(alg, args):
    rep = radical.radical_report(alg)
    text = f"rad = {_span(alg, rep.radical.indices)}; asi = {rep.asi}"
    data = {
        "radical": _names(alg, rep.radical.indices),
        "radical_indices": [i + 1 for i in sorted(rep.radical.indices)],
        "asi": rep.asi,
    }
    if args.verify:
        report = oracle.oracle_report(alg)
        checks = {
            "radical": report.radical_by_intersection == rep.radical.indices,
            "series": report.annihilator_series_by_quotient == rep.lambda_chain.series,
            "nilpotency": report.acyclicity_by_matrix_power == radical.is_nilpotent(alg),
        }
        data["verify"] = checks
        text += "\noracle: " + ", ".join(f"{k} {'agrees' if ok else 'DISAGREES'}" for k, ok in checks.items())
        if not all(checks.values()):
            raise InternalConsistencyError(text)
    return text, data


def cmd_series(alg, args):
    chain = radical.lambda_chain(alg)
    terms = [{"index": i, "basis": _names(alg, s), "dim": len(s)} for i, s in enumerate(chain.series, 1)]
    lines = [f"ann^({t['index']}) = {_span(alg, s)}  (dim {t['dim']})" for t, s in zip(terms, chain.series)]
    lines.append(f"asi = {chain.asi}")
    return "\n".join(lines), {"series": terms, "asi": chain.asi}


def cmd_type(alg, args):
    t = radical.nilpotent_type(alg)
    text = "not nilpotent" if t is None else "[" + ", ".join(map(str, t)) + "]"
    return text, {"nilpotent": t is not None, "type": t}


def cmd_quotient(alg, args):
    if args.ideal is None:
        dec = quotient_by_radical(alg)
    else:
        dec = split_by_ideal(alg, parse_index_list(args.ideal, alg.labels))
    ideal, quot = dec.ideal_algebra, dec.quotient_algebra
    text = "\n".join(
        [
            f"ideal basis: {', '.join(ideal.labels) or '(none)'}",
            f"quotient basis: {', '.join(quot.labels) or '(none)'}",
            f"M_B' = {_matrix_text(ideal.matrix)}",
            f"X = {_matrix_text(dec.coupling)}",
            f"M_B̄ = {_matrix_text(quot.matrix)}",
        ]
    )
    return text, {
        "ideal_labels": list(ideal.labels),
        "quotient_labels": list(quot.labels),
        "ideal_matrix": _matrix_json(ideal.matrix),
        "coupling": _matrix_json(dec.coupling),
        "quotient_matrix": _matrix_json(quot.matrix),
        "permutation": [i + 1 for i in dec.permutation],
    }


def cmd_decompose(alg, args):
    v = decompose.decide(alg)
    text = f"{v.verdict.value} (rule: {v.rule})"
    data = {"verdict": v.verdict.value, "rule": v.rule, "witness": None}
    if v.witness:
        left, right = v.witness
        text += f"\nwitness: {_span(alg, left)} ⊕ {_span(alg, right)}"
        data["witness"] = [_names(alg, left), _names(alg, right)]
    return text, data


def cmd_check_ideal(alg, args):
    S = parse_index_list(args.ideal, alg.labels)
    ideal = radical.is_basis_ideal(alg, S)
    absorbing = radical.has_absorption(alg, S) if ideal else None
    nil = radical.nilpotent_ideal_in_radical(alg, S) if ideal else None

    def fmt(b):
        return "n/a" if b is None else str(b).lower()

    text = f"is-ideal: {fmt(ideal)}\nhas-absorption: {fmt(absorbing)}\nnilpotent: {fmt(nil)}"
    return text, {"is_ideal": ideal, "has_absorption": absorbing, "nilpotent": nil}


def cmd_nilpotent(alg, args):
    nil = radical.is_nilpotent(alg)
    return str(nil).lower(), {"nilpotent": nil}


COMMANDS = {
    "graph": (cmd_graph, "associated graph as adjacency matrix or DOT"),
    "radical": (cmd_radical, "absorption radical and stabilizing index"),
    "series": (cmd_series, "upper annihilating series"),
    "type": (cmd_type, "type of a nilpotent algebra"),
    "quotient": (cmd_quotient, "block structure matrices for a basis ideal"),
    "decompose": (cmd_decompose, "decomposability verdict with rule and witness"),
    "check-ideal": (cmd_check_ideal, "ideal, absorption and nilpotency of a basis subset"),
    "nilpotent": (cmd_nilpotent, "whether the algebra is nilpotent"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="evoradical",
        description="Absorption radical, annihilating series and decomposability of evolution algebras.",
    )
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    sub.required = True
    for name, (_, help_) in COMMANDS.items():
        p = sub.add_parser(name, help=help_, description=help_)
        p.add_argument("file", help="algebra document (JSON); '-' reads stdin")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        if name == "graph":
            p.add_argument("--dot", action="store_true", help="emit Graphviz DOT")
        elif name == "radical":
            p.add_argument("--verify", action="store_true", help="cross-check with brute-force oracles")
        elif name == "quotient":
            p.add_argument("--ideal", help="comma-separated labels or 1-based indices (default: radical)")
        elif name == "check-ideal":
            p.add_argument("--ideal", required=True, help="comma-separated labels or 1-based indices")
    return parser


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except _UsageError as exc:
        print(exc, file=stderr)
        return EXIT_INPUT
    except SystemExit as exc:  # --help
        return EXIT_OK if not exc.code else EXIT_INPUT
    handler = COMMANDS[args.command][0]
    try:
        alg = parse_algebra(_read(args.file))
        text, data = handler(alg, args)
    except OSError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_INPUT
    except EvolutionAlgebraError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_INPUT
    except InternalConsistencyError as exc:
        print(f"internal error: {exc}", file=stderr)
        return EXIT_INTERNAL
    print(json.dumps(data, indent=2) if args.json else text, file=stdout)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
