"""Command-line front end.

    gencorr analyze state.json [--method oracle|theorem3|both] [--emit-ranks] [--json]
    gencorr factorize state.json [--json]
    gencorr decompose state.json --cut 1,2 [--json]
    gencorr degree state.json [--json]
    gencorr catalog list
    gencorr catalog emit dicke n=4 l=2

Exit status: 0 genuine / success, 1 not genuine, 2 input error,
3 capacity error, 4 cross-validation discrepancy.
"""
from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path
from typing import Any, Optional, Sequence

import numpy as np

from . import documents
from .errors import CapacityError, CrossValidationError, GenCorrError
from .mixed import (
    METHODS,
    Tolerances,
    degree_with_witness,
    factorize_mixed,
    is_genuine,
    operator_rank_table,
)
from .pure import classify_symmetric, cut_rank_table, factorize, sum_of_products
from .states import PureState, SymmetricState, symmetric_to_pure
from .subsets import Bipartition

EXIT_GENUINE, EXIT_NOT_GENUINE, EXIT_INPUT, EXIT_CAPACITY, EXIT_DISCREPANCY = range(5)


class UnsupportedOperation(GenCorrError):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise documents.InvalidInputError(f"cannot read {path}: {exc.strerror}") from exc


def load_state(path: str, seed=None):
    """Parse and validate a StateDocument; returns ``(doc, state, warnings)``."""
    doc = documents.parse_document(_read(path), path)
    state, warnings = documents.document_to_state(doc, seed)
    return doc, state, warnings


def _base_report(command, path, doc, state, tol: Tolerances, method, warnings) -> dict[str, Any]:
    echo = {"source": path, "kind": doc["kind"], "n": state.n}
    if doc["kind"] == "named":
        echo["name"] = doc["name"]
    return {
        "command": command,
        "input": echo,
        "method": method,
        "tolerances": {"rank": tol.rank, "density": tol.density, "zero": tol.zero},
        "warnings": list(warnings),
    }


def _rank_rows(state, tol: Tolerances) -> tuple[str, list[dict[str, Any]]]:
    if isinstance(state, PureState):
        table, kind = cut_rank_table(state, tol.rank), "coefficient"
    else:
        table, kind = operator_rank_table(state, tol.rank), "operator"
    return kind, [{"subset": list(cut.members), "rank": r} for cut, r in table]


def run_analyze(state, doc, args, tol) -> tuple[dict[str, Any], int]:
    extra: dict[str, Any] = {}
    if isinstance(state, SymmetricState):
        extra["symmetric_class"] = classify_symmetric(state, tol.rank).kind
        state = symmetric_to_pure(state)
    rep = is_genuine(state, tol, args.method)
    out = {"verdict": "genuine" if rep.genuine else "not_genuine"}
    out["witness"] = list(rep.witness_cut.members) if rep.witness_cut else None
    out["method"] = rep.method
    out.update(extra)
    if args.emit_ranks or not args.json:
        out["cut_rank_kind"], out["cut_ranks"] = _rank_rows(state, tol)
    return out, EXIT_GENUINE if rep.genuine else EXIT_NOT_GENUINE


def run_factorize(state, doc, args, tol) -> tuple[dict[str, Any], int]:
    if isinstance(state, SymmetricState):
        state = symmetric_to_pure(state)
    if isinstance(state, PureState) and args.method in (None, "theorem1"):
        fz = factorize(state, tol.rank)
        factors = fz.factors
        phase = complex(fz.global_phase)
        out = {"global_phase": [phase.real, phase.imag], "method": "theorem1"}
    else:
        factors = factorize_mixed(state, tol)
        out = {"method": "oracle"}
    out["factors"] = [{"qubits": list(labels), "state": documents.state_to_document(st)} for labels, st in factors]
    out["degree"] = max(len(labels) for labels, _ in factors)
    return out, EXIT_GENUINE


def run_decompose(state, doc, args, tol) -> tuple[dict[str, Any], int]:
    if isinstance(state, SymmetricState):
        state = symmetric_to_pure(state)
    if not isinstance(state, PureState):
        raise UnsupportedOperation("decompose needs a pure state")
    if not args.cut:
        raise documents.InvalidInputError("decompose needs --cut, e.g. --cut 1,2")
    cut = Bipartition.of(state.n, documents._ints(args.cut))
    terms = sum_of_products(state, cut, tol.rank)
    residual = float(np.max(np.abs(terms.reconstruct() - state.amplitudes)))
    out = {
        "cut": list(cut.members),
        "k": terms.k,
        "terms": [{"left": documents._pairs(l), "right": documents._pairs(r)} for l, r in terms.terms],
        "residual": residual,
        "method": "sum_of_products",
    }
    return out, EXIT_GENUINE


def run_degree(state, doc, args, tol) -> tuple[dict[str, Any], int]:
    if isinstance(state, SymmetricState):
        state = symmetric_to_pure(state)
    degree, witness = degree_with_witness(state, tol)
    return {"degree": degree, "witness": list(witness) if witness else None, "method": "oracle"}, EXIT_GENUINE


RUNNERS = {"analyze": run_analyze, "factorize": run_factorize, "decompose": run_decompose, "degree": run_degree}


def render_human(report: dict[str, Any]) -> str:
    lines = [f"{report['command']}: {report['input']['kind']} state on {report['input']['n']} qubits"]
    if "verdict" in report:
        word = "genuinely correlated" if report["verdict"] == "genuine" else "NOT genuinely correlated"
        lines.append(f"verdict: {word} (method {report['method']})")
    if report.get("witness"):
        lines.append(f"witness subset: {{{','.join(map(str, report['witness']))}}}")
    if "symmetric_class" in report:
        lines.append(f"symmetric class: {report['symmetric_class']}")
    if "degree" in report:
        lines.append(f"degree of correlations: {report['degree']}")
    for f in report.get("factors", []):
        lines.append(f"  factor on {{{','.join(map(str, f['qubits']))}}} ({f['state']['kind']})")
    if "k" in report:
        lines.append(f"cut {{{','.join(map(str, report['cut']))}}}: {report['k']} product terms, residual {report['residual']:.3e}")
    if "cut_ranks" in report:
        lines.append(f"{report['cut_rank_kind']} rank per cut:")
        subsets = ["{" + ",".join(map(str, row["subset"])) + "}" for row in report["cut_ranks"]]
        width = max(map(len, subsets), default=0)
        for subset, row in zip(subsets, report["cut_ranks"]):
            lines.append(f"  {subset:<{width}}  {row['rank']}")
    for w in report["warnings"]:
        lines.append(f"warning: {w}")
    lines.append(f"time: {report['timing']['seconds']:.3f}s")
    return "\n".join(lines)


def _catalog(args) -> int:
    if args.action == "list":
        for name, (_, convert, required) in sorted(documents.CATALOG.items()):
            params = " ".join(f"{p}=" if p in required else f"[{p}=]" for p in convert)
            print(f"{name} {params}".rstrip())
        return EXIT_GENUINE
    if not args.name:
        raise documents.InvalidInputError("catalog emit needs a state name")
    params = {}
    for item in args.params:
        key, sep, value = item.partition("=")
        if not sep:
            raise documents.InvalidInputError(f"parameter {item!r} is not key=value")
        params[key] = value
    state = documents.build_named(args.name, params, args.seed)
    sys.stdout.write(documents.dumps(documents.state_to_document(state)))
    return EXIT_GENUINE


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="gencorr", description="Genuine multipartite correlation analysis of qubit states.")
    sub = ap.add_subparsers(dest="command", required=True)
    for name in RUNNERS:
        p = sub.add_parser(name)
        p.add_argument("input", help="StateDocument JSON file, or - for stdin")
        p.add_argument("--tol", type=float, default=1e-10, help="relative rank tolerance")
        p.add_argument("--method", choices=METHODS, default=None)
        p.add_argument("--cut", default=None, help="comma-separated qubit labels (decompose)")
        p.add_argument("--json", action="store_true", help="machine-readable report")
        p.add_argument("--emit-ranks", action="store_true", help="include the subset -> rank table")
        p.add_argument("--seed", type=int, default=None, help="seed for random_* named states")
    p = sub.add_parser("catalog")
    p.add_argument("action", choices=["list", "emit"])
    p.add_argument("name", nargs="?")
    p.add_argument("params", nargs="*", help="key=value")
    p.add_argument("--seed", type=int, default=None)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "catalog":
            return _catalog(args)
        if args.tol <= 0:
            raise documents.InvalidInputError("--tol must be positive")
        tol = Tolerances.from_rank(args.tol)
        start = time.perf_counter()
        doc, state, warnings = load_state(args.input, args.seed)
        report = _base_report(args.command, args.input, doc, state, tol, args.method or "default", warnings)
        body, code = RUNNERS[args.command](state, doc, args, tol)
        report.update(body)
        report["timing"] = {"seconds": time.perf_counter() - start}
        documents.validate(report, documents.REPORT_SCHEMA)
    except CapacityError as exc:
        print(f"capacity error ({exc.limit}): {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except CrossValidationError as exc:
        print(f"cross-validation error: {exc}", file=sys.stderr)
        return EXIT_DISCREPANCY
    except GenCorrError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.json:
        sys.stdout.write(documents.dumps(report))
    else:
        print(render_human(report))
    return code


if __name__ == "__main__":
    raise SystemExit(main())
