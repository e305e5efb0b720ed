"""Command-line interface.

Matrix files are plain text: a header line "d N", then d rows of N
integers; '#' starts a comment.  JSON matrices (a bare list of rows, or an
object with a "matrix" key) are accepted everywhere a file is expected, so
emitted JSON can be fed back in.

Exit codes: 0 success or positive answer, 1 negative answer, 2 parse
error, 3 size cap exceeded, 4 failed precondition (not weakly
multiplicative, not full rank, bad basis).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import canonical as canon
from . import circuitgraph as cg
from . import matroid as mat
from . import oracle as orc
from . import toric
from .errors import (
    ArimatError,
    BadIndex,
    DimensionMismatch,
    NotABasis,
    NotFullRank,
    NotMultiplicative,
    NotSquare,
    NotWeaklyMultiplicative,
    ParseError,
    TooLarge,
)
from .intlinalg import IntMatrix

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_PARSE = 2
EXIT_TOO_LARGE = 3
EXIT_PRECONDITION = 4

_PRECONDITION_ERRORS = (
    NotWeaklyMultiplicative,
    NotFullRank,
    NotABasis,
    NotMultiplicative,
    NotSquare,
    BadIndex,
    DimensionMismatch,
)


@dataclass
class RunConfig:
    format: str = "text"
    table_cap: int = mat.TABLE_CAP
    bruteforce_cap: int = orc.BRUTEFORCE_CAP
    enumerate_cap: int = canon.ENUMERATION_CAP
    seed: int = 0


def read_matrix(path: str) -> IntMatrix:
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, "r", encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    stripped = text.lstrip()
    if stripped.startswith("{") or stripped.startswith("["):
        return _matrix_from_json(stripped, path)
    tokens = []
    for line in text.splitlines():
        line = line.split("#", 1)[0]
        tokens.extend(line.split())
    if len(tokens) < 2:
        raise ParseError(f"{path}: missing 'd N' header")
    try:
        d, n = int(tokens[0]), int(tokens[1])
        body = [int(t) for t in tokens[2:]]
    except ValueError as exc:
        raise ParseError(f"{path}: non-integer token") from exc
    if d < 1 or n < 0:
        raise ParseError(f"{path}: bad dimensions {d} {n}")
    if len(body) != d * n:
        raise ParseError(f"{path}: expected {d * n} entries, found {len(body)}")
    return IntMatrix([body[i * n:(i + 1) * n] for i in range(d)], ncols=n)


def _matrix_from_json(text: str, path: str) -> IntMatrix:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON: {exc}") from exc
    if isinstance(data, dict):
        data = data.get("matrix")
    if not isinstance(data, list) or not data or not all(isinstance(r, list) for r in data):
        raise ParseError(f"{path}: JSON matrix must be a non-empty list of rows")
    try:
        return IntMatrix(data, ncols=len(data[0]))
    except (TypeError, ValueError) as exc:
        raise ParseError(f"{path}: {exc}") from exc


def format_matrix(m: IntMatrix) -> str:
    lines = [f"{m.nrows} {m.ncols}"]
    lines.extend(" ".join(str(e) for e in row) for row in m.entries)
    return "\n".join(lines)


def _matrix_rows(m: IntMatrix) -> list[list[int]]:
    return [list(r) for r in m.entries]


def _parse_basis(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.replace(",", " ").split())
    except ValueError as exc:
        raise ParseError(f"bad basis argument {text!r}") from exc


def _emit(out, text: str) -> None:
    out.write(text)
    if not text.endswith("\n"):
        out.write("\n")


def cmd_table(args, cfg: RunConfig, out) -> int:
    x = mat.Representation(read_matrix(args.file))
    table = mat.full_table(x, cap=cfg.table_cap)
    if cfg.format == "json":
        _emit(out, json.dumps({
            "d": x.d,
            "n": x.n,
            "subsets": [
                {"S": list(p.subset), "rank": p.rank, "m": p.multiplicity}
                for p in table.profiles
            ],
        }))
        return EXIT_OK
    lines = ["subset\trank\tmultiplicity"]
    for p in table.profiles:
        name = ",".join(str(j) for j in p.subset) or "-"
        lines.append(f"{name}\t{p.rank}\t{p.multiplicity}")
    _emit(out, "\n".join(lines))
    return EXIT_OK


def cmd_canonical(args, cfg: RunConfig, out) -> int:
    x = mat.Representation(read_matrix(args.file))
    rep = canon.canonical_form(x)
    if cfg.format == "json":
        _emit(out, json.dumps({
            "matrix": _matrix_rows(rep.matrix),
            "basis": list(rep.basis),
            "witness": {
                "T": _matrix_rows(rep.transform.matrix),
                "D": list(rep.signs),
            },
        }))
        return EXIT_OK
    _emit(out, format_matrix(rep.matrix))
    if args.witness:
        _emit(out, f"# basis {' '.join(map(str, rep.basis))}")
        _emit(out, "# witness T")
        _emit(out, format_matrix(rep.transform.matrix))
        _emit(out, "# witness D " + " ".join(map(str, rep.signs)))
    return EXIT_OK


def cmd_equiv(args, cfg: RunConfig, out) -> int:
    x = mat.Representation(read_matrix(args.file_a))
    y = mat.Representation(read_matrix(args.file_b))
    witness = canon.equivalent(x, y)
    if witness is not None:
        status = "equivalent"
    elif orc.same_arithmetic_matroid(x, y, cap=cfg.table_cap):
        status = "same_matroid"
    else:
        status = "different_matroid"
    if cfg.format == "json":
        payload = {"status": status, "witness": None}
        if witness is not None:
            t, d = witness
            payload["witness"] = {"T": _matrix_rows(t.matrix), "D": list(d)}
        _emit(out, json.dumps(payload))
    else:
        if witness is not None:
            t, d = witness
            _emit(out, "equivalent (witness T, D)")
            _emit(out, format_matrix(t.matrix))
            _emit(out, "D " + " ".join(map(str, d)))
        elif status == "same_matroid":
            _emit(out, "same arithmetic matroid, different representation")
        else:
            _emit(out, "different arithmetic matroids")
    return EXIT_OK if witness is not None else EXIT_NEGATIVE


def cmd_enumerate(args, cfg: RunConfig, out) -> int:
    x = mat.Representation(read_matrix(args.file))
    basis = _parse_basis(args.basis) if args.basis else canon.first_multiplicative_basis(x)
    if basis is None:
        raise NotWeaklyMultiplicative("no multiplicative basis to enumerate from")
    reps = canon.enumerate_basic_reps(x, basis, cap=cfg.enumerate_cap)
    if cfg.format == "json":
        _emit(out, json.dumps({
            "basis": list(basis),
            "count": len(reps),
            "matrices": [_matrix_rows(m) for m in reps],
        }))
        return EXIT_OK
    _emit(out, f"# {len(reps)} representations in basic form on basis "
               f"{' '.join(map(str, basis))}")
    for m in reps:
        _emit(out, "")
        _emit(out, format_matrix(m))
    return EXIT_OK


def cmd_stratum(args, cfg: RunConfig, out) -> int:
    x = mat.Representation(read_matrix(args.file))
    size = canon.stratum_size(x)
    if cfg.format == "json":
        _emit(out, json.dumps({"size": size}))
    else:
        _emit(out, str(size))
    return EXIT_OK


def _layer_name(layer: toric.Layer) -> str:
    flat = ",".join(map(str, layer.flat.elements)) or "-"
    point = ",".join(str(v) for v in layer.point)
    return f"flat=[{flat}] q=({point})"


def cmd_layers(args, cfg: RunConfig, out) -> int:
    x = mat.Representation(read_matrix(args.file))
    poset = toric.layer_poset(x)
    layers = poset.layers
    index = {layer: i for i, layer in enumerate(layers)}
    covers = poset.covers()
    if args.dot:
        lines = ["digraph layers {"]
        for i, layer in enumerate(layers):
            lines.append(f'  n{i} [label="{_layer_name(layer)}"];')
        for a, b in covers:
            lines.append(f"  n{index[a]} -> n{index[b]};")
        lines.append("}")
        _emit(out, "\n".join(lines))
        return EXIT_OK
    if cfg.format == "json" or args.json:
        _emit(out, json.dumps({
            "layers": [
                {
                    "flat": list(layer.flat.elements),
                    "point": [str(v) for v in layer.point],
                }
                for layer in layers
            ],
            "relations": sorted(
                [index[a], index[b]] for a, b in poset.relations if a != b
            ),
            "covers": [[index[a], index[b]] for a, b in covers],
        }))
        return EXIT_OK
    lines = [f"# {len(layers)} layers, {len(covers)} cover relations"]
    for i, layer in enumerate(layers):
        lines.append(f"layer {i}: {_layer_name(layer)}")
    for a, b in covers:
        lines.append(f"cover: {index[a]} < {index[b]}")
    _emit(out, "\n".join(lines))
    return EXIT_OK


def cmd_verify(args, cfg: RunConfig, out) -> int:
    x = mat.Representation(read_matrix(args.file))
    report = orc.verify_uniqueness_theorem(x, args.trials, args.seed)
    good = report.trials - len(report.failures)
    if cfg.format == "json":
        _emit(out, json.dumps({
            "trials": report.trials,
            "ok": good,
            "failures": len(report.failures),
            "seed": report.seed,
        }))
    else:
        _emit(out, f"{good}/{report.trials} ok")
        for f in report.failures:
            _emit(out, f"failure at trial {f.trial}: D={list(f.signs)}")
    return EXIT_OK if report.ok else EXIT_NEGATIVE


def cmd_graph(args, cfg: RunConfig, out) -> int:
    x = mat.Representation(read_matrix(args.file))
    basis = _parse_basis(args.basis) if args.basis else canon.first_multiplicative_basis(x)
    if basis is None:
        raise NotWeaklyMultiplicative("no multiplicative basis for a basic form")
    form = canon.basic_form(x, basis)
    inc = cg.incidence(form.a_block)
    forest = cg.coordinatizing_path(inc)
    forest_edges = set(forest.edges)
    d = form.d
    lines = ["graph circuit_incidence {", "  rankdir=LR;"]
    for i in range(1, d + 1):
        lines.append(f'  r{i} [shape=circle];')
    for j in range(d + 1, form.n + 1):
        lines.append(f'  c{j} [shape=square];')
    for i, j in inc.edges():
        style = " [style=bold]" if (i, j) in forest_edges else ""
        lines.append(f"  r{i} -- c{j}{style};")
    lines.append("}")
    _emit(out, "\n".join(lines))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="arimat",
        description="Arithmetic matroids of integer matrices: subset tables, "
                    "canonical representations, representation counting, and "
                    "toric arrangement layer posets.",
    )
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--table-cap", type=int, default=mat.TABLE_CAP)
    parser.add_argument("--bruteforce-cap", type=int, default=orc.BRUTEFORCE_CAP)
    parser.add_argument("--enumerate-cap", type=int, default=canon.ENUMERATION_CAP)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", help="rank and multiplicity of every subset")
    p.add_argument("file")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("canonical", help="canonical representative of the orbit")
    p.add_argument("file")
    p.add_argument("--witness", action="store_true",
                   help="also print the transform reaching the canonical form")
    p.set_defaults(func=cmd_canonical)

    p = sub.add_parser("equiv", help="decide equivalence of two representations")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("enumerate", help="all representations sharing a basic form")
    p.add_argument("file")
    p.add_argument("--basis", help="comma-separated column indices")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("stratum", help="number of representations of the matroid")
    p.add_argument("file")
    p.set_defaults(func=cmd_stratum)

    p = sub.add_parser("layers", help="poset of layers of the toric arrangement")
    p.add_argument("file")
    p.add_argument("--dot", action="store_true", help="Hasse diagram in DOT format")
    p.add_argument("--json", action="store_true", help="JSON export")
    p.set_defaults(func=cmd_layers)

    p = sub.add_parser("verify", help="randomized canonical-form invariance check")
    p.add_argument("file")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("graph", help="circuit incidence graph in DOT format")
    p.add_argument("file")
    p.add_argument("--basis", help="comma-separated column indices")
    p.set_defaults(func=cmd_graph)

    return parser


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = RunConfig(
        format=args.format,
        table_cap=args.table_cap,
        bruteforce_cap=args.bruteforce_cap,
        enumerate_cap=args.enumerate_cap,
    )
    try:
        return args.func(args, cfg, out)
    except ParseError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_PARSE
    except TooLarge as exc:
        print(f"error: {exc}", file=err)
        return EXIT_TOO_LARGE
    except _PRECONDITION_ERRORS as exc:
        name = type(exc).__name__
        if isinstance(exc, NotWeaklyMultiplicative):
            print("error: not weakly multiplicative", file=err)
        else:
            print(f"error: {name}: {exc}", file=err)
        return EXIT_PRECONDITION
    except ArimatError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_PRECONDITION


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
