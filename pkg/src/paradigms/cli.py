"""Command-line front-end.

One verb per library operation, batch only. Exit codes: 0 success, 1 for
domain errors raised by an operation (such as conditioning on probability
0), 2 for usage errors (bad flags, unreadable or malformed inputs).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import classical, incidence, quantum, statistics
from .errors import ParadigmError
from .universe import (
    Partition,
    Subset,
    Universe,
    UniverseDocument,
    inverse_image_partition,
    truth_table_universe,
)


class UsageError(Exception):
    """Bad command-line input (distinct from a domain error)."""


def _emit_json(payload) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def _md_table(headers: list[str], rows: list[list[str]]) -> str:
    lines = ["| " + " | ".join(headers) + " |", "| " + " | ".join("---" for _ in headers) + " |"]
    lines += ["| " + " | ".join(row) + " |" for row in rows]
    return "\n".join(lines)


def _load_document(path: str | None) -> UniverseDocument | None:
    if path is None:
        return None
    try:
        return UniverseDocument.from_file(path)
    except OSError as exc:
        raise UsageError(f"cannot read universe file: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed JSON in universe file: {exc}") from exc
    except ParadigmError as exc:
        raise UsageError(f"invalid universe document: {exc}") from exc


def _synthetic_universe(n: int) -> Universe:
    return Universe(tuple(f"u{j + 1}" for j in range(n)))


def _resolve_universe(doc: UniverseDocument | None, subset_specs: list[str]) -> Universe:
    if doc is not None:
        return doc.universe
    for spec in subset_specs:
        if spec and all(c in "01" for c in spec):
            return _synthetic_universe(len(spec))
    raise UsageError("need --universe, or bit-string subsets to infer a universe from")


def _resolve_subset(doc: UniverseDocument | None, universe: Universe, spec: str) -> Subset:
    if spec and all(c in "01" for c in spec) and len(spec) == universe.size:
        return Subset.from_bits(universe, spec)
    if doc is not None and spec in doc.subsets:
        return doc.subsets[spec]
    raise UsageError(f"unknown subset {spec!r} (expected a name or a 0/1 string)")


def _parse_block_tokens(universe: Universe, tokens: list[str]) -> list[int]:
    indices = []
    for token in tokens:
        token = token.strip()
        if token.isdigit():
            indices.append(int(token))
        else:
            try:
                indices.append(universe.index_of(token))
            except ParadigmError as exc:
                raise UsageError(str(exc)) from exc
    return indices


def _resolve_partition(doc: UniverseDocument | None, universe: Universe, spec: str) -> Partition:
    if doc is not None and spec in doc.attributes:
        return inverse_image_partition(doc.attributes[spec])
    blocks = [b for b in spec.split("|") if b.strip()]
    if not blocks:
        raise UsageError(f"unknown partition {spec!r}")
    try:
        return Partition.from_index_blocks(
            universe, [_parse_block_tokens(universe, b.split(",")) for b in blocks]
        )
    except ParadigmError as exc:
        raise UsageError(f"invalid partition {spec!r}: {exc}") from exc


def _resolve_probs(universe: Universe, spec: str | None) -> classical.PointDistribution:
    if spec is None:
        return classical.PointDistribution.uniform(universe)
    try:
        values = [Fraction(tok.strip()) for tok in spec.split(",")]
        return classical.PointDistribution(universe, tuple(values))
    except (ValueError, ZeroDivisionError, ParadigmError) as exc:
        raise UsageError(f"invalid --probs: {exc}") from exc


def _resolve_psi(doc: UniverseDocument | None, spec: str) -> quantum.AmplitudeVector:
    try:
        amps = [complex(tok.strip().replace("i", "j")) for tok in spec.split(",")]
    except ValueError as exc:
        raise UsageError(f"invalid --psi: {exc}") from exc
    universe = doc.universe if doc is not None else _synthetic_universe(len(amps))
    if universe.size != len(amps):
        raise UsageError("--psi length does not match the universe size")
    try:
        return quantum.AmplitudeVector.normalized(universe, amps)
    except ParadigmError as exc:
        raise UsageError(f"invalid --psi: {exc}") from exc


def _resolve_unitary(spec: str, n: int):
    try:
        return quantum.unitary_by_name(spec, n)
    except ParadigmError:
        pass
    try:
        with open(spec, "r", encoding="utf-8") as handle:
            data = json.load(handle)
        matrix = quantum.matrix_from_json(data)
    except OSError as exc:
        raise UsageError(f"unknown unitary {spec!r} and not a readable file") from exc
    except (json.JSONDecodeError, ParadigmError) as exc:
        raise UsageError(f"invalid unitary file {spec!r}: {exc}") from exc
    if matrix.shape != (n, n):
        raise UsageError(f"unitary must be {n}x{n}")
    return matrix


def _fraction_grid(rows) -> str:
    cells = [[str(v) for v in row] for row in rows]
    width = max(len(c) for row in cells for c in row)
    return "\n".join(" ".join(c.rjust(width) for c in row) for row in cells)


def _cmd_universe(args) -> str:
    doc = _load_document(args.universe)
    if doc is None:
        if args.predicates is None:
            raise UsageError("universe: need --universe FILE or --predicates NAMES")
        names = [tok.strip() for tok in args.predicates.split(",") if tok.strip()]
        universe, attrs = truth_table_universe(names)
        doc = UniverseDocument(universe, {a.name: a for a in attrs}, {})
    if args.format == "json":
        return _emit_json(doc.to_dict())
    headers = ["element"] + list(doc.attributes)
    rows = [
        [label] + [str(doc.attributes[name].values[j]) for name in doc.attributes]
        for j, label in enumerate(doc.universe.labels)
    ]
    out = _md_table(headers, rows)
    for name, subset in doc.subsets.items():
        out += f"\n{name}: " + "".join(str(b) for b in subset.membership)
    return out


def _infer_partition_universe(spec: str) -> Universe | None:
    tokens = [tok.strip() for block in spec.split("|") for tok in block.split(",")]
    if tokens and all(tok.isdigit() for tok in tokens):
        return _synthetic_universe(max(int(tok) for tok in tokens) + 1)
    return None


def _cmd_incidence(args) -> str:
    doc = _load_document(args.universe)
    subsets = args.subset or []
    if doc is None and not subsets and args.partition:
        universe = _infer_partition_universe(args.partition)
        if universe is None:
            raise UsageError("need --universe to resolve partition labels")
    else:
        universe = _resolve_universe(doc, subsets)

    def subset_arg(i: int) -> Subset:
        if len(subsets) <= i:
            raise UsageError(f"incidence {args.op}: missing --subset")
        return _resolve_subset(doc, universe, subsets[i])

    if args.op == "diag":
        result = incidence.in_diagonal(subset_arg(0))
    elif args.op == "product":
        result = incidence.in_product(subset_arg(0))
    elif args.op == "blobsum":
        result = incidence.blob_sum(
            incidence.in_product(subset_arg(0)), incidence.in_product(subset_arg(1))
        )
    elif args.op == "meet":
        result = incidence.paradigm_meet(
            incidence.in_product(subset_arg(0)), incidence.in_product(subset_arg(1))
        )
    elif args.op == "negate":
        result = incidence.paradigm_negate(incidence.in_product(subset_arg(0)))
    elif args.op == "indit":
        if args.partition is None:
            raise UsageError("incidence indit: missing --partition")
        result = incidence.indit(_resolve_partition(doc, universe, args.partition))
    else:  # sharpen
        if args.partition is None:
            raise UsageError("incidence sharpen: missing --partition")
        result = incidence.sharpen(
            incidence.in_product(subset_arg(0)),
            _resolve_partition(doc, universe, args.partition),
        )
    if args.format == "json":
        return _emit_json(result.to_json_dict())
    return result.render_grid()


def _block_label(partition: Partition, doc: UniverseDocument | None, spec: str, i: int) -> str:
    if doc is not None and spec in doc.attributes:
        attr = doc.attributes[spec]
        return str(attr.values[partition.blocks[i].indices[0]])
    return f"B{i + 1}"


def _cmd_density(args) -> str:
    doc = _load_document(args.universe)
    subsets = args.subset or []
    universe = _resolve_universe(doc, subsets)
    if not subsets:
        raise UsageError(f"density {args.op}: missing --subset")
    support = _resolve_subset(doc, universe, subsets[0])
    probs = _resolve_probs(universe, args.probs)
    if args.op == "diag":
        rho = classical.rho_diag(support, probs)
    else:
        rho = classical.rho_paradigm(support, probs)

    if args.op in ("diag", "paradigm"):
        result = rho
    elif args.op == "prob":
        if args.partition is None:
            raise UsageError("density prob: missing --partition")
        partition = _resolve_partition(doc, universe, args.partition)
        rows = [
            (
                _block_label(partition, doc, args.partition, i),
                classical.prob_block(rho, block),
            )
            for i, block in enumerate(partition.blocks)
        ]
        if args.format == "json":
            return _emit_json(
                {"blocks": [{"block": label, "probability": str(p)} for label, p in rows]}
            )
        return _md_table(["block", "probability"], [[label, str(p)] for label, p in rows])
    elif args.op == "sharpen":
        if args.partition is None:
            raise UsageError("density sharpen: missing --partition")
        result = classical.sharpen_classical(
            rho, _resolve_partition(doc, universe, args.partition)
        )
    else:  # condition
        if len(subsets) < 2:
            raise UsageError("density condition: need a second --subset for the block")
        block = _resolve_subset(doc, universe, subsets[1])
        pr, result = classical.project_conditional(rho, block)
        if args.format == "json":
            return _emit_json({"probability": str(pr), "density": result.to_json_dict()})
        return f"probability: {pr}\n" + result.render_grid()

    if args.format == "json":
        return _emit_json(result.to_json_dict())
    return result.render_grid()


def _cmd_quantum(args) -> str:
    doc = _load_document(args.universe)
    if args.psi is None:
        raise UsageError(f"quantum {args.op}: missing --psi")
    psi = _resolve_psi(doc, args.psi)
    universe = psi.universe

    def observable() -> quantum.Observable:
        if args.partition is None:
            raise UsageError(f"quantum {args.op}: missing --partition")
        return quantum.Observable.from_partition(
            _resolve_partition(doc, universe, args.partition)
        )

    if args.op == "rho":
        result = quantum.rho_pure(psi)
    elif args.op == "decohere":
        result = quantum.rho_decohered(psi)
    elif args.op == "luders":
        result = quantum.luders(quantum.rho_pure(psi), observable())
    elif args.op == "measure":
        rows = quantum.measure_prob(quantum.rho_pure(psi), observable())
        if args.format == "json":
            return _emit_json(
                [{"eigenvalue": e, "probability": p} for e, p in rows]
            )
        return _md_table(
            ["eigenvalue", "probability"], [[f"{e:g}", f"{p:.12g}"] for e, p in rows]
        )
    elif args.op == "sample":
        if args.seed is None:
            raise UsageError("quantum sample: missing --seed")
        eigenvalue, post = quantum.sample_measurement(
            quantum.rho_pure(psi), observable(), args.seed
        )
        if args.format == "json":
            return _emit_json({"eigenvalue": eigenvalue, "post": post.to_json_dict()})
        return f"outcome: {eigenvalue:g}\n" + quantum.render_complex_grid(post.matrix)
    else:  # distinguish
        if args.unitary is None:
            raise UsageError("quantum distinguish: missing --unitary")
        report = quantum.distinguish(psi, _resolve_unitary(args.unitary, universe.size))
        if args.format == "json":
            return _emit_json(report.to_json_dict())
        rows = [
            [f"{e:g}", f"{p:.12g}", f"{q:.12g}"]
            for (e, p), (_, q) in zip(report.pure_probs, report.decohered_probs)
        ]
        table = _md_table(["outcome", "pure", "decohered"], rows)
        return table + f"\ngap: {report.gap:.12g}"

    if args.format == "json":
        return _emit_json(result.to_json_dict())
    return quantum.render_complex_grid(result.matrix)


def _cmd_stats(args) -> str:
    if args.states is None:
        raise UsageError("stats: missing --states")
    if args.particles is None:
        raise UsageError("stats: missing --particles")
    labels = [tok.strip() for tok in args.states.split(",") if tok.strip()]
    table = {
        "mb": statistics.mb_distribution,
        "be": statistics.be_distribution,
        "fd": statistics.fd_distribution,
    }[args.op](labels, args.particles)
    if args.format == "json":
        return _emit_json(table.to_json_dict())
    return table.to_markdown()


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--universe", help="universe document (JSON file)")
    parser.add_argument(
        "--format", choices=("markdown", "json"), default="markdown",
        help="output format (default markdown)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="paradigms",
        description="Incidence and density matrix views of definite sets and indefinite paradigms.",
    )
    verbs = parser.add_subparsers(dest="verb", required=True)

    p_universe = verbs.add_parser("universe", help="display a universe document")
    _add_common(p_universe)
    p_universe.add_argument("--predicates", help="comma-separated predicate names to build a truth-table universe")
    p_universe.set_defaults(handler=_cmd_universe)

    p_incidence = verbs.add_parser("incidence", help="boolean incidence matrices")
    p_incidence.add_argument(
        "op", choices=("diag", "product", "blobsum", "meet", "negate", "indit", "sharpen")
    )
    _add_common(p_incidence)
    p_incidence.add_argument("--subset", action="append", help="subset name or 0/1 string (repeat for two operands)")
    p_incidence.add_argument("--partition", help="attribute name or blocks like '0,2|1,3'")
    p_incidence.set_defaults(handler=_cmd_incidence)

    p_density = verbs.add_parser("density", help="exact classical density matrices")
    p_density.add_argument("op", choices=("diag", "paradigm", "prob", "sharpen", "condition"))
    _add_common(p_density)
    p_density.add_argument("--subset", action="append", help="support subset; repeat to give a block for 'condition'")
    p_density.add_argument("--partition", help="attribute name or blocks like '0,2|1,3'")
    p_density.add_argument("--probs", help="comma-separated point probabilities, fractions like 1/2")
    p_density.set_defaults(handler=_cmd_density)

    p_quantum = verbs.add_parser("quantum", help="complex density matrices and measurement")
    p_quantum.add_argument(
        "op", choices=("rho", "decohere", "luders", "measure", "sample", "distinguish")
    )
    _add_common(p_quantum)
    p_quantum.add_argument("--psi", help="comma-separated complex amplitudes (normalized for you)")
    p_quantum.add_argument("--partition", help="eigenvalue blocks like '0|1' or an attribute name")
    p_quantum.add_argument("--unitary", help="'identity', 'hadamard', or a JSON file with re/im")
    p_quantum.add_argument("--seed", type=int, help="seed for 'sample'")
    p_quantum.set_defaults(handler=_cmd_quantum)

    p_stats = verbs.add_parser("stats", help="particle statistics tables")
    p_stats.add_argument("op", choices=("mb", "be", "fd"))
    _add_common(p_stats)
    p_stats.add_argument("--states", help="comma-separated single-particle state labels")
    p_stats.add_argument("--particles", type=int, help="number of particles")
    p_stats.set_defaults(handler=_cmd_stats)

    return parser


def run(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        output = args.handler(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ParadigmError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(output)
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
