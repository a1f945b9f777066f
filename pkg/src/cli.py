"""
Command-line front end.

Results go to stdout (or ``--output``), logs to stderr. Library errors map to exit codes:
0 success, 2 validation, 3 resource cap, 4 verification failure.
"""

import argparse
import csv
import io
import json
import logging
import sys
from collections.abc import Sequence
from pathlib import Path
from typing import Any

from pydantic import BaseModel, ValidationError

from src.common.config import Caps, RunConfig, load_yaml_config
from src.common.exceptions import EXIT_OK, EXIT_VALIDATION, BcomError, SpecError
from src.common.guards import ResourceGuard
from src.common.logging_setup import configure_logging
from src.common.metrics import write_metrics
from src.core.bcom import TauSpec, build_bcom, inclusion_map
from src.core.groups.builtins import group_to_model, load_group
from src.core.simplicial.homology import BettiTable, betti, induced_on_homology
from src.services.decompose import Collection, DecompositionReport, decompose
from src.services.verify import SUITES, CheckResult, render_table, run_suites

logger = logging.getLogger("bcom")


def _add_run_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--group", help="Builtin spec (S3, C2xC2, GL2:4) or a JSON table path")
    parser.add_argument("--tau", help="free, z, zmod:m or zadic:l")
    parser.add_argument("--ell", type=int, help="Coefficient prime")
    parser.add_argument("--max-degree", type=int, dest="max_degree", help="Top degree D")
    parser.add_argument(
        "--format", choices=["json", "csv", "text"], dest="output_format", help="Output format"
    )
    parser.add_argument("--seed", type=int, help="Reserved for sampling diagnostics")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bcom", description="Homology of classifying spaces for commutativity"
    )
    parser.add_argument("--config", help="YAML file with run settings")
    parser.add_argument("--metrics-file", help="Write computation counters (Prometheus text)")
    parser.add_argument("--log-level", default="INFO", help="Logging level (default: INFO)")
    parser.add_argument("--output", help="Write results to this file instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    homology = sub.add_parser("homology", help="Betti numbers of B(tau, G) mod ell")
    _add_run_options(homology)

    compare = sub.add_parser("compare", help="Map induced by B(tau, G) -> B(tau', G)")
    _add_run_options(compare)
    compare.add_argument("--from-tau", required=True, dest="from_tau")
    compare.add_argument("--to-tau", required=True, dest="to_tau")

    decomposition = sub.add_parser("decompose", help="Abelian-subgroup decomposition")
    _add_run_options(decomposition)
    decomposition.add_argument("--collection", choices=["all", "center"], default="all")

    verify = sub.add_parser("verify", help="Run the acceptance suites")
    verify.add_argument("suite", nargs="?", default="all", choices=[*SUITES, "all"])
    verify.add_argument("--suite-config", dest="suite_config", help="Suite parameter YAML")

    group = sub.add_parser("group", help="Emit a group table as JSON")
    group.add_argument("--group", required=True)
    return parser


def resolve_config(args: argparse.Namespace) -> RunConfig:
    """
    Defaults, then the ``--config`` YAML, then explicit flags.

    Raises:
        SpecError: If the merged settings do not validate
    """
    values: dict[str, Any] = load_yaml_config(args.config) if args.config else {}
    for key in ("group", "tau", "ell", "max_degree", "output_format", "seed"):
        value = getattr(args, key, None)
        if value is not None:
            values[key] = value
    overrides = values.pop("caps", None) or {}
    if not isinstance(overrides, dict):
        raise SpecError(f"caps must be a mapping of cap names to integers, got {overrides!r}")
    try:
        caps = Caps.from_env(**overrides)
        return RunConfig.model_validate({**values, "caps": caps})
    except ValidationError as e:
        raise SpecError(f"Invalid run configuration: {e}") from e


def _csv_rows(rows: list[list[Any]]) -> str:
    buffer = io.StringIO()
    csv.writer(buffer, lineterminator="\n").writerows(rows)
    return buffer.getvalue()


def render(result: BaseModel | dict[str, Any], output_format: str) -> str:
    """Render a result model or mapping in the requested format."""
    data = result.model_dump() if isinstance(result, BaseModel) else result
    if output_format == "json":
        return json.dumps(data, indent=2, sort_keys=True) + "\n"
    if isinstance(result, BettiTable):
        return result.to_csv() if output_format == "csv" else f"{result}\n"
    if output_format == "csv":
        return _csv_rows([["key", "value"], *([k, json.dumps(v)] for k, v in data.items())])
    return "".join(f"{k}: {v}\n" for k, v in data.items())


def cmd_homology(config: RunConfig, guard: ResourceGuard) -> BettiTable:
    group = load_group(config.group, guard)
    space = build_bcom(group, TauSpec.parse(config.tau), config.max_degree, guard)
    return betti(space, config.ell, config.max_degree, guard)


def cmd_compare(
    config: RunConfig, from_tau: str, to_tau: str, guard: ResourceGuard
) -> dict[str, Any]:
    group = load_group(config.group, guard)
    source = build_bcom(group, TauSpec.parse(from_tau), config.max_degree, guard)
    target = build_bcom(group, TauSpec.parse(to_tau), config.max_degree, guard)
    induced = induced_on_homology(inclusion_map(source, target), config.ell, config.max_degree)
    report = induced.to_dict()
    report.pop("matrices")
    return {"group": group.name, "from_tau": str(source.tau), "to_tau": str(target.tau), **report}


def cmd_decompose(
    config: RunConfig, collection: Collection, guard: ResourceGuard
) -> DecompositionReport:
    group = load_group(config.group, guard)
    tau = TauSpec.parse(config.tau)
    return decompose(group, tau, config.ell, config.max_degree, collection, guard)


def cmd_verify(suite: str, suite_config: str | None, guard: ResourceGuard) -> str:
    return render_table(run_suites(suite, suite_config, guard)) + "\n"


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text)
        logger.info(f"Results written to {output}")
    else:
        sys.stdout.write(text)


def main(argv: Sequence[str] | None = None) -> int:
    """
    Parse arguments and run one command.

    Returns:
        int: Process exit code
    """
    args = build_parser().parse_args(argv)
    configure_logging(args.log_level)
    try:
        if args.command == "verify":
            text = cmd_verify(args.suite, args.suite_config, ResourceGuard(Caps.from_env()))
        elif args.command == "group":
            guard = ResourceGuard(Caps.from_env())
            text = group_to_model(load_group(args.group, guard)).model_dump_json(indent=2) + "\n"
        else:
            config = resolve_config(args)
            guard = ResourceGuard(config.caps)
            result: BaseModel | dict[str, Any]
            if args.command == "homology":
                result = cmd_homology(config, guard)
            elif args.command == "compare":
                result = cmd_compare(config, args.from_tau, args.to_tau, guard)
            else:
                result = cmd_decompose(config, args.collection, guard)
            text = render(result, config.output_format)
        _emit(text, args.output)
        return EXIT_OK
    except BcomError as e:
        logger.error(str(e))
        if e.details and "results" in e.details:
            results = [CheckResult(**r) for r in e.details["results"]]
            _emit(render_table(results) + "\n", args.output)
        return e.exit_code or EXIT_VALIDATION
    finally:
        if args.metrics_file:
            write_metrics(args.metrics_file)


if __name__ == "__main__":
    sys.exit(main())
