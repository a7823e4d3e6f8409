"""
Command-line front end.

    qdu-typeb extensions poset.json
    qdu-typeb kbp poset.json --basis monomial
    qdu-typeb interval poset.json
    qdu-typeb check relations --n 3
    qdu-typeb export poset.json --module --format dot

Exit codes: 0 success, 1 a check failed, 2 bad usage or unreadable input.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

from ..Hecke.hecke_module import HeckeModule, HeckeRelationError
from ..Hecke.poset_modules import module_MBP
from ..Posets.bn_poset import kbp, load_poset, poset_from_dict
from ..Posets.distinguished import NotRegularError, sigma_rho_endpoints
from ..QSym.operations import to_basis
from .export import extensions_frame, hasse_dot, quiver_dot, render, report_frame
from .run_config import SUITES, RunConfig
from .suites import SuiteContext, run_suite

log = logging.getLogger(__name__)

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", dest="rank_cap", type=int, default=4,
                        help="largest rank visited by the checks (at most 6)")
    common.add_argument("--trunc", type=int, default=None,
                        help="truncation bound V of the P-partition oracle, default n+1")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--samples", type=int, default=20,
                        help="sampled posets per rank above 2")
    common.add_argument("--format", dest="output_format", default="text",
                        choices=("text", "json", "dot"))
    common.add_argument("--basis", default="fundamental", choices=("fundamental", "monomial"))
    common.add_argument("--out", default=None, help="write here instead of stdout")
    common.add_argument("-v", "--verbose", action="count", default=0)

    parser = argparse.ArgumentParser(prog="qdu-typeb",
                                     description="Type-B P-partitions and 0-Hecke modules")
    commands = parser.add_subparsers(dest="command", required=True)
    for name, help_text in (("extensions", "list the type-B linear extensions"),
                            ("kbp", "expand K^B_P in QSym^B"),
                            ("interval", "weak order endpoints of a regular poset")):
        sub = commands.add_parser(name, parents=[common], help=help_text)
        sub.add_argument("poset", help="poset JSON file")
    check = commands.add_parser("check", parents=[common], help="run a check suite")
    check.add_argument("suite", choices=SUITES)
    export = commands.add_parser("export", parents=[common],
                                 help="DOT of a poset or a module dump")
    export.add_argument("path", help="poset JSON or module dump")
    export.add_argument("--module", action="store_true",
                        help="build M^B_P from the poset first")
    return parser


def configure_logging(verbosity: int) -> None:
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbosity, logging.DEBUG)
    logging.basicConfig(level=level,
                        format="%(asctime)s %(name)s %(levelname)s: %(message)s")


def config_from_args(args: argparse.Namespace) -> RunConfig:
    return RunConfig(command=args.command,
                     rank_cap=args.rank_cap,
                     trunc=args.trunc,
                     seed=args.seed,
                     samples=args.samples,
                     output_format=args.output_format,
                     basis=args.basis,
                     out=args.out)


# commands, each returning (text, exit code)

def cmd_extensions(args: argparse.Namespace, config: RunConfig) -> tuple[str, int]:
    return render(extensions_frame(load_poset(args.poset)), config.output_format()), EXIT_OK


def cmd_kbp(args: argparse.Namespace, config: RunConfig) -> tuple[str, int]:
    element = to_basis(kbp(load_poset(args.poset)), config.basis())
    if config.output_format() == "json":
        return json.dumps(element.to_records()), EXIT_OK
    return str(element), EXIT_OK


def cmd_interval(args: argparse.Namespace, config: RunConfig) -> tuple[str, int]:
    try:
        sigma, rho = sigma_rho_endpoints(load_poset(args.poset))
    except NotRegularError as err:
        if config.output_format() == "json":
            return json.dumps({"regular": False, "witness": list(err.witness)}), EXIT_OK
        kind = "not distinguished at" if len(err.witness) == 1 else "betweenness fails for"
        return f"not regular: {kind} {err.witness}", EXIT_OK
    if config.output_format() == "json":
        return json.dumps({"regular": True, "sigma": str(sigma), "rho": str(rho)}), EXIT_OK
    return f"sigma_P = {sigma}\nrho_P = {rho}", EXIT_OK


def cmd_check(args: argparse.Namespace, config: RunConfig) -> tuple[str, int]:
    ctx = SuiteContext(rank_cap=config.rank_cap(), seed=config.seed(),
                       samples=config.samples(), trunc=config.trunc())
    rows = run_suite(args.suite, ctx)
    failed = [row for row in rows if row["status"] == "fail"]
    text = render(report_frame(rows), config.output_format())
    if failed and config.output_format() != "json":
        text += "\n\nfirst failure:\n" + json.dumps(failed[0], indent=2, default=str)
    return text, EXIT_FAILED if failed else EXIT_OK


def cmd_export(args: argparse.Namespace, config: RunConfig) -> tuple[str, int]:
    data = json.loads(Path(args.path).read_text())
    if isinstance(data, dict) and "actions" in data:
        module = HeckeModule.from_dict(data)
        if config.output_format() == "json":
            return module.to_json(), EXIT_OK
        return quiver_dot(module), EXIT_OK
    poset = poset_from_dict(data, args.path)
    if not args.module:
        return hasse_dot(poset), EXIT_OK
    module = module_MBP(poset)
    if config.output_format() == "json":
        return module.to_json(), EXIT_OK
    return quiver_dot(module), EXIT_OK


HANDLERS = {
    "extensions": cmd_extensions,
    "kbp": cmd_kbp,
    "interval": cmd_interval,
    "check": cmd_check,
    "export": cmd_export,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    configure_logging(args.verbose)
    try:
        config = config_from_args(args)
        text, code = HANDLERS[args.command](args, config)
    except (ValueError, OSError, HeckeRelationError) as err:
        log.debug("command failed", exc_info=True)
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE
    out = config.out()
    if out is None:
        print(text)
    else:
        Path(out).write_text(text + "\n")
        log.info(f"wrote {out}")
    return code


if __name__ == "__main__":
    sys.exit(main())
