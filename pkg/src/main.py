"""
Command-line front end: python -m src.main <command> ...

stdout carries JSON only; logs go to stderr.
Exit codes: 0 success or witness found, 2 no witness / pair not certified, 1 error.
"""

import argparse
import json
import sys
from pathlib import Path
from typing import List, Optional

from loguru import logger
from pydantic import BaseModel

from src.config import get_settings
from src.exceptions import Gsp4Exception
from src.orchestrator import PipelineOrchestrator

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_NO_WITNESS = 2


def _emit(model: BaseModel, indent: Optional[int] = 2) -> None:
    print(json.dumps(model.model_dump(mode="json"), sort_keys=True, indent=indent))


def setup_logging(level: str) -> None:
    """Raises ValueError for an unknown level, leaving the current sinks in place."""
    level = logger.level(level.upper()).name
    logger.remove()
    logger.add(sys.stderr, level=level, format="{time:HH:mm:ss} | {level: <8} | {name} - {message}")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="gsp4lift",
        description="Irregular primes, exponent pairs for GSp4 lifting, and the identities behind them.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    irr = sub.add_parser("irregular", help="E and e_p for every odd prime up to --max-p (JSON lines)")
    irr.add_argument("--max-p", type=int, required=True)
    irr.add_argument("--cache", type=Path, default=None, help="Bernoulli cache dir (default: GSP4_CACHE_DIR)")
    irr.add_argument("--verify", action="store_true", help="Cross-check both Bernoulli algorithms per prime")

    fp = sub.add_parser("find-pair", help="Full report with a witness pair for p")
    fp.add_argument("-p", type=int, required=True)
    fp.add_argument("--allow-large", action="store_true", help="Lift the exhaustive-scan limit")
    fp.add_argument("--non-strict", action="store_true", help="Use 4e + 8 <= (p-1)/2")

    vp = sub.add_parser("verify-pair", help="Evaluate (1)-(3) and (a)-(c) on one pair")
    vp.add_argument("-p", type=int, required=True)
    vp.add_argument("-a", "--alpha", type=int, required=True)
    vp.add_argument("-b", "--beta", type=int, required=True)

    cp = sub.add_parser("count-pairs", help="Exact valid-pair count against the lower bound")
    cp.add_argument("-p", type=int, required=True)
    cp.add_argument("--allow-large", action="store_true")

    lc = sub.add_parser("lie-check", help="Bracket, eigenvalue, filtration and similitude checks")
    lc.add_argument("-p", type=int, required=True)
    lc.add_argument("--trials", type=int, default=None)
    lc.add_argument("--seed", type=int, default=None)

    lm = sub.add_parser("verify-lemma54", help="Exhaustive equivalence of (1)-(3) and (a)-(c)")
    lm.add_argument("-p", type=int, required=True)
    lm.add_argument("--allow-large", action="store_true")

    return ap


def run(args: argparse.Namespace) -> int:
    orchestrator = PipelineOrchestrator(cache_dir=getattr(args, "cache", None))

    if args.command == "irregular":
        rows = orchestrator.irregular_table(args.max_p, verify=args.verify)
        for row in rows:
            _emit(row, indent=None)
        if any(row.oracles_agree is False for row in rows):
            logger.error("Bernoulli oracles disagree")
            return EXIT_ERROR
        return EXIT_OK

    if args.command == "find-pair":
        strict = False if args.non_strict else None
        report = orchestrator.build_report(args.p, allow_large=args.allow_large, strict=strict)
        _emit(report)
        return EXIT_OK if report.witness_pair is not None else EXIT_NO_WITNESS

    if args.command == "verify-pair":
        pair_report = orchestrator.verify_pair(args.p, args.alpha, args.beta)
        _emit(pair_report)
        return EXIT_OK if pair_report.hypotheses_hold else EXIT_NO_WITNESS

    if args.command == "count-pairs":
        _emit(orchestrator.count_pairs(args.p, allow_large=args.allow_large))
        return EXIT_OK

    if args.command == "lie-check":
        lie = orchestrator.lie_check(args.p, trials=args.trials, seed=args.seed)
        _emit(lie)
        return EXIT_OK if lie.passed else EXIT_ERROR

    if args.command == "verify-lemma54":
        _emit(orchestrator.lemma54(args.p, allow_large=args.allow_large))
        return EXIT_OK

    raise ValueError(f"unknown command {args.command}")


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        setup_logging(get_settings().GSP4_LOG_LEVEL)
        return run(args)
    except (Gsp4Exception, ValueError) as e:
        logger.error(f"{args.command} failed: {e}")
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
