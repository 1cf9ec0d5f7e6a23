# -*- coding: utf-8 -*-
"""Command-line entry point: ``readtransor <subcommand> ...``."""
from __future__ import annotations
import argparse
import logging
import os
import sys
from typing import Optional, Sequence

from app._version import RECORD_FORMAT_VERSION, __version__
from app.cli import ab_sheet, abtest, augment, baseline, build, make_targets, parse, score, split
from app.cli.config import PipelineConfig
from app.core.common.errors import DataError
from app.core.common.workers import default_jobs

# ---- logging setup ----
LOGGER_NAME = "readtransor"
log = logging.getLogger(LOGGER_NAME)

LOG_LEVEL_ENV = "READTRANSOR_LOG_LEVEL"

EXIT_OK = 0
EXIT_DATA_ERROR = 1
EXIT_USAGE = 2

SUBCOMMANDS = {
    "parse": (parse, "Parse annotated transcripts to JSON"),
    "make-targets": (make_targets, "Readable reference sentences from annotated transcripts"),
    "build": (build, "Pair ASR output with readable targets"),
    "baseline": (baseline, "Rule-based disfluency removal and light ITN"),
    "score": (score, "Corpus RA-WER and BLEU"),
    "abtest": (abtest, "Binomial test on A/B preference votes"),
    "ab-sheet": (ab_sheet, "Blind A/B rating sheet and key"),
    "split": (split, "Conversation-disjoint train/valid/test split"),
    "augment": (augment, "Seed pairs through a speech channel"),
}


def _setup_logging(verbosity: int = 0) -> None:
    """Log to stderr; stdout carries data."""
    if verbosity > 0:
        level = logging.DEBUG
    elif verbosity < 0:
        level = logging.WARNING
    else:
        level = getattr(logging, os.getenv(LOG_LEVEL_ENV, "INFO").upper(), logging.INFO)

    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(
        "%(asctime)s [%(levelname)s] %(name)s:%(lineno)d - %(message)s",
        datefmt="%H:%M:%S"
    ))
    logging.basicConfig(
        level=level,
        handlers=[handler]
    )


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-v", "--verbose", action="count", default=0, help="More logging (DEBUG)")
    common.add_argument("-q", "--quiet", action="count", default=0, help="Less logging, no progress counter")
    common.add_argument("--strict", action="store_true", help="Abort on the first malformed line")
    common.add_argument("--jobs", type=int, default=default_jobs(),
                        help="Worker threads (default: available CPUs); output is identical for any value")

    parser = argparse.ArgumentParser(
        prog="readtransor",
        description="Readable ASR transcripts: annotated-corpus targets, rule baseline, metrics and data augmentation.",
    )
    parser.add_argument("--version", action="version",
                        version=f"readtransor {__version__} (record format {RECORD_FORMAT_VERSION})")
    sub = parser.add_subparsers(dest="command", metavar="<subcommand>", required=True)
    for name, (module, help_text) in SUBCOMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=help_text, description=help_text)
        module.add_arguments(p)
    return parser


def dispatch(argv: Optional[Sequence[str]] = None) -> int:
    """Run one subcommand; returns 0 on success, 1 on data errors, 2 on usage errors."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    _setup_logging(args.verbose - args.quiet)
    module, _ = SUBCOMMANDS[args.command]
    try:
        cfg = PipelineConfig.from_args(args)
        cfg.validate()
        cfg.log_effective()
        return module.run(args, cfg)
    except UnicodeDecodeError as e:
        log.error("input is not UTF-8: %s", e)
        return EXIT_DATA_ERROR
    except ValueError as e:
        log.error("%s", e)
        sys.stderr.write(f"{parser.prog} {args.command}: error: {e}\n")
        return EXIT_USAGE
    except (DataError, OSError) as e:
        log.error("%s", e)
        return EXIT_DATA_ERROR


def main() -> int:
    return dispatch(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
