# -*- coding: utf-8 -*-
"""Effective run configuration, built from parsed arguments and validated up front."""
from __future__ import annotations
from argparse import Namespace
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, Optional, Sequence
import json
import sys

from app.core.corpus.records import STDIO

import logging

# Effective settings are reported at every verbosity.
config_log = logging.getLogger("readtransor.config")
config_log.setLevel(logging.INFO)

# Argument names that, when present on a subcommand, are inputs/outputs.
INPUT_ARGS = (
    "input", "markers", "lexicon", "annotated", "sources", "refs", "hyps",
    "hyps_a", "hyps_b", "records", "votes", "key", "seeds",
)
OUTPUT_ARGS = ("out", "lines_out", "stages_out", "breakdown", "report", "pdf", "key_out", "out_dir")
SETTING_ARGS = (
    "seed", "valid", "test", "max_repeat_ngram", "smooth", "hyp_field", "capitalize_i", "pretty",
    "mode", "sub_rate", "del_rate", "ins_rate", "adapter", "timeout", "concurrency", "n", "parallel",
)


@dataclass(frozen=True)
class PipelineConfig:
    subcommand: str
    inputs: Dict[str, str] = field(default_factory=dict)
    outputs: Dict[str, str] = field(default_factory=dict)
    settings: Dict[str, Any] = field(default_factory=dict)
    verbosity: int = 0
    jobs: int = 1
    strict: bool = False

    @classmethod
    def from_args(cls, args: Namespace) -> "PipelineConfig":
        def present(names: Sequence[str]) -> Dict[str, Any]:
            return {n: getattr(args, n) for n in names if getattr(args, n, None) is not None}

        return cls(
            subcommand=args.command,
            inputs={k: str(v) for k, v in present(INPUT_ARGS).items()},
            outputs={k: str(v) for k, v in present(OUTPUT_ARGS).items()},
            settings=present(SETTING_ARGS),
            verbosity=args.verbose - args.quiet,
            jobs=args.jobs,
            strict=args.strict,
        )

    def validate(self) -> None:
        """Raise before any processing if an input is missing or a value is out of range."""
        if self.jobs < 1:
            raise ValueError("--jobs must be >= 1")
        if sum(1 for v in self.inputs.values() if v == STDIO) > 1:
            raise ValueError("standard input can feed only one argument")
        for name, value in self.inputs.items():
            if value != STDIO and not Path(value).is_file():
                raise FileNotFoundError(f"--{name.replace('_', '-')}: no such file: {value}")

    @property
    def progress(self) -> bool:
        return self.verbosity >= 0 and sys.stderr.isatty()

    def log_dict(self) -> Dict[str, Any]:
        return {
            "subcommand": self.subcommand,
            "inputs": self.inputs,
            "outputs": self.outputs,
            "settings": self.settings,
            "jobs": self.jobs,
            "strict": self.strict,
        }

    def log_effective(self) -> None:
        config_log.info("Effective config: %s", json.dumps(self.log_dict(), sort_keys=True, default=str))


def setting(cfg: PipelineConfig, name: str, default: Optional[Any] = None) -> Any:
    return cfg.settings.get(name, default)
