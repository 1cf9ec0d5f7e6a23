# -*- coding: utf-8 -*-
"""External TTS+ASR channel behind a one-line-in / one-line-out contract.

A target is either a command line (the text goes to stdin, the transcript is
the first non-empty stdout line) or an http(s) URL that accepts
``POST {"text": ...}`` and answers with ``{"text": ...}`` or a plain line.
"""
from __future__ import annotations
from dataclasses import dataclass
from typing import List, Union
import shlex
import shutil
import subprocess

import requests

from app.core.common.errors import DataError

import logging
log = logging.getLogger(__name__)


class AdapterUnavailable(DataError):
    """The adapter cannot be reached at startup."""


class AdapterCallFailed(DataError):
    """One transcription call failed; the caller skips the record."""


@dataclass(frozen=True)
class AdapterConfig:
    target: str
    timeout_s: float = 30.0
    concurrency: int = 4

    def __post_init__(self) -> None:
        if not self.target.strip():
            raise ValueError("adapter target is empty")
        if self.timeout_s <= 0:
            raise ValueError("timeout_s must be > 0")
        if self.concurrency < 1:
            raise ValueError("concurrency must be >= 1")

    @property
    def is_http(self) -> bool:
        return self.target.startswith(("http://", "https://"))


def _first_line(text: str) -> str:
    for line in text.splitlines():
        if line.strip():
            return line.strip()
    return ""


class SubprocessAdapter:
    """Runs the command once per call."""

    def __init__(self, config: AdapterConfig) -> None:
        self.config = config
        self.argv: List[str] = shlex.split(config.target)

    def check(self) -> None:
        if not self.argv or shutil.which(self.argv[0]) is None:
            raise AdapterUnavailable(f"adapter command not found: {self.config.target!r}")
        log.info("Using adapter command: %s", shutil.which(self.argv[0]))

    def transcribe(self, text: str) -> str:
        try:
            proc = subprocess.run(
                self.argv,
                input=text + "\n",
                capture_output=True,
                text=True,
                encoding="utf-8",
                timeout=self.config.timeout_s,
            )
        except subprocess.TimeoutExpired as e:
            raise AdapterCallFailed(f"adapter timed out after {self.config.timeout_s}s") from e
        except OSError as e:
            raise AdapterCallFailed(f"adapter could not start: {e}") from e
        if proc.returncode != 0:
            raise AdapterCallFailed(f"adapter exited with {proc.returncode}: {proc.stderr.strip()[:200]}")
        line = _first_line(proc.stdout)
        if not line:
            raise AdapterCallFailed("adapter produced no output")
        return line


class HttpAdapter:
    """POSTs each line to a transcription endpoint."""

    def __init__(self, config: AdapterConfig) -> None:
        self.config = config
        self.session = requests.Session()

    def check(self) -> None:
        try:
            self.session.get(self.config.target, timeout=min(self.config.timeout_s, 5.0))
        except requests.exceptions.ConnectionError as e:
            raise AdapterUnavailable(f"cannot connect to adapter at {self.config.target}") from e
        except requests.exceptions.Timeout as e:
            raise AdapterUnavailable(f"connection to adapter at {self.config.target} timed out") from e
        log.info("Adapter endpoint reachable: %s", self.config.target)

    def transcribe(self, text: str) -> str:
        try:
            response = self.session.post(self.config.target, json={"text": text}, timeout=self.config.timeout_s)
            response.raise_for_status()
        except requests.exceptions.RequestException as e:
            raise AdapterCallFailed(f"adapter request failed: {e}") from e
        line = ""
        try:
            data = response.json()
            if isinstance(data, dict) and isinstance(data.get("text"), str):
                line = _first_line(data["text"])
        except ValueError:
            line = _first_line(response.text)
        if not line:
            raise AdapterCallFailed("adapter returned no transcript")
        return line


ChannelAdapter = Union[SubprocessAdapter, HttpAdapter]


def make_adapter(config: AdapterConfig) -> ChannelAdapter:
    return HttpAdapter(config) if config.is_http else SubprocessAdapter(config)
