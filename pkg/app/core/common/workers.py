# -*- coding: utf-8 -*-
"""Run a plain function over a stream of items in a bounded thread pool.

Results come back in submission order (sequence-numbered reassembly), so any
stage produces the same output for every ``jobs`` value.
"""
from __future__ import annotations
from collections import deque
from concurrent.futures import Future, ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Deque, Iterable, Iterator, Optional, Tuple

import psutil

import logging
log = logging.getLogger(__name__)


def default_jobs() -> int:
    """Available parallelism, as reported by psutil."""
    try:
        return max(1, int(psutil.cpu_count(logical=True) or 1))
    except Exception:
        return 1


@dataclass
class TaskSpec:
    """Function plus extra arguments applied to every item."""
    fn: Callable[..., Any]
    args: tuple = ()
    kwargs: dict = field(default_factory=dict)

    def __call__(self, item: Any) -> Any:
        return self.fn(item, *self.args, **self.kwargs)


@dataclass
class TaskOutcome:
    """Result of one item; exactly one of ``value`` / ``error`` is meaningful."""
    seq: int
    item: Any
    value: Any = None
    error: Optional[BaseException] = None

    @property
    def ok(self) -> bool:
        return self.error is None


def _run_one(task: TaskSpec, seq: int, item: Any) -> TaskOutcome:
    try:
        return TaskOutcome(seq, item, value=task(item))
    except Exception as e:
        return TaskOutcome(seq, item, error=e)


def run_ordered(
    task: TaskSpec | Callable[[Any], Any],
    items: Iterable[Any],
    jobs: int = 1,
    window: Optional[int] = None,
) -> Iterator[TaskOutcome]:
    """Apply ``task`` to each item and yield outcomes in input order.

    At most ``window`` items (default ``jobs * 64``) are in flight, which keeps
    memory bounded for arbitrarily long inputs.
    """
    spec = task if isinstance(task, TaskSpec) else TaskSpec(task)
    if jobs <= 1:
        for seq, item in enumerate(items):
            yield _run_one(spec, seq, item)
        return

    limit = window or jobs * 64
    pending: Deque[Tuple[int, Future]] = deque()
    with ThreadPoolExecutor(max_workers=jobs, thread_name_prefix="readtransor") as pool:
        for seq, item in enumerate(items):
            pending.append((seq, pool.submit(_run_one, spec, seq, item)))
            if len(pending) >= limit:
                yield pending.popleft()[1].result()
        while pending:
            yield pending.popleft()[1].result()
