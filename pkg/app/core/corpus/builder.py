# -*- coding: utf-8 -*-
"""Pair ASR hypotheses with readable targets."""
from __future__ import annotations
from typing import Dict, Iterable, List, Mapping, Optional, Tuple

from app.core.common.errors import DataError
from app.core.corpus.records import TranscriptRecord
from app.core.mde import ParseOptions, ReadableTranscript, RenderOptions, make_readable, parse_annotation


class MissingIds(DataError):
    def __init__(self, what: str, ids: Iterable[str]) -> None:
        self.ids = sorted(ids)
        shown = ", ".join(self.ids[:10]) + (" ..." if len(self.ids) > 10 else "")
        super().__init__(f"{len(self.ids)} id(s) without {what}: {shown}")


class MissingSource(MissingIds):
    def __init__(self, ids: Iterable[str]) -> None:
        super().__init__("an ASR source", ids)


class MissingTarget(MissingIds):
    def __init__(self, ids: Iterable[str]) -> None:
        super().__init__("a readable target", ids)


class MissingConversation(MissingIds):
    def __init__(self, ids: Iterable[str]) -> None:
        super().__init__("a conversation id", ids)


def build_records(
    sources: Mapping[str, str],
    targets: Mapping[str, ReadableTranscript],
    conv: Mapping[str, str],
) -> List[TranscriptRecord]:
    """One record per id, in the order of ``sources``.

    Raises:
        MissingTarget / MissingSource: key sets differ; the error lists the ids.
        MissingConversation: an id has no (or an empty) conversation id.
    """
    missing_target = set(sources) - set(targets)
    if missing_target:
        raise MissingTarget(missing_target)
    missing_source = set(targets) - set(sources)
    if missing_source:
        raise MissingSource(missing_source)
    no_conv = [i for i in sources if not conv.get(i)]
    if no_conv:
        raise MissingConversation(no_conv)

    return [
        TranscriptRecord(
            id=rid,
            conversation_id=conv[rid],
            source=src,
            target=targets[rid].text,
            target_lines=targets[rid].sentences,
        )
        for rid, src in sources.items()
    ]


def targets_from_segments(
    segments: Iterable[Tuple[str, str, str]],
    parse_options: Optional[ParseOptions] = None,
    render_options: Optional[RenderOptions] = None,
) -> Tuple[Dict[str, ReadableTranscript], Dict[str, str]]:
    """Turn ``(id, conversation_id, annotated text)`` segments into targets and a conversation map."""
    targets: Dict[str, ReadableTranscript] = {}
    conv: Dict[str, str] = {}
    for rid, conv_id, annotated in segments:
        targets[rid] = make_readable(parse_annotation(annotated, parse_options), render_options)
        conv[rid] = conv_id
    return targets, conv
