# -*- coding: utf-8 -*-
"""MDE annotation parsing and readable target generation."""
from app.core.mde.annotation import (
    AnnotatedTranscript,
    AnnotationError,
    MetadataSpan,
    SpanKind,
    StrayClose,
    SuBoundary,
    UnbalancedMarkup,
    locate_token,
    parse_annotation,
    render_verbatim,
)
from app.core.mde.markers import (
    INCOMPLETE,
    QUESTION,
    STATEMENT,
    MarkerConfigError,
    ParseOptions,
    SuKind,
    SuType,
    load_markers,
)
from app.core.mde.readable import ReadableTranscript, RenderOptions, make_readable

__all__ = [
    "AnnotatedTranscript", "AnnotationError", "MetadataSpan", "SpanKind", "StrayClose",
    "SuBoundary", "UnbalancedMarkup", "locate_token", "parse_annotation", "render_verbatim",
    "INCOMPLETE", "QUESTION", "STATEMENT", "MarkerConfigError", "ParseOptions", "SuKind",
    "SuType", "load_markers", "ReadableTranscript", "RenderOptions", "make_readable",
]
