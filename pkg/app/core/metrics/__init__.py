# -*- coding: utf-8 -*-
"""Readability metrics and the human-preference test."""
from app.core.metrics.abtest import (
    AbCase,
    AbTestResult,
    NoCases,
    VoteFormatError,
    binomial_ab_test,
    binomial_p_value,
    decode_votes,
    prepare_ab_sheet,
    read_key,
    read_votes,
    select_eval_cases,
)
from app.core.metrics.bleu import BleuConfig, BleuResult, BleuStats, LengthMismatch, bleu
from app.core.metrics.report import (
    EvalReport,
    IdMismatch,
    SentenceErrors,
    format_breakdown,
    format_report,
    format_table,
    score_corpus,
    score_pairs,
)
from app.core.metrics.wer import EmptyReference, ErrorCounts, align, corpus_ra_wer, ra_wer, tokenize

__all__ = [
    "AbCase", "AbTestResult", "NoCases", "VoteFormatError", "binomial_ab_test", "binomial_p_value",
    "decode_votes", "prepare_ab_sheet", "read_key", "read_votes", "select_eval_cases",
    "BleuConfig", "BleuResult", "BleuStats", "LengthMismatch", "bleu",
    "EvalReport", "IdMismatch", "SentenceErrors", "format_breakdown", "format_report", "format_table",
    "score_corpus", "score_pairs",
    "EmptyReference", "ErrorCounts", "align", "corpus_ra_wer", "ra_wer", "tokenize",
]
