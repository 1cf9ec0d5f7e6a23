# -*- coding: utf-8 -*-
"""Rule-based readability baseline."""
from app.core.baseline.lexicon import FillerLexicon, LexiconError, default_lexicon, load_lexicon, resolve_lexicon
from app.core.baseline.rules import BaselineConfig, apply_itn_lite, remove_disfluencies, run_baseline
from app.core.baseline.stages import StageResult, evaluate_stages, stage_table_rows

__all__ = [
    "FillerLexicon", "LexiconError", "default_lexicon", "load_lexicon", "resolve_lexicon",
    "BaselineConfig", "apply_itn_lite", "remove_disfluencies", "run_baseline",
    "StageResult", "evaluate_stages", "stage_table_rows",
]
