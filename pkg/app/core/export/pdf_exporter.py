# -*- coding: utf-8 -*-
"""PDF export of evaluation tables using ReportLab."""
from __future__ import annotations
from pathlib import Path
from typing import Optional, Sequence, Tuple

from reportlab.lib import colors
from reportlab.lib.pagesizes import A4
from reportlab.lib.styles import getSampleStyleSheet, ParagraphStyle
from reportlab.lib.units import mm
from reportlab.pdfbase import pdfmetrics
from reportlab.pdfbase.ttfonts import TTFont
from reportlab.platypus import SimpleDocTemplate, Paragraph, Spacer, Table, TableStyle

from app.core.metrics.report import EvalReport, format_report, table_rows


def _escape(text: str) -> str:
    return text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;").replace("\n", "<br/>")


def export_report_pdf(
    output_pdf: Path,
    title: str,
    reports: Sequence[Tuple[str, EvalReport]],
    font_path: Optional[Path] = None,
) -> None:
    """Write the RA-WER/BLEU table, followed by each report's details.

    Args:
        output_pdf: Target PDF file path.
        title: Document title.
        reports: ``(system name, report)`` pairs, one table row each.
        font_path: Optional TTF/OTF file for glyphs outside the default fonts.
    """
    styles = getSampleStyleSheet()
    title_style = styles["Title"]
    body_style = styles["BodyText"]
    font_name = "Helvetica"

    if font_path:
        font_name = "ReadTransorFont"
        pdfmetrics.registerFont(TTFont(font_name, str(font_path)))
        title_style = ParagraphStyle("TitleCustom", parent=styles["Title"], fontName=font_name)
        body_style = ParagraphStyle("BodyCustom", parent=styles["BodyText"], fontName=font_name, leading=14)

    story = [Paragraph(_escape(title), title_style), Spacer(1, 8 * mm)]

    table = Table(table_rows(reports), hAlign="LEFT")
    table.setStyle(TableStyle([
        ("FONTNAME", (0, 0), (-1, -1), font_name),
        ("LINEBELOW", (0, 0), (-1, 0), 0.75, colors.black),
        ("ALIGN", (1, 0), (-1, -1), "RIGHT"),
        ("BOTTOMPADDING", (0, 0), (-1, 0), 4),
    ]))
    story.append(table)

    for name, report in reports:
        story.append(Spacer(1, 6 * mm))
        story.append(Paragraph(_escape(name), styles["Heading3"]))
        story.append(Paragraph(_escape(format_report(report).rstrip("\n")), body_style))

    doc = SimpleDocTemplate(str(output_pdf), pagesize=A4,
                            leftMargin=20 * mm, rightMargin=20 * mm,
                            topMargin=20 * mm, bottomMargin=20 * mm)
    doc.build(story)
