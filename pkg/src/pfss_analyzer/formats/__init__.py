#!/usr/bin/env python3
"""
Input and Output Formats

JSON codecs for fields, systems and reports, and text rendering.
"""

from .codec import (
    field_from_json,
    field_to_json,
    system_from_json,
    system_to_json,
    pfsr_from_json,
    pfsr_to_json,
    report_to_json,
    load_system,
    load_pfsr,
    load_matrix,
    dumps,
)
from .report import render_report

__all__ = [
    'field_from_json',
    'field_to_json',
    'system_from_json',
    'system_to_json',
    'pfsr_from_json',
    'pfsr_to_json',
    'report_to_json',
    'load_system',
    'load_pfsr',
    'load_matrix',
    'dumps',
    'render_report',
]
