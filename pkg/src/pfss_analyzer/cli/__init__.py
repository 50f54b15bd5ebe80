#!/usr/bin/env python3
"""
CLI Module
Command-line front end for system analysis and shift-register tooling.
"""

from .main import build_parser, main

__all__ = ['build_parser', 'main']
