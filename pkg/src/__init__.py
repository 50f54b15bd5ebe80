"""
PFSS Analyzer - Source code package.
"""
