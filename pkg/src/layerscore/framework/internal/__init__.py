"""
Internal implementations for the framework package.

Modules:
    - validation.py: schema validation and assessment binding
    - misa.py: the built-in MISA schema and control table
    - engine.py: recursive-mean evaluation, gap report, sensitivities
    - ingest.py: schema and scores document parsing and export
    - formatters.py: table, JSON and CSV rendering

Use the names re-exported by ``layerscore.framework`` rather than importing
these modules directly.
"""

__all__ = []
