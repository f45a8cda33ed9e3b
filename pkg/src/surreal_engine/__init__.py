"""Exact surreal, ordinal and game arithmetic."""
