"""Acceptance-corpus harness for permutope."""
