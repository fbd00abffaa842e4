"""Verification suites and their reports."""
