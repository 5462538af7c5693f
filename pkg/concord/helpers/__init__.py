"""Helpers for file input, result output and random streams."""
