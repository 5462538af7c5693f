"""Test module for concord helpers."""
