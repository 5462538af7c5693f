"""Test module for the concord package."""
