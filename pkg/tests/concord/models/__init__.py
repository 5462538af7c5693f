"""Test module for concord models."""
