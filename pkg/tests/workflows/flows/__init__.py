"""Test module for the Prefect flows."""
