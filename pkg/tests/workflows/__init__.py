"""Test module for the Prefect workflows."""
