"""Pydantic models for concord's domain types."""
