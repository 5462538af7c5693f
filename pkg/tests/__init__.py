"""Tests package for concord."""
