"""Concord: pair-counting comparison of two clusterings of the same items."""
