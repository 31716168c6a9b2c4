"""Shared utilities for the symprod toolkit."""
