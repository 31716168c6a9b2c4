"""Maintenance scripts for the symprod toolkit."""
