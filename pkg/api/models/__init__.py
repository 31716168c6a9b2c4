"""Pydantic models for responses; the CLI serializes the same models."""
