"""HTTP interface for the symprod toolkit."""

__version__ = "0.1.0"
