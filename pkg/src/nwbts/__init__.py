"""Construction and verification engine for nearly well-balanced triple systems."""

__version__ = "0.1.0"
