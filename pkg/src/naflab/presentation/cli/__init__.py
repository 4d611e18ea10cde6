"""CLI presentation layer."""
