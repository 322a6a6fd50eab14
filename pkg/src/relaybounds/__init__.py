"""Capacity upper bounds for symmetric primitive relay channels."""
