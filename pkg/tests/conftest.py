"""Test package anchor; shared generators live in helpers.py."""
