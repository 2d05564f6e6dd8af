"""Intermediate-statistics workbench."""
