"""Helpers for holeburn."""
