"""Posets, their P-partition rings, and complete-intersection detection."""
