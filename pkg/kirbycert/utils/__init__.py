"""Utility functions for kirbycert."""
