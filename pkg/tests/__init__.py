"""Test package for kirbycert."""
