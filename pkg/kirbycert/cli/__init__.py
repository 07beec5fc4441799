"""Command-line interface for kirbycert."""
