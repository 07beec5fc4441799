"""Homology, 2-bridge arithmetic, moves, script replay and the link family."""
