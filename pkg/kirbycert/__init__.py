"""
kirbycert - exact surgery calculus and certificates for links with S^3 surgeries.
"""

__version__ = "0.1.0"
