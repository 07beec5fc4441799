"""Presentation data model and JSON interchange for kirbycert."""
