"""
Validation of JSON documents against the schemas shipped in ``data/schemas``.

Schemas refer to each other by relative ``$id`` (``kirbycert/<name>.schema.json``),
so they are loaded into one registry and resolved from there.
"""

import json
from functools import lru_cache
from pathlib import Path
from typing import Any

from jsonschema import Draft202012Validator
from jsonschema.exceptions import best_match
from referencing import Registry, Resource

from ..errors import SchemaError

SCHEMA_DIR = Path(__file__).parent / "schemas"
SCHEMA_NAMES = ("presentation", "script", "report", "certificate")


def schema_uri(name: str) -> str:
    return f"kirbycert/{name}.schema.json"


@lru_cache(maxsize=None)
def schema_registry() -> Registry:
    resources = []
    for name in SCHEMA_NAMES:
        contents = json.loads((SCHEMA_DIR / f"{name}.schema.json").read_text(encoding="utf-8"))
        resources.append((contents["$id"], Resource.from_contents(contents)))
    return Registry().with_resources(resources)


@lru_cache(maxsize=None)
def validator_for(ref: str) -> Draft202012Validator:
    """Validator for ``name`` or for a fragment of it, as in ``script#/$defs/move``."""
    name, _, pointer = ref.partition("#")
    if name not in SCHEMA_NAMES:
        raise KeyError(f"no schema named {name!r}")
    target = schema_uri(name) + (f"#{pointer}" if pointer else "")
    return Draft202012Validator({"$ref": target}, registry=schema_registry())


def validate_document(doc: Any, ref: str) -> None:
    """Raise :class:`SchemaError` with the most relevant violation, if any."""
    error = best_match(validator_for(ref).iter_errors(doc))
    if error is not None:
        raise SchemaError(f"{ref.partition('#')[0]} at {error.json_path}: {error.message}")
