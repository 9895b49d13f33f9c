#!/usr/bin/env python

"""JSON instance documents

A document holds a clockwise rotation system, the outer face, the list
assignment and the path P, e.g.

    {"rotation": {"0": [1, 3, 2], ...}, "outer": [0, 1, 2],
     "lists": {"0": [0, 1, 2], ...}, "path": [0, 1, 2]}

Documents are validated against ``schema/instance.schema.json`` before any
graph is built, and every serialization is written with sorted keys so equal
instances give equal text.

"""

from functools import lru_cache
import json
import logging
import sys

import jsonschema

from .coloring import Rainbow
from .planar import PathSpec, PlanarEmbedding, rest_path
from .util import lists_to_json, repopath

log = logging.getLogger(__name__)

SCHEMA_PATH = repopath / "crownlab" / "schema" / "instance.schema.json"


class ParseError(ValueError):
    """Input that is not a well-formed instance document"""


@lru_cache(maxsize=None)
def instance_schema():
    with open(SCHEMA_PATH) as f:
        return json.load(f)


def _int_keys(mapping, what):
    try:
        return {int(k): v for k, v in mapping.items()}
    except ValueError as e:
        raise ParseError(f"Non-integer vertex id in {what}: {e}") from e


def parse_document(doc):
    """Rainbow from a decoded instance document"""

    try:
        jsonschema.validate(instance=doc, schema=instance_schema())
    except jsonschema.ValidationError as e:
        path = "/".join(str(p) for p in e.absolute_path) or "<root>"
        raise ParseError(f"Schema violation at {path}: {e.message}") from e

    rotation = _int_keys(doc["rotation"], "rotation")
    lists = _int_keys(doc["lists"], "lists")
    unknown = sorted(set(lists) - set(rotation))
    if unknown:
        raise ParseError(f"Lists given for vertices {unknown} missing from the rotation")

    G = PlanarEmbedding(rotation, doc["outer"])
    path = PathSpec(tuple(doc["path"]))
    if G.outer_cycle is not None:
        try:
            rest_path(G.outer_cycle, path)
        except ValueError as e:
            raise ParseError(str(e)) from e
    return Rainbow(G, path, lists)


def loads(text):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"Invalid JSON: {e}") from e
    return parse_document(doc)


def load_document(source):
    """Rainbow read from a file path, or from stdin when ``source`` is "-" """
    if source == "-":
        return loads(sys.stdin.read())
    try:
        with open(source) as f:
            text = f.read()
    except OSError as e:
        raise ParseError(f"Cannot read {source}: {e}") from e
    return loads(text)


def rainbow_to_document(R):
    G = R.graph
    return {
        "rotation": {str(v): list(nbrs) for v, nbrs in sorted(G.rotation.items())},
        "outer": list(G.outer_face),
        "lists": lists_to_json(R.lists),
        "path": list(R.path),
    }


def dumps(obj):
    """Canonical JSON text"""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def parse_coloring(text):
    """Partial coloring from a JSON object of vertex id to color"""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"Invalid coloring JSON: {e}") from e
    if not isinstance(raw, dict) or not all(isinstance(c, int) for c in raw.values()):
        raise ParseError(f"A coloring is an object of vertex id to integer color, got {text}")
    return _int_keys(raw, "coloring")
