"""Validates the input fixtures against the published schemas."""

import json
import pathlib
import sys

import jsonschema
from referencing import Registry, Resource

root = pathlib.Path(sys.argv[1])
schemas = {p.name: json.loads(p.read_text()) for p in (root / "schemas").glob("*.schema.json")}
registry = Registry().with_resources(
    [(s["$id"], Resource.from_contents(s)) for s in schemas.values()]
)


def check(schema_name, path):
    schema = schemas[schema_name + ".schema.json"]
    validator = jsonschema.Draft202012Validator(schema, registry=registry)
    errors = list(validator.iter_errors(json.loads(path.read_text())))
    for e in errors:
        print(f"{path.name}: {e.message}")
    return not errors


fixtures = root / "tests" / "fixtures"
ok = all(check("triple", p) for p in sorted((fixtures / "triples").glob("*.json")))
ok &= check("flow", fixtures / "torus_flow.json")
ok &= check("chain", fixtures / "rp2_three_c.json")
print("schemas ok" if ok else "schema violations")
sys.exit(0 if ok else 1)
