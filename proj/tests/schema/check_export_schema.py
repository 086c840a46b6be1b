#!/usr/bin/env python3
# Copyright 2026 The Slow Space Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Validates CLI exports against the published scene description schema.

Usage: check_export_schema.py CLI SCHEMA [EXTRA_SCENE ...]
"""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema


def main(argv):
    if len(argv) < 3:
        print(__doc__, file=sys.stderr)
        return 2
    cli, schema_path, extra = argv[1], Path(argv[2]), argv[3:]
    schema = json.loads(schema_path.read_text())
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)

    scenes = {}
    with tempfile.TemporaryDirectory() as tmp:
        for name, args in {
            "empty 16x16": [],
            "empty 1x1": ["--width", "1", "--height", "1", "--cell-size", "0.5"],
        }.items():
            space = Path(tmp) / "space.json"
            subprocess.run([cli, "new", "--name", "empty", "-o", str(space), *args],
                           check=True, stdout=subprocess.DEVNULL)
            out = subprocess.run([cli, "export", str(space)], check=True,
                                 capture_output=True, text=True).stdout
            scenes[name] = json.loads(out)
    for path in extra:
        scenes[path] = json.loads(Path(path).read_text())

    failed = 0
    for name, scene in scenes.items():
        errors = sorted(validator.iter_errors(scene), key=lambda e: list(e.path))
        for e in errors:
            print(f"{name}: {'/'.join(map(str, e.path))}: {e.message}")
        if not errors:
            n = scene["grid"]["width"] * scene["grid"]["height"]
            if len(scene["tiles"]) != n:
                errors.append("tile count")
                print(f"{name}: {len(scene['tiles'])} tiles for {n} cells")
        failed += bool(errors)
        print(f"{'ok' if not errors else 'INVALID'}: {name}")

    # The reserved field must stay accepted.
    with_ambience = dict(scenes["empty 16x16"], ambience={"track": "birdsong"})
    if not validator.is_valid(with_ambience):
        print("reserved ambience field rejected")
        failed += 1
    broken = json.loads(json.dumps(scenes["empty 16x16"]))
    broken["tiles"][0]["terrain"] = "lava"
    if validator.is_valid(broken):
        print("schema accepted an unknown terrain code")
        failed += 1
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main(sys.argv))
