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
"""Independent reference implementation used to produce the golden files.

Shares no code with the C++ library. It re-derives, from the file formats and
algorithm definitions alone: canonical space bytes, FNV-1a 64, splitmix64 and
the per-item key mix, the ecosystem scatter for the default catalog, the edit
semantics, residue accumulation and the scene export.

Usage: reference.py OUT_DIR      writes the goldens
       reference.py --check DIR  exits 1 if DIR differs from a fresh run
"""

import json
import math
import os
import sys

MASK = (1 << 64) - 1

# ---------------------------------------------------------------------------
# Canonical JSON


class F4(float):
    """Real written with exactly four decimals."""


class Wear(float):
    """Residue value: round half away from zero of wear * 10000."""


class Real(float):
    """Real written in shortest round-trip form."""


def enc(v):
    if isinstance(v, F4):
        s = "%.4f" % float(v)
        return "0.0000" if s == "-0.0000" else s
    if isinstance(v, Wear):
        q = math.floor(float(v) * 10000.0 + 0.5)
        return "%d.%04d" % (q // 10000, q % 10000)
    if isinstance(v, Real):
        s = repr(float(v))
        if not any(c in s for c in ".eE"):
            s += ".0"
        return s
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, int):
        return str(v)
    if isinstance(v, str):
        return json.dumps(v, ensure_ascii=False)
    if isinstance(v, (list, tuple)):
        return "[" + ",".join(enc(x) for x in v) + "]"
    if isinstance(v, dict):
        keys = sorted(v, key=lambda k: k.encode("utf-8"))
        return "{" + ",".join(enc(k) + ":" + enc(v[k]) for k in keys) + "}"
    raise TypeError(type(v))


def fnv1a64(data: bytes) -> int:
    h = 14695981039346656037
    for b in data:
        h ^= b
        h = (h * 1099511628211) & MASK
    return h


# ---------------------------------------------------------------------------
# splitmix64


def rotl(x, k):
    return ((x << k) | (x >> (64 - k))) & MASK


class SplitMix:
    def __init__(self, state):
        self.state = state & MASK

    def next(self):
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK
        return z ^ (z >> 31)

    def unit(self):
        return (self.next() >> 11) * 2.0**-53

    def below(self, n):
        return (self.next() * n) >> 64

    def uniform_int(self, lo, hi):
        return lo + self.below(hi - lo + 1)


def sm_of(x):
    return SplitMix(x).next()


def mix(a, b, c):
    return sm_of(sm_of(a ^ rotl(b, 17)) ^ rotl(c, 31))


# ---------------------------------------------------------------------------
# Space model

KINDS = ["tree", "boulder", "bench", "flower_patch", "statue", "well"]


class Space:
    def __init__(self, space_id, name, seed, w, h, cs):
        self.space_id, self.name, self.seed = space_id, name, seed
        self.w, self.h, self.cs = w, h, cs
        self.terrain = ["g"] * (w * h)
        self.walls = set()
        self.items = {}  # id -> [kind, x, y]
        self.tod = "morning"
        self.residue = [0.0] * (w * h)
        self.next_id = 1
        self.op_seq = 0

    def in_bounds(self, x, y):
        return 0 <= x < self.w and 0 <= y < self.h

    def count_at(self, x, y, skip=None):
        return sum(1 for i, (_, ix, iy) in self.items.items()
                   if (ix, iy) == (x, y) and i != skip)

    def file_obj(self):
        order = {"H": 0, "V": 1}
        walls = sorted(self.walls, key=lambda e: (order[e[0]], e[1], e[2]))
        return {
            "format": "slowspace",
            "version": 1,
            "space_id": self.space_id,
            "name": self.name,
            "seed": self.seed,
            "grid": {"width": self.w, "height": self.h, "cell_size": Real(self.cs)},
            "time_of_day": self.tod,
            "terrain": list(self.terrain),
            "walls": [[o, x, y] for (o, x, y) in walls],
            "items": [{"id": i, "kind": k, "cell": [x, y]}
                      for i, (k, x, y) in sorted(self.items.items())],
            "residue": [Wear(r) for r in self.residue],
            "next_item_id": self.next_id,
            "op_seq": self.op_seq,
        }

    def canonical(self) -> bytes:
        return enc(self.file_obj()).encode("utf-8")


def apply(space, op):
    """Returns None on success or the rejection name; mutates only on success."""
    kind = op["op"]
    if kind == "set_terrain":
        x, y = op["cell"]
        if not space.in_bounds(x, y):
            return "OutOfBounds"
        space.terrain[y * space.w + x] = op["terrain"]
    elif kind == "set_wall":
        o, x, y = op["edge"]
        if o == "H":
            ok = 0 <= x < space.w and 0 <= y <= space.h
        else:
            ok = 0 <= x <= space.w and 0 <= y < space.h
        if not ok:
            return "OutOfBounds"
        if op["present"]:
            space.walls.add((o, x, y))
        else:
            space.walls.discard((o, x, y))
    elif kind == "place":
        x, y = op["cell"]
        if not space.in_bounds(x, y):
            return "OutOfBounds"
        if space.count_at(x, y) >= 8:
            return "CellFull"
        space.items[space.next_id] = [op["kind"], x, y]
        space.next_id += 1
    elif kind == "move":
        i = op["item_id"]
        x, y = op["to_cell"]
        if i not in space.items:
            return "NoSuchItem"
        if not space.in_bounds(x, y):
            return "OutOfBounds"
        if space.count_at(x, y, skip=i) >= 8:
            return "CellFull"
        space.items[i][1:] = [x, y]
    elif kind == "remove":
        if op["item_id"] not in space.items:
            return "NoSuchItem"
        del space.items[op["item_id"]]
    elif kind == "set_time":
        space.tod = op["time_of_day"]
    else:
        raise ValueError(kind)
    return None


def presence(space, pos, dwell, rate=0.001, cap=1.0):
    x, _, z = pos
    if not (0 <= x < space.w * space.cs and 0 <= z < space.h * space.cs):
        return
    cx, cy = math.floor(x / space.cs), math.floor(z / space.cs)
    i = cy * space.w + cx
    space.residue[i] = min(cap, space.residue[i] + dwell * rate)


# ---------------------------------------------------------------------------
# Ecosystem expansion

CATALOG = {
    "tree": (4, [("grass_tuft", 5, 12, 2.0, True), ("mushroom", 0, 3, 1.5, True)]),
    "boulder": (10, [("pebble", 0, 4, 1.0, False)]),
    "bench": (2, []),
    "flower_patch": (3, [("flower", 8, 20, 1.5, True)]),
    "statue": (2, []),
    "well": (1, []),
}


def item_rng(seed, item_id, stream):
    return SplitMix(mix(seed, item_id, stream))


def expand_item(space, item_id):
    kind, cx, cy = space.items[item_id]
    variants, rules = CATALOG[kind]
    center = ((cx + 0.5) * space.cs, 0.0, (cy + 0.5) * space.cs)
    out = []
    prim = item_rng(space.seed, item_id, 0)
    k = prim.below(variants)
    yaw = prim.unit() * 360.0
    scale = 0.75 + prim.unit() * 0.5
    out.append(("%s/variant_%d" % (kind, k), center, yaw, scale, item_id))
    counts = item_rng(space.seed, item_id, 1)
    for idx, (family, lo, hi, radius, no_water) in enumerate(rules):
        n = counts.uniform_int(lo, hi)
        rng = item_rng(space.seed, item_id, 2 + idx)
        for _ in range(n):
            for _attempt in range(16):
                r = rng.unit() * radius
                theta = rng.unit() * 2.0 * math.pi
                px = center[0] + r * math.cos(theta)
                pz = center[2] + r * math.sin(theta)
                if not (0 <= px < space.w * space.cs and 0 <= pz < space.h * space.cs):
                    continue
                gx, gy = math.floor(px / space.cs), math.floor(pz / space.cs)
                if not space.in_bounds(gx, gy):
                    continue
                if no_water and space.terrain[gy * space.w + gx] == "w":
                    continue
                yaw = rng.unit() * 360.0
                scale = 0.75 + rng.unit() * 0.5
                out.append(("%s/%s" % (kind, family), (px, 0.0, pz), yaw, scale, item_id))
                break
    return out


def instance_obj(inst):
    mesh, (x, y, z), yaw, scale, src = inst
    return {"mesh": mesh, "position": [F4(x), F4(y), F4(z)],
            "yaw_deg": F4(yaw), "scale": F4(scale), "source_item": src}


LIGHTING = {"morning": (25.0, 110.0, 0.45), "dusk": (8.0, 260.0, 0.30),
            "night": (-10.0, 0.0, 0.10)}


def export(space):
    insts = []
    for i in sorted(space.items):
        insts.extend(expand_item(space, i))
    walls = []
    order = {"H": 0, "V": 1}
    for (o, x, y) in sorted(space.walls, key=lambda e: (order[e[0]], e[1], e[2])):
        if o == "H":
            c, yaw = ((x + 0.5) * space.cs, 1.25, y * space.cs), 0.0
        else:
            c, yaw = (x * space.cs, 1.25, (y + 0.5) * space.cs), 90.0
        walls.append({"center": [F4(v) for v in c], "height": F4(2.5),
                      "length": F4(space.cs), "thickness": F4(0.2),
                      "yaw_deg": F4(yaw)})
    elev, azim, amb = LIGHTING[space.tod]
    return enc({
        "format": "slowspace-scene",
        "version": 1,
        "extent": {"width": F4(space.w * space.cs), "depth": F4(space.h * space.cs)},
        "grid": {"width": space.w, "height": space.h},
        "tiles": [{"terrain": t, "wear": Wear(r)}
                  for t, r in zip(space.terrain, space.residue)],
        "walls": walls,
        "instances": [instance_obj(x) for x in insts],
        "lighting": {"preset": space.tod, "sun_elevation_deg": F4(elev),
                     "sun_azimuth_deg": F4(azim), "ambient": F4(amb)},
    })


# ---------------------------------------------------------------------------
# Scripted semantics sequence


def place(kind, x, y):
    return {"op": "place", "kind": kind, "cell": [x, y]}


def terrain(x, y, t):
    return {"op": "set_terrain", "cell": [x, y], "terrain": t}


def wall(o, x, y, present):
    return {"op": "set_wall", "edge": [o, x, y], "present": present}


def move(i, x, y):
    return {"op": "move", "item_id": i, "to_cell": [x, y]}


def remove(i):
    return {"op": "remove", "item_id": i}


def set_time(t):
    return {"op": "set_time", "time_of_day": t}


SCRIPT_OPS = [
    place("tree", 3, 2), place("boulder", 5, 5), place("bench", 6, 5),
    place("flower_patch", 8, 8), place("statue", 10, 3), place("well", 12, 12),
    terrain(3, 3, "r"), terrain(4, 4, "w"), terrain(8, 9, "w"), terrain(3, 3, "w"),
    wall("H", 0, 0, True), wall("H", 1, 0, True), wall("V", 0, 0, True),
    wall("V", 16, 15, True), wall("H", 1, 0, False), wall("H", 0, 16, True),
    wall("H", 0, 0, True),
    move(1, 2, 2), move(2, 5, 5), remove(3), place("tree", 6, 5),
    set_time("dusk"), set_time("night"),
    move(99, 1, 1), terrain(16, 0, "r"), remove(3), wall("V", 17, 0, True),
] + [place("flower_patch", 1, 1)] * 9 + [
    remove(10), place("boulder", 14, 1), wall("V", 5, 2, True),
    terrain(0, 0, "r"), terrain(7, 8, "w"), set_time("dusk"), move(4, 9, 8),
    move(8, 1, 1), move(16, 15, 15),
]

# (position, dwell seconds)
SCRIPT_PRESENCE = [
    ([7.0, 0.0, 5.0], 10.0),
    ([1.0, 0.0, 1.0], 2500.0),
    ([31.5, 0.0, 31.5], 3.7),
    ([7.5, 0.0, 5.5], 10.0),
    ([40.0, 0.0, 1.0], 100.0),
]


def run_script():
    s = Space("golden", "Golden garden", 42, 16, 16, 2.0)
    results = []
    for op in SCRIPT_OPS:
        err = apply(s, op)
        if err is None:
            s.op_seq += 1
        results.append(err or "ok")
    for pos, dwell in SCRIPT_PRESENCE:
        presence(s, pos, dwell)
    return s, results


# ---------------------------------------------------------------------------


def generate():
    files = {}
    fresh = Space("s1", "demo", 42, 16, 16, 2.0)
    files["fresh_16x16_seed42.json"] = fresh.canonical()

    tree = Space("s1", "demo", 42, 16, 16, 2.0)
    apply(tree, place("tree", 3, 2))
    files["tree_expansion.json"] = enc(
        [instance_obj(x) for x in expand_item(tree, 1)]).encode()

    space, results = run_script()
    files["semantics_script.json"] = enc({
        "ops": SCRIPT_OPS,
        "presence": [{"position": [Real(c) for c in p], "dwell_s": Real(d)}
                     for p, d in SCRIPT_PRESENCE],
        "results": results,
    }).encode()
    files["semantics_space.json"] = space.canonical()
    files["demo_scene.json"] = export(space).encode()

    first = SplitMix(0)
    values = {
        "fnv_empty": fnv1a64(b""),
        "fnv_a": fnv1a64(b"a"),
        "fresh_hash": fnv1a64(files["fresh_16x16_seed42.json"]),
        "semantics_hash": fnv1a64(files["semantics_space.json"]),
        "splitmix_zero_first": first.next(),
        "splitmix_zero_second": first.next(),
        "mix_42_1_0": mix(42, 1, 0),
        "item_rng_42_1_0_first": item_rng(42, 1, 0).next(),
    }
    files["oracle_values.json"] = (enc(values) + "\n").encode()
    return files


def main(argv):
    if len(argv) == 3 and argv[1] == "--check":
        bad = 0
        for name, data in generate().items():
            path = os.path.join(argv[2], name)
            with open(path, "rb") as f:
                if f.read() != data:
                    print("differs:", name)
                    bad = 1
        return bad
    if len(argv) != 2:
        print(__doc__)
        return 2
    os.makedirs(argv[1], exist_ok=True)
    for name, data in generate().items():
        with open(os.path.join(argv[1], name), "wb") as f:
            f.write(data)
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv))
