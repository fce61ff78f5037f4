"""Capture real server responses as committed test fixtures.

Runs the backend in-process and records every request/response pair the
explorer tests replay: the A2 involution and pentagon walk, and a D5
walk from the initial seed to a cluster whose endomorphism quiver is the
oriented triangle fan.  Keys are "METHOD path canonical-json-body".
"""

import json
import sys
from collections import deque
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[2] / "src"))

from fastapi.testclient import TestClient

from clustercat.cluster_algebra import atlas
from clustercat.server import build_app


def key(method, path, body):
    tail = json.dumps(body, sort_keys=True, separators=(",", ":")) if body is not None else ""
    return f"{method} {path} {tail}".rstrip()


exchanges = {}
client = TestClient(build_app())


def get(path):
    r = client.get(path)
    exchanges[key("GET", path, None)] = {"status": r.status_code, "json": r.json()}
    return r.json()


def post(path, body):
    r = client.post(path, json=body)
    exchanges[key("POST", path, body)] = {"status": r.status_code, "json": r.json()}
    return r.json()


get("/types")

# A2: involution round trip, then the pentagon walk
a2_start = post("/seed", {"type": "A2"})
s1 = post("/mutate", {"seed": a2_start["id"], "vertex": 1})
back = post("/mutate", {"seed": s1["id"], "vertex": 1})
assert back["id"] == a2_start["id"]
cur = a2_start
for v in (1, 2, 1, 2, 1):
    cur = post("/mutate", {"seed": cur["id"], "vertex": v})
assert cur["cluster"] == a2_start["cluster"]

# D5: shortest atlas path from the initial cluster to a triangle-fan cluster
FAN_CLUSTER = 49
at = atlas("D5")
adj = {}
for e in at.edges:
    adj.setdefault(e.a, []).append(e.b)
    adj.setdefault(e.b, []).append(e.a)
parent = {0: None}
frontier = deque([0])
while FAN_CLUSTER not in parent:
    c = frontier.popleft()
    for nb in adj[c]:
        if nb not in parent:
            parent[nb] = c
            frontier.append(nb)
path = [FAN_CLUSTER]
while parent[path[-1]] is not None:
    path.append(parent[path[-1]])
path.reverse()

d5_start = post("/seed", {"type": "D5"})
cur = d5_start
walk = []
for nxt in path[1:]:
    roots = [tuple(v["root"]) for v in cur["variables"]]
    target = set(at.cluster_roots(nxt))
    out_root = next(r for r in roots if r not in target)
    slot = roots.index(out_root) + 1
    walk.append(slot)
    cur = post("/mutate", {"seed": cur["id"], "vertex": slot})
assert {tuple(v["root"]) for v in cur["variables"]} == set(at.cluster_roots(FAN_CLUSTER))
assert "arrows" in cur["qt"], cur["qt"]

out = {
    "exchanges": exchanges,
    "meta": {
        "a2_initial": a2_start["id"],
        "d5_initial": d5_start["id"],
        "d5_fan_seed": cur["id"],
        "d5_fan_walk": walk,
    },
}
dest = Path(__file__).resolve().parents[1] / "test" / "fixtures" / "server.json"
dest.write_text(json.dumps(out, indent=1, sort_keys=True) + "\n")
print(f"wrote {dest} with {len(exchanges)} exchanges; d5 walk {walk}")
