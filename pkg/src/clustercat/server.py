"""HTTP API backing the explorer: content-addressed seeds and mutation.

Seeds live in an insert-only store keyed by a hash of their normalized
content (type, exchange matrix, variable term lists), so mutating twice
at one vertex lands back on the original id and the server needs no
session state.  Every response is JSON; the algebra all happens here,
the browser only renders.
"""

from __future__ import annotations

import hashlib
import json
import os
from typing import Dict, Tuple

from fastapi import FastAPI, HTTPException
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from .cluster_algebra import Laurent, Seed, initial_seed, mutate_seed
from .errors import ContractViolationError, NotFiniteTypeError
from .quiver import relations
from .root_system import DynkinType
from .tilting import quiver_QT, tilting_from_cluster

FAMILIES = (
    ["A" + str(r) for r in range(2, 9)]
    + ["D" + str(r) for r in range(4, 9)]
    + ["E6", "E7", "E8"]
)
LARGE_TYPES = {"E7", "E8"}


class SeedRequest(BaseModel):
    type: str


class MutateRequest(BaseModel):
    seed: str
    vertex: int


def _parse_type(dtype: str) -> str:
    try:
        return DynkinType.parse(dtype).name
    except (NotFiniteTypeError, ValueError) as e:
        raise HTTPException(status_code=400, detail=str(e))


def _digest(content: dict) -> str:
    return hashlib.sha256(json.dumps(content, sort_keys=True).encode()).hexdigest()[:16]


def _seed_id(name: str, seed: Seed) -> str:
    """Slot-faithful id: exchange matrix plus ordered variables."""
    return _digest(
        {
            "type": name,
            "b": seed.quiver.b,
            "variables": [
                [[list(e), c] for e, c in v.sorted_terms()] for v in seed.variables
            ],
        }
    )


def _cluster_id(name: str, seed: Seed) -> str:
    """Order-free id: two seeds share it iff they carry the same cluster."""
    return _digest(
        {
            "type": name,
            "cluster": sorted(
                [[list(e), c] for e, c in v.sorted_terms()] for v in seed.variables
            ),
        }
    )


def _qt_summary(name: str, seed: Seed) -> dict:
    """Endomorphism quiver of the current cluster, in seed slot numbering."""
    roots = [v.denominator_exponents() for v in seed.variables]
    slot_of = {r: i + 1 for i, r in enumerate(roots)}
    try:
        tilt = tilting_from_cluster(name, tuple(roots))
        qt = quiver_QT(tilt)
        rels = relations(qt)
    except (ValueError, ContractViolationError) as e:
        return {"error": str(e)}
    back = {w + 1: slot_of[r] for w, r in enumerate(tilt.roots)}
    return {
        "arrows": [[back[u], back[v]] for u, v in qt.arrows()],
        "relations": [
            {
                "arrow": [back[rel["arrow"][0]], back[rel["arrow"][1]]],
                "kind": rel["kind"],
                "paths": [[back[v] for v in p] for p in rel["paths"]],
            }
            for rel in rels
        ],
    }


def _fraction_text(v: Laurent) -> str:
    """Render as polynomial over a variable monomial, e.g. (x2 + 1)/x1."""
    d = v.denominator_exponents()
    if all(x <= 0 for x in d):
        return v.to_str()
    denom = Laurent.monomial(v.n, d)
    ntxt = (v * denom).to_str()
    dtxt = denom.to_str()
    if " + " in ntxt or " - " in ntxt:
        ntxt = f"({ntxt})"
    if "*" in dtxt:
        dtxt = f"({dtxt})"
    return f"{ntxt}/{dtxt}"


def seed_state(sid: str, name: str, seed: Seed) -> dict:
    variables = []
    for i, v in enumerate(seed.variables):
        d = list(v.denominator_exponents())
        variables.append(
            {
                "slot": i + 1,
                "text": _fraction_text(v),
                "terms": [[list(e), c] for e, c in v.sorted_terms()],
                "denominator": d,
                "root": d,
            }
        )
    return {
        "id": sid,
        "cluster": _cluster_id(name, seed),
        "type": name,
        "n": seed.quiver.n,
        "quiver": seed.quiver.to_json_dict(),
        "arrows": [[a, b] for a, b in seed.quiver.arrows()],
        "variables": variables,
        "qt": _qt_summary(name, seed),
    }


def build_app(allow_large: bool = False, static_dir: str | None = None) -> FastAPI:
    app = FastAPI(title="clustercat explorer api")
    store: Dict[str, Tuple[str, Seed]] = {}

    def remember(name: str, seed: Seed) -> dict:
        sid = _seed_id(name, seed)
        store.setdefault(sid, (name, seed))
        return seed_state(sid, name, seed)

    @app.get("/types")
    def types():
        return {
            "types": list(FAMILIES),
            "gated": sorted(LARGE_TYPES),
            "allow_large": allow_large,
        }

    @app.post("/seed")
    def seed(req: SeedRequest):
        name = _parse_type(req.type)
        return remember(name, initial_seed(name))

    @app.post("/mutate")
    def mutate(req: MutateRequest):
        entry = store.get(req.seed)
        if entry is None:
            raise HTTPException(status_code=404, detail="unknown seed id")
        name, sd = entry
        if not 1 <= req.vertex <= sd.quiver.n:
            raise HTTPException(
                status_code=400, detail=f"vertex out of range 1..{sd.quiver.n}"
            )
        return remember(name, mutate_seed(sd, req.vertex))

    @app.get("/atlas/{dtype}")
    def atlas_endpoint(dtype: str):
        from .cli import atlas_dump

        name = _parse_type(dtype)
        if name in LARGE_TYPES and not allow_large:
            raise HTTPException(
                status_code=404,
                detail=f"atlas for {name} is not precomputed; start with --allow-large",
            )
        return atlas_dump(name)

    if static_dir and os.path.isdir(static_dir):
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="explorer")

    return app
