"""HTTP JSON API for the explorer UI and scripting.

Stateless: every response is a pure function of the request payload.  Exact
rationals cross the wire as strings "p/q"; decimals are advisory duplicates.
Requests above the configured size cap are refused with 413 so the service
stays synchronous and sub-second.
"""

from __future__ import annotations

import os
from typing import Optional

from fastapi import FastAPI, HTTPException, Query
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from .analysis import analyze
from .closed_forms import predict_bridge_join, predict_leaf_join
from .errors import ConditionViolated, CurvlabError, DisconnectedGraph, SingleVertex
from .families import FAMILY_CATALOG, make_family
from .graphs import Graph
from .io_formats import analysis_document, decimal_str, exact_str, report_document


class GraphPayload(BaseModel):
    n: int = Field(ge=1)
    edges: list[tuple[int, int]]


class LeafPayload(BaseModel):
    n: int = Field(ge=1)
    edges: list[tuple[int, int]]
    u: int


class BridgePayload(BaseModel):
    g1: GraphPayload
    g2: GraphPayload
    u: int
    v: int


def _build_graph(payload: GraphPayload, max_n: int) -> Graph:
    if payload.n > max_n:
        raise HTTPException(status_code=413, detail=f"n={payload.n} above limit {max_n}")
    try:
        return Graph.from_edges(payload.n, payload.edges)
    except ValueError as err:
        raise HTTPException(status_code=400, detail=str(err))


def _precondition(err: CurvlabError) -> HTTPException:
    return HTTPException(status_code=422, detail=err.condition)


def create_app(max_n: int = 64) -> FastAPI:
    app = FastAPI(title="curvlab", version="0.1.0")

    @app.exception_handler(CurvlabError)
    async def _curvlab_error(_request, err: CurvlabError):  # pragma: no cover
        return JSONResponse(status_code=422, content={"detail": err.condition})

    @app.post("/api/curvature")
    def api_curvature(payload: GraphPayload):
        g = _build_graph(payload, max_n)
        try:
            return report_document(g)
        except (DisconnectedGraph, SingleVertex) as err:
            raise _precondition(err)

    @app.post("/api/analyze")
    def api_analyze(payload: GraphPayload):
        g = _build_graph(payload, max_n)
        try:
            return analysis_document(g)
        except (DisconnectedGraph, SingleVertex) as err:
            raise _precondition(err)

    @app.post("/api/predict/leaf")
    def api_predict_leaf(payload: LeafPayload):
        g = _build_graph(GraphPayload(n=payload.n, edges=payload.edges), max_n)
        try:
            pred = predict_leaf_join(g, payload.u)
        except (DisconnectedGraph, SingleVertex, ConditionViolated) as err:
            raise _precondition(err)
        except ValueError as err:
            raise HTTPException(status_code=400, detail=str(err))
        return {
            "alpha": exact_str(pred.alpha),
            "gamma": exact_str(pred.gamma),
            "leaf_curvature": exact_str(pred.K_v),
            "predicted": [exact_str(k) for k in pred.predicted_K],
            "predicted_decimal": [decimal_str(k) for k in pred.predicted_K],
        }

    @app.post("/api/predict/bridge")
    def api_predict_bridge(payload: BridgePayload):
        g1 = _build_graph(payload.g1, max_n)
        g2 = _build_graph(payload.g2, max_n)
        if g1.n + g2.n > max_n:
            raise HTTPException(status_code=413, detail=f"combined size above limit {max_n}")
        try:
            pred = predict_bridge_join(g1, payload.u, g2, payload.v)
        except (DisconnectedGraph, SingleVertex, ConditionViolated) as err:
            raise _precondition(err)
        except ValueError as err:
            raise HTTPException(status_code=400, detail=str(err))
        return {
            "alpha": exact_str(pred.alpha),
            "beta": exact_str(pred.beta),
            "gamma": exact_str(pred.gamma),
            "delta": exact_str(pred.delta),
            "Z": exact_str(pred.Z),
            "predicted": [exact_str(k) for k in pred.predicted_K],
            "predicted_decimal": [decimal_str(k) for k in pred.predicted_K],
        }

    @app.get("/api/families")
    def api_families():
        return [
            {"name": name, "params": params, "description": desc}
            for name, (_, params, desc) in sorted(FAMILY_CATALOG.items())
        ]

    @app.get("/api/families/{name}")
    def api_family(name: str, args: Optional[str] = Query(default=None)):
        arglist = [int(a) for a in args.split(",")] if args else []
        try:
            g = make_family(name, arglist)
        except ValueError as err:
            raise HTTPException(status_code=400, detail=str(err))
        if g.n > max_n:
            raise HTTPException(status_code=413, detail=f"n={g.n} above limit {max_n}")
        return {"name": name, "n": g.n, "edges": [list(e) for e in g.sorted_edges()]}

    frontend = os.environ.get("CURVLAB_FRONTEND")
    if frontend and os.path.isdir(frontend):  # pragma: no cover - dev convenience
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=frontend, html=True), name="frontend")

    return app
