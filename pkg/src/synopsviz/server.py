"""HTTP/JSON API over the dataset registry.

All GET endpoints read immutable snapshots; the registry and the bounded
LRU hierarchy cache are the only synchronized state.
"""

from __future__ import annotations

import hashlib
import json
import threading
from collections import OrderedDict
from pathlib import Path
from typing import Optional, Tuple

from fastapi import FastAPI, Query, Request, Response
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from .errors import (
    ConfigOutOfBoundsError,
    DatasetTooLargeError,
    EmptyPointSetError,
    NotALeafError,
    SynopsVizError,
    TurtleSyntaxError,
    UnknownClassError,
    UnknownDatasetError,
    UnknownNodeError,
    UnknownPropertyError,
    UnreadableSourceError,
)
from .facets import FacetSelection, resolve_selection
from .hierarchy import HierarchyConfig, HierarchyTree, build_hierarchy
from .registry import DatasetEntry, DatasetRegistry
from .stats import build_treemap, class_property_details
from .terms import TEMPORAL, iso_utc

DEFAULT_POINT_PAGE = 200
MAX_POINT_PAGE = 10000


class HierarchyCache:
    """token -> built tree, LRU-bounded, with per-token single-flight."""

    def __init__(self, max_entries: int = 64):
        self.max_entries = max_entries
        self._lock = threading.Lock()
        self._trees: "OrderedDict[str, HierarchyTree]" = OrderedDict()
        self._building: dict = {}

    @staticmethod
    def token_for(dataset_id: str, selection: FacetSelection, config: HierarchyConfig) -> str:
        key = json.dumps(
            {
                "dataset": dataset_id,
                "property": selection.property_iri,
                "classes": list(selection.class_iris),
                "config": config.to_json(),
            },
            sort_keys=True,
        )
        return hashlib.sha256(key.encode("utf-8")).hexdigest()[:24]

    def lookup(self, token: str) -> Optional[HierarchyTree]:
        with self._lock:
            tree = self._trees.get(token)
            if tree is not None:
                self._trees.move_to_end(token)
            return tree

    def get_or_build(
        self,
        entry: DatasetEntry,
        selection: FacetSelection,
        config: HierarchyConfig,
    ) -> Tuple[str, HierarchyTree, bool]:
        token = self.token_for(entry.id, selection, config)
        tree = self.lookup(token)
        if tree is not None:
            return token, tree, True
        with self._lock:
            gate = self._building.setdefault(token, threading.Lock())
        with gate:
            tree = self.lookup(token)
            if tree is not None:
                return token, tree, True
            points = resolve_selection(entry.store, entry.summary, selection)
            tree = build_hierarchy(points, config)
            with self._lock:
                self._trees[token] = tree
                self._trees.move_to_end(token)
                while len(self._trees) > self.max_entries:
                    self._trees.popitem(last=False)
                self._building.pop(token, None)
            return token, tree, False


_ERROR_MAP = [
    (UnknownDatasetError, 404, "unknown_dataset"),
    (UnknownNodeError, 404, "unknown_node"),
    (NotALeafError, 409, "not_a_leaf"),
    (EmptyPointSetError, 422, "empty_point_set"),
    (UnknownClassError, 400, "unknown_class"),
    (UnknownPropertyError, 400, "unknown_property"),
    (ConfigOutOfBoundsError, 400, "config_out_of_bounds"),
    (DatasetTooLargeError, 413, "too_large"),
    (TurtleSyntaxError, 400, "parse_error"),
    (UnreadableSourceError, 400, "unreadable_source"),
]


def _error_response(exc: SynopsVizError) -> JSONResponse:
    for klass, status, code in _ERROR_MAP:
        if isinstance(exc, klass):
            detail = None
            if isinstance(exc, TurtleSyntaxError):
                detail = {"line": exc.line, "column": exc.column}
            body = {"code": code, "message": str(exc)}
            if detail:
                body["detail"] = detail
            return JSONResponse(body, status_code=status)
    return JSONResponse({"code": "internal_error", "message": str(exc)}, status_code=500)


def _node_path_id(raw: str) -> str:
    # The root's node id is the empty string, which cannot appear as a URL
    # path segment; "root" stands in for it.
    return "" if raw == "root" else raw


def create_app(
    registry: DatasetRegistry,
    cache_entries: int = 64,
    ui_dir: Optional[Path] = None,
    cors_origins: Tuple[str, ...] = ("*",),
) -> FastAPI:
    app = FastAPI(title="synopsviz", version="0.1.0")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=list(cors_origins),
        allow_methods=["*"],
        allow_headers=["*"],
    )
    cache = HierarchyCache(cache_entries)
    app.state.registry = registry
    app.state.cache = cache

    @app.exception_handler(SynopsVizError)
    async def handle_domain_error(_request: Request, exc: SynopsVizError):
        return _error_response(exc)

    @app.get("/datasets")
    def list_datasets():
        return [entry.listing_json() for entry in registry.entries()]

    @app.post("/datasets", status_code=201)
    async def add_dataset(
        request: Request,
        name: Optional[str] = Query(default=None),
        format: Optional[str] = Query(default=None),
    ):
        content_type = request.headers.get("content-type", "")
        if content_type.startswith("application/json"):
            body = await request.json()
            source_path = body.get("sourcePath")
            if not source_path:
                return JSONResponse(
                    {"code": "bad_request", "message": "sourcePath is required"},
                    status_code=400,
                )
            path = Path(source_path)
            try:
                data = path.read_bytes()
            except OSError as exc:
                raise UnreadableSourceError(str(exc)) from exc
            entry = registry.load_bytes(
                data,
                body.get("format") or format,
                body.get("name") or name or path.stem,
                source_path=str(path),
            )
        else:
            data = await request.body()
            entry = registry.load_bytes(data, format, name or "upload")
        return {"id": entry.id}

    @app.get("/datasets/{dataset_id}/statistics")
    def dataset_statistics(dataset_id: str):
        return registry.get(dataset_id).stats.to_json()

    @app.get("/datasets/{dataset_id}/metadata")
    def dataset_metadata(dataset_id: str):
        return registry.get(dataset_id).metadata.to_json()

    @app.get("/datasets/{dataset_id}/facets")
    def dataset_facets(dataset_id: str):
        return registry.get(dataset_id).facets.to_json()

    @app.get("/datasets/{dataset_id}/treemap")
    def dataset_treemap(
        dataset_id: str,
        root: Optional[str] = Query(default=None),
        depth: Optional[int] = Query(default=None, ge=0),
    ):
        entry = registry.get(dataset_id)
        return build_treemap(entry.store, entry.summary, root, depth).to_json()

    @app.get("/datasets/{dataset_id}/class-properties")
    def dataset_class_properties(dataset_id: str, cls: str = Query(alias="class")):
        entry = registry.get(dataset_id)
        details = class_property_details(entry.store, entry.summary, cls)
        return {"classIri": cls, "properties": [d.to_json() for d in details]}

    @app.get("/datasets/{dataset_id}/hierarchy")
    def dataset_hierarchy(
        dataset_id: str,
        response: Response,
        property: str = Query(),
        classes: Optional[str] = Query(default=None),
        strategy: str = Query(default="equal-frequency"),
        levels: int = Query(default=3),
        fanout: int = Query(default=10),
    ):
        entry = registry.get(dataset_id)
        class_iris = tuple(c for c in (classes.split(",") if classes else ()) if c)
        selection = FacetSelection(property_iri=property, class_iris=class_iris)
        config = HierarchyConfig(strategy=strategy, levels=levels, fanout=fanout)
        config.validate()
        token, tree, hit = app.state.cache.get_or_build(entry, selection, config)
        response.headers["X-Cache"] = "hit" if hit else "miss"
        return {
            "treeToken": token,
            "axisKind": tree.axis_kind,
            "config": tree.config.to_json(),
            "pointCount": len(tree.point_set),
            "skippedLiterals": tree.point_set.skipped,
            "root": tree.node_json(tree.root),
            "children": [tree.node_json(c) for c in tree.children_of("")],
        }

    def _tree_for(dataset_id: str, token: str) -> HierarchyTree:
        registry.get(dataset_id)  # 404 on unknown dataset first
        tree = app.state.cache.lookup(token)
        if tree is None:
            raise UnknownNodeError(f"unknown or expired tree token: {token}")
        return tree

    @app.get("/datasets/{dataset_id}/hierarchy/{token}/nodes/{node_id}/children")
    def hierarchy_children(dataset_id: str, token: str, node_id: str):
        tree = _tree_for(dataset_id, token)
        node_id = _node_path_id(node_id)
        return {
            "nodeId": node_id,
            "children": [tree.node_json(c) for c in tree.children_of(node_id)],
        }

    @app.get("/datasets/{dataset_id}/hierarchy/{token}/nodes/{node_id}/points")
    def hierarchy_points(
        dataset_id: str,
        token: str,
        node_id: str,
        limit: int = Query(default=DEFAULT_POINT_PAGE, ge=1, le=MAX_POINT_PAGE),
        offset: int = Query(default=0, ge=0),
    ):
        tree = _tree_for(dataset_id, token)
        node_id = _node_path_id(node_id)
        rows = tree.points_of(node_id)
        page = rows[offset : offset + limit]
        store = tree.point_set.store
        points = []
        for subject, value, source in page:
            doc = {"subject": subject, "value": _axis_num(value, tree.axis_kind)}
            if tree.axis_kind == TEMPORAL:
                doc["valueIso"] = iso_utc(value)
            doc["source"] = store.triple_line(source) if store is not None and source is not None else None
            points.append(doc)
        return {
            "nodeId": node_id,
            "total": len(rows),
            "offset": offset,
            "limit": limit,
            "points": points,
        }

    if ui_dir and Path(ui_dir).is_dir():
        from fastapi.staticfiles import StaticFiles

        app.mount("/ui", StaticFiles(directory=str(ui_dir), html=True), name="ui")

    return app


def _axis_num(value: float, axis_kind: str):
    if axis_kind == TEMPORAL and float(value).is_integer():
        return int(value)
    return value
