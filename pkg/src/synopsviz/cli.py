"""Command-line interface: dataset loading, inspection and the server."""

from __future__ import annotations

import json
import os
import sys
from pathlib import Path
from typing import Optional

import click

from .errors import SynopsVizError
from .facets import FacetSelection, resolve_selection
from .hierarchy import HierarchyConfig, HierarchyTree, build_hierarchy
from .registry import DatasetRegistry, load_pipeline
from .terms import TEMPORAL, iso_utc


def _default_data_dir() -> str:
    return os.environ.get("SYNOPSVIZ_DATA_DIR", "./synopsviz-data")


def _default_port() -> int:
    return int(os.environ.get("SYNOPSVIZ_PORT", "8722"))


def _registry(data_dir: Optional[str], persistent: bool) -> DatasetRegistry:
    return DatasetRegistry(Path(data_dir or _default_data_dir()) if persistent else None)


def _entry_for(target: str, data_dir: Optional[str], format: Optional[str]):
    """Resolve a CLI target: a registered dataset id, or a file path."""
    directory = Path(data_dir or _default_data_dir())
    if directory.exists():
        registry = DatasetRegistry(directory)
        if target in registry.ids():
            return registry.get(target)
    path = Path(target)
    if path.exists():
        return load_pipeline(path.read_bytes(), format, path.stem, source_path=str(path))
    raise click.ClickException(f"{target!r} is neither a registered dataset id nor a file")


def _emit(doc) -> None:
    click.echo(json.dumps(doc, indent=2))


@click.group()
def main():
    """Hierarchical exploration and statistics over RDF datasets."""


@main.command()
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.option("--format", "format_", type=click.Choice(["ntriples", "nt", "turtle", "ttl"]), default=None)
@click.option("--name", default=None, help="Display name (defaults to the file stem).")
@click.option("--data-dir", default=None, help="Registry directory (SYNOPSVIZ_DATA_DIR).")
def ingest(file, format_, name, data_dir):
    """Load FILE into the dataset registry and print its id and report."""
    registry = _registry(data_dir, persistent=True)
    try:
        entry = registry.load_file(Path(file), format_, name)
    except SynopsVizError as exc:
        raise click.ClickException(str(exc)) from exc
    _emit({"id": entry.id, "name": entry.name, "report": entry.store.report.to_json()})


@main.command()
@click.argument("target")
@click.option("--format", "format_", default=None)
@click.option("--data-dir", default=None)
def stats(target, format_, data_dir):
    """Print the statistics catalogue for a dataset id or file."""
    _emit(_entry_for(target, data_dir, format_).stats.to_json())


@main.command()
@click.argument("target")
@click.option("--format", "format_", default=None)
@click.option("--data-dir", default=None)
def metadata(target, format_, data_dir):
    """Print quality-relevant dataset metadata for a dataset id or file."""
    _emit(_entry_for(target, data_dir, format_).metadata.to_json())


@main.command()
@click.argument("target")
@click.option("--format", "format_", default=None)
@click.option("--data-dir", default=None)
def facets(target, format_, data_dir):
    """Print class and property facets for a dataset id or file."""
    _emit(_entry_for(target, data_dir, format_).facets.to_json())


def _render_tree(tree: HierarchyTree) -> str:
    lines = []

    def fmt(value: float) -> str:
        if tree.axis_kind == TEMPORAL:
            return iso_utc(value)
        return f"{value:g}"

    def walk(node, prefix: str, is_last: bool):
        bracket = "]" if node.closure == "closed" else ")"
        stats_ = node.stats
        head = "" if node.node_id == "" else ("└─ " if is_last else "├─ ")
        lines.append(
            f"{prefix}{head}[{fmt(node.lo)}, {fmt(node.hi)}{bracket}"
            f" count={stats_.count} mean={stats_.mean:g} var={stats_.variance:g}"
        )
        child_prefix = prefix if node.node_id == "" else prefix + ("   " if is_last else "│  ")
        children = tree.children_of(node.node_id)
        for i, child in enumerate(children):
            walk(child, child_prefix, i == len(children) - 1)

    walk(tree.root, "", True)
    return "\n".join(lines)


@main.command()
@click.argument("target")
@click.option("--property", "property_iri", required=True, help="Numeric or temporal property IRI.")
@click.option("--classes", default=None, help="Comma-separated class IRIs (union filter).")
@click.option(
    "--strategy",
    type=click.Choice(["equal-width", "equal-frequency"]),
    default="equal-frequency",
)
@click.option("--levels", type=int, default=3)
@click.option("--fanout", type=int, default=10)
@click.option("--json", "as_json", is_flag=True, help="Full tree as JSON.")
@click.option("--tree", "as_tree", is_flag=True, help="ASCII tree (default).")
@click.option("--format", "format_", default=None)
@click.option("--data-dir", default=None)
def hierarchy(target, property_iri, classes, strategy, levels, fanout, as_json, as_tree, format_, data_dir):
    """Build and print the value hierarchy for one property."""
    entry = _entry_for(target, data_dir, format_)
    class_iris = tuple(c for c in (classes.split(",") if classes else ()) if c)
    try:
        points = resolve_selection(
            entry.store, entry.summary, FacetSelection(property_iri, class_iris)
        )
        tree = build_hierarchy(points, HierarchyConfig(strategy, levels, fanout))
    except SynopsVizError as exc:
        raise click.ClickException(str(exc)) from exc
    if as_json and not as_tree:
        _emit(tree.to_json())
    else:
        click.echo(_render_tree(tree))


@main.command()
@click.option("--port", type=int, default=None, help="Defaults to SYNOPSVIZ_PORT or 8722.")
@click.option("--host", default="127.0.0.1")
@click.option("--data-dir", default=None, help="Registry directory to serve (SYNOPSVIZ_DATA_DIR).")
@click.option("--ui-dir", default=None, help="Optional static frontend directory to mount at /ui.")
def serve(port, host, data_dir, ui_dir):
    """Start the HTTP/JSON API server over the registry."""
    import uvicorn

    from .server import create_app

    registry = _registry(data_dir, persistent=True)
    app = create_app(registry, ui_dir=Path(ui_dir) if ui_dir else None)
    click.echo(f"serving {len(registry.ids())} dataset(s) on http://{host}:{port or _default_port()}")
    uvicorn.run(app, host=host, port=port or _default_port(), log_level="warning")


if __name__ == "__main__":
    sys.exit(main())
