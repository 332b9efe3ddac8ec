"""Hierarchical visual exploration and statistical analysis of RDF datasets.

The pipeline: ingest RDF into an immutable indexed snapshot, infer schema,
derive class/property facets, organize property values into multi-level
group hierarchies with mergeable statistics, compute a dataset statistics
catalogue and quality-relevant metadata, and expose everything over an
HTTP/JSON API, a CLI and a web explorer.
"""

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
from .facets import FacetCatalog, FacetSelection, PointSet, PropertyFacet, build_facets, resolve_selection
from .hierarchy import (
    EQUAL_FREQUENCY,
    EQUAL_WIDTH,
    GroupStats,
    HierarchyConfig,
    HierarchyNode,
    HierarchyTree,
    build_hierarchy,
    children_of,
    points_of,
    rebuild,
)
from .metadata import DatasetMetadata, extract_metadata
from .registry import DatasetEntry, DatasetRegistry, load_pipeline
from .schema import ClassInfo, PropertyInfo, SchemaSummary, infer_schema, subtree_of
from .stats import DatasetStats, TreemapNode, build_treemap, class_property_details, compute_dataset_stats
from .store import IngestReport, TripleStore, ingest
from .terms import Term, Triple, TypedValue, parse_literal_value

__version__ = "0.1.0"

__all__ = [
    "ConfigOutOfBoundsError",
    "DatasetTooLargeError",
    "EmptyPointSetError",
    "NotALeafError",
    "SynopsVizError",
    "TurtleSyntaxError",
    "UnknownClassError",
    "UnknownDatasetError",
    "UnknownNodeError",
    "UnknownPropertyError",
    "UnreadableSourceError",
    "FacetCatalog",
    "FacetSelection",
    "PointSet",
    "PropertyFacet",
    "build_facets",
    "resolve_selection",
    "EQUAL_FREQUENCY",
    "EQUAL_WIDTH",
    "GroupStats",
    "HierarchyConfig",
    "HierarchyNode",
    "HierarchyTree",
    "build_hierarchy",
    "children_of",
    "points_of",
    "rebuild",
    "DatasetMetadata",
    "extract_metadata",
    "DatasetEntry",
    "DatasetRegistry",
    "load_pipeline",
    "ClassInfo",
    "PropertyInfo",
    "SchemaSummary",
    "infer_schema",
    "subtree_of",
    "DatasetStats",
    "TreemapNode",
    "build_treemap",
    "class_property_details",
    "compute_dataset_stats",
    "IngestReport",
    "TripleStore",
    "ingest",
    "Term",
    "Triple",
    "TypedValue",
    "parse_literal_value",
    "__version__",
]
