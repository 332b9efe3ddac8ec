"""Multi-level group hierarchies over a point set, with mergeable statistics.

The whole engine works on one canonically sorted value array (owned by the
PointSet): every node, under either strategy, is a contiguous slice of that
order, so drilling down never rescans raw points — leaf statistics are
computed once at build time and every internal node merges its children.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from . import kernels
from .errors import (
    ConfigOutOfBoundsError,
    EmptyPointSetError,
    NotALeafError,
    UnknownNodeError,
)
from .facets import PointSet
from .terms import TEMPORAL, iso_utc

EQUAL_WIDTH = "equal-width"
EQUAL_FREQUENCY = "equal-frequency"

HALF_OPEN = "half-open"
CLOSED = "closed"

MAX_LEVELS = 12
MAX_FANOUT = 1000

DEFAULT_LEVELS = 3
DEFAULT_FANOUT = 10
DEFAULT_SAMPLE_SIZE = 5


@dataclass(frozen=True)
class HierarchyConfig:
    strategy: str = EQUAL_FREQUENCY
    levels: int = DEFAULT_LEVELS
    fanout: int = DEFAULT_FANOUT
    sample_size: int = DEFAULT_SAMPLE_SIZE

    def validate(self):
        if self.strategy not in (EQUAL_WIDTH, EQUAL_FREQUENCY):
            raise ConfigOutOfBoundsError(f"unknown strategy: {self.strategy!r}")
        if not 1 <= self.levels <= MAX_LEVELS:
            raise ConfigOutOfBoundsError(f"levels must be in 1..{MAX_LEVELS}")
        if not 2 <= self.fanout <= MAX_FANOUT:
            raise ConfigOutOfBoundsError(f"fanout must be in 2..{MAX_FANOUT}")
        if self.sample_size < 0:
            raise ConfigOutOfBoundsError("sampleSize must be >= 0")

    def to_json(self):
        return {
            "strategy": self.strategy,
            "levels": self.levels,
            "fanout": self.fanout,
            "sampleSize": self.sample_size,
        }


@dataclass(frozen=True, slots=True)
class GroupStats:
    """Mergeable aggregates of one group.

    count/min/max/sum/sum_squares merge by exact addition/extremes. The
    centered second moment m2 (mathematically sum_squares - sum^2/count)
    merges by the parallel update rule and is what the variance property
    reads: the raw sum-of-squares identity cancels catastrophically for
    narrow clusters at large offsets (epoch milliseconds), m2 does not.
    """

    count: int
    min: float
    max: float
    sum: float
    sum_squares: float
    m2: float
    samples: Tuple[Tuple[str, float], ...]

    @property
    def mean(self) -> float:
        return self.sum / self.count

    @property
    def variance(self) -> float:
        # Population variance; clamp rounding noise at zero.
        return max(self.m2 / self.count, 0.0)

    def merge(self, other: "GroupStats", sample_size: int) -> "GroupStats":
        total = self.count + other.count
        delta = other.mean - self.mean
        return GroupStats(
            count=total,
            min=self.min if self.min <= other.min else other.min,
            max=self.max if self.max >= other.max else other.max,
            sum=self.sum + other.sum,
            sum_squares=self.sum_squares + other.sum_squares,
            m2=self.m2 + other.m2 + delta * delta * self.count * other.count / total,
            samples=(self.samples + other.samples)[:sample_size],
        )

    def to_json(self, axis_kind: str):
        doc = {
            "count": self.count,
            "min": _axis_number(self.min, axis_kind),
            "max": _axis_number(self.max, axis_kind),
            "sum": self.sum,
            "sumSquares": self.sum_squares,
            "mean": self.mean,
            "variance": self.variance,
            "samples": [
                _sample_json(subject, value, axis_kind) for subject, value in self.samples
            ],
        }
        if axis_kind == TEMPORAL:
            doc["minIso"] = iso_utc(self.min)
            doc["maxIso"] = iso_utc(self.max)
        return doc


def _axis_number(value: float, axis_kind: str):
    if axis_kind == TEMPORAL and float(value).is_integer():
        return int(value)
    return value


def _sample_json(subject: str, value: float, axis_kind: str):
    doc = {"subject": subject, "value": _axis_number(value, axis_kind)}
    if axis_kind == TEMPORAL:
        doc["valueIso"] = iso_utc(value)
    return doc


@dataclass(frozen=True, slots=True)
class HierarchyNode:
    node_id: str
    depth: int
    lo: float
    hi: float
    closure: str
    stats: GroupStats
    child_count: int
    pruned_child_count: int
    is_leaf: bool
    start: int  # slice of the point set's canonical order
    stop: int

    def child_id(self, index: int) -> str:
        return f"{self.node_id}.{index}" if self.node_id else str(index)

    def to_json(self, axis_kind: str):
        doc = {
            "nodeId": self.node_id,
            "depth": self.depth,
            "lo": _axis_number(self.lo, axis_kind),
            "hi": _axis_number(self.hi, axis_kind),
            "closure": self.closure,
            "isLeaf": self.is_leaf,
            "childCount": self.child_count,
            "prunedChildCount": self.pruned_child_count,
            "stats": self.stats.to_json(axis_kind),
        }
        if axis_kind == TEMPORAL:
            doc["loIso"] = iso_utc(self.lo)
            doc["hiIso"] = iso_utc(self.hi)
        return doc


class HierarchyTree:
    """Immutable built tree; retains its PointSet so rebuilds are cheap.

    point_reads counts raw leaf-point accesses (points_of); navigation via
    children_of never touches them, which is checkable in tests.
    """

    def __init__(self, config: HierarchyConfig, point_set: PointSet):
        self.config = config
        self.point_set = point_set
        self.axis_kind = point_set.value_kind
        self.nodes: Dict[str, HierarchyNode] = {}
        self.point_reads = 0

    @property
    def root(self) -> HierarchyNode:
        return self.nodes[""]

    def node(self, node_id: str) -> HierarchyNode:
        try:
            return self.nodes[node_id]
        except KeyError:
            raise UnknownNodeError(node_id) from None

    def children_of(self, node_id: str) -> List[HierarchyNode]:
        node = self.node(node_id)
        return [self.nodes[node.child_id(i)] for i in range(node.child_count)]

    def points_of(self, node_id: str) -> List[Tuple[str, float, Optional[int]]]:
        node = self.node(node_id)
        if not node.is_leaf:
            raise NotALeafError(node_id)
        ps = self.point_set
        self.point_reads += node.stop - node.start
        return [
            (ps.subjects[i], ps.values[i], ps.sources[i])
            for i in range(node.start, node.stop)
        ]

    def node_json(self, node: HierarchyNode):
        return node.to_json(self.axis_kind)

    def _nested_json(self, node: HierarchyNode):
        doc = node.to_json(self.axis_kind)
        doc["children"] = [
            self._nested_json(self.nodes[node.child_id(i)]) for i in range(node.child_count)
        ]
        return doc

    def to_json(self):
        return {
            "axisKind": self.axis_kind,
            "config": self.config.to_json(),
            "pointCount": len(self.point_set),
            "root": self._nested_json(self.root),
        }


def build_hierarchy(point_set: PointSet, config: HierarchyConfig) -> HierarchyTree:
    """Build the group tree for one point set under one configuration."""
    config.validate()
    n = len(point_set)
    if n == 0:
        raise EmptyPointSetError("no points to organize")

    values = point_set.values
    subjects = point_set.subjects
    k = config.fanout
    levels = config.levels
    sample_size = config.sample_size
    tree = HierarchyTree(config, point_set)
    nodes = tree.nodes

    def leaf_stats(a: int, b: int) -> GroupStats:
        total, total_sq, m2 = kernels.slice_stats(values, a, b)
        samples = tuple(
            (subjects[i], values[i]) for i in range(a, min(a + sample_size, b))
        )
        return GroupStats(b - a, values[a], values[b - 1], total, total_sq, m2, samples)

    def build(node_id: str, depth: int, a: int, b: int, lo: float, hi: float, closure: str):
        if depth >= levels or lo == hi:
            node = HierarchyNode(
                node_id, depth, lo, hi, closure, leaf_stats(a, b), 0, 0, True, a, b
            )
            nodes[node_id] = node
            return node

        # (start, stop, lo, hi, closure) for each non-empty child.
        specs: List[Tuple[int, int, float, float, str]] = []
        if config.strategy == EQUAL_WIDTH:
            width = (hi - lo) / k
            edges = [lo + i * width for i in range(k + 1)]
            edges[0] = lo
            edges[k] = hi
            cuts = [a]
            for i in range(1, k):
                cuts.append(bisect_left(values, edges[i], a, b))
            cuts.append(b)
            for i in range(k):
                if cuts[i] < cuts[i + 1]:
                    specs.append(
                        (
                            cuts[i],
                            cuts[i + 1],
                            edges[i],
                            edges[i + 1],
                            CLOSED if i == k - 1 else HALF_OPEN,
                        )
                    )
        else:
            m = b - a
            for i in range(k):
                ca = a + (i * m) // k
                cb = a + ((i + 1) * m) // k
                if ca < cb:
                    specs.append(
                        (
                            ca,
                            cb,
                            values[ca],
                            values[cb - 1],
                            CLOSED if cb == b else HALF_OPEN,
                        )
                    )

        children = []
        for index, (ca, cb, clo, chi, ccl) in enumerate(specs):
            cid = f"{node_id}.{index}" if node_id else str(index)
            children.append(build(cid, depth + 1, ca, cb, clo, chi, ccl))

        # Internal stats are the merge of the children, never a rescan.
        stats = children[0].stats
        for child in children[1:]:
            stats = stats.merge(child.stats, sample_size)
        node = HierarchyNode(
            node_id,
            depth,
            lo,
            hi,
            closure,
            stats,
            len(children),
            k - len(children),
            False,
            a,
            b,
        )
        nodes[node_id] = node
        return node

    build("", 0, 0, n, values[0], values[n - 1], CLOSED)
    return tree


def children_of(tree: HierarchyTree, node_id: str) -> List[HierarchyNode]:
    return tree.children_of(node_id)


def points_of(tree: HierarchyTree, node_id: str):
    return tree.points_of(node_id)


def rebuild(tree: HierarchyTree, config: HierarchyConfig) -> HierarchyTree:
    """Same point set, new configuration."""
    return build_hierarchy(tree.point_set, config)
