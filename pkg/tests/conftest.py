import random
from pathlib import Path

import pytest

from synopsviz import DatasetRegistry, PointSet, ingest, load_pipeline

FIXTURES = Path(__file__).resolve().parents[1] / "fixtures"


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture(scope="session")
def small_store():
    return ingest(FIXTURES / "small.nt")


@pytest.fixture(scope="session")
def countries_entry():
    path = FIXTURES / "countries.nt"
    return load_pipeline(path.read_bytes(), "ntriples", "countries", source_path=str(path))


@pytest.fixture(scope="session")
def zoo_entry():
    path = FIXTURES / "zoo.ttl"
    return load_pipeline(path.read_bytes(), "turtle", "zoo", source_path=str(path))


@pytest.fixture(scope="session")
def void_entry():
    path = FIXTURES / "void-sample.ttl"
    return load_pipeline(path.read_bytes(), "turtle", "void-sample", source_path=str(path))


@pytest.fixture()
def registry_with_fixtures(tmp_path):
    registry = DatasetRegistry(tmp_path / "data")
    ids = {}
    for name in ("small.nt", "countries.nt", "zoo.ttl", "void-sample.ttl"):
        entry = registry.load_file(FIXTURES / name)
        ids[name] = entry.id
    return registry, ids


def make_point_set(values, kind="numeric", subjects=None) -> PointSet:
    """Synthetic PointSet; source order is list position, like the oracle."""
    rows = [
        (subjects[i] if subjects else f"http://ex/s{i}", float(v), i)
        for i, v in enumerate(values)
    ]
    return PointSet(kind, rows)


def random_values(rng: random.Random, n: int) -> list:
    """Value distributions that exercise ties, clusters and both axis scales."""
    style = rng.randrange(6)
    if style == 0:
        return [float(rng.randrange(-50, 50)) for _ in range(n)]  # heavy ties
    if style == 1:
        return [rng.uniform(-1000.0, 1000.0) for _ in range(n)]
    if style == 2:
        center = rng.uniform(-1e6, 1e6)
        return [rng.gauss(center, abs(center) * 0.01 + 1.0) for _ in range(n)]
    if style == 3:
        return [7.0] * n  # degenerate
    if style == 4:
        # epoch-millisecond scale, spread wide enough to stay well-conditioned
        offset = rng.uniform(0, 1.5e12)
        return [offset + rng.uniform(0, 3e11) for _ in range(n)]
    values = [float(rng.randrange(10)) for _ in range(n // 2)]
    values += [rng.uniform(0, 10) for _ in range(n - len(values))]
    return values
