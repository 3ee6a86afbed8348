import os
from typing import Iterator

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from app.graph.canon import to_networkx  # noqa: F401
from app.graph.core import Graph, from_edge_list

settings.register_profile("default", settings(
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
))

settings.register_profile("thorough", settings(
    max_examples=1000,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
))

settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "default"))


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 8) -> Graph:
    """Arbitrary labelled simple graph."""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = [(u, v) for v in range(n) for u in range(v)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return from_edge_list(n, [pair for pair, keep in zip(pairs, chosen) if keep])


def all_labelled_graphs(n: int) -> Iterator[Graph]:
    """Every simple graph on vertices 0..n-1."""
    pairs = [(u, v) for v in range(n) for u in range(v)]
    for mask in range(1 << len(pairs)):
        yield from_edge_list(n, [pair for i, pair in enumerate(pairs) if mask >> i & 1])


@pytest.fixture
def run(capsys):
    """Run the CLI and return (exit code, stdout lines)."""
    from app.cli.cli import run_cli

    def run(*argv: str):
        code = run_cli(list(argv))
        out = capsys.readouterr().out
        return code, [line for line in out.splitlines() if line]

    return run
