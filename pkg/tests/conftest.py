import random
from pathlib import Path

import pytest

from burstcheck import Graph, parse_graph6, validate

REPO = Path(__file__).resolve().parent.parent
DATA = REPO / "data"
CORPUS = DATA / "corpus"
GOLDEN = Path(__file__).resolve().parent / "golden"

KNOWN_CLASS_COUNTS = {0: 1, 1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346}


def corpus_lines(n: int) -> list[bytes]:
    return [
        line.strip()
        for line in (CORPUS / f"graphs_n{n}.g6").read_bytes().splitlines()
        if line.strip()
    ]


def corpus_graphs(n: int) -> list[Graph]:
    return [parse_graph6(line) for line in corpus_lines(n)]


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0xBACC)


def assert_valid(g: Graph) -> None:
    validate(g)
