import random

import pytest

from pfg import Pangenome, TriggerSet, build_graph

RUNNING_SEQUENCES = [("s1", "CACGTACT"), ("s2", "CACACT"), ("s3", "CACGACT")]
RUNNING_TRIGGERS = ["AC", "CG"]

# (i, SA, LCP, ID, pos) rows of the running example's suffix table
SUFFIX_TABLE_ROWS = [
    (0, 30, -1, 6, 0),
    (1, 29, 0, 5, 5),
    (2, 4, 1, 0, 4),
    (3, 8, 3, 1, 3),
    (4, 14, 1, 2, 5),
    (5, 18, 2, 3, 3),
    (6, 23, 3, 4, 4),
    (7, 13, 0, 2, 4),
    (8, 12, 1, 2, 3),
    (9, 27, 0, 5, 3),
    (10, 2, 3, 0, 2),
    (11, 16, 3, 3, 1),
    (12, 21, 5, 4, 2),
    (13, 0, 2, 0, 0),
    (14, 5, 2, 1, 0),
    (15, 9, 2, 2, 0),
    (16, 28, 0, 5, 4),
    (17, 3, 2, 0, 3),
    (18, 17, 2, 3, 2),
    (19, 22, 4, 4, 3),
    (20, 1, 1, 0, 1),
    (21, 15, 4, 3, 0),
    (22, 6, 1, 1, 1),
    (23, 19, 2, 4, 0),
    (24, 24, 2, 5, 0),
    (25, 10, 1, 2, 1),
    (26, 7, 0, 1, 2),
    (27, 20, 1, 4, 1),
    (28, 25, 1, 5, 1),
    (29, 11, 0, 2, 2),
    (30, 26, 1, 5, 2),
]

# id -> (length, [(start, rank), ...]) rows of the running example's segment table
SEGMENT_TABLE_ROWS = {
    0: (4, [(9, 9)]),
    1: (3, [(15, 13), (1, 14)]),
    2: (5, [(18, 1), (5, 2), (11, 3)]),
    3: (3, [(8, 4), (14, 5), (0, 6)]),
    4: (4, [(16, 7)]),
    5: (5, [(2, 8)]),
}

FULL_SA = [9, 15, 1, 18, 5, 11, 8, 14, 0, 10, 16, 2, 19, 6, 12, 17, 3, 20, 7, 13, 4]


@pytest.fixture
def pangenome():
    return Pangenome(sequences=list(RUNNING_SEQUENCES))


@pytest.fixture
def triggers():
    return TriggerSet.from_words(RUNNING_TRIGGERS)


@pytest.fixture
def graph(pangenome, triggers):
    return build_graph(pangenome, triggers)


def random_instance(rng: random.Random):
    """A random pangenome plus trigger set, as used by the property tests."""
    k = rng.choice([1, 2, 3])
    words = {
        "".join(rng.choice("ACGT") for _ in range(k))
        for _ in range(rng.randint(1, 4))
    }
    n_seqs = rng.randint(1, 8)
    sequences = []
    for j in range(n_seqs):
        length = rng.randint(10, 2000)
        sequences.append((f"seq{j}", "".join(rng.choices("ACGT", k=length))))
    return Pangenome(sequences=sequences), TriggerSet.from_words(words)
