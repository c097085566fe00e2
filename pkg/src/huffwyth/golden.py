"""Reference traces for the five worked size-10 examples.

Each record carries the initial sequence, every intermediate sequence row,
and the final total, exactly as the closed-form constructions produce them:
one absolutely ordered example and the k-ordered examples for k = 0 (Lucas
weights), k = 1, k = 4, and k = 7 (shifted Fibonacci weights).  The selftest
recomputes the traces and diffs them against these rows and against the
rendered fixture files shipped under fixtures/.
"""

from dataclasses import dataclass

__all__ = ["GoldenExample", "GOLDEN_EXAMPLES"]


@dataclass(frozen=True)
class GoldenExample:
    name: str               # fixture file stem
    title: str
    n: int
    k: int | None           # None means absolutely ordered
    weights: tuple[int, ...]
    rows: tuple[tuple[int, ...], ...]
    total: int


GOLDEN_EXAMPLES = (
    GoldenExample(
        name="example1",
        title="absolutely ordered, n=10",
        n=10,
        k=None,
        weights=(1, 1, 2, 3, 5, 8, 13, 21, 34, 55),
        rows=(
            (1, 1, 2, 3, 5, 8, 13, 21, 34, 55),
            (2, 2, 3, 5, 8, 13, 21, 34, 55),
            (3, 4, 5, 8, 13, 21, 34, 55),
            (5, 7, 8, 13, 21, 34, 55),
            (8, 12, 13, 21, 34, 55),
            (13, 20, 21, 34, 55),
            (21, 33, 34, 55),
            (34, 54, 55),
            (55, 88),
            (143,),
        ),
        total=143,
    ),
    GoldenExample(
        name="example2",
        title="0-ordered, n=10",
        n=10,
        k=0,
        weights=(1, 1, 1, 3, 4, 7, 11, 18, 29, 47),
        rows=(
            (1, 1, 1, 3, 4, 7, 11, 18, 29, 47),
            (1, 2, 3, 4, 7, 11, 18, 29, 47),
            (3, 3, 4, 7, 11, 18, 29, 47),
            (4, 6, 7, 11, 18, 29, 47),
            (7, 10, 11, 18, 29, 47),
            (11, 17, 18, 29, 47),
            (18, 28, 29, 47),
            (29, 46, 47),
            (47, 75),
            (122,),
        ),
        total=122,
    ),
    GoldenExample(
        name="example3",
        title="1-ordered, n=10",
        n=10,
        k=1,
        weights=(1, 1, 1, 2, 4, 6, 10, 16, 26, 42),
        rows=(
            (1, 1, 1, 2, 4, 6, 10, 16, 26, 42),
            (1, 2, 2, 4, 6, 10, 16, 26, 42),
            (2, 3, 4, 6, 10, 16, 26, 42),
            (4, 5, 6, 10, 16, 26, 42),
            (6, 9, 10, 16, 26, 42),
            (10, 15, 16, 26, 42),
            (16, 25, 26, 42),
            (26, 41, 42),
            (42, 67),
            (109,),
        ),
        total=109,
    ),
    GoldenExample(
        name="example4",
        title="4-ordered, n=10",
        n=10,
        k=4,
        weights=(1, 1, 1, 2, 3, 5, 8, 14, 22, 36),
        rows=(
            (1, 1, 1, 2, 3, 5, 8, 14, 22, 36),
            (1, 2, 2, 3, 5, 8, 14, 22, 36),
            (2, 3, 3, 5, 8, 14, 22, 36),
            (3, 5, 5, 8, 14, 22, 36),
            (5, 8, 8, 14, 22, 36),
            (8, 13, 14, 22, 36),
            (14, 21, 22, 36),
            (22, 35, 36),
            (36, 57),
            (93,),
        ),
        total=93,
    ),
    GoldenExample(
        name="example5",
        title="7-ordered, n=10",
        n=10,
        k=7,
        weights=(1, 1, 1, 2, 3, 5, 8, 13, 21, 34),
        rows=(
            (1, 1, 1, 2, 3, 5, 8, 13, 21, 34),
            (1, 2, 2, 3, 5, 8, 13, 21, 34),
            (2, 3, 3, 5, 8, 13, 21, 34),
            (3, 5, 5, 8, 13, 21, 34),
            (5, 8, 8, 13, 21, 34),
            (8, 13, 13, 21, 34),
            (13, 21, 21, 34),
            (21, 34, 34),
            (34, 55),
            (89,),
        ),
        total=89,
    ),
)
