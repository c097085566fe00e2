"""Stepwise Huffman algorithm over integer weight sequences, with full traces.

Input is a non-decreasing sequence of n positive integer weights.  Each step
removes the two smallest entries, inserts their sum back into the sorted
remainder, and records the whole intermediate sequence; after n-1 steps a
single value remains, the sum of all weights.  The i-th step consumes the
sequence P(i-1) and produces P(i), with P(0) the input.

Ties.  When the merged sum equals an existing entry the insertion point is
ambiguous and a TiePolicy resolves it:

    MERGED_BEFORE_EQUALS    merged node goes in front of equal entries
    MERGED_AFTER_EQUALS     merged node goes behind equal entries

Both policies produce the same intermediate value sequences and the same
weighted external path length; only which node later merges consume differs,
hence the tree shape.  Placing the merged node before its equals consumes
composite nodes as early as possible and grows the tallest tree the input
admits, so inputs whose optimal tree can be elongated (every sibling pair
contains a leaf) actually come out elongated.  That makes
MERGED_BEFORE_EQUALS the default.

Trees.  When a merge pairs a leaf with a subtree, the leaf becomes the right
child; a chain of such merges therefore grows a left-sided tree, one where
the right node of every sibling pair is a leaf.

Order classes.  With p2(i), p3(i) the second and third entries of P(i):

    absolutely ordered    p2(i) <  p3(i) for all i = 0..n-3
    k-ordered             p2(i) == p3(i) for i = 0..k and
                          p2(i) <  p3(i) for i = k+1..n-3

The classification only involves the value sequences, so it is independent
of the tie policy.
"""

import json
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Union

__all__ = [
    "EmptySequenceError",
    "NotSortedError",
    "TooShortError",
    "TiePolicy",
    "DEFAULT_TIE_POLICY",
    "StepRecord",
    "HuffmanTrace",
    "Leaf",
    "Internal",
    "Node",
    "OrderKind",
    "OrderClass",
    "validate_weights",
    "run_huffman",
    "build_tree",
    "leaf_weights",
    "leaf_depths",
    "wepl",
    "codebook",
    "is_elongated",
    "is_left_sided",
    "classify_order",
    "classify_trace",
    "check_elongated_inequality",
    "trace_to_json",
    "trace_from_json",
]


class EmptySequenceError(ValueError):
    """Raised when a weight sequence is empty."""


class NotSortedError(ValueError):
    """Raised when a weight sequence is not non-decreasing."""


class TooShortError(ValueError):
    """Raised when a sequence is too short to classify (n < 3)."""


class TiePolicy(Enum):
    MERGED_BEFORE_EQUALS = "before"
    MERGED_AFTER_EQUALS = "after"


DEFAULT_TIE_POLICY = TiePolicy.MERGED_BEFORE_EQUALS


def validate_weights(weights: Iterable[int]) -> tuple[int, ...]:
    """Validate and normalize a weight sequence to a tuple.

    The sequence must be nonempty, every weight a positive integer, and the
    order non-decreasing.
    """
    seq = tuple(weights)
    if not seq:
        raise EmptySequenceError("weight sequence is empty")
    for w in seq:
        if not isinstance(w, int) or isinstance(w, bool) or w < 1:
            raise ValueError(f"weights must be positive integers, got {w!r}")
    for a, b in zip(seq, seq[1:]):
        if a > b:
            raise NotSortedError(f"weights must be non-decreasing, got {a} before {b}")
    return seq


@dataclass(frozen=True)
class StepRecord:
    """One merge step: step i (1-based) consumes input_seq = P(i-1).

    insert_pos is the 1-based position of the merged value within the step
    output P(i).
    """

    step_index: int
    input_seq: tuple[int, ...]
    merged_value: int
    insert_pos: int


@dataclass(frozen=True)
class HuffmanTrace:
    """Complete record of a Huffman run: input, all steps, final total."""

    initial: tuple[int, ...]
    steps: tuple[StepRecord, ...]
    total: int

    @property
    def size(self) -> int:
        return len(self.initial)

    def sequences(self) -> list[tuple[int, ...]]:
        """Return [P(0), P(1), ..., P(n-1)]; the last entry is (total,)."""
        if not self.steps:
            return [self.initial]
        seqs = [step.input_seq for step in self.steps]
        seqs.append((self.total,))
        return seqs

    def merged_values(self) -> list[int]:
        return [step.merged_value for step in self.steps]


def _insert_index(sorted_vals, value, tie_policy, key=None):
    if tie_policy is TiePolicy.MERGED_BEFORE_EQUALS:
        return bisect_left(sorted_vals, value, key=key)
    return bisect_right(sorted_vals, value, key=key)


def run_huffman(weights: Iterable[int], tie_policy: TiePolicy = DEFAULT_TIE_POLICY) -> HuffmanTrace:
    """Run the Huffman merge process and return its full trace.

    Raises EmptySequenceError, NotSortedError, or ValueError for invalid
    input.  The weights must already be sorted; callers wanting a
    sort-first behaviour sort before calling.
    """
    seq = validate_weights(weights)
    steps = []
    cur = list(seq)
    for i in range(1, len(seq)):
        merged = cur[0] + cur[1]
        rest = cur[2:]
        idx = _insert_index(rest, merged, tie_policy)
        steps.append(StepRecord(i, tuple(cur), merged, idx + 1))
        rest.insert(idx, merged)
        cur = rest
    return HuffmanTrace(seq, tuple(steps), sum(seq))


@dataclass(frozen=True)
class Leaf:
    weight: int


@dataclass(frozen=True)
class Internal:
    left: "Node"
    right: "Node"
    weight: int


Node = Union[Leaf, Internal]


def _merge_nodes(first: Node, second: Node) -> Internal:
    # A lone leaf always becomes the right child; otherwise keep queue order.
    total = first.weight + second.weight
    if isinstance(first, Leaf) and isinstance(second, Internal):
        return Internal(second, first, total)
    if isinstance(second, Leaf) and isinstance(first, Internal):
        return Internal(first, second, total)
    return Internal(first, second, total)


def build_tree(weights: Iterable[int], tie_policy: TiePolicy = DEFAULT_TIE_POLICY) -> Node:
    """Build the Huffman tree, resolving ties exactly as run_huffman does.

    The node queue mirrors the traced value sequences step for step, so the
    merged weights seen here equal the trace's merged values.
    """
    seq = validate_weights(weights)
    queue: list[Node] = [Leaf(w) for w in seq]
    while len(queue) > 1:
        node = _merge_nodes(queue[0], queue[1])
        rest = queue[2:]
        idx = _insert_index(rest, node.weight, tie_policy, key=lambda nd: nd.weight)
        rest.insert(idx, node)
        queue = rest
    return queue[0]


def _walk_leaves(tree: Node):
    """Yield (leaf, depth) in left-to-right order."""
    stack = [(tree, 0)]
    while stack:
        node, depth = stack.pop()
        if isinstance(node, Leaf):
            yield node, depth
        else:
            stack.append((node.right, depth + 1))
            stack.append((node.left, depth + 1))


def leaf_weights(tree: Node) -> list[int]:
    """Leaf weights in left-to-right order."""
    return [leaf.weight for leaf, _ in _walk_leaves(tree)]


def leaf_depths(tree: Node) -> list[int]:
    """Leaf depths in left-to-right order (root depth 0)."""
    return [depth for _, depth in _walk_leaves(tree)]


def wepl(tree: Node) -> int:
    """Weighted external path length: sum over leaves of depth * weight."""
    return sum(leaf.weight * depth for leaf, depth in _walk_leaves(tree))


def codebook(tree: Node) -> list[tuple[int, str]]:
    """Return (leaf index, codeword) pairs, leaves numbered left to right.

    Left edges emit '0', right edges '1'.  A single-leaf tree gets the
    empty codeword.
    """
    out = []
    stack = [(tree, "")]
    while stack:
        node, code = stack.pop()
        if isinstance(node, Leaf):
            out.append((len(out), code))
        else:
            stack.append((node.right, code + "1"))
            stack.append((node.left, code + "0"))
    return out


def _internal_nodes(tree: Node):
    stack = [tree]
    while stack:
        node = stack.pop()
        if isinstance(node, Internal):
            yield node
            stack.append(node.left)
            stack.append(node.right)


def is_elongated(tree: Node) -> bool:
    """True when every sibling pair contains at least one leaf.

    Equivalently the tree has the maximum height possible for its leaf
    count: a single leaf chain of internal nodes.
    """
    for node in _internal_nodes(tree):
        if isinstance(node.left, Internal) and isinstance(node.right, Internal):
            return False
    return True


def is_left_sided(tree: Node) -> bool:
    """True when the right node of every sibling pair is a leaf."""
    for node in _internal_nodes(tree):
        if not isinstance(node.right, Leaf):
            return False
    return True


class OrderKind(Enum):
    ABSOLUTELY_ORDERED = "absolutely-ordered"
    K_ORDERED = "k-ordered"
    UNORDERED = "unordered"


@dataclass(frozen=True)
class OrderClass:
    """Classification of a weight sequence by its trace order pattern."""

    kind: OrderKind
    k: int | None = None

    def __post_init__(self):
        if self.kind is OrderKind.K_ORDERED:
            if self.k is None or self.k < 0:
                raise ValueError("k-ordered classification needs k >= 0")
        elif self.k is not None:
            raise ValueError(f"{self.kind.value} classification carries no k")

    @classmethod
    def absolutely_ordered(cls) -> "OrderClass":
        return cls(OrderKind.ABSOLUTELY_ORDERED)

    @classmethod
    def k_ordered(cls, k: int) -> "OrderClass":
        return cls(OrderKind.K_ORDERED, k)

    @classmethod
    def unordered(cls) -> "OrderClass":
        return cls(OrderKind.UNORDERED)

    def __str__(self) -> str:
        if self.kind is OrderKind.K_ORDERED:
            return f"{self.k}-ordered"
        return self.kind.value


def classify_trace(trace: HuffmanTrace) -> OrderClass:
    """Classify the order pattern of an existing trace; needs size >= 3."""
    n = trace.size
    if n < 3:
        raise TooShortError(f"classification needs at least 3 weights, got {n}")
    seqs = trace.sequences()
    tie_rows = [i for i in range(n - 2) if seqs[i][1] == seqs[i][2]]
    if not tie_rows:
        return OrderClass.absolutely_ordered()
    if tie_rows == list(range(len(tie_rows))):
        return OrderClass.k_ordered(len(tie_rows) - 1)
    return OrderClass.unordered()


def classify_order(weights: Iterable[int]) -> OrderClass:
    """Classify a weight sequence as absolutely ordered, k-ordered, or unordered.

    The sequence is absolutely ordered when p2 < p3 strictly in every
    intermediate sequence P(0)..P(n-3), and k-ordered when p2 == p3 holds
    for exactly the first k+1 of them and p2 < p3 after.  Any other tie
    pattern is unordered.
    """
    return classify_trace(run_huffman(weights))


def check_elongated_inequality(trace: HuffmanTrace) -> bool:
    """Check p1 + p2 <= p4 in every intermediate sequence with >= 4 entries.

    Holding for all of P(0)..P(n-3) is sufficient for the input to admit an
    elongated optimal tree.
    """
    for seq in trace.sequences():
        if len(seq) >= 4 and seq[0] + seq[1] > seq[3]:
            return False
    return True


def trace_to_json(trace: HuffmanTrace, indent: int | None = None) -> str:
    """Serialize a trace to JSON with weights as decimal strings."""
    doc = {
        "initial": [str(w) for w in trace.initial],
        "steps": [
            {
                "i": step.step_index,
                "input": [str(w) for w in step.input_seq],
                "merged": str(step.merged_value),
                "pos": step.insert_pos,
            }
            for step in trace.steps
        ],
        "total": str(trace.total),
    }
    return json.dumps(doc, indent=indent)


def trace_from_json(text: str) -> HuffmanTrace:
    """Parse a trace produced by trace_to_json back into a HuffmanTrace."""
    try:
        doc = json.loads(text)
        initial = tuple(int(w) for w in doc["initial"])
        steps = tuple(
            StepRecord(
                step_index=int(entry["i"]),
                input_seq=tuple(int(w) for w in entry["input"]),
                merged_value=int(entry["merged"]),
                insert_pos=int(entry["pos"]),
            )
            for entry in doc["steps"]
        )
        total = int(doc["total"])
    except (KeyError, TypeError, json.JSONDecodeError) as exc:
        raise ValueError(f"malformed trace document: {exc}") from exc
    return HuffmanTrace(initial, steps, total)
