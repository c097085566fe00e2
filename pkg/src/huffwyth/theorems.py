"""Closed forms for weight sequences minimizing cost over maximum-height trees.

Among all non-decreasing positive integer sequences of length n >= 3 whose
optimal prefix-code tree is elongated (every sibling pair contains a leaf,
so the tree has maximum height n-1), the minimum-cost representatives and
their weighted external path lengths have closed forms:

  absolutely ordered class
      P = F(1), F(2), ..., F(n)
      cost = F(n+4) - (n+4)

  k-ordered class, 0 <= k <= n-3
      p1 = 1
      pi = F(i-1)                    for i = 2..k+2
      pi = w[F(k+2)][i-k-3]          for i = k+3..n
      cost = F(n+3) + F(n-k+1) - (n-k+3)

  where w is the generalized Wythoff array.  The Wythoff tail can also be
  written purely in Fibonacci numbers:

      pi = F(i-1) + F(i-k-3)         for i = k+3..n

  The boundary cases have familiar shapes: the 0-ordered sequence is
  1, 1, L(1), ..., L(n-2) (Lucas numbers) and the (n-3)-ordered sequence is
  1, F(1), ..., F(n-1), with costs F(n+3) + F(n+1) - (n+3) and F(n+3) - 3.
"""

from .numbers import fib, lucas
from .wythoff import wythoff_row

__all__ = [
    "SizeTooSmallError",
    "KOutOfRangeError",
    "min_abs_sequence",
    "min_abs_cost",
    "min_k_sequence",
    "min_k_sequence_fib_form",
    "min_k_cost",
    "corollary_sequences",
]


class SizeTooSmallError(ValueError):
    """Raised when the sequence size n is below 3."""


class KOutOfRangeError(ValueError):
    """Raised when k falls outside 0..n-3."""


def _check_n(n: int) -> None:
    if n < 3:
        raise SizeTooSmallError(f"need n >= 3, got {n}")


def _check_k(n: int, k: int) -> None:
    _check_n(n)
    if not 0 <= k <= n - 3:
        raise KOutOfRangeError(f"need 0 <= k <= n-3 = {n - 3}, got {k}")


def min_abs_sequence(n: int) -> tuple[int, ...]:
    """The minimizing absolutely ordered sequence F(1), ..., F(n)."""
    _check_n(n)
    seq = []
    a, b = 1, 1
    for _ in range(n):
        seq.append(a)
        a, b = b, a + b
    return tuple(seq)


def min_abs_cost(n: int) -> int:
    """Cost of the minimizing absolutely ordered sequence: F(n+4) - (n+4)."""
    _check_n(n)
    return fib(n + 4) - (n + 4)


def min_k_sequence(n: int, k: int) -> tuple[int, ...]:
    """The minimizing k-ordered sequence of length n, 0 <= k <= n-3.

    A prefix of Fibonacci numbers followed by the Wythoff row whose index
    is F(k+2); see the module docstring for the exact indexing.
    """
    _check_k(n, k)
    seq = [1]
    a, b = 1, 1
    for _ in range(k + 1):          # p2 .. p(k+2) = F(1) .. F(k+1)
        seq.append(a)
        a, b = b, a + b
    seq.extend(wythoff_row(fib(k + 2), n - k - 2))
    return tuple(seq)


def min_k_sequence_fib_form(n: int, k: int) -> tuple[int, ...]:
    """Same sequence as min_k_sequence, via pi = F(i-1) + F(i-k-3) for the tail."""
    _check_k(n, k)
    seq = [1]
    for i in range(2, k + 4):       # p2 .. p(k+3) = F(1) .. F(k+2)
        seq.append(fib(i - 1))
    for i in range(k + 4, n + 1):
        seq.append(fib(i - 1) + fib(i - k - 3))
    return tuple(seq)


def min_k_cost(n: int, k: int) -> int:
    """Cost of the minimizing k-ordered sequence: F(n+3) + F(n-k+1) - (n-k+3)."""
    _check_k(n, k)
    return fib(n + 3) + fib(n - k + 1) - (n - k + 3)


def corollary_sequences(n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """The two boundary sequences for size n.

    Returns (1, 1, L(1), ..., L(n-2)), the 0-ordered minimizer, and
    (1, F(1), ..., F(n-1)), the (n-3)-ordered one.
    """
    _check_n(n)
    lucas_form = (1, 1) + tuple(lucas(i) for i in range(1, n - 1))
    fib_form = (1,) + tuple(fib(i) for i in range(1, n))
    return lucas_form, fib_form
