"""Closed-form counts that the enumerations are checked against."""

from .errors import SizeMismatch


def oriented_incident(k: int, n: int) -> int:
    """Oriented incident circles with k dots on the left; zero outside 0 <= k <= n-3."""
    if k < 0 or k > n - 3:
        return 0
    return 2 * (k + 1) * (n - k - 2)


def incident_pair(k: int, l: int) -> int:
    if k == l:
        return (k + 1) ** 2
    return 2 * (k + 1) * (l + 1)


def avoidant_pair(k: int, l: int) -> int:
    if k < 1 or l < 1 or k + l < 4:
        raise SizeMismatch(f"Avoidant partitions need k, l >= 1 and k + l >= 4 (got {k}, {l}).")
    if k == l:
        return k * k - k + 1
    return 2 * k * l - k - l + 2


def oriented_separable(k: int, n: int) -> int:
    return 2 * n * k - 2 * k * k - n + 2


def hull_faces(n: int) -> int:
    return 2 * n - 4


def hull_edges(n: int) -> int:
    return 3 * n - 6


def strata(k: int, n: int) -> tuple:
    """(whites, blacks, edges, regions) of the order-k decomposition."""
    vertices = 2 * n * k - 2 * k * k - n
    return (oriented_incident(k - 2, n), oriented_incident(k - 1, n), 3 * vertices, vertices + 2)


def side_pairs(n: int) -> list:
    """Unordered {k, l} with k + l = n - 3, as (k, l) with k <= l."""
    m = n - 3
    return [(k, m - k) for k in range(0, m // 2 + 1)]


def avoidant_pairs(n: int) -> list:
    return [(k, n - k) for k in range(1, n // 2 + 1)]
