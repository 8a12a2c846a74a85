"""Prometheus metrics."""

from prometheus_client import Counter

COMPUTATIONS = Counter(
    "toricdef_computations_total",
    "Number of use-case invocations",
    ["command"],
)
