"""flat-models

Exact counts of finite flat models of the rank-two constant group scheme, with
namespaces for:
- arith (GF(p^k), truncated Laurent polynomials), counting, config, observability, exporters
"""

__version__ = "0.1.0"

__all__ = [
    "arith",
    "counting",
    "config",
    "core",
    "observability",
    "exporters",
    "__version__",
]
