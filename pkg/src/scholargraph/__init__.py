"""Semantic knowledge graph engine for academic corpora.

Subpackages:

- ``corpus``: line-delimited corpus parsing, filtering, merging, coverage audit
- ``concepts``: candidate span extraction, QA-score concept labeling, BIO
  encoding, token-level metrics
- ``kg``: the typed triple store, graph construction, entity linking, Turtle
  serialization
- ``query``: fuzzy entity lookup and multi-hop expansion with simple-path
  scoring (compiled kernel with pure-Python fallback)
- ``dataflow``: typed component pipelines (querier / expander / comparer /
  viewers) and their executor
- ``service``: the HTTP facade and CLI entry points
"""

__version__ = "0.1.0"
