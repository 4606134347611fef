"""HTTP facade over the graph and the dataflow engine."""

from .app import ServiceConfig, create_app, load_graph, serve

__all__ = ["ServiceConfig", "create_app", "load_graph", "serve"]
