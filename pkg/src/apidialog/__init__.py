"""Interactive API recommendation over a behavior knowledge graph."""

__version__ = "0.1.0"
