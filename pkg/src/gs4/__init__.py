"""Named GS4 derivations, axiom-graph semantics and the BLG proof system."""

__version__ = "0.1.0"
