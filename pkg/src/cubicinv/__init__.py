"""Invariant (1-factor, two-cycle 2-factor) partitions of cubic
vertex-transitive graphs: family constructors, explicit automorphisms, a
parameter classifier, and brute-force verification oracles."""

__version__ = "0.1.0"
