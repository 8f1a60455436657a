"""Cyclic base orderings of graphs."""
