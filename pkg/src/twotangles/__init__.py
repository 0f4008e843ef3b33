"""Symbolic engine for unframed unoriented 2-tangles in 4 dimensions."""
