"""Exact domination numbers on graphs and their Cartesian products."""
