"""Causal-influence measures on finite distributions, Markov boundary discovery
and tests for whether a target's Markov boundary is unique.
"""
__version__ = "0.1.1"
