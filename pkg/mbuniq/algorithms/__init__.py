"""Markov boundary discovery and uniqueness testing over a conditional
independence decider.
"""
