"""Statistical conditional-independence testing on observed samples, and the
deciders that let the boundary algorithms run on either exact laws or data.
"""
