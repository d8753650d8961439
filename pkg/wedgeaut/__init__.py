"""
wedgeaut - order calculator for self-equivalence groups of wedges of suspensions
"""
__version__ = "0.1.0"
