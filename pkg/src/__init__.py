"""
Footprint toolkit.

Exact computation of the minimum distance, footprint and Vasconcelos
functions of graded ideals over prime fields, with the Hilbert-series,
complete-intersection and edge-ideal tools they rely on.
"""

__version__ = "1.0.0"
