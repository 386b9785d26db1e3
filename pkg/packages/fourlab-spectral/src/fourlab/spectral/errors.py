"""Exceptions raised by the spectral substrate."""

from __future__ import annotations


class ResolutionError(ValueError):
    """A requested band, shell or dilation does not fit below the grid's Nyquist mode."""


class DecayError(ValueError):
    """A field that must be localized carries significant amplitude at the domain edge."""
