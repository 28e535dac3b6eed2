"""EVA corpus statistics toolkit and self-citation pseudo-text generator."""

__version__ = "0.1.0"
