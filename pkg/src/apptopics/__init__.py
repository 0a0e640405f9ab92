"""Classify mobile apps from text recoverable out of the app package itself.

The pipeline scans decompiled app directories for method names, XML string
values and GUI-image text, cleans the extracted tokens, fits a Gibbs-sampled
topic model, and scores the resulting categories against reference labels.
"""

__version__ = "0.1.0"
