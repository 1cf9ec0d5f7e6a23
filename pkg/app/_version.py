__all__ = ["__version__", "RECORD_FORMAT_VERSION"]
__version__ = "0.3.0"
# Bump when the on-disk TSV record layout or its escaping changes.
RECORD_FORMAT_VERSION = "1"
