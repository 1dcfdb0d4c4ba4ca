from mfnet.core.sinks.ndjson import write_ndjson

__all__ = ("write_ndjson",)
