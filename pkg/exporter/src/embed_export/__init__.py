"""Pooled transformer embedding exporter for tweet datasets."""

from .export import ExportConfig, ExportError, export, read_dataset_tsv

__version__ = "0.1.0"

__all__ = ["ExportConfig", "ExportError", "export", "read_dataset_tsv"]
