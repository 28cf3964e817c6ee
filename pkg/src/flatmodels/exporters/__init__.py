"""Output rendering and sinks."""

from .render import render_csv, render_json, render_plain, render_table, write_output

__all__ = ["render_csv", "render_json", "render_plain", "render_table", "write_output"]
