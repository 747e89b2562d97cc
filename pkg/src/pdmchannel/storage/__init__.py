"""Report and CSV writers."""

from pdmchannel.storage.reports import (
    SPECTRUM_HEADER,
    field_rows,
    format_float,
    render_csv,
    render_json,
    spectrum2d_rows,
    spectrum3d_rows,
    write_text,
)

__all__ = [
    "SPECTRUM_HEADER",
    "field_rows",
    "format_float",
    "render_csv",
    "render_json",
    "spectrum2d_rows",
    "spectrum3d_rows",
    "write_text",
]
