"""Gap surfaces as downloadable CSV and JSON."""

from relaylab.models import GapSurface, MaximizerRecord
from relaylab.utils.formatting import render_csv, render_json

SURFACE_CSV_COLUMNS = ["snr", "r0", "cutset", "new_bound", "gap"]


def surface_to_csv(surface: GapSurface) -> str:
    """One line per grid point in snr-major order."""
    return render_csv(SURFACE_CSV_COLUMNS, (row.model_dump() for row in surface.rows))


def surface_to_json(surface: GapSurface, maximizer: MaximizerRecord | None = None) -> str:
    """``{"rows": [...], "maximizer": {...}}``; a refined maximizer replaces the grid one."""
    return render_json(
        {
            "rows": surface.rows,
            "maximizer": maximizer if maximizer is not None else surface.maximizer,
        }
    )


def export_filename(fmt: str) -> str:
    return f"gap-surface.{fmt}"
