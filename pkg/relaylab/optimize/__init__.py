from .export import SURFACE_CSV_COLUMNS, export_filename, surface_to_csv, surface_to_json
from .sweep import fixed_snr_maximizer, maximize_gap, sweep

__all__ = [
    "SURFACE_CSV_COLUMNS",
    "export_filename",
    "fixed_snr_maximizer",
    "maximize_gap",
    "surface_to_csv",
    "surface_to_json",
    "sweep",
]
