import datetime


def run_stamp() -> str:
    """Filesystem-safe stamp for report names."""
    return datetime.datetime.now().strftime("%Y%m%d_%H%M%S")
