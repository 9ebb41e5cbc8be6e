import os
import json
from fractions import Fraction

from logger import logger_error


def _default(value):
    if isinstance(value, Fraction):
        return str(value) if value.denominator != 1 else value.numerator
    if hasattr(value, "to_dict"):
        return value.to_dict()
    if hasattr(value, "item"):
        return value.item()
    raise TypeError(f"{type(value).__name__} is not JSON serializable")


def to_json(data, indent=None) -> str:
    return json.dumps(data, default=_default, ensure_ascii=False, indent=indent)


def load_json(file_path):
    """
    Load JSON data from a file.

    Args:
        file_path (str): The path to the JSON file.

    Returns:
        dict: The loaded JSON data, or None when the file is missing or malformed.
    """
    try:
        with open(file_path, 'r', encoding='utf-8') as f:
            return json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        logger_error.error(f"❌ Error loading {file_path}: {e}")
        return None


def save_json(data, file_path):
    """
    Save data to a JSON file, creating the parent directory if needed.

    Args:
        data: JSON-compatible data; fractions and objects with to_dict() are converted.
        file_path (str): The path to the JSON file.
    """
    directory = os.path.dirname(file_path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(file_path, 'w', encoding='utf-8') as f:
        f.write(to_json(data, indent=2))
