from configparser import (
    ConfigParser,
    Error as ConfigParserError
)
from pathlib import Path
from typing import (
    Dict,
    Union
)

import logging
logger = logging.getLogger(__name__)

# Flat files carry no section, one is prepended before parsing
RUN_SECTION = "run"

def read_run_config_file(path: Union[str, Path]) -> Dict[str, str]:
    """
    Reads a flat key/value run-config file.

    Parameters:
    - path (str | Path): text file with one `key = value` per line and `#` comments

    Returns:
    The raw values keyed by name, in file order; keys keep their case.
    """
    path = Path(path)
    if not path.is_file():
        raise FileNotFoundError(f"Config file '{path}' does not exist")

    parser = ConfigParser(inline_comment_prefixes=("#",), interpolation=None)
    parser.optionxform = str
    try:
        parser.read_string(f"[{RUN_SECTION}]\n" + path.read_text(encoding="utf-8"), source=str(path))
    except ConfigParserError as e:
        raise ValueError(f"Invalid config file '{path}': {e}") from e
    if len(parser.sections()) != 1:
        raise ValueError(f"Config file '{path}' must be flat, found sections {parser.sections()[1:]}")

    values = dict(parser.items(RUN_SECTION))
    logger.debug(f"Read {len(values)} settings from '{path}'")
    return values

def parse_assignment(text: str) -> tuple:
    """ 'key=value' -> (key, value), both stripped """
    key, sep, value = text.partition("=")
    if not sep or not key.strip():
        raise ValueError(f"Expected key=value, got '{text}'")
    return key.strip(), value.strip()
