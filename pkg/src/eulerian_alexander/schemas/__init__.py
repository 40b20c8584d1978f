"""JSON schemas for the ``--json`` output of each CLI command."""

import json
from importlib import resources


def load(command: str) -> dict:
    return json.loads(resources.files(__name__).joinpath(f"{command}.json").read_text(encoding="utf-8"))
