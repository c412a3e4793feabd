"""Shipped errata fixtures: printed-versus-computed value pairs.

The fixtures document known misprints in previously published values for
the worked examples (resolution twists, one exponent, multiplication-map
indices).  ``--show-errata`` on the command line prints the fixtures file
verbatim; golden tests regenerate every ``computed`` field from the engine
so the discrepancies stay documented rather than hidden.
"""

from __future__ import annotations

import json
from importlib import resources


def errata_bytes() -> bytes:
    return (
        resources.files("segre_syzygies").joinpath("data/errata.json").read_bytes()
    )


def errata_text() -> str:
    return errata_bytes().decode("utf-8")


def load_errata() -> dict:
    return json.loads(errata_text())
