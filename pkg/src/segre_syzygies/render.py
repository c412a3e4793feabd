"""Text, JSON and LaTeX renderings of Betti tables and resolutions.

The resolution attached to a table reads ``F_p = (+)_t R_{p,t} ox S(-t)``,
i.e. the twist of every summand is minus its internal degree.  JSON output
follows the schema::

    {"m":..,"n":..,"a":..,"b":..,"entries":[
        {"p":..,"t":..,"dim":..,
         "components":[{"lambda":[..],"mu":[..],"mult":..,"dim":..}]}]}

and round-trips byte-identically through :func:`parse_json`.
"""

from __future__ import annotations

import json

from .engine import BettiTable, SyzygyComponent


def _structure_sheaf(table: BettiTable, latex: bool) -> str:
    name = r"\mathcal{O}_{X}" if latex else "O_X"
    if (table.a, table.b) != (0, 0):
        return f"{name}({table.a},{table.b})"
    return name


def _free_module(t: int, dim: int, latex: bool) -> str:
    base = r"\mathcal{O}" if latex else "O"
    twist = "" if t == 0 else f"(-{t})"
    power = "" if dim == 1 else (f"^{{{dim}}}" if latex else f"^{dim}")
    return f"{base}{twist}{power}"


def resolution_chain(table: BettiTable, latex: bool = False) -> str:
    """The resolution as a chain of arrows ending in the structure sheaf."""
    betti = table.betti
    by_p: dict[int, list[tuple[int, int]]] = {}
    for (p, t), dim in sorted(betti.items()):
        by_p.setdefault(p, []).append((t, dim))
    arrow = r" \longrightarrow " if latex else " \u2192 "
    plus = r" \oplus " if latex else " \u2295 "
    pieces = []
    for p in sorted(by_p, reverse=True):
        pieces.append(
            plus.join(
                _free_module(t, dim, latex)
                for t, dim in sorted(by_p[p], reverse=True)
            )
        )
    chain = arrow.join(["0", *pieces, _structure_sheaf(table, latex), "0"])
    return chain


def render_text(table: BettiTable) -> str:
    lines = [
        f"Betti table for P(k^{table.m}) x P(k^{table.n}), "
        f"twist ({table.a}, {table.b})"
    ]
    for (p, t), comps in table.sorted_entries():
        dim = sum(c.dim for c in comps)
        lines.append(f"p={p} t={t} dim={dim}")
        for c in comps:
            lines.append(
                f"  lambda={list(c.lam)} mu={list(c.mu)} mult={c.mult} dim={c.dim}"
            )
    lines.append("resolution: " + resolution_chain(table))
    return "\n".join(lines) + "\n"


def render_json(table: BettiTable) -> str:
    doc = {
        "m": table.m,
        "n": table.n,
        "a": table.a,
        "b": table.b,
        "entries": [
            {
                "p": p,
                "t": t,
                "dim": sum(c.dim for c in comps),
                "components": [
                    {
                        "lambda": list(c.lam),
                        "mu": list(c.mu),
                        "mult": c.mult,
                        "dim": c.dim,
                    }
                    for c in comps
                ],
            }
            for (p, t), comps in table.sorted_entries()
        ],
    }
    return json.dumps(doc, separators=(",", ":")) + "\n"


def parse_json(text: str) -> BettiTable:
    """Inverse of :func:`render_json` (component cores are not on the wire)."""
    doc = json.loads(text)
    entries: dict[tuple[int, int], tuple[SyzygyComponent, ...]] = {}
    max_t = 0
    for entry in doc["entries"]:
        p, t = entry["p"], entry["t"]
        max_t = max(max_t, t)
        comps = tuple(
            SyzygyComponent(
                tuple(c["lambda"]), tuple(c["mu"]), c["mult"], c["dim"], p, t, ()
            )
            for c in entry["components"]
        )
        entries[(p, t)] = comps
    return BettiTable(doc["m"], doc["n"], doc["a"], doc["b"], max_t, entries)


def render_latex(table: BettiTable) -> str:
    """A compilable displayed equation with the resolution chain."""
    return "\\[\n" + resolution_chain(table, latex=True) + "\n\\]\n"


def render(table: BettiTable, fmt: str) -> str:
    if fmt == "text":
        return render_text(table)
    if fmt == "json":
        return render_json(table)
    if fmt == "latex":
        return render_latex(table)
    raise ValueError(f"unknown format {fmt!r}")
