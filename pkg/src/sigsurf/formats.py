"""JSON file formats for pairs, resolution graphs and spectral pairs.

::

    pairs file:     {"pairs": [[3, 2], [7, 2], [15, 2]]}
    graph file:     {"exceptional": [{"id": 0, "m": 10}], "arrowheads": [1, 2],
                     "edges": [[0, 1], [0, 2]]}
    spectral file:  {"entries": [{"alpha": "-1/6", "w": 1, "h": 1}, ...]}

Rationals are ``"p/q"`` strings (``"p"`` for integers).  ``dumps_*`` write
the canonical form, so loading and saving a canonical file reproduces it
byte for byte.
"""
from __future__ import annotations

import json
from pathlib import Path

from sigsurf.algebra import format_rational, parse_rational
from sigsurf.curves import PuiseuxPairs
from sigsurf.errors import InputError
from sigsurf.resolution import ResolutionGraph
from sigsurf.spectral import SpectralPairs


def _dump(obj):
    return json.dumps(obj) + "\n"


def _int(value, what):
    if isinstance(value, bool) or not isinstance(value, int):
        raise InputError(f"{what} must be an integer, got {value!r}")
    return value


def _require(data, key, kind):
    if not isinstance(data, dict) or key not in data:
        raise InputError(f"{kind} file needs a top-level {key!r} field")
    return data[key]


def pairs_from_dict(data) -> PuiseuxPairs:
    raw = _require(data, "pairs", "pairs")
    if not isinstance(raw, list):
        raise InputError("'pairs' must be a list of [m, n] lists")
    pairs = []
    for item in raw:
        if not isinstance(item, list) or len(item) != 2:
            raise InputError(f"each pair must be [m, n], got {item!r}")
        pairs.append((_int(item[0], "m"), _int(item[1], "n")))
    return PuiseuxPairs(tuple(pairs))


def pairs_to_dict(p: PuiseuxPairs):
    return {"pairs": [[m, n] for m, n in p.pairs]}


def graph_from_dict(data) -> ResolutionGraph:
    exc = _require(data, "exceptional", "graph")
    arrows = _require(data, "arrowheads", "graph")
    edges = _require(data, "edges", "graph")
    try:
        exceptional = tuple((_int(v["id"], "id"), _int(v["m"], "m")) for v in exc)
    except (TypeError, KeyError):
        raise InputError("each exceptional vertex must be {\"id\": int, \"m\": int}") from None
    if not isinstance(arrows, list) or not isinstance(edges, list):
        raise InputError("'arrowheads' and 'edges' must be lists")
    for e in edges:
        if not isinstance(e, list) or len(e) != 2:
            raise InputError(f"each edge must be [u, v], got {e!r}")
    return ResolutionGraph(
        exceptional=exceptional,
        arrowheads=tuple(_int(a, "arrowhead id") for a in arrows),
        edges=tuple((_int(a, "edge end"), _int(b, "edge end")) for a, b in edges),
    )


def graph_to_dict(G: ResolutionGraph):
    return {
        "exceptional": [{"id": v, "m": m} for v, m in G.exceptional],
        "arrowheads": list(G.arrowheads),
        "edges": [list(e) for e in G.edges],
    }


def spectral_from_dict(data) -> SpectralPairs:
    raw = _require(data, "entries", "spectral")
    if not isinstance(raw, list):
        raise InputError("'entries' must be a list")
    entries = []
    for item in raw:
        try:
            alpha = parse_rational(item["alpha"])
            entries.append((alpha, _int(item["w"], "w"), _int(item["h"], "h")))
        except (TypeError, KeyError):
            raise InputError(f"spectral entry must be {{alpha, w, h}}, got {item!r}") from None
        except ValueError as exc:
            raise InputError(str(exc)) from None
    return SpectralPairs(tuple(entries))


def spectral_to_dict(S: SpectralPairs):
    return {"entries": [{"alpha": format_rational(a), "w": w, "h": h} for a, w, h in S.entries]}


def dumps_pairs(p):
    return _dump(pairs_to_dict(p))


def dumps_graph(G):
    return _dump(graph_to_dict(G))


def dumps_spectral(S):
    return _dump(spectral_to_dict(S))


def _read(path):
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from None


def load_pairs(path):
    return pairs_from_dict(_read(path))


def load_graph(path):
    return graph_from_dict(_read(path))


def load_spectral(path):
    return spectral_from_dict(_read(path))


def save_pairs(p, path):
    Path(path).write_text(dumps_pairs(p), encoding="utf-8")


def save_graph(G, path):
    Path(path).write_text(dumps_graph(G), encoding="utf-8")


def save_spectral(S, path):
    Path(path).write_text(dumps_spectral(S), encoding="utf-8")
