"""First homology of the Milnor fiber boundary of line arrangements.

Arrangements are dicts, either {"lines": [[a, b, c], ...]} (ints or "p/q"
strings) or {"n": n, "points": [[i, j, ...], ...]}. Graphs use the same JSON
layout as the command line tool.
"""

import json

from . import _core
from ._core import MfbError

__all__ = [
    "MfbError",
    "betti_formula",
    "boundary_graph",
    "build_An",
    "build_Xn",
    "build_string",
    "gamma_c",
    "generate_family",
    "generic_h1_closed_form",
    "homology",
    "incidence",
    "lemma_identities_hold",
    "probe_conjecture",
    "random_lines",
    "run_script",
    "smith_normal_form",
    "to_dot",
]


def _dump(obj):
    return obj if isinstance(obj, str) else json.dumps(obj)


def _group(text):
    g = json.loads(text)
    g["factors"] = [int(d) for d in g["factors"]]
    return g


def generate_family(family, n):
    return json.loads(_core.generate_family(family, n))


def random_lines(n, bound=5, seed=20240101):
    return json.loads(_core.random_lines(n, bound, seed))


def incidence(arrangement):
    return json.loads(_core.incidence(_dump(arrangement)))


def gamma_c(arrangement):
    return json.loads(_core.gamma_c(_dump(arrangement)))


def boundary_graph(arrangement, reduce=False):
    return json.loads(_core.boundary_graph(_dump(arrangement), reduce))


def homology(arrangement_or_graph, reduce=False):
    """{"rank": r, "factors": [d1, ...]} with d1 | d2 | ..."""
    return _group(_core.homology(_dump(arrangement_or_graph), reduce))


def betti_formula(arrangement):
    return _core.betti_formula(_dump(arrangement))


def probe_conjecture(arrangement):
    r = json.loads(_core.probe_conjecture(_dump(arrangement)))
    r["factors"] = [int(d) for d in r["factors"]]
    return r


def build_string(a, b, c, plus=False):
    return json.loads(_core.build_string(a, b, c, plus))


def run_script(graph, moves):
    return json.loads(_core.run_script(_dump(graph), _dump(moves)))


def to_dot(arrangement_or_graph, reduce=False):
    return _core.to_dot(_dump(arrangement_or_graph), reduce)


def smith_normal_form(rows):
    """(invariant factors, corank) of an integer matrix given as a list of rows."""
    factors, corank = _core.smith_normal_form([[str(int(x)) for x in row] for row in rows])
    return [int(d) for d in factors], corank


def build_An(n):
    return [[int(x) for x in row] for row in _core.build_An(n)]


def build_Xn(n):
    return [[int(x) for x in row] for row in _core.build_Xn(n)]


def generic_h1_closed_form(n):
    return _group(_core.generic_h1_closed_form(n))


def lemma_identities_hold(n):
    return _core.lemma_identities_hold(n)
