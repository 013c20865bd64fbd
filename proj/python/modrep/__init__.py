"""Exact modular representation theory of finite matrix groups.

Thin wrapper over the compiled core: every function takes/returns plain
Python dicts mirroring the CLI's JSON payloads. Large integers arrive as
decimal strings once they leave the 2**53 range; cyclotomic values are
``{"order": m, "coords": [...]}`` with rational coordinates as strings.
"""

import json as _json

from . import _core

__version__ = _core.__version__

__all__ = [
    "chartable",
    "brauertable",
    "decomp",
    "cartan",
    "blocks",
    "tower",
    "sl2_closed_form",
    "verify_paper_example",
    "sl2_spec",
]


def sl2_spec(p, n):
    """Group spec for SL2(Z/p^n)."""
    return {"family": "sl2", "p": p, "n": n}


def _spec_str(spec):
    if isinstance(spec, str):
        return spec
    return _json.dumps(spec)


def chartable(spec):
    """Ordinary character table of the group described by ``spec``."""
    return _json.loads(_core.chartable_json(_spec_str(spec)))


def brauertable(spec, p, field_degree=1, seed=0):
    """Brauer character table over GF(p^field_degree)."""
    return _json.loads(
        _core.brauertable_json(_spec_str(spec), p, field_degree, seed))


def decomp(spec, p, field_degree=1, seed=0):
    """Decomposition matrix D."""
    return _json.loads(_core.decomp_json(_spec_str(spec), p, field_degree, seed))


def cartan(spec, p, field_degree=1, seed=0):
    """Decomposition matrix, Cartan matrix C = D^T D and block partition."""
    return _json.loads(_core.cartan_json(_spec_str(spec), p, field_degree, seed))


def blocks(spec, p, field_degree=1, seed=0):
    """Block partition of ordinary irreducibles and simples."""
    return _json.loads(_core.blocks_json(_spec_str(spec), p, field_degree, seed))


def tower(p, depth=2, n_max=3, seed=0):
    """SL2 congruence tower: C1, B, and C_n = B^(n-1) C_1 for n <= n_max."""
    return _json.loads(_core.tower_json(p, depth, n_max, seed))


def sl2_closed_form(n):
    """Closed-form Cartan matrix of SL2(Z/3^n) and its determinant."""
    return _json.loads(_core.sl2_closed_form_json(n))


def verify_paper_example(seed=0):
    """Recompute the SL2(Z_3) worked example; returns the per-check report."""
    return _json.loads(_core.verify_paper_example_json(seed))


def matrix_rows(m):
    """Rows of a serialized integer matrix as Python ints."""
    entries = [int(v) for v in m["entries"]]
    cols = m["cols"]
    return [entries[i * cols:(i + 1) * cols] for i in range(m["rows"])]
