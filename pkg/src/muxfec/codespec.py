"""Code-spec files: the on-disk JSON form of a built merged code.

A spec file carries everything needed to reuse the code (field, merged
matrix) and to reproduce the build bit-for-bit (parameters plus the
master seed).  Serialization is canonical (sorted keys, fixed
separators) so identical builds give byte-identical files.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Union

from . import __version__
from .galois import FieldSpec
from .linalg import Matrix
from .muxcode import MuxCode, MuxParams, select_parameters
from .singlecode import BlockCode, special_position


def spec_dict(code: MuxCode) -> dict:
    p = code.params
    return {
        "T_v": p.T_v,
        "T_u": p.T_u,
        "B": p.B,
        "N": p.N,
        "W": p.W,
        "T_u_prime": p.T_u_prime,
        "regime": p.regime,
        "seed": code.seed,
        "g1_seed": code.g1.seed,
        "g2_seed": code.g2.seed,
        "q": code.field.q,
        "ext_poly": list(code.field.ext_poly()),
        "matrix": list(code.G.data),
        "provenance": {"tool": "muxfec", "version": __version__},
    }


def dumps(code: MuxCode) -> str:
    return json.dumps(spec_dict(code), sort_keys=True, separators=(",", ": "), indent=1) + "\n"


def save(code: MuxCode, path: Union[str, Path]) -> None:
    Path(path).write_text(dumps(code), encoding="utf-8")


def params_from_dict(d: dict) -> MuxParams:
    return select_parameters(
        d["T_v"], d["T_u"], d["B"], d["N"], T_u_prime=d.get("T_u_prime"), W=d.get("W")
    )


def load(path: Union[str, Path]) -> MuxCode:
    """Rehydrate a MuxCode from a spec file (matrix taken as stored)."""
    d = json.loads(Path(path).read_text(encoding="utf-8"))
    try:
        params = params_from_dict(d)
        field = FieldSpec(d["q"], d["ext_poly"][0], d["ext_poly"][1])
        merged = Matrix(params.k_v + params.k_u, params.n, field, tuple(d["matrix"]))
        g1 = _constituent(
            merged, field, params.T_v_prime, params, rows=range(params.k_v),
            cols=range(params.k_v + params.B), variant="base-field-special",
            seed=d.get("g1_seed", d["seed"]),
        )
        g2 = _constituent(
            merged, field, params.T_u_prime, params,
            rows=range(params.k_v, params.k_v + params.k_u),
            cols=range(params.h, params.n), variant="extension-special",
            seed=d.get("g2_seed", d["seed"]),
        )
        return MuxCode(params, merged, g1, g2, field, d["seed"])
    except (KeyError, TypeError, IndexError) as exc:
        raise ValueError(f"malformed code spec: {exc}") from exc


def _constituent(merged, field, T, params, rows, cols, variant, seed) -> BlockCode:
    k = T - params.N + 1
    g = merged.submatrix(rows, cols)
    return BlockCode(
        T, params.B, params.N, k, k + params.B, g, field, seed, variant,
        special_position(T, params.B, params.N),
    )
