"""JSON encodings.  Complex numbers are ``[re, im]`` pairs throughout."""
from __future__ import annotations

import numpy as np

from .blaschke import BlaschkeProduct, make_blaschke
from .characterize import DecompositionResult
from .model_space import CoeffVector, OrthonormalBasis, basis_pair
from .operators import OperatorMatrix, SymbolPair


def complex_to_json(z) -> list[float]:
    z = complex(z)
    return [float(z.real), float(z.imag)]


def complex_from_json(obj) -> complex:
    if isinstance(obj, (int, float)):
        return complex(obj)
    re, im = obj
    return complex(float(re), float(im))


def blaschke_to_json(b: BlaschkeProduct) -> dict:
    return {"zeros": [complex_to_json(a) for a in b.zeros], "const": complex_to_json(b.const)}


def blaschke_from_json(obj: dict, **kwargs) -> BlaschkeProduct:
    zeros = [complex_from_json(a) for a in obj["zeros"]]
    const = complex_from_json(obj.get("const", [1.0, 0.0]))
    return make_blaschke(zeros, const, **kwargs)


def coeffs_to_json(v: CoeffVector | None) -> dict | None:
    if v is None:
        return None
    return {"coords": [complex_to_json(c) for c in v.coords]}


def coeffs_from_json(obj: dict, space: OrthonormalBasis) -> CoeffVector:
    return CoeffVector(space, [complex_from_json(c) for c in obj["coords"]])


def operator_to_json(A: OperatorMatrix) -> dict:
    return {
        "alpha": blaschke_to_json(A.domain.alpha),
        "beta": blaschke_to_json(A.codomain.alpha),
        "matrix": [[complex_to_json(x) for x in row] for row in A.entries],
    }


def operator_from_json(obj: dict, node_count: int | None = None, **kwargs) -> OperatorMatrix:
    alpha = blaschke_from_json(obj["alpha"], **kwargs)
    beta = blaschke_from_json(obj["beta"], **kwargs)
    dom, cod = basis_pair(alpha, beta, node_count)
    rows = obj["matrix"]
    entries = np.array([[complex_from_json(x) for x in row] for row in rows], dtype=complex)
    if entries.size == 0:
        entries = entries.reshape(cod.dimension, dom.dimension)
    return OperatorMatrix(dom, cod, entries)


def pair_to_json(pair: SymbolPair) -> dict:
    return {"chi": coeffs_to_json(pair.chi), "psi": coeffs_to_json(pair.psi)}


def pair_from_json(obj: dict, domain: OrthonormalBasis, codomain: OrthonormalBasis) -> SymbolPair:
    return SymbolPair(coeffs_from_json(obj["chi"], domain), coeffs_from_json(obj["psi"], codomain))


def result_to_json(res: DecompositionResult) -> dict:
    out = {
        "variant": res.variant.value,
        "verdict": bool(res.verdict),
        "residual": float(res.residual),
        "psi": coeffs_to_json(res.psi),
        "chi": coeffs_to_json(res.chi),
    }
    if res.degenerate:
        out["degenerate"] = True
    return out
