"""Parsing of Laurent-polynomial boundary symbols such as ``"2*z**2 - 1j*zbar"``."""
from __future__ import annotations

import ast
from collections import defaultdict

import numpy as np

MAX_DEGREE = 16


class SymbolParseError(ValueError):
    pass


Laurent = dict  # exponent -> coefficient


def _mul(p: Laurent, q: Laurent) -> Laurent:
    out: Laurent = defaultdict(complex)
    for i, a in p.items():
        for j, b in q.items():
            out[i + j] += a * b
    return dict(out)


def _add(p: Laurent, q: Laurent, sign: int = 1) -> Laurent:
    out = dict(p)
    for k, v in q.items():
        out[k] = out.get(k, 0j) + sign * v
    return out


def _eval(node) -> Laurent:
    if isinstance(node, ast.Expression):
        return _eval(node.body)
    if isinstance(node, ast.Constant) and isinstance(node.value, (int, float, complex)) \
            and not isinstance(node.value, bool):
        return {0: complex(node.value)}
    if isinstance(node, ast.Name):
        if node.id == "z":
            return {1: 1 + 0j}
        if node.id == "zbar":
            return {-1: 1 + 0j}
        raise SymbolParseError(f"unknown name {node.id!r}; use z or zbar")
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        sign = -1 if isinstance(node.op, ast.USub) else 1
        return {k: sign * v for k, v in _eval(node.operand).items()}
    if isinstance(node, ast.BinOp):
        left = _eval(node.left)
        if isinstance(node.op, ast.Pow):
            exp = _eval(node.right)
            if set(exp) != {0} or exp[0].imag != 0 or exp[0].real != int(exp[0].real):
                raise SymbolParseError("exponents must be integer constants")
            n = int(exp[0].real)
            if len(left) != 1:
                if n < 0:
                    raise SymbolParseError("negative powers only of monomials")
                out = {0: 1 + 0j}
                for _ in range(n):
                    out = _mul(out, left)
                return out
            (k, c), = left.items()
            if c == 0 and n < 0:
                raise SymbolParseError("division by zero")
            return {k * n: c ** n}
        right = _eval(node.right)
        if isinstance(node.op, ast.Add):
            return _add(left, right)
        if isinstance(node.op, ast.Sub):
            return _add(left, right, -1)
        if isinstance(node.op, ast.Mult):
            return _mul(left, right)
        if isinstance(node.op, ast.Div):
            if len(right) != 1 or next(iter(right.values())) == 0:
                raise SymbolParseError("can only divide by a nonzero monomial")
            (k, c), = right.items()
            return _mul(left, {-k: 1 / c})
    raise SymbolParseError(f"unsupported syntax: {ast.dump(node)[:60]}")


def parse_laurent(text: str) -> Laurent:
    """Parse an expression in ``z``/``zbar`` into ``{exponent: coefficient}``.

    ``^`` is accepted as a power operator.  Exponents are limited to
    ``|k| <= 16``.
    """
    try:
        tree = ast.parse(text.replace("^", "**"), mode="eval")
    except SyntaxError as exc:
        raise SymbolParseError(str(exc)) from exc
    coeffs = {k: v for k, v in _eval(tree).items() if v != 0}
    if any(abs(k) > MAX_DEGREE for k in coeffs):
        raise SymbolParseError(f"exponents must satisfy |k| <= {MAX_DEGREE}")
    return coeffs


def laurent_samples(coeffs: Laurent, nodes: np.ndarray) -> np.ndarray:
    out = np.zeros(nodes.shape, dtype=complex)
    for k, c in coeffs.items():
        out += c * nodes ** k
    return out
