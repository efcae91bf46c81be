"""Tiny safe evaluator for scan filters such as ``"e - embdim == 1 && ord_conductor == 2"``.

Names refer to report fields or family parameters.  Supported: integer and
boolean literals (``true``/``false``/``null`` too), ``+ - * // %``, the
comparisons ``== != < > <= >=``, ``&&``, ``||`` and ``not``.
"""

from __future__ import annotations

import ast
import operator
import re
from typing import Any, Callable, Mapping

from .errors import NSRingError

_BINOPS = {
    ast.Add: operator.add,
    ast.Sub: operator.sub,
    ast.Mult: operator.mul,
    ast.FloorDiv: operator.floordiv,
    ast.Mod: operator.mod,
}
_CMPS = {
    ast.Eq: operator.eq,
    ast.NotEq: operator.ne,
    ast.Lt: operator.lt,
    ast.Gt: operator.gt,
    ast.LtE: operator.le,
    ast.GtE: operator.ge,
}
_LITERALS = {"true": True, "false": False, "null": None, "True": True, "False": False, "None": None}


class ExpressionError(NSRingError):
    pass


def _eval(node: ast.AST, env: Mapping[str, Any]) -> Any:
    if isinstance(node, ast.Expression):
        return _eval(node.body, env)
    if isinstance(node, ast.Constant) and isinstance(node.value, (int, bool)):
        return node.value
    if isinstance(node, ast.Name):
        if node.id in _LITERALS:
            return _LITERALS[node.id]
        if node.id not in env:
            raise ExpressionError(f"unknown field {node.id!r}")
        return env[node.id]
    if isinstance(node, ast.BoolOp):
        vals = (_eval(v, env) for v in node.values)
        return all(vals) if isinstance(node.op, ast.And) else any(vals)
    if isinstance(node, ast.UnaryOp):
        v = _eval(node.operand, env)
        if isinstance(node.op, ast.Not):
            return not v
        if isinstance(node.op, ast.USub):
            return -v
    if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
        return _BINOPS[type(node.op)](_eval(node.left, env), _eval(node.right, env))
    if isinstance(node, ast.Compare):
        left = _eval(node.left, env)
        for op, comp in zip(node.ops, node.comparators):
            if type(op) not in _CMPS:
                break
            right = _eval(comp, env)
            try:
                if not _CMPS[type(op)](left, right):
                    return False
            except TypeError:
                # ordering against a null field
                return False
            left = right
        else:
            return True
    raise ExpressionError(f"unsupported syntax: {ast.dump(node)[:60]}")


def compile_where(text: str) -> Callable[[Mapping[str, Any]], bool]:
    src = re.sub(r"&&", " and ", text)
    src = re.sub(r"\|\|", " or ", src)
    try:
        tree = ast.parse(src.strip(), mode="eval")
    except SyntaxError as exc:
        raise ExpressionError(f"cannot parse {text!r}: {exc.msg}") from None

    def predicate(env: Mapping[str, Any]) -> bool:
        return bool(_eval(tree, env))

    predicate.__doc__ = text
    return predicate
