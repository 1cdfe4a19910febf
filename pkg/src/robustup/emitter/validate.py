"""Grammar-level checks for the SMT-LIB subset the emitter produces."""

from __future__ import annotations

import re
from typing import Union

SExpr = Union[str, list]

_TOKEN = re.compile(r"\(|\)|[^\s()]+")
_NUMERAL = re.compile(r"\d+(\.\d+)?")
_SYMBOL = re.compile(r"[A-Za-z~!@$%^&*_+=<>.?/\-][A-Za-z0-9~!@$%^&*_+=<>.?/\-]*")

OPERATORS = frozenset({"and", "or", "not", "=>", "=", "distinct", "<", "<=", ">", ">=", "+", "-", "*", "/", "ite"})
BINDERS = frozenset({"exists", "forall"})
COMMANDS = frozenset({"set-logic", "set-info", "set-option", "declare-const", "assert", "check-sat", "get-model", "exit"})


class ScriptError(ValueError):
    pass


def _strip_comments(text: str) -> str:
    return "\n".join(line.split(";", 1)[0] for line in text.splitlines())


def parse_sexprs(text: str) -> list[SExpr]:
    """Top-level s-expressions; raises :class:`ScriptError` on unbalanced parentheses."""
    stack: list[list] = [[]]
    for tok in _TOKEN.findall(_strip_comments(text)):
        if tok == "(":
            stack.append([])
        elif tok == ")":
            if len(stack) == 1:
                raise ScriptError("unbalanced ')'")
            done = stack.pop()
            stack[-1].append(done)
        else:
            stack[-1].append(tok)
    if len(stack) != 1:
        raise ScriptError("unclosed '('")
    return stack[0]


def _check_term(term: SExpr, scope: frozenset) -> None:
    if isinstance(term, str):
        if term in ("true", "false") or _NUMERAL.fullmatch(term) or term in scope:
            return
        raise ScriptError(f"undeclared symbol {term!r}")
    if not term:
        raise ScriptError("empty application")
    head = term[0]
    if head in BINDERS:
        if len(term) != 3 or not isinstance(term[1], list) or not term[1]:
            raise ScriptError(f"malformed {head}")
        names = []
        for binding in term[1]:
            if not (isinstance(binding, list) and len(binding) == 2 and binding[1] == "Real"):
                raise ScriptError(f"malformed binder in {head}")
            if not isinstance(binding[0], str) or not _SYMBOL.fullmatch(binding[0]):
                raise ScriptError(f"bad variable name {binding[0]!r}")
            names.append(binding[0])
        if len(set(names)) != len(names):
            raise ScriptError(f"repeated variable in {head}")
        _check_term(term[2], scope | frozenset(names))
        return
    if not isinstance(head, str) or head not in OPERATORS:
        raise ScriptError(f"unknown operator {head!r}")
    if len(term) < 2:
        raise ScriptError(f"{head} needs arguments")
    for arg in term[1:]:
        _check_term(arg, scope)


def validate_script(text: str) -> list[SExpr]:
    """Accept the script or raise :class:`ScriptError`.

    Checks balanced parentheses, known commands and operators, and that
    every symbol is declared (or bound by a quantifier) before use.
    """
    commands = parse_sexprs(text)
    declared: set[str] = set()
    for cmd in commands:
        if not isinstance(cmd, list) or not cmd or cmd[0] not in COMMANDS:
            raise ScriptError(f"unknown command {cmd!r}")
        name = cmd[0]
        if name == "declare-const":
            if len(cmd) != 3 or cmd[2] != "Real" or not isinstance(cmd[1], str):
                raise ScriptError(f"malformed declaration {cmd!r}")
            if cmd[1] in declared or cmd[1] in OPERATORS or not _SYMBOL.fullmatch(cmd[1]):
                raise ScriptError(f"bad or repeated declaration {cmd[1]!r}")
            declared.add(cmd[1])
        elif name == "assert":
            if len(cmd) != 2:
                raise ScriptError("assert takes one term")
            _check_term(cmd[1], frozenset(declared))
    return commands
