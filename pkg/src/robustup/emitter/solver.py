"""Optional external solver hook, enabled by the ``SOLVER_CMD`` environment variable.

``SOLVER_CMD`` is a command line that reads a script on stdin, for example
``z3 -in``. Nothing in the package depends on it being set.
"""

from __future__ import annotations

import os
import shlex
import subprocess
from typing import Optional

ENV_VAR = "SOLVER_CMD"


def solver_command() -> Optional[list[str]]:
    cmd = os.environ.get(ENV_VAR, "").strip()
    return shlex.split(cmd) if cmd else None


def run_solver(script: str, timeout: float = 60.0, command: Optional[list[str]] = None) -> str:
    """``"sat"``, ``"unsat"`` or ``"unknown"`` (which also covers timeouts)."""
    command = command or solver_command()
    if command is None:
        raise RuntimeError(f"{ENV_VAR} is not set")
    try:
        proc = subprocess.run(command, input=script, capture_output=True, text=True, timeout=timeout)
    except subprocess.TimeoutExpired:
        return "unknown"
    for line in proc.stdout.splitlines():
        word = line.strip()
        if word in ("sat", "unsat", "unknown"):
            return word
    return "unknown"
