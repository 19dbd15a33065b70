"""Exact character counts for symmetric and general linear groups."""

from ._blockcraft import *  # noqa: F401,F403
from ._blockcraft import run_command

__all__ = [name for name in dir() if not name.startswith("_")]


def main() -> int:
    import sys

    code, out, err = run_command(sys.argv[1:])
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code
