"""Command-line front end: interactive loop, scripts, one-shot, audit.

Exit codes: 0 success, 1 evaluation error, 2 audit failure, 64 bad usage.
Set SYMBA_NOPROMPT=1 to suppress the ">>> " prompt (golden-transcript
testing pipes stdin and compares stdout byte for byte).
"""

from __future__ import annotations

import os
import sys
from pathlib import Path

from .errors import SymbaError
from .evaluator import Context, eval_expr, eval_statement, new_context
from .polynomial import RingFactory
from .syntax import (
    Assign,
    ListAssign,
    is_reconstructing,
    parse,
    parse_expression,
    print_pretty,
    print_value,
    reconstruction_failure,
)

USAGE = """\
usage: symba                 interactive session
       symba -e <stmt>       evaluate one statement and print its value
       symba <script>        run a script, echoing bare-expression values
       symba --audit <file>  check every bare expression reconstructs
"""


def _execute_line(line: str, ctx: Context, write) -> Context:
    node = parse(line)
    result, ctx = eval_statement(node, ctx, write)
    if result is not None:
        write(print_value(result))
    return ctx


def _meta_command(line: str, ctx: Context, write, stderr) -> bool:
    """Handle a ':' command; returns False for :quit (end the session)."""
    cmd, _, arg = line.partition(" ")
    if cmd == ":quit":
        return False
    if cmd == ":ctx":
        for name, value in ctx.local_items():
            write(f"{name} = {print_value(value)}")
    elif cmd == ":check":
        write("true" if is_reconstructing(arg, ctx) else "false")
    elif cmd == ":pretty":
        value = eval_expr(parse_expression(arg), ctx)
        if isinstance(value, RingFactory):
            write(print_pretty(value))
        else:
            write(print_value(value))
    else:
        print(f"error: unknown command {cmd!r}", file=stderr)
    return True


def run_interactive(stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    prompt = "" if os.environ.get("SYMBA_NOPROMPT") == "1" else ">>> "

    def write(line: str) -> None:
        print(line, file=stdout)

    ctx = new_context()
    while True:
        if prompt:
            stdout.write(prompt)
            stdout.flush()
        raw = stdin.readline()
        if raw == "":
            if prompt:
                stdout.write("\n")
            return 0
        line = raw.rstrip("\r\n")
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        try:
            if line.startswith(":"):
                if not _meta_command(line, ctx, write, stderr):
                    return 0
            else:
                ctx = _execute_line(line, ctx, write)
        except SymbaError as e:
            print(f"error: {e}", file=stderr)
        except RecursionError:
            print("error: expression too deeply nested", file=stderr)
        except Exception as e:  # arbitrary input must never kill the session
            print(f"internal error: {e}", file=stderr)


def run_statement(stmt: str) -> int:
    ctx = new_context()
    try:
        _execute_line(stmt, ctx, lambda line: print(line))
    except SymbaError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    return 0


def run_script(path: str) -> int:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    ctx = new_context()
    for line in text.splitlines():
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        try:
            ctx = _execute_line(line, ctx, lambda out: print(out))
        except SymbaError as e:
            print(f"error: {e}", file=sys.stderr)
            return 1
    return 0


def run_audit(path: str) -> int:
    """Check every bare expression in the file reconstructs verbatim.

    Assignments execute normally to build up the context; any failing
    expression line is listed and the exit code is 2.
    """
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    ctx = new_context()
    failures: list[tuple[str, str]] = []
    for line in text.splitlines():
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        node = None
        try:
            node = parse(line)
        except SymbaError:
            pass
        if isinstance(node, (Assign, ListAssign)):
            try:
                _, ctx = eval_statement(node, ctx)
            except SymbaError as e:
                print(f"error: {e}", file=sys.stderr)
                return 1
        else:
            reason = reconstruction_failure(line, ctx)
            if reason is not None:
                failures.append((line, reason))
    for line, reason in failures:
        print(f"FAIL: {line}  [{reason}]")
    return 2 if failures else 0


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    if not argv:
        return run_interactive()
    if argv[0] == "-e":
        if len(argv) != 2:
            print(USAGE, file=sys.stderr, end="")
            return 64
        return run_statement(argv[1])
    if argv[0] == "--audit":
        if len(argv) != 2:
            print(USAGE, file=sys.stderr, end="")
            return 64
        return run_audit(argv[1])
    if len(argv) == 1 and not argv[0].startswith("-"):
        return run_script(argv[0])
    print(USAGE, file=sys.stderr, end="")
    return 64


def console_main() -> None:
    sys.exit(main())
