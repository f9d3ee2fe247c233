import contextlib
import io

import pytest

from rootcert import cli


@pytest.fixture
def run_cli():
    """Invoke the CLI in-process; returns (exit_code, stdout_text)."""

    def runner(*argv: str, stdin: str | None = None):
        out = io.StringIO()
        ctx = contextlib.redirect_stdout(out)
        if stdin is not None:
            import sys

            old = sys.stdin
            sys.stdin = io.StringIO(stdin)
            try:
                with ctx:
                    code = cli.main(list(argv))
            finally:
                sys.stdin = old
        else:
            with ctx:
                code = cli.main(list(argv))
        return code, out.getvalue()

    return runner
