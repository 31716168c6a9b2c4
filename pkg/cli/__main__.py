"""Run the command-line front end: python -m cli <subcommand> ..."""

import sys

from cli.main import run

if __name__ == "__main__":
    sys.exit(run(sys.argv[1:]))
