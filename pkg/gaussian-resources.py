"""
# Description: Command-line script for the Gaussian resource toolkit. Runs
# one subcommand (validate, report, williamson, bloch-messiah, maximize,
# channel-apply, sweep, random-state) and exits with its status.
"""

import sys

from gaussian_resources.cli.entry_point import main

if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
