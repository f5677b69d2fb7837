#!/usr/bin/env python

"""Command-line interface for WeilKit, exact character sums over finite fields."""
import logging
import sys

from weillib import commands

if __name__ == '__main__':
    logging.basicConfig(level=logging.INFO, format="%(message)s")
    args = commands.parse_args()
    sys.exit(commands.run(args))
