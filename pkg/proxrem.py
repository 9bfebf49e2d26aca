#!/usr/bin/env python3
"""
proxrem Command Line Interface - Direct Python Script Version

This file provides a direct Python script interface for users who prefer running:
    python proxrem.py [args...]

It imports and calls the main CLI function from proxrem.cli, providing
the same functionality as the `proxrem` command installed via pip.
"""

import os
import sys

current_dir = os.path.dirname(os.path.abspath(__file__))
if current_dir not in sys.path:
    sys.path.append(current_dir)

from proxrem.cli import main

if __name__ == "__main__":
    main()
