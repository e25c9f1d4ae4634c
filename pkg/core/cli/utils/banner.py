"""wildcount banner"""

import sys

from .config import WildcountConfig


def print_banner(stream=None):
    """Print the wildcount banner (to stderr, stdout carries results)"""
    stream = stream or sys.stderr
    print(WildcountConfig.ASCII_ART, file=stream)
    print(f"    Version {WildcountConfig.VERSION}", file=stream)
    print("    " + "=" * 60, file=stream)
