#!/usr/bin/env python
"""Module docstring."""
s = "# not a comment"
t = '''# not a comment
either'''
u = f"{x!r} # nope"


def f():
    """Function docstring
    over two lines."""
    x = "a"  # trailing
    # own line
    return x


class C:
    x = 1
    """not a docstring: not at the start of the suite"""
