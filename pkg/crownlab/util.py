#!/usr/bin/env python

"""Various utilities"""

from pathlib import Path

from tqdm import tqdm

# Global to get to the top of the repository.
repopath = Path(__file__).parent.parent.resolve()


def mask_of(colors):
    """Bit mask with one bit per color id"""
    mask = 0
    for c in colors:
        mask |= 1 << c
    return mask


def colors_of(mask):
    """Ascending color ids encoded in a bit mask"""
    colors = []
    c = 0
    while mask:
        if mask & 1:
            colors.append(c)
        mask >>= 1
        c += 1
    return colors


def popcount(mask):
    return bin(mask).count("1")


def coloring_key(phi):
    """Sort key for partial colorings: ascending (vertex, color) pairs"""
    return tuple(sorted(phi.items()))


def sorted_colorings(colorings):
    return sorted((dict(phi) for phi in colorings), key=coloring_key)


def coloring_to_json(phi):
    return {str(v): int(c) for v, c in sorted(phi.items())}


def lists_to_json(lists):
    return {str(v): sorted(int(c) for c in L) for v, L in sorted(lists.items())}


def pbar(it, total=None, desc=None, verbose=True):
    """Wrap ``it`` in a progress bar on stderr when ``verbose``"""
    if not verbose:
        return it
    fmt = "{l_bar}{bar}| {n_fmt}/{total_fmt} ({elapsed}<{remaining})"
    return tqdm(it, total=total, ncols=80, desc=desc, leave=False, bar_format=fmt)
