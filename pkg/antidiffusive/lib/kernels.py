#!/usr/bin/env python3

import numpy as np

#
# vectorised binary64 steps for periodic states. every kernel maps an
# array of M cell values to the next M values; cell k - 1 and k + 1 are
# the periodic neighbours of cell k.
#

def upwind(u, lam):
    return u - lam * (u - np.roll(u, 1))

def lax_wendroff(u, lam):
    um = np.roll(u, 1)
    up = np.roll(u, -1)
    return u - 0.5 * lam * (up - um) + 0.5 * lam * lam * (up - 2.0 * u + um)

def _split(u, from_right):
    """Local split position of every cell and the mask of reconstructed cells"""
    um = np.roll(u, 1)
    up = np.roll(u, -1)
    den = up - um
    safe = np.where(den == 0.0, 1.0, den)
    if from_right:
        d = (u - um) / safe
    else:
        d = (up - u) / safe
    ok = (den != 0.0) & (d > 0.0) & (d < 1.0)
    split = 1.0 - d if from_right else d
    return um, up, split, ok

def _slice(u, um, up, split, ok, t0, t1):
    """Integral of every reconstructed cell over local [t0, t1]"""
    s = np.clip(split, 0.0, 1.0)
    rec = (um * np.maximum(0.0, np.minimum(t1, s) - t0)
           + up * np.maximum(0.0, t1 - np.maximum(t0, s)))
    return np.where(ok, rec, u * (t1 - t0))

def gather_from_left(u, lam, from_right):
    """New cell j takes the last lam of cell j - 1 and the rest of cell j"""
    um, up, split, ok = _split(u, from_right)
    r = _slice(u, um, up, split, ok, 1.0 - lam, 1.0)
    return np.roll(r, 1) + u - r

def gather_from_right(u, lam, from_right):
    """New cell j takes the end of cell j after lam and the first lam of cell j + 1"""
    um, up, split, ok = _split(u, from_right)
    l = _slice(u, um, up, split, ok, 0.0, lam)
    return u - l + np.roll(l, -1)

def plateau_metric(u):
    a = np.abs(np.roll(u, 1) - u)
    b = np.abs(u - np.roll(u, -1))
    c = np.abs(np.roll(u, -1) - np.roll(u, -2))
    return float(np.sum(np.minimum(np.minimum(a, b), c)))
