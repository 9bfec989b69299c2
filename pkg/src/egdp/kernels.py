"""Bitmask kernels for the hot loops.

Tuple sets over a scheme with at most 64 tuples are encoded as ``uint64``
masks over the scheme's canonical tuple order; a set of classical
relations over at most 6 tuples is likewise a ``uint64`` with one bit per
relation.  Each kernel has a numba implementation and a vectorized numpy
implementation.  Numba is used when it imports and ``EGDP_NUMBA`` is not
``0``; both paths compute identical results.
"""
from __future__ import annotations

import os

import numpy as np

try:
    if os.environ.get("EGDP_NUMBA", "1") == "0":
        raise ImportError
    import numba

    HAVE_NUMBA = True
except ImportError:
    numba = None
    HAVE_NUMBA = False

USE_NUMBA = HAVE_NUMBA

MAX_MODEL_BITS = 6
U64 = np.uint64


def njit(func):
    if not HAVE_NUMBA:
        return None
    return numba.njit(cache=True, nogil=True)(func)



# --- subsumption among sets of relations --------------------------------------


def _unsubsumed_loops(pos, neg):
    n = pos.shape[0]
    keep = np.ones(n, dtype=np.bool_)
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            if pos[j] & ~pos[i] == 0 and neg[j] & ~neg[i] == 0:
                if pos[j] != pos[i] or neg[j] != neg[i]:
                    keep[i] = False
                    break
    return keep


_unsubsumed_nb = njit(_unsubsumed_loops)


def _unsubsumed_np(pos, neg, chunk=512):
    n = pos.shape[0]
    keep = np.ones(n, dtype=bool)
    for lo in range(0, n, chunk):
        pi = pos[lo:lo + chunk, None]
        ni = neg[lo:lo + chunk, None]
        sub = ((pos[None, :] & ~pi) == 0) & ((neg[None, :] & ~ni) == 0)
        same = (pos[None, :] == pi) & (neg[None, :] == ni)
        keep[lo:lo + chunk] = ~np.any(sub & ~same, axis=1)
    return keep


def unsubsumed_masks(pos: np.ndarray, neg: np.ndarray, use_numba: bool | None = None) -> np.ndarray:
    """``keep[i]`` is false iff some other ``j`` has ``pos[j] ⊆ pos[i]`` and ``neg[j] ⊆ neg[i]``."""
    pos = np.ascontiguousarray(pos, dtype=U64)
    neg = np.ascontiguousarray(neg, dtype=U64)
    if _numba(use_numba):
        return _unsubsumed_nb(pos, neg)
    return _unsubsumed_np(pos, neg)


def unsubsumed(relations) -> list[bool]:
    """Subsumption filter over GDP relations (see ``eg_reducerep``)."""
    pos_ids: dict = {}
    neg_ids: dict = {}
    for r in relations:
        for w in r.pos:
            pos_ids.setdefault(w, len(pos_ids))
        for u in r.neg:
            neg_ids.setdefault(u, len(neg_ids))
    pm = [sum(1 << pos_ids[w] for w in r.pos) for r in relations]
    nm = [sum(1 << neg_ids[u] for u in r.neg) for r in relations]
    if len(pos_ids) > 64 or len(neg_ids) > 64:
        return [
            not any(
                (pm[j] & ~pm[i]) == 0 and (nm[j] & ~nm[i]) == 0 and (pm[j], nm[j]) != (pm[i], nm[i])
                for j in range(len(pm))
            )
            for i in range(len(pm))
        ]
    return unsubsumed_masks(np.array(pm, dtype=U64), np.array(nm, dtype=U64)).tolist()


# --- model sets ---------------------------------------------------------------


def clause_tables(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Model bitsets of single clauses over ``n`` tuples.

    ``pos_table[w]`` has bit ``m`` set iff relation ``m`` contains some tuple
    of ``w``; ``neg_table[u]`` iff ``m`` misses some tuple of ``u``.  Entry 0
    (no clause) is all ones.
    """
    if n > MAX_MODEL_BITS:
        raise ValueError(f"model bitsets need at most {MAX_MODEL_BITS} tuples, got {n}")
    models = np.arange(2 ** n, dtype=np.int64)
    pos_table = np.zeros(2 ** n, dtype=U64)
    neg_table = np.zeros(2 ** n, dtype=U64)
    weights = (np.ones(len(models), dtype=U64) << models.astype(U64))
    for w in range(2 ** n):
        hit = (models & w) != 0
        miss = (w & ~models) != 0
        pos_table[w] = np.bitwise_or.reduce(weights[hit]) if hit.any() else U64(0)
        neg_table[w] = np.bitwise_or.reduce(weights[miss]) if miss.any() else U64(0)
    full = U64((1 << (2 ** n)) - 1) if 2 ** n < 64 else U64(0xFFFFFFFFFFFFFFFF)
    pos_table[0] = full
    neg_table[0] = full
    return pos_table, neg_table


def _model_sets_loops(pos, neg, pos_table, neg_table, full):
    n = pos.shape[0]
    out = np.empty(n, dtype=np.uint64)
    for i in range(n):
        acc = full
        for k in range(pos.shape[1]):
            acc &= pos_table[pos[i, k]]
        for k in range(neg.shape[1]):
            acc &= neg_table[neg[i, k]]
        out[i] = acc
    return out


_model_sets_nb = njit(_model_sets_loops)


def _model_sets_np(pos, neg, pos_table, neg_table, full):
    acc = np.full(pos.shape[0], full, dtype=U64)
    for k in range(pos.shape[1]):
        acc &= pos_table[pos[:, k]]
    for k in range(neg.shape[1]):
        acc &= neg_table[neg[:, k]]
    return acc


def model_sets(pos: np.ndarray, neg: np.ndarray, n: int, use_numba: bool | None = None) -> np.ndarray:
    """Model bitset of each encoded GDP relation (rows of padded clause masks, 0 = empty slot)."""
    pt, nt = clause_tables(n)
    full = pt[0]
    pos = np.ascontiguousarray(pos, dtype=np.int64)
    neg = np.ascontiguousarray(neg, dtype=np.int64)
    if _numba(use_numba):
        return _model_sets_nb(pos, neg, pt, nt, full)
    return _model_sets_np(pos, neg, pt, nt, full)


# --- pairwise soundness of the binary same-scheme operators -------------------

# operator variants; the last two are deliberately unsound mutations
UNION, INTERSECT, UNION_ALL_NEG, INTERSECT_ALL_POS = 0, 1, 2, 3


def image_tables(kind: int, n: int) -> np.ndarray:
    """``tables[m, b, byte]``: image of the models in byte ``b`` of a bitset.

    For union the image of relation ``s`` under ``m`` is ``m | s``; for
    intersect it is ``m & s``.  OR-ing the per-byte entries gives the image
    of a whole bitset.
    """
    size = 2 ** n
    nbytes = (size + 7) // 8
    tables = np.zeros((size, nbytes, 256), dtype=U64)
    is_union = kind in (UNION, UNION_ALL_NEG)
    for m in range(size):
        for b in range(nbytes):
            for byte in range(256):
                acc = 0
                for k in range(8):
                    s = 8 * b + k
                    if s < size and byte >> k & 1:
                        acc |= 1 << ((m | s) if is_union else (m & s))
                tables[m, b, byte] = acc
    return tables


def _result_models_loops(kind, i, j, pos, neg, dpos, dneg, pos_table, neg_table, full):
    acc = full
    width = pos.shape[1]
    union = kind == 0 or kind == 2
    for k in range(width):
        for a, b in ((i, j), (j, i)):
            w = pos[a, k]
            if union or kind == 3 or (w != 0 and (w & ~dpos[b]) == 0):
                acc &= pos_table[w]
            u = neg[a, k]
            if not union or kind == 2 or (u != 0 and (u & ~dneg[b]) == 0):
                acc &= neg_table[u]
    return acc


def _pair_loops(kind, pos, neg, mods, dpos, dneg, pos_table, neg_table, images, full):
    n = pos.shape[0]
    size = images.shape[0]
    nbytes = images.shape[1]
    fails = 0
    first_i = -1
    first_j = -1
    for i in range(n):
        a = mods[i]
        for j in range(n):
            acc = _result_models(kind, i, j, pos, neg, dpos, dneg, pos_table, neg_table, full)
            b = mods[j]
            for m in range(size):
                if (a >> np.uint64(m)) & np.uint64(1):
                    img = np.uint64(0)
                    for byte in range(nbytes):
                        img |= images[m, byte, (b >> np.uint64(8 * byte)) & np.uint64(255)]
                    if img & ~acc:
                        fails += 1
                        if first_i < 0:
                            first_i = i
                            first_j = j
                        break
    return fails, first_i, first_j


def _pair_models_loops(kind, rows, cols, pos, neg, dpos, dneg, pos_table, neg_table, full):
    out = np.empty(rows.shape[0], dtype=np.uint64)
    for t in range(rows.shape[0]):
        out[t] = _result_models(kind, rows[t], cols[t], pos, neg, dpos, dneg, pos_table, neg_table, full)
    return out


if HAVE_NUMBA:
    _result_models = njit(_result_models_loops)
    _pair_nb = njit(_pair_loops)
    _pair_models_nb = njit(_pair_models_loops)


def _result_models_np(kind, rows, cols, pos, neg, dpos, dneg, pos_table, neg_table, full):
    """Vectorized twin of ``_result_models_loops`` over index arrays (broadcastable)."""
    acc = np.full(np.broadcast(rows, cols).shape, full, dtype=U64)
    union = kind in (UNION, UNION_ALL_NEG)
    for k in range(pos.shape[1]):
        for a, b in ((rows, cols), (cols, rows)):
            w = pos[a, k]
            if union or kind == INTERSECT_ALL_POS:
                acc &= pos_table[w]
            else:
                keep = (w != 0) & ((w & ~dpos[b]) == 0)
                acc &= np.where(keep, pos_table[w], full)
            u = neg[a, k]
            if not union or kind == UNION_ALL_NEG:
                acc &= neg_table[u]
            else:
                keep = (u != 0) & ((u & ~dneg[b]) == 0)
                acc &= np.where(keep, neg_table[u], full)
    return acc


def _pair_np(kind, pos, neg, mods, dpos, dneg, pos_table, neg_table, images, full, chunk=64):
    n = pos.shape[0]
    size = images.shape[0]
    nbytes = images.shape[1]
    fails = 0
    first = (-1, -1)
    cols = np.arange(n)[None, :]
    b = mods[None, :]
    for lo in range(0, n, chunk):
        rows = np.arange(lo, min(lo + chunk, n))[:, None]
        acc = _result_models_np(kind, rows, cols, pos, neg, dpos, dneg, pos_table, neg_table, full)
        a = mods[rows]
        bad = np.zeros(acc.shape, dtype=bool)
        for m in range(size):
            has = ((a >> U64(m)) & U64(1)).astype(bool)
            img = np.zeros(b.shape, dtype=U64)
            for byte in range(nbytes):
                img = img | images[m, byte][((b >> U64(8 * byte)) & U64(255)).astype(np.int64)]
            bad |= has & ((img & ~acc) != 0)
        count = int(bad.sum())
        if count and first[0] < 0:
            ii, jj = np.argwhere(bad)[0]
            first = (lo + int(ii), int(jj))
        fails += count
    return fails, first[0], first[1]


def _pair_setup(pos, neg, n):
    pos = np.ascontiguousarray(pos, dtype=np.int64)
    neg = np.ascontiguousarray(neg, dtype=np.int64)
    pt, nt = clause_tables(n)
    return pos, neg, _definite(pos), _definite(neg), pt, nt, pt[0]


def pair_soundness(kind: int, pos: np.ndarray, neg: np.ndarray, n: int, use_numba: bool | None = None):
    """Check the GDP union or intersect (``kind``) over all ordered pairs of rows.

    ``pos``/``neg`` hold one row per relation of padded clause masks over a
    scheme of ``n`` tuples (0 marks an empty slot).  The operator's output
    clauses are rebuilt from the masks, and for every pair of models the
    classical image must satisfy all of them.  Returns
    ``(failures, first_i, first_j)``.
    """
    pos, neg, dpos, dneg, pt, nt, full = _pair_setup(pos, neg, n)
    mods = model_sets(pos, neg, n, use_numba)
    images = image_tables(kind, n)
    if _numba(use_numba):
        fails, i, j = _pair_nb(kind, pos, neg, mods, dpos, dneg, pt, nt, images, full)
    else:
        fails, i, j = _pair_np(kind, pos, neg, mods, dpos, dneg, pt, nt, images, full)
    return int(fails), int(i), int(j)


def pair_result_models(kind: int, pos, neg, n: int, rows, cols, use_numba: bool | None = None) -> np.ndarray:
    """Model bitsets of the operator's output for the pairs ``(rows[t], cols[t])``."""
    pos, neg, dpos, dneg, pt, nt, full = _pair_setup(pos, neg, n)
    rows = np.ascontiguousarray(rows, dtype=np.int64)
    cols = np.ascontiguousarray(cols, dtype=np.int64)
    if _numba(use_numba):
        return _pair_models_nb(kind, rows, cols, pos, neg, dpos, dneg, pt, nt, full)
    return _result_models_np(kind, rows, cols, pos, neg, dpos, dneg, pt, nt, full)


def encode_tsets(scheme, sets, width: int) -> list[int]:
    """Masks of ``sets`` in canonical order, padded with zeros to ``width``."""
    idx = scheme.index
    masks = sorted(sum(1 << idx[t] for t in w) for w in sets)
    if len(masks) > width:
        raise ValueError(f"{len(masks)} tuple sets do not fit in {width} slots")
    return masks + [0] * (width - len(masks))


def encode_gdps(gdps, width: int) -> tuple[np.ndarray, np.ndarray]:
    gdps = list(gdps)
    if not gdps:
        return np.zeros((0, width), dtype=np.int64), np.zeros((0, width), dtype=np.int64)
    scheme = gdps[0].scheme
    pos = np.array([encode_tsets(scheme, g.pos, width) for g in gdps], dtype=np.int64)
    neg = np.array([encode_tsets(scheme, g.neg, width) for g in gdps], dtype=np.int64)
    return pos, neg


def _definite(masks: np.ndarray) -> np.ndarray:
    """OR of the single-bit masks in each row."""
    m = masks.astype(U64)
    single = (m != 0) & ((m & (m - U64(1))) == 0)
    return np.bitwise_or.reduce(np.where(single, m, U64(0)), axis=1).astype(np.int64)


def _numba(use_numba: bool | None) -> bool:
    if use_numba is None:
        use_numba = USE_NUMBA
    if use_numba and not HAVE_NUMBA:
        raise RuntimeError("numba is not available (or disabled by EGDP_NUMBA=0)")
    return use_numba
