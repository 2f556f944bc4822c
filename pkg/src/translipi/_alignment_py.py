"""Pure-Python Levenshtein alignment kernel.

Fallback for environments without the compiled extension; must stay
behaviorally identical to ``_alignment_cy`` (same costs, same tie-break).
"""

from __future__ import annotations

from typing import Sequence


def align_counts(ref: Sequence[int], hyp: Sequence[int]) -> tuple[int, int, int, int]:
    """Minimum-edit alignment counts (hits, substitutions, deletions, insertions).

    Unit costs.  The backtrace resolves cost ties by preferring a hit, then a
    substitution, then an insertion, then a deletion, which makes the counts
    deterministic for every input pair.
    """
    n, m = len(ref), len(hyp)
    rows = [list(range(m + 1))]
    prev = rows[0]
    for i in range(1, n + 1):
        cur = [i] + [0] * m
        r = ref[i - 1]
        for j in range(1, m + 1):
            best = prev[j - 1] + (r != hyp[j - 1])
            up = prev[j] + 1
            if up < best:
                best = up
            left = cur[j - 1] + 1
            if left < best:
                best = left
            cur[j] = best
        rows.append(cur)
        prev = cur

    hits = subs = dels = ins = 0
    i, j = n, m
    while i > 0 or j > 0:
        cost = rows[i][j]
        if i > 0 and j > 0 and ref[i - 1] == hyp[j - 1] and rows[i - 1][j - 1] == cost:
            hits += 1
            i -= 1
            j -= 1
        elif i > 0 and j > 0 and rows[i - 1][j - 1] + 1 == cost:
            subs += 1
            i -= 1
            j -= 1
        elif j > 0 and rows[i][j - 1] + 1 == cost:
            ins += 1
            j -= 1
        else:
            dels += 1
            i -= 1
    return hits, subs, dels, ins
