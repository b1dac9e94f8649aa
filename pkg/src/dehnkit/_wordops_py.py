"""Pure-Python kernel for run-length free-group words.

A word is a tuple of ``(generator, exponent)`` runs with ``exponent != 0`` and
adjacent runs on distinct generators.  Everything downstream (twist actions,
relation verification) bottoms out in ``concat`` and ``substitute``, so these
loops are kept allocation-light; a Cython twin with the same contract lives in
``_wordops_c.pyx`` and is preferred at import time when available.
"""

from __future__ import annotations

KERNEL = "python"


def _push_run(gens: list, exps: list, g: int, e: int) -> None:
    # Buffer stays normalized, so a single merge (or cancel) at the tail keeps it so.
    if e == 0:
        return
    if gens and gens[-1] == g:
        s = exps[-1] + e
        if s == 0:
            gens.pop()
            exps.pop()
        else:
            exps[-1] = s
    else:
        gens.append(g)
        exps.append(e)


def normalize(pairs) -> tuple:
    """Reduce an arbitrary run sequence to normal form."""
    gens: list = []
    exps: list = []
    for g, e in pairs:
        _push_run(gens, exps, g, e)
    return tuple(zip(gens, exps))


def concat(a: tuple, b: tuple) -> tuple:
    """Product of two normalized words, cancelling across the seam."""
    gens = [g for g, _ in a]
    exps = [e for _, e in a]
    for g, e in b:
        _push_run(gens, exps, g, e)
    return tuple(zip(gens, exps))


def invert(a: tuple) -> tuple:
    return tuple((g, -e) for g, e in reversed(a))


def power(a: tuple, k: int) -> tuple:
    if k == 0 or not a:
        return ()
    if k < 0:
        a = invert(a)
        k = -k
    # Cancellation across repeats only happens at the seam, handled by concat.
    out = a
    for _ in range(k - 1):
        out = concat(out, a)
    return out


def substitute(word: tuple, images_pos, images_neg) -> tuple:
    """Apply the homomorphism sending generator ``g`` to ``images_pos[g]``.

    ``images_neg[g]`` must be the inverse word of ``images_pos[g]``; passing it
    explicitly avoids re-inverting in the hot loop.
    """
    gens: list = []
    exps: list = []
    for g, e in word:
        if e > 0:
            img = images_pos[g]
            reps = e
        else:
            img = images_neg[g]
            reps = -e
        for _ in range(reps):
            for h, f in img:
                _push_run(gens, exps, h, f)
    return tuple(zip(gens, exps))


def splice(word: tuple, insertions) -> tuple:
    """Rebuild ``word`` with extra words spliced between its letters.

    ``insertions`` maps a letter position ``i`` (0 .. letter-length) to a list
    of normalized words inserted, in order, before the ``i``-th letter of the
    fully expanded word.  Twist actions are assembled this way: crossings
    contribute insertions at the letter where the twisted curve is crossed.
    """
    gens: list = []
    exps: list = []
    pos = 0
    for g, e in word:
        step = 1 if e > 0 else -1
        for _ in range(abs(e)):
            for ins in insertions.get(pos, ()):
                for h, f in ins:
                    _push_run(gens, exps, h, f)
            _push_run(gens, exps, g, step)
            pos += 1
    for ins in insertions.get(pos, ()):
        for h, f in ins:
            _push_run(gens, exps, h, f)
    return tuple(zip(gens, exps))
