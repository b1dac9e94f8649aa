"""Word algebra against an independent string-based oracle.

The oracle models free-group elements as strings over a-z/A-Z (uppercase is the
inverse) with naive scan-and-cancel reduction, so any systematic bug in the
run-length kernel disagrees with it immediately.
"""

import string

import pytest
from hypothesis import given, settings, strategies as st

from dehnkit import FreeWord, FreeHom, commutator

RANK = 6
LETTERS = string.ascii_lowercase[:RANK]


# --- oracle ----------------------------------------------------------------

def o_reduce(s: str) -> str:
    done = False
    while not done:
        done = True
        for i in range(len(s) - 1):
            if s[i] != s[i + 1] and s[i].lower() == s[i + 1].lower():
                s = s[:i] + s[i + 2 :]
                done = False
                break
    return s


def o_invert(s: str) -> str:
    return s[::-1].swapcase()


def to_oracle(w: FreeWord) -> str:
    out = []
    for g, e in w.letters():
        out.append(LETTERS[g] if e > 0 else LETTERS[g].upper())
    return "".join(out)


def from_oracle(s: str, rank: int = RANK) -> FreeWord:
    runs = []
    for ch in s:
        g = LETTERS.index(ch.lower())
        runs.append((g, 1 if ch.islower() else -1))
    return FreeWord(rank, runs)


words_st = st.lists(
    st.tuples(st.integers(0, RANK - 1), st.sampled_from([-3, -2, -1, 1, 2, 3])),
    max_size=12,
).map(lambda runs: FreeWord(RANK, runs))


# --- properties ------------------------------------------------------------

@given(words_st, words_st)
@settings(max_examples=300)
def test_product_matches_oracle(a, b):
    assert to_oracle(a * b) == o_reduce(to_oracle(a) + to_oracle(b))


@given(words_st)
@settings(max_examples=200)
def test_inverse_matches_oracle(a):
    assert to_oracle(a.inverse()) == o_reduce(o_invert(to_oracle(a)))
    assert (a * a.inverse()).is_identity


@given(words_st, st.integers(-4, 4))
def test_power_matches_repeated_product(a, k):
    expected = FreeWord.identity(RANK)
    base = a if k >= 0 else a.inverse()
    for _ in range(abs(k)):
        expected = expected * base
    assert a**k == expected


@given(words_st)
def test_normal_form_is_canonical(a):
    for g, e in a.runs:
        assert e != 0
    for (g1, _), (g2, _) in zip(a.runs, a.runs[1:]):
        assert g1 != g2
    assert from_oracle(to_oracle(a)) == a


@given(words_st, words_st)
def test_conjugation_convention(a, b):
    assert a.conjugated_by(b) == b * a * b.inverse()
    assert commutator(a, b) == a * b * a.inverse() * b.inverse()


@given(words_st)
def test_cyclic_reduction_decomposition(a):
    core, c = a.cyclically_reduced()
    assert c * core * c.inverse() == a
    letters = list(core.letters())
    if letters:
        g1, e1 = letters[0]
        g2, e2 = letters[-1]
        assert not (g1 == g2 and e1 == -e2)


@given(words_st, words_st)
def test_conjugacy_detects_actual_conjugates(a, b):
    assert (b * a * b.inverse()).is_conjugate_to(a)
    if not a.is_conjugate_to(FreeWord.identity(RANK)):
        assert not FreeWord.identity(RANK).is_conjugate_to(a)


def test_parse_and_format_round_trip():
    names = ["a1", "b1", "a2", "b2", "d", "s"]
    w = FreeWord.parse("a1 b1^-2 s a2^3", names)
    assert w.format(names) == "a1 b1^-2 s a2^3"
    assert FreeWord.parse(w.format(names), names) == w
    assert FreeWord.identity(6).format(names) == "1"


def test_abelianization_counts_exponents():
    w = FreeWord(3, [(0, 2), (1, -1), (0, 1), (2, 4)])
    assert w.rank == 3
    assert w.abelianized() == (3, -1, 4)


# --- homomorphisms ---------------------------------------------------------

def nielsen_generators(rank: int) -> list[FreeHom]:
    """Elementary automorphisms with known inverses, for random sampling."""
    gens = [FreeWord.generator(rank, i) for i in range(rank)]
    out = []
    for i in range(rank):
        imgs = list(gens)
        imgs[i] = gens[i].inverse()
        out.append(FreeHom(rank, imgs, imgs))
    for i in range(rank):
        for j in range(rank):
            if i == j:
                continue
            imgs = list(gens)
            imgs[i] = gens[i] * gens[j]
            inv = list(gens)
            inv[i] = gens[i] * gens[j].inverse()
            out.append(FreeHom(rank, imgs, inv))
    return out


NIELSEN = nielsen_generators(RANK)

autos_st = st.lists(st.sampled_from(NIELSEN), max_size=6).map(
    lambda fs: _prod(fs)
)


def _prod(fs):
    out = FreeHom.identity(RANK)
    for f in fs:
        out = out * f
    return out


@given(autos_st, autos_st, words_st)
@settings(max_examples=200)
def test_composition_acts_rightmost_first(f, g, w):
    assert (f * g)(w) == f(g(w))


@given(autos_st)
def test_inverse_round_trip(f):
    assert f.verify_inverse()
    assert (f * f.inverse()).is_identity
    assert (f.inverse() * f).is_identity


@given(autos_st, words_st)
def test_abelianized_action_is_linear(f, w):
    from dehnkit import IntMatrix

    mat = IntMatrix(f.abelianized())
    assert mat.apply(w.abelianized()) == f(w).abelianized()


@given(autos_st, autos_st)
def test_abelianization_is_functorial(f, g):
    from dehnkit import IntMatrix

    assert IntMatrix((f * g).abelianized()) == IntMatrix(f.abelianized()) @ IntMatrix(
        g.abelianized()
    )


def test_hom_requires_matching_rank():
    with pytest.raises(ValueError):
        FreeHom(2, [FreeWord.generator(2, 0)])
    with pytest.raises(ValueError):
        FreeWord.generator(2, 0) * FreeWord.generator(3, 0)
