"""Run-length free-group words and free-group homomorphisms.

Conventions used throughout the package:

* generators are 0-based integers; surface models attach names separately
* ``(f * g)`` is function composition, ``(f * g)(w) == f(g(w))``, matching
  products of mapping classes acting on curves with the rightmost factor first
* ``commutator(a, b) == a * b * a**-1 * b**-1``
* ``a.conjugated_by(b) == b * a * b**-1``
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

try:  # compiled kernel, optional
    from . import _wordops_c as _ops  # type: ignore[attr-defined]
except ImportError:  # pragma: no cover - exercised only without the extension
    from . import _wordops_py as _ops

KERNEL = _ops.KERNEL


class FreeWord:
    """Immutable reduced word in a free group of fixed rank."""

    __slots__ = ("rank", "runs")

    def __init__(self, rank: int, runs: Iterable[tuple[int, int]] = ()):
        runs = _ops.normalize(tuple(runs))
        for g, _ in runs:
            if not 0 <= g < rank:
                raise ValueError(f"generator {g} out of range for rank {rank}")
        object.__setattr__(self, "rank", rank)
        object.__setattr__(self, "runs", runs)

    def __setattr__(self, *_):
        raise AttributeError("FreeWord is immutable")

    @classmethod
    def identity(cls, rank: int) -> "FreeWord":
        return cls(rank, ())

    @classmethod
    def generator(cls, rank: int, index: int, exp: int = 1) -> "FreeWord":
        return cls(rank, ((index, exp),))

    @classmethod
    def _raw(cls, rank: int, runs: tuple) -> "FreeWord":
        # Internal fast path: runs already normalized and range-checked.
        self = object.__new__(cls)
        object.__setattr__(self, "rank", rank)
        object.__setattr__(self, "runs", runs)
        return self

    # --- group operations -------------------------------------------------

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        if self.rank != other.rank:
            raise ValueError("rank mismatch")
        return FreeWord._raw(self.rank, _ops.concat(self.runs, other.runs))

    def inverse(self) -> "FreeWord":
        return FreeWord._raw(self.rank, _ops.invert(self.runs))

    def __pow__(self, k: int) -> "FreeWord":
        return FreeWord._raw(self.rank, _ops.power(self.runs, k))

    def conjugated_by(self, b: "FreeWord") -> "FreeWord":
        """Return ``b * self * b**-1``."""
        return b * self * b.inverse()

    # --- inspection -------------------------------------------------------

    @property
    def is_identity(self) -> bool:
        return not self.runs

    def __len__(self) -> int:
        return sum(abs(e) for _, e in self.runs)

    def letters(self) -> Iterator[tuple[int, int]]:
        """Yield single letters ``(generator, +1 or -1)``."""
        for g, e in self.runs:
            step = 1 if e > 0 else -1
            for _ in range(abs(e)):
                yield (g, step)

    def abelianized(self) -> tuple[int, ...]:
        vec = [0] * self.rank
        for g, e in self.runs:
            vec[g] += e
        return tuple(vec)

    def cyclically_reduced(self) -> tuple["FreeWord", "FreeWord"]:
        """Return ``(core, c)`` with ``self == c * core * c**-1`` and core cyclically reduced."""
        letters = list(self.letters())
        i, j = 0, len(letters)
        while j - i >= 2 and letters[i][0] == letters[j - 1][0] and letters[i][1] == -letters[j - 1][1]:
            i += 1
            j -= 1
        return FreeWord(self.rank, letters[i:j]), FreeWord(self.rank, letters[:i])

    def is_cyclic_rotation_of(self, other: "FreeWord") -> bool:
        """Conjugacy test for cyclically reduced words via letter rotations."""
        a = list(self.letters())
        b = list(other.letters())
        if len(a) != len(b):
            return False
        if not a:
            return True
        return any(b[i:] + b[:i] == a for i in range(len(b)))

    def is_conjugate_to(self, other: "FreeWord") -> bool:
        ca, _ = self.cyclically_reduced()
        cb, _ = other.cyclically_reduced()
        return ca.is_cyclic_rotation_of(cb)

    # --- parsing and formatting -------------------------------------------

    @classmethod
    def parse(cls, text: str, names: Sequence[str]) -> "FreeWord":
        """Parse ``"a b^-1 c^2"`` against a generator name list."""
        index = {n: i for i, n in enumerate(names)}
        runs = []
        for tok in text.split():
            if "^" in tok:
                name, _, exp_s = tok.partition("^")
                exp = int(exp_s)
            else:
                name, exp = tok, 1
            if name not in index:
                raise ValueError(f"unknown generator {name!r}")
            runs.append((index[name], exp))
        return cls(len(names), runs)

    def format(self, names: Sequence[str]) -> str:
        if not self.runs:
            return "1"
        parts = []
        for g, e in self.runs:
            parts.append(names[g] if e == 1 else f"{names[g]}^{e}")
        return " ".join(parts)

    # --- plumbing ---------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FreeWord)
            and self.rank == other.rank
            and self.runs == other.runs
        )

    def __hash__(self) -> int:
        return hash((self.rank, self.runs))

    def __repr__(self) -> str:
        return f"FreeWord(rank={self.rank}, runs={self.runs})"


def commutator(a: FreeWord, b: FreeWord) -> FreeWord:
    """``a b a^-1 b^-1``."""
    return a * b * a.inverse() * b.inverse()


class FreeHom:
    """Endomorphism of a free group, given by generator images.

    Instances meant to be invertible carry explicit inverse images; there is no
    generic free-group inversion here, inverses are always assembled from the
    constructors (twists come with geometric inverses, compositions invert
    factorwise).
    """

    __slots__ = ("rank", "images", "inverse_images", "_pos", "_neg", "_ipos", "_ineg")

    def __init__(
        self,
        rank: int,
        images: Sequence[FreeWord],
        inverse_images: Sequence[FreeWord] | None = None,
    ):
        if len(images) != rank:
            raise ValueError("need one image per generator")
        for w in images:
            if w.rank != rank:
                raise ValueError("image rank mismatch")
        if inverse_images is not None:
            if len(inverse_images) != rank:
                raise ValueError("need one inverse image per generator")
            for w in inverse_images:
                if w.rank != rank:
                    raise ValueError("inverse image rank mismatch")
        object.__setattr__(self, "rank", rank)
        object.__setattr__(self, "images", tuple(images))
        object.__setattr__(
            self,
            "inverse_images",
            None if inverse_images is None else tuple(inverse_images),
        )
        object.__setattr__(self, "_pos", tuple(w.runs for w in self.images))
        object.__setattr__(self, "_neg", tuple(_ops.invert(w.runs) for w in self.images))
        if self.inverse_images is None:
            object.__setattr__(self, "_ipos", None)
            object.__setattr__(self, "_ineg", None)
        else:
            object.__setattr__(self, "_ipos", tuple(w.runs for w in self.inverse_images))
            object.__setattr__(
                self, "_ineg", tuple(_ops.invert(w.runs) for w in self.inverse_images)
            )

    def __setattr__(self, *_):
        raise AttributeError("FreeHom is immutable")

    @classmethod
    def identity(cls, rank: int) -> "FreeHom":
        gens = [FreeWord.generator(rank, i) for i in range(rank)]
        return cls(rank, gens, gens)

    @property
    def invertible(self) -> bool:
        return self.inverse_images is not None

    def apply(self, w: FreeWord) -> FreeWord:
        if w.rank != self.rank:
            raise ValueError("rank mismatch")
        return FreeWord._raw(self.rank, _ops.substitute(w.runs, self._pos, self._neg))

    def __call__(self, w: FreeWord) -> FreeWord:
        return self.apply(w)

    def apply_inverse(self, w: FreeWord) -> FreeWord:
        if self.inverse_images is None:
            raise ValueError("no inverse recorded")
        return FreeWord._raw(self.rank, _ops.substitute(w.runs, self._ipos, self._ineg))

    def __mul__(self, other: "FreeHom") -> "FreeHom":
        """Composition: ``(f * g)(w) == f(g(w))``."""
        if self.rank != other.rank:
            raise ValueError("rank mismatch")
        images = [self.apply(w) for w in other.images]
        inv = None
        if self.invertible and other.invertible:
            inv = [other.apply_inverse(w) for w in self.inverse_images]
        return FreeHom(self.rank, images, inv)

    def inverse(self) -> "FreeHom":
        if self.inverse_images is None:
            raise ValueError("no inverse recorded")
        return FreeHom(self.rank, self.inverse_images, self.images)

    def __pow__(self, k: int) -> "FreeHom":
        # Exponents in practice stay small; linear chaining keeps intermediate
        # word growth predictable, unlike repeated squaring.
        if k < 0:
            return self.inverse() ** (-k)
        out = FreeHom.identity(self.rank)
        for _ in range(k):
            out = out * self
        return out

    @property
    def is_identity(self) -> bool:
        return all(
            w.runs == ((i, 1),) for i, w in enumerate(self.images)
        )

    def verify_inverse(self) -> bool:
        """Check both composites restrict to the identity on generators."""
        if self.inverse_images is None:
            return False
        for i in range(self.rank):
            if self.apply(self.inverse_images[i]).runs != ((i, 1),):
                return False
            if self.apply_inverse(self.images[i]).runs != ((i, 1),):
                return False
        return True

    def abelianized(self) -> "list[list[int]]":
        """Matrix with column ``j`` the abelianization of the image of generator ``j``."""
        cols = [w.abelianized() for w in self.images]
        return [[cols[j][i] for j in range(self.rank)] for i in range(self.rank)]

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FreeHom)
            and self.rank == other.rank
            and self.images == other.images
        )

    def __hash__(self) -> int:
        return hash((self.rank, self.images))

    def __repr__(self) -> str:
        return f"FreeHom(rank={self.rank})"
