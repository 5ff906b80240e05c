"""Free-group words, finite presentations and Fox free differential calculus."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import H1NotZ, NonDeficiencyOne
from .snf import smith_normal_form


def _free_reduce(letters):
    out = []
    for g, e in letters:
        if out and out[-1][0] == g and out[-1][1] == -e:
            out.pop()
        else:
            out.append((g, e))
    return tuple(out)


class Word:
    """A freely reduced word in generators indexed 0, 1, 2, ...

    Letters are ``(generator, exponent)`` with exponent +1 or -1.
    """

    __slots__ = ("letters",)

    def __init__(self, letters: Sequence[tuple[int, int]] = ()):
        expanded = []
        for g, e in letters:
            if e == 0:
                continue
            step = 1 if e > 0 else -1
            expanded.extend([(int(g), step)] * abs(e))
        self.letters = _free_reduce(expanded)

    @classmethod
    def generator(cls, g: int, power: int = 1) -> "Word":
        return cls([(g, power)])

    @classmethod
    def identity(cls) -> "Word":
        return cls()

    def __mul__(self, other: "Word") -> "Word":
        w = Word.__new__(Word)
        w.letters = _free_reduce(self.letters + other.letters)
        return w

    def inverse(self) -> "Word":
        w = Word.__new__(Word)
        w.letters = tuple((g, -e) for g, e in reversed(self.letters))
        return w

    def __pow__(self, k: int) -> "Word":
        base = self if k >= 0 else self.inverse()
        out = Word()
        for _ in range(abs(k)):
            out = out * base
        return out

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def is_identity(self) -> bool:
        return not self.letters

    def generators_used(self) -> set[int]:
        return {g for g, _ in self.letters}

    def exponent_sum(self, g: int) -> int:
        return sum(e for h, e in self.letters if h == g)

    def __eq__(self, other):
        return isinstance(other, Word) and self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def __lt__(self, other):
        return (len(self), self.letters) < (len(other), other.letters)

    def __repr__(self):
        return f"Word({list(self.letters)})"

    def to_string(self, names: Sequence[str]) -> str:
        """Space-separated tokens, collapsing runs into ``name^k``."""
        if not self.letters:
            return ""
        tokens = []
        run_g, run_e = self.letters[0][0], 0
        for g, e in self.letters:
            if g == run_g and (run_e == 0 or (run_e > 0) == (e > 0)):
                run_e += e
            else:
                tokens.append((run_g, run_e))
                run_g, run_e = g, e
        tokens.append((run_g, run_e))
        return " ".join(names[g] if k == 1 else f"{names[g]}^{k}" for g, k in tokens)


def exponent_sum(w: Word, g: int) -> int:
    return w.exponent_sum(g)


class GroupRingElement:
    """Integer linear combination of free-group words."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for w, c in dict(terms).items():
                if c:
                    clean[w] = clean.get(w, 0) + c
        self.terms = {w: c for w, c in clean.items() if c}

    @classmethod
    def from_word(cls, w: Word, coeff: int = 1) -> "GroupRingElement":
        return cls({w: coeff})

    @classmethod
    def one(cls) -> "GroupRingElement":
        return cls({Word(): 1})

    @classmethod
    def zero(cls) -> "GroupRingElement":
        return cls()

    def __add__(self, other):
        if isinstance(other, int):
            other = GroupRingElement.from_word(Word(), other)
        elif isinstance(other, Word):
            other = GroupRingElement.from_word(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return GroupRingElement(out)

    __radd__ = __add__

    def __neg__(self):
        return GroupRingElement({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, Word):
            other = GroupRingElement.from_word(other)
        return self + (-other)

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        if isinstance(other, Word):
            other = GroupRingElement.from_word(other)
        if isinstance(other, int):
            return GroupRingElement({w: c * other for w, c in self.terms.items()})
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 * w2
                out[w] = out.get(w, 0) + c1 * c2
        return GroupRingElement(out)

    def __rmul__(self, other):
        if isinstance(other, Word):
            return GroupRingElement.from_word(other) * self
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def is_zero(self) -> bool:
        return not self.terms

    def augmentation(self) -> int:
        return sum(self.terms.values())

    def __eq__(self, other):
        return isinstance(other, GroupRingElement) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __iter__(self):
        return iter(sorted(self.terms.items()))

    def __repr__(self):
        inner = ", ".join(f"{c}*{list(w.letters)}" for w, c in sorted(self.terms.items()))
        return f"GroupRingElement({inner})"

    def to_string(self, names: Sequence[str]) -> str:
        """E.g. ``mu - mu x1 mu^-1``; the empty word prints as 1."""
        if not self.terms:
            return "0"
        parts = []
        for w, c in sorted(self.terms.items()):
            word = w.to_string(names) if not w.is_identity() else ""
            mag = abs(c)
            if not word:
                mono = str(mag)
            else:
                mono = word if mag == 1 else f"{mag}*{word}"
            parts.append(("-" if c < 0 else "+", mono))
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        return text + "".join(f" {sign} {mono}" for sign, mono in parts[1:])


def fox_derivative(w: Word, g: int) -> GroupRingElement:
    """Fox derivative of a word with respect to generator ``g``.

    For ``w = y_1 ... y_n`` this is the sum over letters equal to g^{+1} of
    the prefix before it, minus the sum over letters g^{-1} of the prefix
    including it.
    """
    terms: dict[Word, int] = {}
    prefix = Word()
    for h, e in w.letters:
        letter = Word.generator(h, e)
        if h == g:
            if e > 0:
                terms[prefix] = terms.get(prefix, 0) + 1
            else:
                p = prefix * letter
                terms[p] = terms.get(p, 0) - 1
        prefix = prefix * letter
    return GroupRingElement(terms)


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relators: tuple[Word, ...]

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(self, "relators", tuple(self.relators))
        k = len(self.generators)
        if len(set(self.generators)) != k:
            raise ValueError("duplicate generator names")
        for r in self.relators:
            for g in r.generators_used():
                if not 0 <= g < k:
                    raise ValueError(f"generator index {g} out of range")

    @property
    def num_generators(self) -> int:
        return len(self.generators)

    def deficiency(self) -> int:
        return len(self.generators) - len(self.relators)

    def require_deficiency_one(self):
        if self.deficiency() != 1:
            raise NonDeficiencyOne(
                f"{len(self.generators)} generators and {len(self.relators)} relators")

    def index(self, name: str) -> int:
        return self.generators.index(name)

    def exponent_matrix(self) -> list[list[int]]:
        return [[r.exponent_sum(j) for j in range(len(self.generators))] for r in self.relators]

    def fox_jacobian(self):
        """Rows are relators, columns generators: entries d r_i / d g_j."""
        return [[fox_derivative(r, j) for j in range(len(self.generators))]
                for r in self.relators]

    def word_string(self, w: Word) -> str:
        return w.to_string(self.generators)


@dataclass(frozen=True)
class LinPresentation:
    """Knot group presentation built from a free Seifert surface of genus g.

    Generators are ``x_1 .. x_2g`` (indices 0 .. 2g-1) followed by ``mu``
    (index 2g).  ``pairs[i] = (a_i^+, a_i^-)`` are words in the x's only.
    """

    genus: int
    pairs: tuple[tuple[Word, Word], ...]
    x_names: tuple[str, ...] = field(default=())
    mu_name: str = "mu"

    def __post_init__(self):
        if self.genus < 1:
            raise ValueError("genus must be positive")
        pairs = tuple((p, m) for p, m in self.pairs)
        object.__setattr__(self, "pairs", pairs)
        if not self.x_names:
            object.__setattr__(self, "x_names",
                               tuple(f"x{i + 1}" for i in range(2 * self.genus)))
        if len(self.x_names) != 2 * self.genus:
            raise ValueError("need exactly 2g x-generator names")
        if len(pairs) != 2 * self.genus:
            raise ValueError(f"genus {self.genus} requires {2 * self.genus} pairs, got {len(pairs)}")
        for a, b in pairs:
            for g in a.generators_used() | b.generators_used():
                if not 0 <= g < 2 * self.genus:
                    raise ValueError("Lin pair words may only use the x generators")

    @property
    def mu_index(self) -> int:
        return 2 * self.genus

    @property
    def generator_names(self) -> tuple[str, ...]:
        return self.x_names + (self.mu_name,)

    def relation_matrix(self) -> list[list[int]]:
        """Rows i: e_j(a_i^+) + e_j(a_i^-), the metabelian exponent system."""
        n = 2 * self.genus
        return [[a.exponent_sum(j) + b.exponent_sum(j) for j in range(n)] for a, b in self.pairs]

    def to_presentation(self) -> Presentation:
        return lin_to_presentation(self)


def lin_to_presentation(L: LinPresentation) -> Presentation:
    """Relator i is ``mu a_i^+ mu^-1 (a_i^-)^-1``."""
    mu = Word.generator(L.mu_index)
    rels = tuple(mu * a * mu.inverse() * b.inverse() for a, b in L.pairs)
    return Presentation(L.generator_names, rels)


def abelianization(P: Presentation) -> tuple[int, ...]:
    """The map generator -> Z induced by H_1 = Z, as a tuple indexed by generator.

    The sign is fixed so that the first nonzero image is positive.
    """
    k = P.num_generators
    E = P.exponent_matrix()
    if not E:
        if k != 1:
            raise H1NotZ(f"free group of rank {k} has H_1 = Z^{k}")
        return (1,)
    U, D, V = smith_normal_form(E)
    diag = [D[i][i] for i in range(min(len(D), k))]
    rank = sum(1 for d in diag if d)
    torsion = [d for d in diag if d > 1]
    if k - rank != 1 or torsion:
        free = k - rank
        raise H1NotZ(f"H_1 has free rank {free} and torsion {torsion or 'none'}")
    # the last column of V spans the kernel of the exponent matrix
    v = [V[i][k - 1] for i in range(k)]
    first = next(x for x in v if x)
    if first < 0:
        v = [-x for x in v]
    for row in E:
        assert sum(a * b for a, b in zip(row, v)) == 0
    return tuple(v)


def tietze_extend(P: Presentation, g: int, name: str | None = None) -> Presentation:
    """Add a generator y and relator ``y g^-1``; the group is unchanged."""
    name = name or f"y{len(P.generators)}"
    y = len(P.generators)
    rel = Word([(y, 1), (g, -1)])
    return Presentation(P.generators + (name,), P.relators + (rel,))
