"""Exponent pairs as exact rationals, the A/B processes and convexity.

Every pair carries a derivation string that can be replayed to reproduce
its coordinates exactly.  The grammar is::

    expr := SEED(p/q,p/q) | NAMED(label) | A(expr) | B(expr)
          | C(t,expr,expr)

``C(t, p1, p2)`` is ``convex_combine(p1, p2, t)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

from ..errors import ValidationError

Rational = Union[Fraction, int, str]

HALF = Fraction(1, 2)
MAX_DEPTH = 12


def as_fraction(x: Rational) -> Fraction:
    """Exact conversion; binary floats are refused."""
    if isinstance(x, bool):
        raise ValidationError(f"not a rational: {x!r}")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValidationError(f"malformed rational {x!r}") from exc
    raise ValidationError(f"refusing non-exact value {x!r}; pass 'p/q' or Fraction")


def fmt_fraction(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class ExponentPair:
    kappa: Fraction
    lam: Fraction
    eps_limit: bool = False
    derivation: str = field(default="", compare=False)

    def __post_init__(self):
        k = as_fraction(self.kappa)
        l = as_fraction(self.lam)
        object.__setattr__(self, "kappa", k)
        object.__setattr__(self, "lam", l)
        if not (0 <= k <= HALF <= l <= 1):
            raise ValidationError(
                f"({k}, {l}) violates 0 <= kappa <= 1/2 <= lambda <= 1")
        if not self.derivation:
            object.__setattr__(
                self, "derivation", f"SEED({fmt_fraction(k)},{fmt_fraction(l)})")

    @property
    def key(self) -> tuple:
        return (self.kappa, self.lam, self.eps_limit)

    def __repr__(self):
        eps = "+eps" if self.eps_limit else ""
        return f"ExponentPair({self.kappa}, {self.lam}{eps})"


def seed(kappa: Rational, lam: Rational) -> ExponentPair:
    return ExponentPair(as_fraction(kappa), as_fraction(lam))


TRIVIAL_SEEDS = (seed(0, 1), seed(HALF, HALF))


def a_process(p: ExponentPair) -> ExponentPair:
    d = 2 * p.kappa + 2
    return ExponentPair(p.kappa / d, HALF + p.lam / d, p.eps_limit,
                        f"A({p.derivation})")


def b_process(p: ExponentPair) -> ExponentPair:
    return ExponentPair(p.lam - HALF, p.kappa + HALF, p.eps_limit,
                        f"B({p.derivation})")


def convex_combine(p1: ExponentPair, p2: ExponentPair, t: Rational) -> ExponentPair:
    t = as_fraction(t)
    if not 0 <= t <= 1:
        raise ValidationError(f"convexity parameter t={t} outside [0, 1]")
    return ExponentPair(
        t * p1.kappa + (1 - t) * p2.kappa,
        t * p1.lam + (1 - t) * p2.lam,
        p1.eps_limit or p2.eps_limit,
        f"C({fmt_fraction(t)},{p1.derivation},{p2.derivation})",
    )


# Named pairs that are not reachable from the trivial seeds.  Bourgain's pair
# is only known with +eps slack.
NAMED_PAIRS: dict[str, ExponentPair] = {
    "heath-brown": ExponentPair(Fraction(9, 26), Fraction(7, 13), False,
                                "NAMED(heath-brown)"),
    "bourgain": ExponentPair(Fraction(13, 84), Fraction(55, 84), True,
                             "NAMED(bourgain)"),
}

_BAA = "B(A(A(SEED(1/2,1/2))))"
LAURINCIKAS_DERIVATION = f"C(12/33,SEED(1/2,1/2),{_BAA})"


def named_table(extra: Mapping[str, tuple] | None = None) -> list[ExponentPair]:
    """Pairs added by ``generate_pairs(include_named=True)``.

    ``extra`` maps labels to ``(kappa, lambda)`` or ``(kappa, lambda, eps)``
    and extends the table (literature pairs beyond the built-ins).
    """
    table = [
        NAMED_PAIRS["heath-brown"],
        NAMED_PAIRS["bourgain"],
        replay(_BAA),
        replay(LAURINCIKAS_DERIVATION),
    ]
    for label, spec in (extra or {}).items():
        k, l, *rest = spec
        eps = bool(rest[0]) if rest else False
        table.append(ExponentPair(as_fraction(k), as_fraction(l), eps,
                                  f"NAMED({label})"))
    return table


def register_named(label: str, kappa: Rational, lam: Rational,
                   eps_limit: bool = False) -> ExponentPair:
    if not re.fullmatch(r"[A-Za-z0-9_.\-]+", label):
        raise ValidationError(f"bad label {label!r}")
    p = ExponentPair(as_fraction(kappa), as_fraction(lam), eps_limit,
                     f"NAMED({label})")
    NAMED_PAIRS[label] = p
    return p


# --- derivation replay -------------------------------------------------------

_TOKEN = re.compile(r"\s*(SEED|NAMED|A|B|C|\(|\)|,|[^\s(),]+)")


def _tokenize(text: str) -> list[str]:
    pos, out = 0, []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ValidationError(f"cannot tokenize derivation at {text[pos:]!r}")
        out.append(m.group(1))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, tokens, named):
        self.toks = tokens
        self.i = 0
        self.named = named

    def take(self, expected=None):
        if self.i >= len(self.toks):
            raise ValidationError("truncated derivation")
        tok = self.toks[self.i]
        if expected is not None and tok != expected:
            raise ValidationError(f"expected {expected!r}, got {tok!r}")
        self.i += 1
        return tok

    def expr(self) -> ExponentPair:
        head = self.take()
        self.take("(")
        if head == "SEED":
            k = as_fraction(self.take())
            self.take(",")
            l = as_fraction(self.take())
            p = seed(k, l)
        elif head == "NAMED":
            label = self.take()
            if label not in self.named:
                raise ValidationError(f"unknown named pair {label!r}")
            p = self.named[label]
        elif head == "A":
            p = a_process(self.expr())
        elif head == "B":
            p = b_process(self.expr())
        elif head == "C":
            t = as_fraction(self.take())
            self.take(",")
            p1 = self.expr()
            self.take(",")
            p2 = self.expr()
            p = convex_combine(p1, p2, t)
        else:
            raise ValidationError(f"unknown derivation symbol {head!r}")
        self.take(")")
        return p


def replay(derivation: str, named: Mapping[str, ExponentPair] | None = None) -> ExponentPair:
    """Rebuild a pair from its derivation string."""
    parser = _Parser(_tokenize(derivation), NAMED_PAIRS if named is None else named)
    p = parser.expr()
    if parser.i != len(parser.toks):
        raise ValidationError(f"trailing input in derivation {derivation!r}")
    return p


# --- sets and generation -----------------------------------------------------

class PairSet:
    """Finite set of pairs, deduplicated by ``(kappa, lambda, eps_limit)``.

    The first pair inserted for a key wins, so breadth-first generation keeps
    the shortest derivation.  Iteration is in canonical ``(kappa, lambda, eps)``
    order.
    """

    def __init__(self, pairs: Iterable[ExponentPair] = ()):
        self._pairs: dict[tuple, ExponentPair] = {}
        for p in pairs:
            self.add(p)

    def add(self, p: ExponentPair) -> bool:
        if p.key in self._pairs:
            return False
        self._pairs[p.key] = p
        return True

    def __len__(self):
        return len(self._pairs)

    def __iter__(self) -> Iterator[ExponentPair]:
        return iter(sorted(self._pairs.values(), key=lambda p: p.key))

    def __contains__(self, item) -> bool:
        if isinstance(item, ExponentPair):
            return item.key in self._pairs
        k, l = (as_fraction(x) for x in item)
        return (k, l, False) in self._pairs or (k, l, True) in self._pairs

    def get(self, kappa: Rational, lam: Rational, eps_limit: bool = False):
        return self._pairs.get((as_fraction(kappa), as_fraction(lam), eps_limit))

    def __repr__(self):
        return f"PairSet({len(self)} pairs)"


def generate_pairs(depth: int, include_named: bool = False,
                   extra_named: Mapping[str, tuple] | None = None) -> PairSet:
    """Closure of the trivial seeds under A/B words of length <= depth."""
    if not isinstance(depth, int) or depth < 0:
        raise ValidationError(f"depth must be a non-negative integer, got {depth!r}")
    if depth > MAX_DEPTH:
        raise ValidationError(f"depth {depth} exceeds cap {MAX_DEPTH}")
    ps = PairSet(TRIVIAL_SEEDS)
    frontier = list(TRIVIAL_SEEDS)
    for _ in range(depth):
        nxt = []
        for p in frontier:
            for q in (a_process(p), b_process(p)):
                if ps.add(q):
                    nxt.append(q)
        frontier = nxt
    if include_named:
        for p in named_table(extra_named):
            ps.add(p)
    return ps
