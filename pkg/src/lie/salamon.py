"""Salamon notation: ``(0,0,12)`` means de^3 = e^1∧e^2, read as [e1, e2] = e3.

Indices are single digits, so only algebras of dimension at most 9 can be written.
An entry is ``0`` or a signed sum of terms ``jk`` with an optional integer
coefficient written ``3*jk`` (``3·jk`` is accepted too).
"""
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from loguru import logger

from src.lie.algebra import LieAlgebra
from src.utils.errors import DimensionMismatch, ParseError, PreconditionError

Term = Tuple[int, int, int]  # (coefficient, j, k), 1-based


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_spaces(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_spaces()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, char: str) -> None:
        if self.peek() != char:
            found = self.peek() or "end of input"
            raise ParseError(f"expected {char!r}, found {found!r}", self.pos)
        self.pos += 1

    def digits(self) -> str:
        self.skip_spaces()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        return self.text[start:self.pos]


def _parse_entry(sc: _Scanner) -> List[Term]:
    terms: List[Term] = []
    first = True
    while True:
        sign = 1
        c = sc.peek()
        if c in ("+", "-"):
            sign = -1 if c == "-" else 1
            sc.pos += 1
        elif not first:
            break
        start = sc.pos
        token = sc.digits()
        if not token:
            raise ParseError("expected a term", sc.pos)
        coeff = 1
        if sc.peek() in ("*", "·", "."):
            sc.pos += 1
            coeff = int(token)
            start = sc.pos
            token = sc.digits()
        if token == "0" and first and coeff == 1 and sign == 1:
            if sc.peek() in ("+", "-"):
                raise ParseError("0 cannot start a sum", start)
            return []
        if len(token) != 2:
            raise ParseError(f"term {token!r} is not a pair of single-digit indices", start)
        terms.append((sign * coeff, int(token[0]), int(token[1])))
        first = False
        if sc.peek() not in ("+", "-"):
            break
    return terms


def _parse_tuple(text: str) -> List[List[Term]]:
    sc = _Scanner(text)
    sc.expect("(")
    entries = [_parse_entry(sc)]
    while sc.peek() == ",":
        sc.pos += 1
        entries.append(_parse_entry(sc))
    sc.expect(")")
    if sc.peek():
        raise ParseError("trailing characters after ')'", sc.pos)
    return entries


def parse_salamon(text: str, dim: int, name: Optional[str] = None) -> LieAlgebra:
    entries = _parse_tuple(text)
    if len(entries) != dim:
        raise ParseError(f"{len(entries)} entries given for dimension {dim}")
    if dim > 9:
        raise ParseError("Salamon notation supports dimension at most 9")
    brackets: Dict[Tuple[int, int], List[Fraction]] = {}
    for i, terms in enumerate(entries):
        for coeff, j, k in terms:
            for idx in (j, k):
                if not 1 <= idx <= dim:
                    raise ParseError(f"index {idx} out of range 1..{dim} in entry {i + 1}")
            if j == k:
                raise ParseError(f"repeated index in term {j}{k} of entry {i + 1}")
            if j > k:
                j, k, coeff = k, j, -coeff
            vec = brackets.setdefault((j - 1, k - 1), [Fraction(0)] * dim)
            vec[i] += coeff
    logger.debug(f"parsed {text} into {len(brackets)} nonzero brackets")
    return LieAlgebra.from_brackets(dim, brackets, name or text)


def _format_term(coeff: Fraction, j: int, k: int, first: bool) -> str:
    if coeff.denominator != 1:
        raise PreconditionError(f"coefficient {coeff} is not an integer")
    c = int(coeff)
    sign = "-" if c < 0 else ("" if first else "+")
    magnitude = abs(c)
    body = f"{j + 1}{k + 1}" if magnitude == 1 else f"{magnitude}*{j + 1}{k + 1}"
    return sign + body


def print_salamon(L: LieAlgebra) -> str:
    if L.dim > 9:
        raise DimensionMismatch("Salamon notation supports dimension at most 9")
    entries = []
    for i in range(L.dim):
        parts = []
        for (j, k), vec in L.structure:
            if vec[i]:
                parts.append(_format_term(vec[i], j, k, not parts))
        entries.append("".join(parts) if parts else "0")
    return "(" + ",".join(entries) + ")"
