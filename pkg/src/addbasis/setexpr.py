"""A tiny expression language for writing eventually periodic sets.

Grammar (whitespace-insensitive, ASCII, nonnegative decimal integers):

    set    := term ( "U" term )*
    term   := ap | finite | range
    ap     := INT "N" ( "+" INT )? ( "@" INT )?   # aN+b@t = {x >= t : x = b mod a}
    finite := "{" [ INT ( "," INT )* ] "}"        # "{}" is the empty set
    range  := "[" INT ".." INT "]"

The threshold "@t" defaults to the offset b.  Canonical printing emits one
"mN+r@t" term per tail residue (ascending) followed by the exceptional
elements as a single finite set, so parse(format(S)) == S.
"""

from __future__ import annotations

from .eps import EPS


class SetExprError(ValueError):
    """Syntax or semantic error in a set expression, with a position."""

    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} (at position {position})")
        self.position = position


class _Scanner:
    def __init__(self, text: str) -> None:
        self.text = text
        self.pos = 0

    def _skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self._skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, token: str) -> None:
        self._skip_ws()
        if not self.text.startswith(token, self.pos):
            raise SetExprError(f"expected '{token}'", self.pos)
        self.pos += len(token)

    def try_take(self, token: str) -> bool:
        self._skip_ws()
        if self.text.startswith(token, self.pos):
            self.pos += len(token)
            return True
        return False

    def integer(self) -> tuple[int, int]:
        self._skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise SetExprError("expected an integer", start)
        return int(self.text[start:self.pos]), start

    def at_end(self) -> bool:
        self._skip_ws()
        return self.pos >= len(self.text)


def parse_set_expr(text: str) -> EPS:
    sc = _Scanner(text)
    if sc.at_end():
        raise SetExprError("empty expression", 0)
    acc = _term(sc)
    while sc.try_take("U"):
        acc = acc.union(_term(sc))
    if not sc.at_end():
        raise SetExprError("unexpected trailing input", sc.pos)
    return acc


def _term(sc: _Scanner) -> EPS:
    ch = sc.peek()
    if ch == "{":
        return _finite(sc)
    if ch == "[":
        return _range(sc)
    if ch.isdigit():
        return _ap(sc)
    raise SetExprError("expected a term (aN+b@t, {..} or [a..b])", sc.pos)


def _ap(sc: _Scanner) -> EPS:
    a, a_pos = sc.integer()
    sc.take("N")
    if a == 0:
        raise SetExprError("modulus must be positive", a_pos)
    b = 0
    if sc.try_take("+"):
        b, _ = sc.integer()
    t = b
    if sc.try_take("@"):
        t, _ = sc.integer()
    return EPS(a, frozenset({b % a}), t, ())


def _finite(sc: _Scanner) -> EPS:
    sc.take("{")
    elements: list[int] = []
    if not sc.try_take("}"):
        elements.append(sc.integer()[0])
        while sc.try_take(","):
            elements.append(sc.integer()[0])
        sc.take("}")
    return EPS(1, frozenset(), 0, tuple(elements))


def _range(sc: _Scanner) -> EPS:
    sc.take("[")
    lo, lo_pos = sc.integer()
    sc.take("..")
    hi, _ = sc.integer()
    sc.take("]")
    if lo > hi:
        raise SetExprError(f"empty range [{lo}..{hi}]", lo_pos)
    return EPS(1, frozenset(), 0, tuple(range(lo, hi + 1)))


def format_set_expr(s: EPS) -> str:
    """Canonical text for an EPS; parse_set_expr inverts it."""
    parts = [f"{s.modulus}N+{r}@{s.threshold}" for r in sorted(s.residues)]
    if s.exceptional or not parts:
        parts.append("{" + ",".join(str(f) for f in s.exceptional) + "}")
    return " U ".join(parts)
