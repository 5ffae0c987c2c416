"""Parser and evaluator for the group-spec mini-language.

Grammar (EBNF; this is the CLI's input contract):

    spec    := product ;
    product := atom { "x" atom } ;
    atom    := named
             | "Hol(" spec ")"
             | "Aut(" spec ")"
             | "sdp(" int "," int "," int ")"
             | "perm[" int "]{" cycles { "," cycles } "}"
             | "(" spec ")" ;
    named   := ("C"|"D"|"S"|"A") int | "Q8" | "E" int "^" int ;
    cycles  := one or more parenthesized cycles of space-separated points ;

Whitespace is insignificant except inside cycle parentheses, where it
separates points. "D n" is the dihedral group of ORDER n (even, >= 4).
"sdp(n,m,e)" is C_n acted on by C_m with the generator acting as x -> x^e
(e must be a unit mod n with e^m = 1 mod n). Products are left-associative.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Union

from .autgrp import AUT_CAP, automorphism_group, cyclic_power_semidirect, holomorph
from .errors import SpecSemanticError, SpecSyntaxError
from .group import MAX_ORDER, FiniteGroup, SubgroupHandle, close, direct_product
from .named import _is_prime, alternating, cyclic, dihedral, elementary_abelian, quaternion8, symmetric
from .perm import Perm


@dataclass(frozen=True)
class Named:
    kind: str  # "C" | "D" | "S" | "A" | "Q8" | "E"
    params: tuple[int, ...]


@dataclass(frozen=True)
class Product:
    left: "GroupSpecAst"
    right: "GroupSpecAst"


@dataclass(frozen=True)
class Semidirect:
    n: int
    m: int
    e: int


@dataclass(frozen=True)
class Hol:
    inner: "GroupSpecAst"


@dataclass(frozen=True)
class Aut:
    inner: "GroupSpecAst"


@dataclass(frozen=True)
class PermLiteral:
    degree: int
    gens: tuple[tuple[tuple[int, ...], ...], ...]  # generators -> cycles -> points


GroupSpecAst = Union[Named, Product, Semidirect, Hol, Aut, PermLiteral]


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def fail(self, *expected: str):
        found = self.text[self.pos : self.pos + 8]
        raise SpecSyntaxError(self.pos, expected, found)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def eat(self, token: str) -> bool:
        if self.text.startswith(token, self.pos):
            self.pos += len(token)
            return True
        return False

    def expect(self, token: str):
        if not self.eat(token):
            self.fail(repr(token))

    def parse_int(self) -> int:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self.fail("integer")
        return int(self.text[start : self.pos])

    def parse_spec(self) -> GroupSpecAst:
        node = self.parse_product()
        self.skip_ws()
        if self.pos != len(self.text):
            self.fail("'x'", "end of input")
        return node

    def parse_product(self) -> GroupSpecAst:
        node = self.parse_atom()
        while True:
            self.skip_ws()
            mark = self.pos
            if self.eat("x"):
                node = Product(node, self.parse_atom())
            else:
                self.pos = mark
                return node

    def parse_atom(self) -> GroupSpecAst:
        self.skip_ws()
        if self.eat("Hol("):
            inner = self.parse_product()
            self.skip_ws()
            self.expect(")")
            return Hol(inner)
        if self.eat("Aut("):
            inner = self.parse_product()
            self.skip_ws()
            self.expect(")")
            return Aut(inner)
        if self.eat("sdp("):
            nums = []
            for i in range(3):
                self.skip_ws()
                nums.append(self.parse_int())
                self.skip_ws()
                self.expect("," if i < 2 else ")")
            return _checked_sdp(*nums)
        if self.eat("perm["):
            self.skip_ws()
            degree = self.parse_int()
            self.skip_ws()
            self.expect("]")
            self.skip_ws()
            self.expect("{")
            gens = [self.parse_cycles(degree)]
            while True:
                self.skip_ws()
                if self.eat(","):
                    gens.append(self.parse_cycles(degree))
                else:
                    break
            self.skip_ws()
            self.expect("}")
            return PermLiteral(degree, tuple(gens))
        if self.eat("("):
            inner = self.parse_product()
            self.skip_ws()
            self.expect(")")
            return inner
        if self.eat("Q8"):
            return Named("Q8", ())
        if self.eat("E"):
            p = self.parse_int()
            self.expect("^")
            k = self.parse_int()
            if not _is_prime(p):
                raise SpecSemanticError(f"elementary-abelian base {p} is not prime")
            if k < 1:
                raise SpecSemanticError("elementary-abelian exponent must be >= 1")
            return Named("E", (p, k))
        for letter in "CDSA":
            if self.eat(letter):
                n = self.parse_int()
                _check_named(letter, n)
                return Named(letter, (n,))
        self.fail("'C'", "'D'", "'S'", "'A'", "'Q8'", "'E'", "'Hol('", "'Aut('",
                  "'sdp('", "'perm['", "'('")

    def parse_cycles(self, degree: int) -> tuple[tuple[int, ...], ...]:
        """One generator: one or more parenthesized cycles. "()" is the
        identity generator."""
        cycles = []
        seen: set[int] = set()
        self.skip_ws()
        if not self.text.startswith("(", self.pos):
            self.fail("'('")
        while True:
            self.skip_ws()
            if not self.eat("("):
                break
            points = []
            while True:
                self.skip_ws()
                if self.eat(")"):
                    break
                points.append(self.parse_int())
            for p in points:
                if p >= degree:
                    raise SpecSemanticError(f"point {p} out of range for degree {degree}")
                if p in seen:
                    raise SpecSemanticError(f"point {p} repeated within one generator")
                seen.add(p)
            if points:
                cycles.append(tuple(points))
        return tuple(cycles)


def _check_named(letter: str, n: int):
    if letter == "C" and n < 1:
        raise SpecSemanticError("cyclic order must be >= 1")
    if letter == "D" and (n < 4 or n % 2):
        raise SpecSemanticError(f"dihedral order {n} must be even and >= 4")
    if letter == "S" and n < 1:
        raise SpecSemanticError("symmetric degree must be >= 1")
    if letter == "A" and n < 2:
        raise SpecSemanticError("alternating degree must be >= 2")


def _checked_sdp(n: int, m: int, e: int) -> Semidirect:
    if n < 1 or m < 1:
        raise SpecSemanticError("sdp orders must be positive")
    if n > 1 and gcd(e % n, n) != 1:
        raise SpecSemanticError(f"sdp exponent {e} is not a unit mod {n}")
    if n > 1 and pow(e, m, n) != 1:
        raise SpecSemanticError(f"sdp exponent {e} does not satisfy e^{m} = 1 mod {n}")
    return Semidirect(n, m, e)


def parse(text: str) -> GroupSpecAst:
    """Parse a group spec; syntax errors carry the byte offset."""
    return _Parser(text).parse_spec()


def render(ast: GroupSpecAst) -> str:
    """Canonical text for an AST; parse(render(ast)) == ast."""
    if isinstance(ast, Named):
        if ast.kind == "Q8":
            return "Q8"
        if ast.kind == "E":
            return f"E{ast.params[0]}^{ast.params[1]}"
        return f"{ast.kind}{ast.params[0]}"
    if isinstance(ast, Product):
        left = render(ast.left)
        right = render(ast.right)
        if isinstance(ast.right, Product):
            right = f"({right})"
        return f"{left} x {right}"
    if isinstance(ast, Semidirect):
        return f"sdp({ast.n},{ast.m},{ast.e})"
    if isinstance(ast, Hol):
        return f"Hol({render(ast.inner)})"
    if isinstance(ast, Aut):
        return f"Aut({render(ast.inner)})"
    if isinstance(ast, PermLiteral):
        gens = ",".join(
            "".join("(" + " ".join(str(p) for p in cyc) + ")" for cyc in gen)
            if gen
            else "()"
            for gen in ast.gens
        )
        return f"perm[{ast.degree}]{{{gens}}}"
    raise TypeError(f"not an AST node: {ast!r}")


def evaluate(
    ast: GroupSpecAst, max_order: int = MAX_ORDER, aut_cap: int = AUT_CAP
) -> FiniteGroup:
    """Build the group an AST denotes."""
    if isinstance(ast, Named):
        if ast.kind == "C":
            return cyclic(ast.params[0])
        if ast.kind == "D":
            return dihedral(ast.params[0])
        if ast.kind == "S":
            return symmetric(ast.params[0])
        if ast.kind == "A":
            return alternating(ast.params[0])
        if ast.kind == "Q8":
            return quaternion8()
        return elementary_abelian(*ast.params)
    if isinstance(ast, Product):
        return direct_product(
            evaluate(ast.left, max_order, aut_cap),
            evaluate(ast.right, max_order, aut_cap),
            max_order=max_order,
        ).group
    if isinstance(ast, Semidirect):
        return cyclic_power_semidirect(ast.n, ast.m, ast.e, max_order=max_order).group
    if isinstance(ast, Hol):
        return holomorph(
            evaluate(ast.inner, max_order, aut_cap), aut_cap=aut_cap, max_order=max_order
        ).group
    if isinstance(ast, Aut):
        return automorphism_group(
            evaluate(ast.inner, max_order, aut_cap), aut_cap=aut_cap
        ).as_perm_group
    if isinstance(ast, PermLiteral):
        gens = [Perm.from_cycles(ast.degree, gen) for gen in ast.gens]
        return close(ast.degree, gens, max_order=max_order)
    raise TypeError(f"not an AST node: {ast!r}")


def build(text: str, max_order: int = MAX_ORDER, aut_cap: int = AUT_CAP) -> FiniteGroup:
    """parse + evaluate in one step."""
    return evaluate(parse(text), max_order=max_order, aut_cap=aut_cap)


def perm_literal(handle: SubgroupHandle) -> str:
    """Render a subgroup as a perm-literal spec over its parent's domain."""
    gens = handle.generating_subset()
    degree = handle.parent.degree
    if not gens:
        return render(PermLiteral(degree, ((),)))
    ast = PermLiteral(
        degree,
        tuple(handle.parent.elements[g].cycles() for g in gens),
    )
    return render(ast)
