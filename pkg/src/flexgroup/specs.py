"""Group-spec grammar: parse, canonical text, and dispatch to constructors.

Grammar (ASCII):  C<n> | E(p,r) | Aff(p,r,s) | MatAff(p,r,[row;row;...]) |
Q8 | MM(p,q,m,r) | Perm(n; cycles, cycles, ...) | infix `x` for direct
product | parentheses for grouping.  Cycles are whitespace-separated point
lists like (0 1 2)(3 4).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import core
from .errors import ParseError


@dataclass(frozen=True)
class SpecCall:
    name: str
    args: tuple

    def to_text(self) -> str:
        if self.name == "C":
            return f"C{self.args[0]}"
        if self.name == "Q8":
            return "Q8"
        if self.name == "MatAff":
            p, r, rows = self.args
            body = ";".join(",".join(str(v) for v in row) for row in rows)
            return f"MatAff({p},{r},[{body}])"
        if self.name == "Perm":
            degree, gens = self.args
            gen_text = ", ".join(
                "".join("(" + " ".join(str(pt) for pt in cyc) + ")" for cyc in gen)
                for gen in gens
            )
            return f"Perm({degree}; {gen_text})"
        return f"{self.name}({','.join(str(a) for a in self.args)})"


@dataclass(frozen=True)
class SpecProduct:
    left: "GroupSpec"
    right: "GroupSpec"

    def to_text(self) -> str:
        right = self.right.to_text()
        if isinstance(self.right, SpecProduct):
            right = f"({right})"
        return f"{self.left.to_text()} x {right}"


GroupSpec = SpecCall | SpecProduct


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str) -> ParseError:
        return ParseError(message, self.pos)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        self.skip_ws()
        if self.peek() != ch:
            raise self.error(f"expected {ch!r}, found {self.peek()!r}")
        self.pos += 1

    def word(self) -> str:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isalpha():
            self.pos += 1
        if start == self.pos:
            raise self.error("expected a constructor name")
        return self.text[start:self.pos]

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise self.error("expected an integer")
        return int(self.text[start:self.pos])

    def int_args(self, count: int) -> tuple[int, ...]:
        self.expect("(")
        args = [self.integer()]
        while len(args) < count:
            self.expect(",")
            args.append(self.integer())
        self.expect(")")
        return tuple(args)

    def matrix(self) -> tuple[tuple[int, ...], ...]:
        self.expect("[")
        rows = [self.row()]
        while True:
            self.skip_ws()
            if self.peek() == ";":
                self.pos += 1
                rows.append(self.row())
            else:
                break
        self.expect("]")
        return tuple(rows)

    def row(self) -> tuple[int, ...]:
        vals = [self.integer()]
        while True:
            self.skip_ws()
            if self.peek() == ",":
                self.pos += 1
                vals.append(self.integer())
            else:
                break
        return tuple(vals)

    def cycles(self) -> tuple[tuple[int, ...], ...]:
        cycles = []
        while True:
            self.skip_ws()
            if self.peek() != "(":
                break
            self.pos += 1
            pts = []
            while True:
                self.skip_ws()
                if self.peek() == ")":
                    self.pos += 1
                    break
                if not self.peek().isdigit():
                    raise self.error("expected a point or ')'")
                pts.append(self.integer())
            if len(pts) < 2:
                raise self.error("a cycle needs at least two points")
            if len(set(pts)) != len(pts):
                raise self.error(f"repeated point in cycle {tuple(pts)}")
            cycles.append(tuple(pts))
        if not cycles:
            raise self.error("expected at least one cycle")
        return tuple(cycles)

    def atom(self) -> GroupSpec:
        self.skip_ws()
        if self.peek() == "(":
            self.pos += 1
            node = self.product()
            self.expect(")")
            return node
        name = self.word()
        if name == "x":
            raise self.error("'x' is the product operator, not a constructor")
        if name == "C":
            n = self.integer()
            if n < 1:
                raise self.error(f"cyclic order must be positive, got {n}")
            return SpecCall("C", (n,))
        if name == "Q":
            n = self.integer()
            if n != 8:
                raise self.error("only Q8 is available")
            return SpecCall("Q8", ())
        if name == "E":
            return SpecCall("E", self.int_args(2))
        if name == "Aff":
            return SpecCall("Aff", self.int_args(3))
        if name == "MM":
            return SpecCall("MM", self.int_args(4))
        if name == "MatAff":
            self.expect("(")
            p = self.integer()
            self.expect(",")
            r = self.integer()
            self.expect(",")
            mat = self.matrix()
            self.expect(")")
            if len(mat) != r or any(len(row) != r for row in mat):
                raise self.error(f"matrix must be {r}x{r}")
            return SpecCall("MatAff", (p, r, mat))
        if name == "Perm":
            self.expect("(")
            degree = self.integer()
            self.expect(";")
            gens = [self.cycles()]
            while True:
                self.skip_ws()
                if self.peek() == ",":
                    self.pos += 1
                    gens.append(self.cycles())
                else:
                    break
            self.expect(")")
            return SpecCall("Perm", (degree, tuple(gens)))
        raise self.error(f"unknown constructor {name!r}")

    def product(self) -> GroupSpec:
        node = self.atom()
        while True:
            self.skip_ws()
            if self.peek() == "x":
                self.pos += 1
                node = SpecProduct(node, self.atom())
            else:
                break
        return node

    def parse(self) -> GroupSpec:
        node = self.product()
        self.skip_ws()
        if self.pos != len(self.text):
            raise self.error(f"unexpected trailing text {self.text[self.pos:]!r}")
        return node


def parse_spec(text: str) -> GroupSpec:
    if not text or not text.strip():
        raise ParseError("empty group spec", 0)
    return _Parser(text).parse()


def _cycles_to_perm(degree: int, cycles: tuple[tuple[int, ...], ...],
                    text: str) -> tuple[int, ...]:
    perm = list(range(degree))
    seen: set[int] = set()
    for cyc in cycles:
        for pt in cyc:
            if pt >= degree:
                raise ParseError(f"point {pt} out of range for degree {degree}")
            if pt in seen:
                raise ParseError(f"point {pt} appears in two cycles of {text!r}")
            seen.add(pt)
        for i, pt in enumerate(cyc):
            perm[pt] = cyc[(i + 1) % len(cyc)]
    return tuple(perm)


def build_spec(spec: GroupSpec, order_cap: int | None = None) -> core.FiniteGroup:
    if isinstance(spec, SpecProduct):
        return core.direct_product(build_spec(spec.left, order_cap),
                                   build_spec(spec.right, order_cap),
                                   order_cap=order_cap)
    name, args = spec.name, spec.args
    if name == "C":
        return core.cyclic(args[0])
    if name == "Q8":
        return core.quaternion8()
    if name == "E":
        return core.elementary_abelian(*args, order_cap=order_cap)
    if name == "Aff":
        return core.scalar_affine(*args, order_cap=order_cap)
    if name == "MM":
        return core.miller_moreno(*args, order_cap=order_cap)
    if name == "MatAff":
        p, r, mat = args
        return core.matrix_affine(p, r, [list(row) for row in mat],
                                  order_cap=order_cap)
    if name == "Perm":
        degree, gens = args
        text = spec.to_text()
        perms = [_cycles_to_perm(degree, cycles, text) for cycles in gens]
        return core.perm_group(degree, perms, order_cap=order_cap)
    raise ParseError(f"unknown constructor {name!r}")


def parse_group_spec(text: str, order_cap: int | None = None) -> core.FiniteGroup:
    """Parse spec text and build the group; constructor errors propagate."""
    return build_spec(parse_spec(text), order_cap=order_cap)
