"""Line-oriented text format for GQC codes.

::

    # comment
    q=4
    modulus=1,1,1            # only for non-prime q: F_q = F_p[y]/(modulus)
    blocks=6,5,5
    gen=1,1,1,1,1,1;0;1,1,1,1,1
    gen=0;1,1,1,1,1;1,1,1,1,1

Each ``gen=`` line holds one polynomial per block, separated by ``;``, each
an ascending list of F_q coefficients (integers in the field's encoding).
The zero polynomial is written ``0``.
"""

from __future__ import annotations

from .gf import Field, FieldError, field_of_order, make_extension, prime_field, prime_factors
from .gqc import GqcCode


class CodeSpecError(ValueError):
    def __init__(self, line: int | None, msg: str):
        self.line = line
        super().__init__(f"line {line}: {msg}" if line else msg)


def _ints(text: str, line: int, what: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip() != ""]
    except ValueError:
        raise CodeSpecError(line, f"{what}: expected comma-separated integers, got {text!r}") from None


def field_from_spec(q: int, modulus: list[int] | None, line: int | None = None) -> Field:
    ps = prime_factors(q) if q > 1 else []
    if len(ps) != 1:
        raise CodeSpecError(line, f"q={q} is not a prime power")
    p = ps[0]
    if q == p:
        if modulus:
            raise CodeSpecError(line, "modulus given for a prime field")
        return prime_field(p)
    if modulus is None:
        return field_of_order(q)
    try:
        F = make_extension(prime_field(p), modulus)
    except FieldError as e:
        raise CodeSpecError(line, str(e)) from None
    if F.order != q:
        raise CodeSpecError(line, f"modulus of degree {F.degree} does not give a field of order {q}")
    return F


def parse(text: str) -> GqcCode:
    q = modulus = blocks = None
    q_line = None
    gens: list[tuple[int, str]] = []
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise CodeSpecError(no, f"expected key=value, got {raw.strip()!r}")
        key, val = (s.strip() for s in line.split("=", 1))
        if key == "q":
            try:
                q = int(val)
            except ValueError:
                raise CodeSpecError(no, f"q must be an integer, got {val!r}") from None
            q_line = no
        elif key == "modulus":
            modulus = _ints(val, no, "modulus")
        elif key == "blocks":
            blocks = _ints(val, no, "blocks")
            if not blocks or any(m < 1 for m in blocks):
                raise CodeSpecError(no, "block lengths must be positive")
        elif key == "gen":
            gens.append((no, val))
        else:
            raise CodeSpecError(no, f"unknown key {key!r}")
    if q is None:
        raise CodeSpecError(None, "missing q=")
    if blocks is None:
        raise CodeSpecError(None, "missing blocks=")
    F = field_from_spec(q, modulus, q_line)
    parsed = []
    for no, val in gens:
        parts = val.split(";")
        if len(parts) != len(blocks):
            raise CodeSpecError(no, f"generator has {len(parts)} polynomials for {len(blocks)} blocks")
        tup = []
        for j, (part, m) in enumerate(zip(parts, blocks)):
            coeffs = _ints(part, no, f"polynomial {j}")
            while len(coeffs) > 1 and coeffs[-1] == 0:
                coeffs.pop()
            if len(coeffs) > m:
                raise CodeSpecError(no, f"polynomial {j} has {len(coeffs)} coefficients for block length {m}")
            if any(not 0 <= c < q for c in coeffs):
                raise CodeSpecError(no, f"polynomial {j} has a coefficient outside 0..{q - 1}")
            tup.append(coeffs)
        parsed.append(tup)
    return GqcCode(F, tuple(blocks), parsed)


def _poly_text(coeffs) -> str:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return ",".join(map(str, c)) or "0"


def serialize(code: GqcCode) -> str:
    F = code.field
    lines = [f"q={F.order}"]
    if not F.is_prime:
        if F.base is not None and not F.base.is_prime:
            raise ValueError("only simple extensions of a prime field can be serialized")
        lines.append("modulus=" + ",".join(map(str, F.modulus)))
    lines.append("blocks=" + ",".join(map(str, code.blocks)))
    for g in code.generators:
        lines.append("gen=" + ";".join(_poly_text(a.coeffs) for a in g))
    return "\n".join(lines) + "\n"


def load(path) -> GqcCode:
    with open(path) as fh:
        return parse(fh.read())


def generator_text(gen) -> str:
    return ";".join(_poly_text(a.coeffs) for a in gen)
