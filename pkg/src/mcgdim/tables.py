"""Regenerate the genus-0 subgroup tables (appendix A) and genus-2 bound table (appendix B).

Appendix A rows come from the orbit solver with the case constraints of the
punctured-sphere classification: for a cyclic group Z/m with signature
(0; m, m) the two poles are either both empty (case 2.1, m | n), exactly one
occupied (case 1, m | n-1) or both occupied (case 3.1, m | n-2); for the
dihedral group D_2m with signature (0; 2, 2, m) the pole pair is empty (2.2)
or occupied (3.2).  Polyhedral groups are listed as cases (4)-(6).
"""
from __future__ import annotations

import csv
import io
import json
from collections.abc import Mapping
from dataclasses import dataclass
from fractions import Fraction

from .catalog import (
    BROUGHTON_ROWS,
    FiniteGroupSpec,
    cyclic,
    dihedral,
    genus0_signature,
    polyhedral,
)
from .dimensions import omega
from .errata import Erratum, errata_for
from .orbifold import OrbifoldSignature, nf_values, vcd_weyl
from .verifier import group_length

TABLE_A_RANGE = range(5, 14)
FORMATS = ("markdown", "csv", "json")


class OutOfTableRange(ValueError):
    pass


# case label, family, pole constraints on the signature positions
_CASES = (
    ("(1)", "cyclic", {0: True, 1: False}),
    ("(2.1)", "cyclic", {0: False, 1: False}),
    ("(2.2)", "dihedral", {2: False}),
    ("(3.1)", "cyclic", {0: True, 1: True}),
    ("(3.2)", "dihedral", {2: True}),
)
_POLY_CASES = (("(4)", "A4"), ("(5)", "S4"), ("(6)", "A5"))
# the appendix shows polyhedral groups first, biggest first, with A_5 last
_PUBLISHED_POLY_ORDER = {"S4": 0, "A4": 1, "A5": 2}


def _case_key(label: str) -> tuple[int, ...]:
    return tuple(int(x) for x in label.strip("()").split("."))


@dataclass(frozen=True)
class TableRow:
    case: str
    group: FiniteGroupSpec
    n_F: int
    vcd_WF: int
    lambda_F: int

    @property
    def values(self) -> tuple:
        return (self.group.name, self.n_F, self.vcd_WF, self.lambda_F)

    def to_json(self) -> dict:
        return {
            "case": self.case,
            "group": self.group.to_json(),
            "nF": self.n_F,
            "vcdWF": self.vcd_WF,
            "lambda": self.lambda_F,
        }

    @classmethod
    def from_json(cls, data: Mapping) -> TableRow:
        return cls(data["case"], FiniteGroupSpec.from_json(data["group"]),
                   int(data["nF"]), int(data["vcdWF"]), int(data["lambda"]))


def case_nf_values(case: str, m: int, n: int) -> frozenset[int]:
    """n_F values for the rotation-type subgroup of order parameter m in ``case``."""
    for label, family, constraints in _CASES:
        if label == case:
            G = cyclic(m) if family == "cyclic" else dihedral(m)
            return nf_values(G.order, genus0_signature(G), n, constraints)
    raise ValueError(f"unknown case {case!r}")


def _rows_for(case: str, G: FiniteGroupSpec, n: int, constraints=None) -> list[TableRow]:
    sig = genus0_signature(G)
    lam = group_length(G)
    return [TableRow(case, G, nf, vcd_weyl(0, nf), lam)
            for nf in sorted(nf_values(G.order, sig, n, constraints))]


def canonical_sort(rows):
    return sorted(rows, key=lambda r: (_case_key(r.case), -r.group.order, r.n_F))


def published_sort(rows):
    poly = [r for r in rows if r.group.family in _PUBLISHED_POLY_ORDER]
    rest = [r for r in rows if r.group.family not in _PUBLISHED_POLY_ORDER]
    poly.sort(key=lambda r: (_PUBLISHED_POLY_ORDER[r.group.family], r.n_F))
    return poly + canonical_sort(rest)


def appendix_a(n: int, published_order: bool = False) -> list[TableRow]:
    """Rows (case, F, n_F, vcd(WF), lambda(F)) for the finite subgroups of Mod_0^n."""
    if n not in TABLE_A_RANGE:
        raise OutOfTableRange(f"appendix A covers 5 <= n <= 13, got n={n}")
    rows = []
    for case, family, constraints in _CASES:
        make = cyclic if family == "cyclic" else dihedral
        for m in range(2, n + 1):
            rows += _rows_for(case, make(m), n, constraints)
    for case, name in _POLY_CASES:
        rows += _rows_for(case, polyhedral(name), n)
    return published_sort(rows) if published_order else canonical_sort(rows)


# -- appendix B ----------------------------------------------------------------

@dataclass(frozen=True)
class Affine:
    """The expression n/q + c."""

    q: int
    c: int

    def at(self, n: int) -> Fraction:
        return Fraction(n, self.q) + self.c

    def __str__(self):
        if self.c == 0:
            return f"n/{self.q}"
        return f"n/{self.q}{self.c:+d}"


@dataclass(frozen=True)
class BoundRow:
    group: FiniteGroupSpec
    signature: OrbifoldSignature
    nf_bound: Affine
    vcd_bound: Affine
    lambda_bound: int
    lambda_F: int

    def to_json(self, n: int | None = None) -> dict:
        out = {
            "group": self.group.to_json(),
            "order": self.group.order,
            "signature": self.signature.to_json(),
            "nF_bound": str(self.nf_bound),
            "vcd_bound": str(self.vcd_bound),
            "lambda_bound": self.lambda_bound,
        }
        if n is not None:
            out["n"] = n
            out["nF_at_n"] = str(self.nf_bound.at(n))
            out["vcd_at_n"] = str(self.vcd_bound.at(n))
        return out

    @classmethod
    def from_json(cls, data: Mapping) -> BoundRow:
        G = FiniteGroupSpec.from_json(data["group"])
        for row in appendix_b():
            if row.group == G:
                return row
        raise ValueError(f"no genus-2 row for {G}")


def _bound_row(G: FiniteGroupSpec, sig: OrbifoldSignature) -> BoundRow:
    k = sig.elliptic_count
    nf = Affine(G.order, k)
    # vcd(Mod_0^m) = m - 3 and vcd(Mod_1^m) = m once m >= 1
    vcd = Affine(G.order, k - 3 if sig.quotient_genus == 0 else k)
    return BoundRow(G, sig, nf, vcd, omega(G.order), group_length(G))


def appendix_b() -> list[BoundRow]:
    return [_bound_row(G, sig) for G, sig in BROUGHTON_ROWS]


# -- rendering -------------------------------------------------------------------

def _note(e: Erratum) -> str:
    where = f"{e.case} {e.group}" if e.case else e.group
    printed = "absent" if e.printed is None else str(e.printed)
    return f"{where}: published {printed}, recomputed {e.computed} ({e.reason})"


def notes_a(n: int) -> list[str]:
    return [_note(e) for e in errata_for("A", n)]


def notes_b() -> list[str]:
    return [_note(e) for e in errata_for("B")]


def _markdown(header, body, notes) -> str:
    lines = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
    lines += ["| " + " | ".join(str(c) for c in row) + " |" for row in body]
    if notes:
        lines.append("")
        lines += [f"[^{i}]: {text}" for i, text in enumerate(notes, 1)]
    return "\n".join(lines) + "\n"


def _csv(header, body) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(body)
    return buf.getvalue()


def render_a(rows: list[TableRow], fmt: str, notes=()) -> str:
    if fmt == "json":
        return json.dumps([r.to_json() for r in rows], indent=2) + "\n"
    body = [(r.case, r.group.name, r.n_F, r.vcd_WF, r.lambda_F) for r in rows]
    if fmt == "csv":
        return _csv(["case", "group", "nF", "vcdWF", "lambda"], body)
    if fmt == "markdown":
        return _markdown(["case", "F", "n_F", "vcd(WF)", "lambda(F)"], body, list(notes))
    raise ValueError(f"unknown format {fmt!r}")


def render_b(rows: list[BoundRow], fmt: str, n: int | None = None, notes=()) -> str:
    if fmt == "json":
        return json.dumps([r.to_json(n) for r in rows], indent=2) + "\n"
    header = ["group", "order", "signature", "nF_bound", "vcd_bound", "lambda_bound"]
    body = []
    for r in rows:
        line = [r.group.name, r.group.order, str(r.signature), str(r.nf_bound), str(r.vcd_bound), r.lambda_bound]
        if n is not None:
            line += [r.nf_bound.at(n), r.vcd_bound.at(n)]
        body.append(line)
    if n is not None:
        header += [f"nF_at_{n}", f"vcd_at_{n}"]
    if fmt == "csv":
        return _csv(header, body)
    if fmt == "markdown":
        return _markdown(header, body, list(notes))
    raise ValueError(f"unknown format {fmt!r}")


def parse_a(text: str, fmt: str) -> list[tuple]:
    """Value tuples (case, group name, n_F, vcd, lambda) back out of a rendering."""
    if fmt == "json":
        return [(r.case, *r.values) for r in map(TableRow.from_json, json.loads(text))]
    if fmt == "csv":
        reader = csv.reader(io.StringIO(text))
        next(reader)
        return [(c, g, int(a), int(b), int(l)) for c, g, a, b, l in reader]
    if fmt == "markdown":
        out = []
        for line in text.splitlines()[2:]:
            if not line.startswith("| "):
                continue
            c, g, a, b, l = (x.strip() for x in line.strip("|").split("|"))
            out.append((c, g, int(a), int(b), int(l)))
        return out
    raise ValueError(f"unknown format {fmt!r}")
