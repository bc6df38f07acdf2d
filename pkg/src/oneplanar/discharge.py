"""Exact discharging on a 1-plane drawing.

Vertices start with ``d(v) - 6`` and faces with ``2 deg(f) - 6``; on a
connected drawing these sum to -12.  Rules R1-R9 then move charge around
without changing the total.  All amounts are :class:`fractions.Fraction`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .drawing import OnePlaneDrawing, recover_original
from .errors import InputError, PreconditionError
from .structure import Classification, MastersChain, classify, masters_chain

THIRD = Fraction(1, 3)
HALF = Fraction(1, 2)
TOTAL = Fraction(-12)


@dataclass(frozen=True)
class Rule:
    id: str
    sender: str
    receiver: str
    amount: str


@dataclass(frozen=True)
class RuleTable:
    """R1-R9 as data."""

    big_to_face: Fraction = THIRD
    hungry_false: Fraction = Fraction(4, 3)
    plain_false: Fraction = Fraction(2, 3)
    # amount a client receives from its k-master, whatever its own degree
    master_amounts: tuple[tuple[int, Fraction], ...] = (
        (2, Fraction(2, 3)), (3, HALF), (4, HALF), (5, Fraction(2, 3)))

    def master_amount(self, k: int) -> Fraction:
        return dict(self.master_amounts)[k]

    @staticmethod
    def master_rule(client_degree: int) -> str:
        return f"R{client_degree + 4}"

    @property
    def rules(self) -> tuple[Rule, ...]:
        return (
            Rule("R1", "big vertex", "each incident face", "1/3"),
            Rule("R2", "4+-face", "incident false vertex", "4/3 if hungry else 2/3"),
            Rule("R3", "false 3-face", "its false vertex", "all received"),
            Rule("R4", "true 3-face", "its small vertex", "all received"),
            Rule("R5", "4+-face", "each small incidence", "equal split of remainder"),
            Rule("R6", "k-master, k=2..5", "2-vertex", "2/3, 1/2, 1/2, 2/3"),
            Rule("R7", "k-master, k=3..5", "3-vertex", "1/2, 1/2, 2/3"),
            Rule("R8", "k-master, k=4..5", "4-vertex", "1/2, 2/3"),
            Rule("R9", "5-master", "5-vertex", "2/3"),
        )


RULES = RuleTable()


@dataclass(frozen=True)
class Transfer:
    source: str
    target: str
    amount: Fraction
    rule: str
    k: int | None = None
    position: int | None = None       # boundary position on the sending/receiving face

    def to_dict(self) -> dict:
        out = {"from": self.source, "to": self.target, "amount": frac_str(self.amount),
               "rule": self.rule}
        if self.k is not None:
            out["k"] = self.k
        if self.position is not None:
            out["position"] = self.position
        return out


def frac_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def vkey(v: int) -> str:
    return f"v{v}"


def fkey(f: int) -> str:
    return f"f{f}"


def _element_order(name: str) -> tuple[int, int]:
    return (0 if name[0] == "v" else 1, int(name[1:]))


@dataclass
class ChargeLedger:
    fingerprint: tuple[int, int, int]
    initial: dict[str, Fraction]
    charge: dict[str, Fraction]
    log: list[Transfer] = field(default_factory=list)
    phase_totals: list[tuple[str, Fraction]] = field(default_factory=list)
    partial: bool = False
    flags: list[str] = field(default_factory=list)

    def move(self, t: Transfer) -> None:
        if t.amount < 0:
            raise AssertionError(f"negative transfer {t}")
        if t.amount == 0:
            return
        self.charge[t.source] -= t.amount
        self.charge[t.target] += t.amount
        self.log.append(t)

    def total(self) -> Fraction:
        return sum(self.charge.values(), Fraction(0))

    def close_phase(self, name: str) -> None:
        total = self.total()
        self.phase_totals.append((name, total))
        if total != TOTAL:
            raise AssertionError(f"charge not conserved after {name}: {total}")

    def sent_by(self, element: str, rules: tuple[str, ...] | None = None) -> list[Transfer]:
        return [t for t in self.log if t.source == element and (rules is None or t.rule in rules)]

    def to_dict(self) -> dict:
        names = sorted(self.charge, key=_element_order)
        return {
            "elements": {n: {"initial": frac_str(self.initial[n]),
                             "final": frac_str(self.charge[n])} for n in names},
            "log": [t.to_dict() for t in self.log],
            "phase_totals": [[p, frac_str(x)] for p, x in self.phase_totals],
            "partial": self.partial,
            "flags": list(self.flags),
        }


def _fingerprint(d: OnePlaneDrawing) -> tuple[int, int, int]:
    return (d.n, d.m, len(d.traced_faces))


def init_charges(d: OnePlaneDrawing) -> ChargeLedger:
    d.require_valid()
    if not d.is_connected():
        raise PreconditionError("discharging needs a connected drawing")
    init: dict[str, Fraction] = {}
    for v in range(d.n):
        init[vkey(v)] = Fraction(d.degree(v) - 6)
    for f in d.traced_faces:
        init[fkey(f.index)] = Fraction(2 * f.degree - 6)
    led = ChargeLedger(_fingerprint(d), dict(init), dict(init))
    led.close_phase("init")
    return led


def run_discharge(d: OnePlaneDrawing, masters: MastersChain | None = None,
                  rules: RuleTable = RULES) -> ChargeLedger:
    """Apply R1-R9 in phases and return the final ledger.

    Without ``masters`` they are computed when the maximum degree is at least
    10.  Any k in 2..5 with clients but no master assignment marks the run
    partial and its R6-R9 transfers are skipped.
    """
    led = init_charges(d)
    cls = classify(d)
    fs = d.traced_faces

    for v in range(d.n):
        if cls.is_big(v):
            for f in fs:
                for pos, u in enumerate(f.vertices):
                    if u == v:
                        led.move(Transfer(vkey(v), fkey(f.index), rules.big_to_face, "R1", position=pos))
    led.close_phase("R1")

    for f in fs:
        if f.degree < 4:
            continue
        for pos, u in enumerate(f.vertices):
            if cls.letters[u] == "F":
                amt = rules.hungry_false if cls.hungry[(f.index, pos)] else rules.plain_false
                led.move(Transfer(fkey(f.index), vkey(u), amt, "R2", position=pos))
    led.close_phase("R2")

    for f in fs:
        name = fkey(f.index)
        bal = led.charge[name]
        letters = cls.face_letters[f.index]
        if f.degree == 3:
            received = bal - led.initial[name]
            if "F" in letters:
                pos = letters.index("F")
                led.move(Transfer(name, vkey(f.vertices[pos]), received, "R3", position=pos))
            else:
                small = [p for p, c in enumerate(letters) if c == "S"]
                for pos in small:
                    led.move(Transfer(name, vkey(f.vertices[pos]), received / len(small), "R4",
                                      position=pos))
        elif f.degree >= 4:
            small = [p for p, c in enumerate(letters) if c == "S"]
            if not small:
                continue
            if bal < 0:
                led.flags.append(f"{name}: balance {frac_str(bal)} before R5, nothing forwarded")
                continue
            for pos in small:
                led.move(Transfer(name, vkey(f.vertices[pos]), bal / len(small), "R5", position=pos))
    led.close_phase("R3-R5")

    _apply_masters(d, led, masters, rules)
    led.close_phase("R6-R9")
    return led


def _apply_masters(d: OnePlaneDrawing, led: ChargeLedger, masters: MastersChain | None,
                   rules: RuleTable) -> None:
    g = recover_original(d)
    if masters is None:
        if g.max_degree < 10:
            led.partial = True
            led.flags.append(f"max degree {g.max_degree} < 10: no masters, R6-R9 skipped")
            return
        masters = masters_chain(g)
    back = {gi: v for v, gi in d.true_index.items()}
    for k in range(2, 6):
        has_clients = any(2 <= g.degrees[v] <= k for v in range(g.n))
        if k not in masters.masters:
            if has_clients:
                led.partial = True
                led.flags.append(f"k={k}: no master assignment, transfers skipped")
            continue
        amt = rules.master_amount(k)
        for x, y in sorted(masters.masters[k].pairs.items()):
            dx = g.degrees[x]
            if 2 <= dx <= k:
                led.move(Transfer(vkey(back[y]), vkey(back[x]), amt, rules.master_rule(dx), k=k))


# -- claims --------------------------------------------------------------------

@dataclass(frozen=True)
class ClaimDeviation:
    face: int
    signature: str
    expected: str
    got: tuple[str, ...]


@dataclass(frozen=True)
class ClaimReport:
    checked: int
    out_of_scope: int
    deviations: tuple[ClaimDeviation, ...]

    @property
    def ok(self) -> bool:
        return not self.deviations

    def to_dict(self) -> dict:
        return {"checked": self.checked, "out_of_scope": self.out_of_scope,
                "deviations": [{"face": x.face, "signature": x.signature, "expected": x.expected,
                                "got": list(x.got)} for x in self.deviations]}


def in_claim_scope(letters: str) -> bool:
    """No two small vertices consecutive on the boundary (they would be adjacent in G)."""
    n = len(letters)
    return not any(letters[i] == "S" and letters[(i + 1) % n] == "S" for i in range(n)) \
        if n > 1 else True


_EXACT_4 = {"FSFS": Fraction(1, 3), "FSBS": Fraction(5, 6), "FSFB": Fraction(1)}


def verify_claims(d: OnePlaneDrawing, ledger: ChargeLedger,
                  cls: Classification | None = None) -> ClaimReport:
    """Check each face's outgoing R3-R5 transfers against the closed forms."""
    if ledger.fingerprint != _fingerprint(d):
        raise InputError("ledger was not produced from this drawing")
    cls = cls or classify(d)
    sent: dict[str, list[Transfer]] = {}
    for t in ledger.log:
        if t.rule in ("R3", "R4", "R5"):
            sent.setdefault(t.source, []).append(t)
    checked = skipped = 0
    bad: list[ClaimDeviation] = []
    for f in d.traced_faces:
        letters = cls.face_letters[f.index]
        sig = cls.signatures[f.index]
        if f.degree < 3:
            continue
        if not in_claim_scope(letters):
            skipped += 1
            continue
        out = sent.get(fkey(f.index), [])
        amounts = tuple(t.amount for t in out)
        expected = None
        ok = True
        if f.degree == 3 and sig in ("FBB", "FSB"):
            want = Fraction(2, 3) if sig == "FBB" else THIRD
            expected = f"{frac_str(want)} to the false vertex"
            ok = len(out) == 1 and cls.letters[f.vertices[out[0].position]] == "F" and amounts[0] == want
        elif "S" not in letters:
            continue
        elif f.degree == 3:
            expected = "2/3 to the small vertex"
            ok = len(out) == letters.count("S") and all(a == Fraction(2, 3) for a in amounts)
        elif f.degree == 4 and sig in _EXACT_4:
            want = _EXACT_4[sig]
            expected = f"{frac_str(want)} to each small vertex"
            ok = len(out) == letters.count("S") and all(a == want for a in amounts)
        else:
            expected = "at least 4/3 to each small vertex"
            ok = len(out) == letters.count("S") and all(a >= Fraction(4, 3) for a in amounts)
        checked += 1
        if not ok:
            bad.append(ClaimDeviation(f.index, sig, expected, tuple(frac_str(a) for a in amounts)))
    return ClaimReport(checked, skipped, tuple(bad))


def negative_elements(ledger: ChargeLedger) -> list[tuple[str, Fraction]]:
    return [(n, ledger.charge[n]) for n in sorted(ledger.charge, key=_element_order)
            if ledger.charge[n] < 0]


def r2_sent(ledger: ChargeLedger, face: int) -> Fraction:
    return sum((t.amount for t in ledger.sent_by(fkey(face), ("R2",))), Fraction(0))
