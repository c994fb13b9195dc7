"""Dice sets realizing tournaments, plus the exhaustive face-win oracle.

The construction assigns the i-th face of every die a label from the i-th
block of n consecutive integers, pairing dice within a column according to
the round-i matching of the factorization.  Within each column the pair of
dice matched there receive adjacent labels, higher label to the die the
tournament says should win; every other cross-die comparison cancels out,
so that single column decides the matchup.
"""

from __future__ import annotations

import csv
import io
import json
from bisect import bisect_left
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .errors import (
    DuplicateLabelError,
    ParityError,
    ParseError,
    SideCountMismatchError,
    TieDetectedError,
)
from .factorization import even_rounds, odd_rounds
from .tournament import Tournament

Faces = tuple[int, ...]


@dataclass(frozen=True)
class DiceSet:
    """n dice with equal side counts; ``faces[v-1][i-1]`` is face i of die v."""

    faces: tuple[Faces, ...]

    @property
    def n(self) -> int:
        return len(self.faces)

    @property
    def sides(self) -> int:
        return len(self.faces[0]) if self.faces else 0


def dice_set(faces: Iterable[Sequence[int]]) -> DiceSet:
    """Validate raw face lists and freeze them into a DiceSet."""
    frozen = tuple(tuple(die) for die in faces)
    if not frozen:
        raise ParseError("a dice set needs at least one die")
    sides = len(frozen[0])
    for v, die in enumerate(frozen, start=1):
        if len(die) != sides:
            raise SideCountMismatchError(f"die {v} has {len(die)} sides, expected {sides}")
    labels = [x for die in frozen for x in die]
    for x in labels:
        if not isinstance(x, int) or isinstance(x, bool) or x < 1:
            raise ParseError(f"face label {x!r} is not a positive integer")
    if len(set(labels)) != len(labels):
        raise DuplicateLabelError("face labels are not pairwise distinct")
    return DiceSet(frozen)


@dataclass(frozen=True)
class Matchup:
    """Exact result of rolling die a against die b."""

    wins_a: int
    wins_b: int
    probability: Fraction  # chance that die a rolls the higher number

    @property
    def winner(self) -> int | None:
        """1 if a wins the matchup, 2 if b does, None on a dead tie."""
        if self.wins_a > self.wins_b:
            return 1
        if self.wins_b > self.wins_a:
            return 2
        return None


def face_wins(a: Sequence[int], b: Sequence[int]) -> int:
    """Count ordered face pairs (x, y) with x from a, y from b, x > y.

    Exhaustive enumeration on purpose: this is the verification oracle and
    shares no code with the construction.
    """
    return sum(1 for x in a for y in b if x > y)


def face_wins_fast(a: Sequence[int], b: Sequence[int]) -> int:
    """Sort-and-bisect win counter, O(k log k); cross-checked against face_wins in tests."""
    bs = sorted(b)
    return sum(bisect_left(bs, x) for x in a)


def matchup(a: Sequence[int], b: Sequence[int]) -> Matchup:
    """Exact win counts and probability for die a against die b."""
    if len(a) != len(b):
        raise SideCountMismatchError(f"side counts differ: {len(a)} vs {len(b)}")
    shared = set(a) & set(b)
    if shared:
        raise DuplicateLabelError(f"dice share labels {sorted(shared)}")
    wins_a = face_wins(a, b)
    wins_b = face_wins(b, a)
    return Matchup(wins_a, wins_b, Fraction(wins_a, len(a) * len(b)))


def dominance(d: DiceSet) -> Tournament:
    """Extract the tournament the dice realize: i -> j iff die i wins more than half the face pairs."""
    dice_set(d.faces)  # revalidate: distinct labels, equal side counts
    edges = set()
    for i, j in combinations(range(1, d.n + 1), 2):
        m = matchup(d.faces[i - 1], d.faces[j - 1])
        if m.winner == 1:
            edges.add((i, j))
        elif m.winner == 2:
            edges.add((j, i))
        else:
            raise TieDetectedError(f"dice {i} and {j} tie at exactly 1/2")
    return Tournament(d.n, frozenset(edges))


def build_dice(t: Tournament) -> DiceSet:
    """Construct a dice set realizing t.

    Side count by residue of n mod 4: odd n uses n sides, n = 2 (mod 4)
    uses n-1, n = 0 (mod 4) uses n+1.  Deterministic in t.
    """
    if t.n == 1:
        return DiceSet(((1,),))
    if t.n % 2 == 1:
        return build_odd(t)
    if t.n % 4 == 2:
        return build_even_2mod4(t)
    return build_0mod4(t)


def build_odd(t: Tournament) -> DiceSet:
    """Odd-n construction: n dice with n sides.

    Column i of die i gets the block's lowest label n(i-1)+1.  Every other
    die v sits in some pair of round i at column j and gets n(i-1)+2j+1 if
    it beats its partner, else n(i-1)+2j.
    """
    n = t.n
    if n % 2 == 0:
        raise ParityError(f"odd construction needs odd n, got {n}")
    if n == 1:
        return DiceSet(((1,),))
    f = odd_rounds(n)
    faces = [[0] * n for _ in range(n)]
    for i in range(1, n + 1):
        base = n * (i - 1)
        faces[i - 1][i - 1] = base + 1
        for j, (a, b) in enumerate(f.rounds[i - 1], start=1):
            hi, lo = (a, b) if t.beats(a, b) else (b, a)
            faces[hi - 1][i - 1] = base + 2 * j + 1
            faces[lo - 1][i - 1] = base + 2 * j
    return DiceSet(tuple(tuple(row) for row in faces))


def build_even_2mod4(t: Tournament) -> DiceSet:
    """n = 2 (mod 4) construction: n dice with n-1 sides.

    Every die plays in every round, so column i of die v uses labels
    n(i-1)+2j (win) or n(i-1)+2j-1 (loss) at v's column j.
    """
    n = t.n
    if n % 4 != 2:
        raise ParityError(f"this construction needs n = 2 (mod 4), got {n}")
    f = even_rounds(n)
    faces = [[0] * (n - 1) for _ in range(n)]
    for i in range(1, n):
        base = n * (i - 1)
        for j, (a, b) in enumerate(f.rounds[i - 1], start=1):
            hi, lo = (a, b) if t.beats(a, b) else (b, a)
            faces[hi - 1][i - 1] = base + 2 * j
            faces[lo - 1][i - 1] = base + 2 * j - 1
    return DiceSet(tuple(tuple(row) for row in faces))


def build_0mod4(t: Tournament) -> DiceSet:
    """n = 0 (mod 4) construction: augment, build odd, drop the helper die.

    Adds vertex n+1 beating everything, runs the odd construction on the
    augmented tournament, and deletes the added die's row.  Labels keep
    their raw values (a strict subset of 1..(n+1)^2); compact separately
    if gap-free labels are wanted.
    """
    n = t.n
    if n % 4 != 0:
        raise ParityError(f"this construction needs n = 0 (mod 4), got {n}")
    augmented = Tournament(
        n + 1, frozenset(t.edges | {(n + 1, v) for v in range(1, n + 1)})
    )
    full = build_odd(augmented)
    return DiceSet(full.faces[:n])


@dataclass(frozen=True)
class PairEvidence:
    """Matchup outcome for one vertex pair, against the expected direction."""

    i: int
    j: int
    expected_winner: int
    wins_i: int
    wins_j: int
    ok: bool


@dataclass(frozen=True)
class VerificationReport:
    """Whether a dice set realizes a tournament, with per-pair evidence."""

    realized: bool
    balance_ok: bool
    matchups: tuple[PairEvidence, ...]
    failures: tuple[str, ...]


def verify_realization(d: DiceSet, t: Tournament) -> VerificationReport:
    """Check every pair's matchup against t and the uniform-balance property."""
    failures: list[str] = []
    if d.n != t.n:
        return VerificationReport(
            False, False, (), (f"dice count {d.n} != tournament size {t.n}",)
        )
    dice_set(d.faces)
    k = d.sides
    evidence = []
    balance_ok = True
    for i, j in combinations(range(1, d.n + 1), 2):
        wins_i = face_wins(d.faces[i - 1], d.faces[j - 1])
        wins_j = face_wins(d.faces[j - 1], d.faces[i - 1])
        expected = i if t.beats(i, j) else j
        actual_ok = (wins_i > wins_j) if expected == i else (wins_j > wins_i)
        evidence.append(PairEvidence(i, j, expected, wins_i, wins_j, actual_ok))
        if not actual_ok:
            failures.append(
                f"pair ({i},{j}): expected {expected} to win, face wins {wins_i}-{wins_j}"
            )
        # uniform balance: winner takes exactly (k^2+1)/2 face wins
        if 2 * max(wins_i, wins_j) != k * k + 1:
            balance_ok = False
    realized = not failures
    return VerificationReport(realized, balance_ok, tuple(evidence), tuple(failures))


@dataclass(frozen=True)
class WinsAudit:
    """Outcome of re-deriving the guaranteed-wins split via the oracle."""

    sides: int
    loser_wins: int
    winner_wins: int
    failures: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.failures


def guaranteed_wins_audit(d: DiceSet, t: Tournament) -> WinsAudit:
    """Check that in every matchup the loser gets exactly (k^2-1)/2 face wins and the winner (k^2+1)/2."""
    k = d.sides
    failures = []
    for i, j in combinations(range(1, d.n + 1), 2):
        winner, loser = (i, j) if t.beats(i, j) else (j, i)
        w = face_wins(d.faces[winner - 1], d.faces[loser - 1])
        l = face_wins(d.faces[loser - 1], d.faces[winner - 1])
        if 2 * w != k * k + 1 or 2 * l != k * k - 1:
            failures.append(
                f"pair ({i},{j}): winner {winner} has {w} wins, loser has {l},"
                f" expected {(k * k + 1) // 2} and {(k * k - 1) // 2}"
            )
    return WinsAudit(k, (k * k - 1) // 2, (k * k + 1) // 2, tuple(failures))


def is_balanced(d: DiceSet) -> bool:
    """True iff every matchup is decided with probability exactly 1/2 + 1/(2k^2)."""
    dice_set(d.faces)
    k = d.sides
    target = Fraction(1, 2) + Fraction(1, 2 * k * k)
    for a, b in combinations(d.faces, 2):
        m = matchup(a, b)
        if max(m.probability, 1 - m.probability) != target:
            return False
    return True


def compact_labels(d: DiceSet) -> DiceSet:
    """Relabel faces with their ranks 1..n*k; order-preserving, so every matchup is unchanged."""
    ranked = {x: r for r, x in enumerate(sorted(x for die in d.faces for x in die), start=1)}
    return DiceSet(tuple(tuple(ranked[x] for x in die) for die in d.faces))


def serialize_dice(d: DiceSet, fmt: str = "json") -> bytes:
    """Encode a dice set as JSON, CSV (one row per die), or a readable table."""
    if fmt == "json":
        payload = {"n": d.n, "sides": d.sides, "dice": [list(die) for die in d.faces]}
        return json.dumps(payload, separators=(",", ":")).encode("ascii")
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        for die in d.faces:
            writer.writerow(die)
        return buf.getvalue().encode("ascii")
    if fmt == "table":
        return format_table(d).encode("ascii")
    raise ValueError(f"unknown format {fmt!r}")


def format_table(d: DiceSet) -> str:
    """Aligned text table, one die per row: ``X_1:  1 10 19 ...``."""
    width = max(len(str(x)) for die in d.faces for x in die)
    name_width = len(f"X_{d.n}:")
    lines = []
    for v, die in enumerate(d.faces, start=1):
        cells = " ".join(str(x).rjust(width) for x in die)
        lines.append(f"{f'X_{v}:'.ljust(name_width)} {cells}")
    return "\n".join(lines)


def parse_dice(data: bytes, fmt: str = "json") -> DiceSet:
    """Decode a dice set from JSON or CSV."""
    if fmt == "json":
        try:
            obj = json.loads(data)
        except (ValueError, UnicodeDecodeError) as exc:
            raise ParseError(f"bad JSON: {exc}") from exc
        if not isinstance(obj, dict) or "dice" not in obj:
            raise ParseError('expected an object with a "dice" list')
        rows = obj["dice"]
        if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
            raise ParseError('"dice" must be a list of face lists')
        d = dice_set(rows)
        if "n" in obj and obj["n"] != d.n:
            raise ParseError(f'"n" is {obj["n"]} but {d.n} dice given')
        if "sides" in obj and obj["sides"] != d.sides:
            raise ParseError(f'"sides" is {obj["sides"]} but dice have {d.sides} faces')
        return d
    if fmt == "csv":
        try:
            text = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"CSV is not valid text: {exc}") from exc
        rows = []
        for cells in csv.reader(io.StringIO(text)):
            if not cells:
                continue
            try:
                rows.append([int(c) for c in cells])
            except ValueError as exc:
                raise ParseError(f"non-integer face label in row {cells!r}") from exc
        return dice_set(rows)
    raise ValueError(f"unknown format {fmt!r}")
