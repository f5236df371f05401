"""Named generator families and closed-form predictions for extreme triangle weights.

Seven groups of sequences are constructible by tag: the all-ones class (a),
the period-2 class (b), the period-4 class (c), the period-3 maximizers (z),
the period-3 near-maximizers (u for lengths divisible by 3, v for lengths
congruent to 2 mod 3), and the unit vectors (e). For each, the exact triangle
weight is known in closed form on a stated range of lengths, as are the
bottom of the weight ladder (levels 1-3) and its top (the maximum level and
the one below it).
"""

from __future__ import annotations

from dataclasses import dataclass

from .bitseq import BitSeq


class FamilyRangeError(ValueError):
    """The requested family is not defined at this length."""


class NoClosedFormError(ValueError):
    """No exact weight formula is available for this family/length pair."""


class UncoveredLevelError(ValueError):
    """No closed-form description of this level exists at this length."""


_GROUP_SIZES = {"a": 3, "b": 6, "c": 6, "z": 3, "u": 9, "v": 6}


@dataclass(frozen=True)
class FamilyName:
    """A tag like a1, b3, z2, u7 or e13 (group letter plus index)."""

    group: str
    index: int

    def __post_init__(self) -> None:
        if self.group == "e":
            if self.index < 0:
                raise ValueError("unit-vector index must be nonnegative")
        elif self.group in _GROUP_SIZES:
            if not 1 <= self.index <= _GROUP_SIZES[self.group]:
                raise ValueError(
                    f"family group {self.group!r} has members 1..{_GROUP_SIZES[self.group]}"
                )
        else:
            raise ValueError(f"unknown family group {self.group!r}")

    @classmethod
    def parse(cls, text: str) -> "FamilyName":
        """Parse a case-insensitive tag such as 'B3' or 'e13'."""
        t = text.strip().lower()
        if len(t) < 2 or not t[1:].isdigit():
            raise ValueError(f"malformed family tag {text!r}")
        return cls(t[0], int(t[1:]))

    def __str__(self) -> str:
        return f"{self.group}{self.index}"


def _pat(p: str, n: int) -> BitSeq:
    return BitSeq.from_pattern(p, n)


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise FamilyRangeError(message)


def family_seq(f: FamilyName, n: int) -> BitSeq:
    """The defining sequence of family ``f`` at length n."""
    g, i = f.group, f.index
    if g == "a":
        _require(n >= 1, "a family requires n >= 1")
        return (_pat("1", n), _pat("1", 1).concat(BitSeq.zeros(n - 1)),
                BitSeq.zeros(n - 1).concat(_pat("1", 1)))[i - 1]
    if g == "b":
        _require(n >= 2, "b family requires n >= 2")
        return (_pat("10", n),
                BitSeq.from_string("01").concat(BitSeq.zeros(n - 2)),
                BitSeq.zeros(n - 2).concat(BitSeq.from_string("11")),
                _pat("01", n),
                BitSeq.from_string("11").concat(BitSeq.zeros(n - 2)),
                BitSeq.zeros(n - 2).concat(BitSeq.from_string("10")))[i - 1]
    if g == "c":
        _require(n >= 3, "c family requires n >= 3")
        return (_pat("0011", n),
                BitSeq.from_string("101").concat(BitSeq.zeros(n - 3)),
                BitSeq.zeros(n - 3).concat(BitSeq.from_string("100")),
                _pat("1100", n),
                BitSeq.from_string("001").concat(BitSeq.zeros(n - 3)),
                BitSeq.zeros(n - 3).concat(BitSeq.from_string("101")))[i - 1]
    if g == "z":
        _require(n >= 2, "z family requires n >= 2")
        return (_pat("110", n), _pat("011", n), _pat("101", n))[i - 1]
    if g == "u":
        _require(n % 3 == 0, "u family requires n == 0 (mod 3)")
        _require(n >= 12, "u family requires n >= 12")
        one, zero = _pat("1", 1), BitSeq.zeros(1)
        return (_pat("100", n),
                zero.concat(_pat("011", n - 1)),
                _pat("110", n - 1).concat(one),
                _pat("001", n),
                one.concat(_pat("110", n - 1)),
                _pat("101", n - 1).concat(zero),
                _pat("010", n),
                zero.concat(_pat("101", n - 1)),
                _pat("011", n - 1).concat(zero))[i - 1]
    if g == "v":
        _require(n % 3 == 2, "v family requires n == 2 (mod 3)")
        _require(n >= 11, "v family requires n >= 11")
        one, zero = _pat("1", 1), BitSeq.zeros(1)
        return (_pat("100", n),
                zero.concat(_pat("101", n - 1)),
                _pat("101", n - 1).concat(one),
                _pat("010", n),
                one.concat(_pat("110", n - 1)),
                _pat("110", n - 1).concat(zero))[i - 1]
    # unit vectors e_k
    _require(i <= n - 1, f"e{i} requires n >= {i + 1}")
    return BitSeq(n, 1 << i)


def predicted_triangle_weight(f: FamilyName, n: int) -> int:
    """Closed-form triangle weight of ``family_seq(f, n)`` where one exists."""
    family_seq(f, n)  # range check
    g, i = f.group, f.index
    if g == "a":
        _require(n >= 4, "a-family weight formula requires n >= 4")
        return n
    if g == "b":
        _require(n >= 4, "b-family weight formula requires n >= 4")
        if n % 2 == 0:
            return (3 * n - 2) // 2
        return (3 * n - 1) // 2 if i in (1, 3, 5) else (3 * n - 3) // 2
    if g == "c":
        _require(n >= 4, "c-family weight formula requires n >= 4")
        if n % 2:
            raise NoClosedFormError("c-family weights have closed forms for even n only")
        if n % 4 == 0:
            return 2 * n - 3
        return 2 * n - 4 if i in (1, 3, 5) else 2 * n - 2
    if g == "z":
        _require(n >= 3, "z-family weight formula requires n >= 3")
        if n % 3 != 1:
            return n * (n + 1) // 3
        base = (n - 1) * (n + 2) // 3
        return base + 1 if i in (1, 3) else base
    if g in ("u", "v"):
        return -(-n * n // 3)
    # unit vectors: reduce by the mirror symmetry e_{n-1-k} <-> e_k
    k = min(i, n - 1 - i)
    if k == 0:
        return n
    if k == 1:
        return (3 * n - 2) // 2
    if k == 2:
        return 2 * n - 4 if n % 4 == 2 else 2 * n - 3
    if k == 3:
        return (9 * n - 27) // 4 if n % 4 == 3 else (9 * n - 20) // 4
    raise NoClosedFormError(
        f"no exact formula for e{i} at n={n}; only the lower bound 2n-3 is known"
    )


def all_families(n: int) -> list[FamilyName]:
    """Every family tag constructible at length n, in stable display order."""
    out: list[FamilyName] = []
    for g, size in _GROUP_SIZES.items():
        for i in range(1, size + 1):
            f = FamilyName(g, i)
            try:
                family_seq(f, n)
            except FamilyRangeError:
                continue
            out.append(f)
    out.extend(FamilyName("e", k) for k in range(n))
    return out


# Full weight ladders for n <= 4: level -> (weight, generator texts).
_SMALL_N_LADDER: dict[int, list[tuple[int, list[str]]]] = {
    1: [(0, ["0"]), (1, ["1"])],
    2: [(0, ["00"]), (2, ["11", "10", "01"])],
    3: [(0, ["000"]), (3, ["111", "100", "001", "010"]), (4, ["110", "011", "101"])],
    4: [
        (0, ["0000"]),
        (4, ["1111", "1000", "0001"]),
        (5, ["0100", "0010", "1100", "1010", "0101", "0011"]),
        (6, ["1001", "0110", "1110", "0111"]),
        (7, ["1101", "1011"]),
    ],
}

# Second-level sets with no general formula, found by exhaustive search.
_LEVEL2_LITERALS: dict[int, list[str]] = {
    5: ["01000", "00010", "01010"],
    6: ["001000", "000100", "001100"],  # extra class beyond the b sequences
    7: ["0001000"],  # extra singleton beyond b2, b4, b6
}

# Extra third-level class at n = 8 beyond the c sequences.
_LEVEL3_EXTRA_8 = ["11110000", "00001000", "00010001", "00001111", "10001000", "00010000"]


@dataclass(frozen=True)
class LevelPrediction:
    """Predicted weight and full generator set for one ladder level."""

    level: str
    n: int
    value: int
    members: tuple[BitSeq, ...]
    status: str  # "theorem" or "conjecture"

    @property
    def member_set(self) -> frozenset[BitSeq]:
        return frozenset(self.members)


def normalize_level(level) -> str:
    """Canonical token for a ladder level: '1', '2', '3', 'm' or 'm-1'."""
    token = str(level).strip().lower()
    if token in ("1", "2", "3", "m", "m-1"):
        return token
    raise ValueError(f"unknown level {level!r}; expected 1, 2, 3, m or m-1")


def _prediction(level: str, n: int, value: int, seqs, status: str = "theorem") -> LevelPrediction:
    members = tuple(sorted(seqs, key=str))
    assert len(set(members)) == len(members)
    return LevelPrediction(level, n, value, members, status)


def _fam_set(group: str, n: int, indices) -> list[BitSeq]:
    return [family_seq(FamilyName(group, i), n) for i in indices]


def _small_n_prediction(level: str, n: int) -> LevelPrediction:
    ladder = _SMALL_N_LADDER[n]
    top = len(ladder) - 1
    idx = {"m": top, "m-1": top - 1}.get(level, int(level) if level.isdigit() else -1)
    if not 0 <= idx <= top:
        raise UncoveredLevelError(f"n={n} has levels 0..{top} only")
    w, seqs = ladder[idx]
    return _prediction(level, n, w, [BitSeq.from_string(s) for s in seqs])


def predicted_level(level, n: int) -> LevelPrediction:
    """Closed-form weight and member set for a ladder level, where covered.

    Levels 1-3 count from the bottom of the ladder; "m" is the maximum level
    and "m-1" the one below it. Raises UncoveredLevelError outside the ranges
    where an exact description is known.
    """
    token = normalize_level(level)
    if n < 1:
        raise ValueError("length must be positive")
    if n <= 4:
        return _small_n_prediction(token, n)

    if token == "1":
        return _prediction(token, n, n, _fam_set("a", n, (1, 2, 3)))

    if token == "2":
        value = (3 * n - 2) // 2
        if n == 5:
            return _prediction(token, n, value,
                               [BitSeq.from_string(s) for s in _LEVEL2_LITERALS[5]])
        if n == 6:
            extra = [BitSeq.from_string(s) for s in _LEVEL2_LITERALS[6]]
            return _prediction(token, n, value, _fam_set("b", n, range(1, 7)) + extra)
        if n == 7:
            extra = [BitSeq.from_string(s) for s in _LEVEL2_LITERALS[7]]
            return _prediction(token, n, value, _fam_set("b", n, (2, 4, 6)) + extra)
        if n % 2 == 0:
            return _prediction(token, n, value, _fam_set("b", n, range(1, 7)))
        return _prediction(token, n, value, _fam_set("b", n, (2, 4, 6)))

    if token == "3":
        if n % 2 == 1:
            if n < 7:
                raise UncoveredLevelError(
                    "level 3 for odd lengths is described only for n >= 7"
                )
            return _prediction(token, n, (3 * n - 1) // 2, _fam_set("b", n, (1, 3, 5)))
        if n == 8:
            extra = [BitSeq.from_string(s) for s in _LEVEL3_EXTRA_8]
            return _prediction(token, n, 13, _fam_set("c", n, range(1, 7)) + extra)
        if n < 10:
            raise UncoveredLevelError(
                "level 3 for even lengths is described only for n = 8 and n >= 10"
            )
        if n % 4 == 0:
            return _prediction(token, n, 2 * n - 3, _fam_set("c", n, range(1, 7)))
        return _prediction(token, n, 2 * n - 4, _fam_set("c", n, (1, 3, 5)))

    if token == "m":
        value = -(-n * (n + 1) // 3)
        if n % 3 == 1:
            return _prediction(token, n, value, _fam_set("z", n, (1, 3)))
        return _prediction(token, n, value, _fam_set("z", n, (1, 2, 3)))

    # token == "m-1"
    if n % 3 == 1:
        if n < 7:
            raise UncoveredLevelError(
                "level m-1 is described for n >= 7 with n == 1 (mod 3)"
            )
        return _prediction(token, n, -(-n * (n + 1) // 3) - 1, _fam_set("z", n, (2,)))
    if n < 11:
        raise UncoveredLevelError(
            "level m-1 for n == 0,2 (mod 3) is conjectured only for n >= 11"
        )
    group = "u" if n % 3 == 0 else "v"
    size = _GROUP_SIZES[group]
    return _prediction(token, n, -(-n * n // 3),
                       _fam_set(group, n, range(1, size + 1)), status="conjecture")
